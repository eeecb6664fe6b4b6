#include "frobenius.hpp"

namespace axial {

bool isAssociativeForm(const Algebra& alg, const Matrix& g) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = Scalar::zero(alg.field()), rhs = Scalar::zero(alg.field());
        const Vec& ij = alg.product(i, j);
        const Vec& jk = alg.product(j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (!ij[l].isZero()) lhs += ij[l] * g.at(l, k);
          if (!jk[l].isZero()) rhs += jk[l] * g.at(i, l);
        }
        if (lhs != rhs) return false;
      }
  return true;
}

BilinearForm::BilinearForm(AlgebraPtr algebra, Matrix gram) : alg_(std::move(algebra)), gram_(std::move(gram)) {
  if (gram_.rows() != alg_->dim() || gram_.cols() != alg_->dim())
    fail(ErrorCode::DimensionMismatch, "Gram matrix size does not match algebra");
  if (!(gram_.field() == alg_->field())) fail(ErrorCode::FieldMismatch, "Gram matrix over a different field");
  if (!gram_.isSymmetric()) fail(ErrorCode::InvalidArgument, "Gram matrix is not symmetric");
  if (!isAssociativeForm(*alg_, gram_)) fail(ErrorCode::InvalidArgument, "form is not associative: (xy,z) != (x,yz)");
}

Scalar BilinearForm::operator()(const Vec& x, const Vec& y) const {
  const std::size_t n = alg_->dim();
  Scalar s = Scalar::zero(alg_->field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!y[j].isZero() && !gram_.at(i, j).isZero()) s += x[i] * gram_.at(i, j) * y[j];
  }
  return s;
}

namespace {

// Unknown index of g_ij (i <= j) in the packed upper triangle.
std::size_t slot(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

Matrix unpack(const FieldDesc& f, std::size_t n, const Vec& v) {
  Matrix g(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g.at(i, j) = g.at(j, i) = v[slot(n, i, j)];
  return g;
}

}  // namespace

FormSolution solveFrobenius(const AlgebraPtr& alg, const std::vector<FormConstraint>& constraints) {
  const FieldDesc& f = alg->field();
  const std::size_t n = alg->dim();
  const std::size_t m = n * (n + 1) / 2;
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec r(m, Scalar::zero(f));
        const Vec& ij = alg->product(i, j);
        const Vec& jk = alg->product(j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (!ij[l].isZero()) r[slot(n, l, k)] += ij[l];
          if (!jk[l].isZero()) r[slot(n, i, l)] -= jk[l];
        }
        if (!isZeroVec(r)) {
          rows.push_back(std::move(r));
          rhs.push_back(Scalar::zero(f));
        }
      }
  for (const auto& c : constraints) {
    if (c.x.algebra() != alg || c.y.algebra() != alg)
      fail(ErrorCode::AlgebraMismatch, "normalization element from another algebra");
    Vec r(m, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!c.x[i].isZero() && !c.y[j].isZero()) r[slot(n, i, j)] += c.x[i] * c.y[j];
    rows.push_back(std::move(r));
    rhs.push_back(embed(c.value, f));
  }

  Matrix A = rows.empty() ? Matrix(f, 0, m) : Matrix::fromRows(f, rows, m);
  FormSolution sol;
  auto x = solve(A, rhs);
  if (!x) fail(ErrorCode::Inconsistent, "no associative symmetric form satisfies the normalization");
  sol.particular.emplace(alg, unpack(f, n, *x));
  for (const auto& v : kernel(A)) sol.homogeneousBasis.push_back(unpack(f, n, v));
  return sol;
}

std::vector<Element> radical(const BilinearForm& form) {
  const AlgebraPtr& alg = form.algebra();
  std::vector<Element> out;
  Span s(alg->field(), alg->dim());
  for (auto& v : kernel(form.gram())) {
    s.add(v);
    out.emplace_back(alg, std::move(v));
  }
  for (const auto& r : out)
    for (std::size_t i = 0; i < alg->dim(); ++i)
      if (!s.contains(alg->multiply(r.coords(), alg->basisVector(i))))
        fail(ErrorCode::SelfCheckFailed, "radical is not an ideal");
  return out;
}

std::vector<Element> axialRadical(const AlgebraPtr& alg, const std::vector<Element>& axes, const Scalar& lambda) {
  const FieldDesc& f = alg->field();
  const std::size_t n = alg->dim();
  std::vector<Vec> rows;
  Scalar l = embed(lambda, f);
  for (const auto& a : axes) {
    Matrix M = leftMultiplicationMatrix(a) - Matrix::identity(f, n).scaled(l);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(M.row(r));
  }
  std::vector<Element> out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(Element::basis(alg, i));
    return out;
  }
  for (auto& v : kernel(Matrix::fromRows(f, rows, n))) out.emplace_back(alg, std::move(v));
  return out;
}

bool is4Nilpotent(const Element& y) {
  Element y2 = y * y;
  Element y3 = y2 * y;
  return (y3 * y).isZero() && (y2 * y2).isZero();
}

std::vector<TraceViolation> traceAdmissibilityAudit(const BilinearForm& form,
                                                    const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<TraceViolation> out;
  for (const auto& [x, y] : pairs) {
    if (!is4Nilpotent(x * y)) continue;
    Scalar v = form(x, y);
    if (!v.isZero()) out.push_back({x, y, v});
  }
  return out;
}

std::vector<TraceViolation> traceAdmissibilityAudit(const BilinearForm& form) {
  const AlgebraPtr& alg = form.algebra();
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < alg->dim(); ++i)
    for (std::size_t j = i; j < alg->dim(); ++j) pairs.emplace_back(Element::basis(alg, i), Element::basis(alg, j));
  return traceAdmissibilityAudit(form, pairs);
}

}  // namespace axial
