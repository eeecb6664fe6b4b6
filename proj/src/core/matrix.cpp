#include "matrix.hpp"

#include <utility>

namespace axial {

Matrix::Matrix(FieldDesc field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field_)) {}

Matrix Matrix::identity(const FieldDesc& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::fromRows(const FieldDesc& field, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::fromColumns(const FieldDesc& field, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      fail(ErrorCode::DimensionMismatch, "column " + std::to_string(c) + " has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.isZero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
  Vec out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].isZero() && !at(i, j).isZero()) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

bool Matrix::isSymmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).isZero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).isZero()) continue;
      Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a.at(r, j).isZero()) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), pivots, r};
}

std::vector<Vec> kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : rr.pivots) isPivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c).isZero()) ++p;
    if (p == n) return Scalar::zero(a.field());
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).isZero()) continue;
      Scalar f = a.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

namespace {
Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}
}  // namespace

UniPoly minimalPolynomial(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const FieldDesc& f = m.field();
  const std::size_t n = m.rows();
  Span powers(f, n * n);
  Matrix p = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec flat = flatten(p);
    if (auto c = powers.coordinates(flat)) {
      std::vector<Scalar> coeffs(k + 1, Scalar::zero(f));
      for (std::size_t i = 0; i < c->size(); ++i) coeffs[i] = -(*c)[i];
      coeffs[k] = Scalar::one(f);
      return UniPoly(f, std::move(coeffs));
    }
    powers.add(flat);
    p = p * m;
  }
  fail(ErrorCode::SelfCheckFailed, "no polynomial relation among the first n+1 powers");
}

Matrix evaluate(const UniPoly& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(m.field(), n, n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * m + Matrix::identity(m.field(), n).scaled(*it);
  return acc;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.reduced.at(i, a.cols());
  return x;
}

bool isZeroVec(const Vec& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

// --------------------------------------------------------------------- Span

Span::Span(FieldDesc field, std::size_t ambientDim, const std::vector<Vec>& generators)
    : field_(std::move(field)), n_(ambientDim) {
  for (const auto& g : generators) add(g);
}

namespace {
struct Reduction {
  Vec residual;
  Vec coords;
};
}  // namespace

static Reduction reduce(const Vec& v, std::size_t n, const FieldDesc& f,
                        const std::vector<Vec>& echelon, const std::vector<Vec>& transform,
                        const std::vector<std::size_t>& pivots) {
  if (v.size() != n) fail(ErrorCode::DimensionMismatch, "vector length does not match span");
  Reduction red{v, Vec(echelon.size(), Scalar::zero(f))};
  for (std::size_t k = 0; k < echelon.size(); ++k) {
    Scalar c = red.residual[pivots[k]];
    if (c.isZero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!echelon[k][j].isZero()) red.residual[j] -= c * echelon[k][j];
    for (std::size_t i = 0; i < transform[k].size(); ++i)
      if (!transform[k][i].isZero()) red.coords[i] += c * transform[k][i];
  }
  return red;
}

bool Span::contains(const Vec& v) const { return coordinates(v).has_value(); }

std::optional<Vec> Span::coordinates(const Vec& v) const {
  Reduction r = reduce(v, n_, field_, echelon_, transform_, pivots_);
  if (!isZeroVec(r.residual)) return std::nullopt;
  return r.coords;
}

bool Span::add(const Vec& v) {
  Reduction r = reduce(v, n_, field_, echelon_, transform_, pivots_);
  std::size_t p = 0;
  while (p < n_ && r.residual[p].isZero()) ++p;
  if (p == n_) return false;
  const std::size_t m = basis_.size();
  Scalar inv = r.residual[p].inverse();
  Vec row = r.residual;
  for (auto& x : row) x *= inv;
  // residual = v - sum coords_i basis_i
  Vec trans(m + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < m; ++i) trans[i] = -r.coords[i] * inv;
  trans[m] = inv;
  for (auto& t : transform_) t.push_back(Scalar::zero(field_));
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    Scalar c = echelon_[k][p];
    if (c.isZero()) continue;
    for (std::size_t j = 0; j < n_; ++j) echelon_[k][j] -= c * row[j];
    for (std::size_t i = 0; i <= m; ++i) transform_[k][i] -= c * trans[i];
  }
  basis_.push_back(v);
  echelon_.push_back(std::move(row));
  transform_.push_back(std::move(trans));
  pivots_.push_back(p);
  return true;
}

bool Span::sameAs(const Span& o) const {
  if (dim() != o.dim()) return false;
  for (const auto& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

}  // namespace axial
