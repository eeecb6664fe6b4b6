#include "algebra.hpp"

#include <algorithm>
#include <tuple>

namespace axial {

Algebra::Algebra(FieldDesc field, std::vector<std::string> names, std::vector<std::vector<Vec>> structure)
    : field_(std::move(field)), names_(std::move(names)), structure_(std::move(structure)) {}

Vec Algebra::basisVector(std::size_t i) const {
  Vec v = zero();
  v.at(i) = Scalar::one(field_);
  return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) fail(ErrorCode::DimensionMismatch, "element length does not match algebra");
  Vec out = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].isZero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].isZero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& p = structure_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].isZero()) out[k] += c * p[k];
    }
  }
  return out;
}

Matrix Algebra::leftMultiplication(const Vec& x) const {
  const std::size_t n = dim();
  Matrix m(field_, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].isZero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!structure_[i][j][k].isZero()) col[k] += x[i] * structure_[i][j][k];
    }
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

namespace {
bool plainRational(const std::string& c) {
  return !c.empty() && c.find_first_of("+-", 1) == std::string::npos && c.find_first_of("()") == std::string::npos;
}
}  // namespace

std::string Algebra::format(const Vec& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].isZero()) continue;
    std::string c = x[i].str();
    bool neg = false;
    if (plainRational(c) && c[0] == '-') {
      neg = true;
      c.erase(0, 1);
    }
    std::string term = c == "1" ? names_[i] : (plainRational(c) ? c : "(" + c + ")") + "*" + names_[i];
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

AlgebraPtr makeAlgebra(const FieldDesc& field, std::vector<std::string> names,
                       std::vector<std::vector<Vec>> structure) {
  const std::size_t n = names.size();
  if (structure.size() != n) fail(ErrorCode::DimensionMismatch, "structure has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (structure[i].size() != n) fail(ErrorCode::DimensionMismatch, "structure row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure[i][j].size() != n)
        fail(ErrorCode::DimensionMismatch, "product " + std::to_string(i) + "," + std::to_string(j) + " has wrong length");
      for (const auto& c : structure[i][j])
        if (!(c.field() == field)) fail(ErrorCode::FieldMismatch, "structure constant outside the declared field");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (structure[i][j] != structure[j][i])
        fail(ErrorCode::AsymmetricStructure, "b" + std::to_string(i) + "*b" + std::to_string(j) + " differs from b" +
                                                 std::to_string(j) + "*b" + std::to_string(i) + " (" + names[i] + ", " +
                                                 names[j] + ")");
  return std::make_shared<const Algebra>(field, std::move(names), std::move(structure));
}

AlgebraPtr changeField(const Algebra& a, const FieldDesc& target) {
  auto s = a.structure();
  for (auto& row : s)
    for (auto& v : row)
      for (auto& c : v) c = embed(c, target);
  return makeAlgebra(target, a.basisNames(), std::move(s));
}

// ------------------------------------------------------------------ Element

Element::Element(AlgebraPtr algebra, Vec coords) : alg_(std::move(algebra)), c_(std::move(coords)) {
  if (!alg_) fail(ErrorCode::InvalidArgument, "element without algebra");
  if (c_.size() != alg_->dim()) fail(ErrorCode::DimensionMismatch, "element length does not match algebra");
  for (auto& c : c_)
    if (!(c.field() == alg_->field())) c = embed(c, alg_->field());
}

Element Element::zero(const AlgebraPtr& algebra) { return Element(algebra, algebra->zero()); }
Element Element::basis(const AlgebraPtr& algebra, std::size_t i) { return Element(algebra, algebra->basisVector(i)); }

void Element::checkSame(const Element& o) const {
  if (alg_ != o.alg_ && !(alg_ && o.alg_ && alg_->structure() == o.alg_->structure() && alg_->field() == o.alg_->field()))
    fail(ErrorCode::AlgebraMismatch, "elements belong to different algebras");
}

Element Element::operator+(const Element& o) const {
  checkSame(o);
  Vec r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Element(alg_, std::move(r));
}

Element Element::operator-(const Element& o) const {
  checkSame(o);
  Vec r = c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Element(alg_, std::move(r));
}

Element Element::operator-() const {
  Vec r = c_;
  for (auto& x : r) x = -x;
  return Element(alg_, std::move(r));
}

Element Element::operator*(const Element& o) const {
  checkSame(o);
  return Element(alg_, alg_->multiply(c_, o.c_));
}

Element Element::scaled(const Scalar& s) const {
  Scalar t = embed(s, alg_->field());
  Vec r = c_;
  for (auto& x : r) x *= t;
  return Element(alg_, std::move(r));
}

Element operator*(const Scalar& s, const Element& x) { return x.scaled(s); }

Matrix leftMultiplicationMatrix(const Element& a) { return a.algebra()->leftMultiplication(a.coords()); }

// --------------------------------------------------------------- Subalgebra

std::optional<Vec> Subalgebra::coordinates(const Element& x) const {
  std::vector<Vec> b;
  for (const auto& e : basis) b.push_back(e.coords());
  Span s(parent->field(), parent->dim(), b);
  return s.coordinates(x.coords());
}

Element Subalgebra::embed(const Vec& coords) const {
  Element r = Element::zero(parent);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords.at(i).isZero()) r = r + basis[i].scaled(coords[i]);
  return r;
}

Subalgebra generateSubalgebra(const std::vector<Element>& gens) {
  if (gens.empty()) fail(ErrorCode::InvalidArgument, "generator list is empty");
  const AlgebraPtr parent = gens.front().algebra();
  for (const auto& g : gens)
    if (g.algebra() != parent) fail(ErrorCode::AlgebraMismatch, "generators belong to different algebras");

  Span span(parent->field(), parent->dim());
  std::vector<Element> basis;
  std::vector<std::string> words;
  std::vector<std::size_t> length;

  for (std::size_t i = 0; i < gens.size(); ++i)
    if (span.add(gens[i].coords())) {
      basis.push_back(gens[i]);
      words.push_back("g" + std::to_string(i + 1));
      length.push_back(1);
    }

  // Each round multiplies every pair involving an element found in the
  // previous round; candidates are taken in order of total word length.
  std::size_t frontier = 0;
  while (frontier < basis.size()) {
    const std::size_t end = basis.size();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> cand;
    for (std::size_t j = frontier; j < end; ++j)
      for (std::size_t i = 0; i <= j; ++i) cand.emplace_back(length[i] + length[j], i, j);
    std::stable_sort(cand.begin(), cand.end());
    for (auto [len, i, j] : cand) {
      Element p = basis[i] * basis[j];
      if (span.add(p.coords())) {
        basis.push_back(p);
        words.push_back("(" + words[i] + "*" + words[j] + ")");
        length.push_back(len);
      }
    }
    frontier = end;
  }

  const std::size_t m = basis.size();
  std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      auto c = span.coordinates((basis[i] * basis[j]).coords());
      if (!c) fail(ErrorCode::SelfCheckFailed, "subalgebra span is not closed");
      table[i][j] = *c;
      table[j][i] = *c;
    }
  std::vector<std::string> names = words;
  Subalgebra s{parent, std::move(basis), std::move(words), makeAlgebra(parent->field(), std::move(names), std::move(table))};
  return s;
}

}  // namespace axial
