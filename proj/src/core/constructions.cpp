#include "constructions.hpp"

#include <algorithm>
#include <sstream>

#include "axes.hpp"
#include "identities.hpp"

namespace axial {

namespace {

Scalar q(const FieldDesc& f, long num, long den = 1) { return Scalar::fromInt(f, num) / Scalar::fromInt(f, den); }

using Table = std::vector<std::vector<Vec>>;

Table emptyTable(const FieldDesc& f, std::size_t n) { return Table(n, std::vector<Vec>(n, Vec(n, Scalar::zero(f)))); }

void setProduct(Table& t, std::size_t i, std::size_t j, const Vec& v) {
  t[i][j] = v;
  t[j][i] = v;
}

void requirePrimitiveJordan(const Element& x, const Scalar& lambda, const std::string& what) {
  AxisReport r = checkAxis(x, lambda);
  if (!r.isAxis) fail(ErrorCode::SelfCheckFailed, what + " is not an axis of type " + lambda.str());
  if (!r.primitive) fail(ErrorCode::SelfCheckFailed, what + " is not primitive");
  if (!r.fusion.jordanType())
    fail(ErrorCode::SelfCheckFailed,
         what + " violates the Jordan fusion rules" + (r.fusion.violations.empty() ? "" : " (" + r.fusion.violations[0] + ")"));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

// ------------------------------------------------------------ 2-generated

TwoGenAlgebra universal2Gen(const Scalar& lambdaIn, const Scalar& piIn, const FieldDesc& f, bool flatAnnihilating) {
  const Scalar lambda = embed(lambdaIn, f);
  const Scalar pi = embed(piIn, f);
  if (lambda.isZero() || lambda.isOne()) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  const Scalar gamma = flatAnnihilating ? zero : (one - lambda) * pi - lambda;

  Table t = emptyTable(f, 3);
  setProduct(t, 0, 0, {one, zero, zero});
  setProduct(t, 1, 1, {zero, one, zero});
  setProduct(t, 0, 1, {lambda, lambda, one});
  setProduct(t, 2, 0, {gamma, zero, zero});
  setProduct(t, 2, 1, {zero, gamma, zero});
  setProduct(t, 2, 2, {zero, zero, gamma});

  TwoGenAlgebra r;
  r.algebra = makeAlgebra(f, {"a", "b", "s"}, std::move(t));
  r.a = Element::basis(r.algebra, 0);
  r.b = Element::basis(r.algebra, 1);
  r.sigma = Element::basis(r.algebra, 2);
  r.lambda = lambda;
  r.gamma = gamma;
  r.flatAnnihilating = flatAnnihilating;

  std::vector<FormConstraint> cons{{r.a, r.a, one}, {r.b, r.b, one}};
  if (!flatAnnihilating) cons.push_back({r.a, r.b, pi});
  try {
    FormSolution sol = solveFrobenius(r.algebra, cons);
    r.form = sol.particular;
    r.formUnique = sol.unique();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconsistent) throw;
  }
  r.pi = (flatAnnihilating && r.form && r.formUnique) ? (*r.form)(r.a, r.b) : pi;

  requirePrimitiveJordan(r.a, lambda, "a");
  requirePrimitiveJordan(r.b, lambda, "b");
  return r;
}

// ------------------------------------------------------------------ toric

Element ToricAlgebra::family(const Scalar& epsIn) const {
  const FieldDesc& f = algebra->field();
  Scalar eps = embed(epsIn, f);
  if (eps.isZero()) fail(ErrorCode::InvalidArgument, "eps must be nonzero");
  return Element(algebra, {eps, q(f, 1, 2), eps.inverse()});
}

ToricAlgebra toricEUF(const FieldDesc& f) {
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
  Table t = emptyTable(f, 3);
  // basis order e, u, f
  setProduct(t, 0, 0, {zero, zero, zero});
  setProduct(t, 2, 2, {zero, zero, zero});
  setProduct(t, 0, 2, {zero, q(f, 1, 8), zero});
  setProduct(t, 1, 0, {one, zero, zero});
  setProduct(t, 1, 1, {zero, one, zero});
  setProduct(t, 1, 2, {zero, zero, one});
  AlgebraPtr alg = makeAlgebra(f, {"e", "u", "f"}, std::move(t));
  Matrix g(f, 3, 3);
  g.at(0, 2) = g.at(2, 0) = q(f, 1, 4);
  g.at(1, 1) = q(f, 2);
  BilinearForm form(alg, g);
  return ToricAlgebra{alg, Element::basis(alg, 0), Element::basis(alg, 1), Element::basis(alg, 2), form};
}

// ------------------------------------------------------------------ Matsuo

TripleSystem TripleSystem::parse(const std::string& text, const std::vector<std::string>& points) {
  TripleSystem ts;
  auto indexOf = [&](const std::string& raw) {
    std::string name = trim(raw);
    if (name.empty()) fail(ErrorCode::InvalidTripleSystem, "empty point name");
    auto it = std::find(ts.points.begin(), ts.points.end(), name);
    if (it != ts.points.end()) return static_cast<std::size_t>(it - ts.points.begin());
    ts.points.push_back(name);
    return ts.points.size() - 1;
  };
  for (const auto& p : points) {
    std::string name = trim(p);
    if (std::find(ts.points.begin(), ts.points.end(), name) != ts.points.end())
      fail(ErrorCode::InvalidTripleSystem, "point '" + name + "' listed twice");
    indexOf(name);
  }
  if (!trim(text).empty())
    for (const auto& line : split(text, ';')) {
      if (trim(line).empty()) continue;
      auto names = split(line, ',');
      if (names.size() != 3) fail(ErrorCode::InvalidTripleSystem, "line '" + trim(line) + "' does not have 3 points");
      ts.lines.push_back({indexOf(names[0]), indexOf(names[1]), indexOf(names[2])});
    }
  ts.validate();
  return ts;
}

void TripleSystem::validate() const {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j]) fail(ErrorCode::InvalidTripleSystem, "duplicate point '" + points[i] + "'");
  std::vector<std::vector<int>> lineOf(n, std::vector<int>(n, -1));
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& L = lines[l];
    for (auto p : L)
      if (p >= n) fail(ErrorCode::InvalidTripleSystem, "line refers to an unknown point");
    if (L[0] == L[1] || L[0] == L[2] || L[1] == L[2])
      fail(ErrorCode::InvalidTripleSystem, "line " + std::to_string(l + 1) + " repeats a point");
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        auto p = L[x], r = L[y];
        if (lineOf[p][r] >= 0)
          fail(ErrorCode::InvalidTripleSystem, "points " + points[p] + " and " + points[r] + " lie on two lines");
        lineOf[p][r] = lineOf[r][p] = static_cast<int>(l);
      }
  }
}

std::optional<std::size_t> TripleSystem::third(std::size_t p, std::size_t r) const {
  for (const auto& L : lines) {
    bool hp = std::find(L.begin(), L.end(), p) != L.end();
    bool hr = std::find(L.begin(), L.end(), r) != L.end();
    if (hp && hr && p != r)
      for (auto x : L)
        if (x != p && x != r) return x;
  }
  return std::nullopt;
}

MatsuoAlgebra matsuoFromTripleSystem(const TripleSystem& ts, const Scalar& lambdaIn, const FieldDesc& f) {
  ts.validate();
  const Scalar lambda = embed(lambdaIn, f);
  if (lambda.isZero() || lambda.isOne()) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  const std::size_t n = ts.points.size();
  if (n == 0) fail(ErrorCode::InvalidTripleSystem, "no points");
  const Scalar half = lambda / Scalar::fromInt(f, 2);
  Table t = emptyTable(f, n);
  for (std::size_t p = 0; p < n; ++p) t[p][p][p] = Scalar::one(f);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = p + 1; r < n; ++r)
      if (auto s = ts.third(p, r)) {
        Vec v(n, Scalar::zero(f));
        v[p] = half;
        v[r] = half;
        v[*s] = -half;
        setProduct(t, p, r, v);
      }
  MatsuoAlgebra m;
  m.algebra = makeAlgebra(f, ts.points, std::move(t));
  for (std::size_t p = 0; p < n; ++p) m.axes.push_back(Element::basis(m.algebra, p));

  for (std::size_t p = 0; p < n; ++p) {
    requirePrimitiveJordan(m.axes[p], lambda, "point " + ts.points[p]);
    MiyamotoMap tau = miyamoto(m.axes[p], lambda);
    for (std::size_t r = 0; r < n; ++r) {
      auto s = ts.third(p, r);
      const Element& expected = (s ? m.axes[*s] : m.axes[r]);
      if (tau.apply(m.axes[r]) != expected)
        fail(ErrorCode::SelfCheckFailed, "Miyamoto map of " + ts.points[p] + " does not send " + ts.points[r] + " to " +
                                             ts.points[s ? *s : r]);
    }
  }

  std::vector<FormConstraint> cons;
  for (const auto& a : m.axes) cons.push_back({a, a, Scalar::one(f)});
  try {
    FormSolution sol = solveFrobenius(m.algebra, cons);
    if (sol.unique()) m.form = sol.particular;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Inconsistent) throw;
  }
  return m;
}

// ---------------------------------------------------------- Jordan matrices

std::size_t JordanMatrices::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= k) fail(ErrorCode::InvalidArgument, "matrix index out of range");
  return i * k - i * (i - 1) / 2 + (j - i);
}

JordanMatrices jordanSymmetricMatrices(std::size_t k, const FieldDesc& f) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "k must be at least 2");
  const std::size_t n = k * (k + 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      cells.emplace_back(i, j);
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  auto matrixOf = [&](std::size_t b) {
    Matrix m(f, k, k);
    auto [i, j] = cells[b];
    m.at(i, j) = Scalar::one(f);
    m.at(j, i) = Scalar::one(f);
    return m;
  };
  const Scalar half = q(f, 1, 2);
  Table t = emptyTable(f, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      Matrix X = matrixOf(x), Y = matrixOf(y);
      Matrix P = (X * Y + Y * X).scaled(half);
      Vec v(n, Scalar::zero(f));
      for (std::size_t b = 0; b < n; ++b) v[b] = P.at(cells[b].first, cells[b].second);
      setProduct(t, x, y, v);
    }
  AlgebraPtr alg = makeAlgebra(f, std::move(names), std::move(t));
  Matrix g(f, n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Matrix P = matrixOf(x) * matrixOf(y);
      Scalar tr = Scalar::zero(f);
      for (std::size_t i = 0; i < k; ++i) tr += P.at(i, i);
      g.at(x, y) = tr;
    }
  Vec unit(n, Scalar::zero(f));
  for (std::size_t i = 0; i < k; ++i) unit[i * k - i * (i - 1) / 2] = Scalar::one(f);
  JordanMatrices J{alg, k, BilinearForm(alg, g), Element(alg, unit)};

  if (!holdsAsIdentity(builtinIdentity("jordan"), alg, {}).holds)
    fail(ErrorCode::SelfCheckFailed, "symmetric matrices fail the Jordan identity");
  return J;
}

}  // namespace axial
