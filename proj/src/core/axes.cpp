#include "axes.hpp"

#include <algorithm>

namespace axial {

namespace {

bool sameScalar(const Scalar& a, const Scalar& b) { return a == b; }

bool inList(const std::vector<Scalar>& xs, const Scalar& x) {
  return std::any_of(xs.begin(), xs.end(), [&](const Scalar& s) { return sameScalar(s, x); });
}

Scalar lift(const Scalar& s, const AlgebraPtr& alg) { return embed(s, alg->field()); }

// x (x - 1) prod (x - mu)
UniPoly annihilator(const FieldDesc& f, const std::vector<Scalar>& S) {
  UniPoly p = UniPoly::x(f) * UniPoly::linear(Scalar::one(f));
  for (const auto& mu : S) p = p * UniPoly::linear(mu);
  return p;
}

bool annihilates(const UniPoly& p, const Matrix& L) { return evaluate(p, L).isZero(); }

Span spanOf(const AlgebraPtr& alg, const std::vector<Element>& xs) {
  Span s(alg->field(), alg->dim());
  for (const auto& x : xs) s.add(x.coords());
  return s;
}

std::vector<Element> concat(std::vector<Element> a, const std::vector<Element>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Checks that every product x*y (x in X, y in Y) lies in `target`; records the
// first failure.
bool productsInside(const std::vector<Element>& X, const std::vector<Element>& Y, const Span& target,
                    const std::string& rule, std::vector<std::string>& violations) {
  for (const auto& x : X)
    for (const auto& y : Y) {
      Element p = x * y;
      if (!target.contains(p.coords())) {
        violations.push_back(rule + ": (" + x.str() + ")*(" + y.str() + ") = " + p.str());
        return false;
      }
    }
  return true;
}

void requireAxisFor(const Element& a, const std::vector<Scalar>& S) {
  if (!isIdempotent(a)) fail(ErrorCode::NotAnAxis, "element is not idempotent: " + a.str());
  Matrix L = leftMultiplicationMatrix(a);
  if (!annihilates(annihilator(a.algebra()->field(), S), L))
    fail(ErrorCode::NotAnAxis, "L_a is not annihilated by x(x-1)" + std::string(S.empty() ? "" : "prod(x-mu)") +
                                   " for " + a.str());
}

}  // namespace

bool isIdempotent(const Element& x) { return x * x == x; }

std::vector<Element> EigenData::space(const Scalar& mu) const {
  for (const auto& s : spaces)
    if (s.value == mu) return s.basis;
  return {};
}

std::vector<Scalar> EigenData::eigenvalues() const {
  std::vector<Scalar> v;
  for (const auto& s : spaces) v.push_back(s.value);
  return v;
}

EigenData eigenDecompose(const Element& a, const std::vector<Scalar>& hints) {
  if (!isIdempotent(a)) fail(ErrorCode::NotIdempotent, "eigen-decomposition needs an idempotent, got " + a.str());
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  Matrix L = leftMultiplicationMatrix(a);
  EigenData d;
  d.axis = a;
  d.minimalPolynomial = minimalPolynomial(L);
  std::vector<Scalar> h{Scalar::one(f), Scalar::zero(f)};
  for (const auto& x : hints) h.push_back(lift(x, alg));
  std::size_t total = 0;
  for (const auto& mu : rootsInField(d.minimalPolynomial, h)) {
    EigenSpace s{mu, {}};
    for (auto& v : kernel(L - Matrix::identity(f, alg->dim()).scaled(mu))) s.basis.emplace_back(alg, std::move(v));
    total += s.basis.size();
    d.spaces.push_back(std::move(s));
  }
  d.complete = total == alg->dim();
  return d;
}

FusionVerdicts checkFusion(const Element& a, const Scalar& lambdaIn, const EigenData& eigen) {
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  const Scalar lambda = lift(lambdaIn, alg);
  std::vector<Scalar> allowed{Scalar::zero(f), Scalar::one(f), lambda};
  if (!eigen.complete) fail(ErrorCode::IncompleteDecomposition, "eigenspaces do not span the algebra");
  for (const auto& mu : eigen.eigenvalues())
    if (!inList(allowed, mu)) fail(ErrorCode::IncompleteDecomposition, "eigenvalue " + mu.str() + " outside {0, 1, lambda}");

  auto A0 = eigen.space(Scalar::zero(f));
  auto A1 = eigen.space(Scalar::one(f));
  auto Al = eigen.space(lambda);
  auto A01 = concat(A1, A0);
  Span s01 = spanOf(alg, A01), sl = spanOf(alg, Al), s0 = spanOf(alg, A0);

  FusionVerdicts v;
  v.basicA01Subalgebra = productsInside(A01, A01, s01, "A_{0,1}*A_{0,1} not in A_{0,1}", v.violations);
  v.moduleRule = productsInside(A01, Al, sl, "A_{0,1}*A_lambda not in A_lambda", v.violations);
  v.preJordanOffDiagonal = productsInside(Al, Al, s01, "A_lambda*A_lambda not in A_{0,1}", v.violations);
  v.jordanA0Squared = productsInside(A0, A0, s0, "A_0*A_0 not in A_0", v.violations);
  return v;
}

AxisReport checkAxis(const Element& a, const Scalar& lambdaIn) {
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  const Scalar lambda = lift(lambdaIn, alg);
  if (lambda.isZero() || lambda.isOne()) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");

  AxisReport r;
  r.lambda = lambda;
  r.isIdempotent = isIdempotent(a);
  if (!r.isIdempotent) return r;

  Matrix L = leftMultiplicationMatrix(a);
  UniPoly m = minimalPolynomial(L);
  r.minimalPolynomial = m.str();
  r.semisimple = isSquarefree(m);
  r.spectrumInTarget = (annihilator(f, {lambda}) % m).isZero();
  Matrix L2 = L * L;
  Matrix L3 = L2 * L;
  r.ax1Holds = (L3 - L2.scaled(lambda + Scalar::one(f)) + L.scaled(lambda)).isZero();
  if (r.ax1Holds != r.spectrumInTarget)
    fail(ErrorCode::SelfCheckFailed, "minimal-polynomial and operator-identity axis tests disagree");

  EigenData eigen = eigenDecompose(a, {lambda});
  r.spectrum = eigen.eigenvalues();
  r.complete = eigen.complete;
  r.dim0 = eigen.space(Scalar::zero(f)).size();
  r.dim1 = eigen.space(Scalar::one(f)).size();
  r.dimLambda = eigen.space(lambda).size();
  r.primitive = r.dim1 == 1;
  r.isAxis = r.ax1Holds && r.complete;
  if (!r.isAxis) return r;

  r.fusion = checkFusion(a, lambda, eigen);
  r.miyamotoIsAutomorphism = miyamoto(a, lambda).isAutomorphism;
  return r;
}

std::optional<Scalar> inferLambda(const Element& a) {
  if (!isIdempotent(a)) return std::nullopt;
  const FieldDesc& f = a.algebra()->field();
  UniPoly m = minimalPolynomial(leftMultiplicationMatrix(a));
  std::optional<Scalar> found;
  for (const auto& mu : rootsInField(m, {Scalar::zero(f), Scalar::one(f)})) {
    if (mu.isZero() || mu.isOne()) continue;
    if (found) return std::nullopt;
    found = mu;
  }
  return found;
}

const Element& Components::at(const Scalar& mu) const {
  for (const auto& [v, e] : ymu)
    if (v == mu) return e;
  fail(ErrorCode::InvalidArgument, "no component for eigenvalue " + mu.str());
}

Components componentRecovery(const Element& a, const Element& y, const std::vector<Scalar>& Sin) {
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  std::vector<Scalar> S;
  for (const auto& mu : Sin) {
    Scalar m = lift(mu, alg);
    if (m.isZero() || m.isOne() || inList(S, m))
      fail(ErrorCode::SingularVandermonde, "eigenvalues must be distinct and outside {0, 1}: " + m.str());
    S.push_back(m);
  }
  requireAxisFor(a, S);

  Components c;
  Element ay = a * y;
  Element aay = a * ay;
  const Scalar one = Scalar::one(f);
  if (S.size() == 1) {
    const Scalar& l = S[0];
    c.y1 = (aay - ay.scaled(l)).scaled((one - l).inverse());
    c.ymu.emplace_back(l, (aay - ay).scaled((l * (l - one)).inverse()));
  } else {
    // L^k y = y_1 + sum mu^k y_mu for k >= 1.
    const std::size_t t = S.size();
    std::vector<Scalar> nodes{one};
    nodes.insert(nodes.end(), S.begin(), S.end());
    Matrix V(f, t + 1, t + 1);
    for (std::size_t k = 0; k <= t; ++k)
      for (std::size_t j = 0; j <= t; ++j) V.at(k, j) = nodes[j].pow(static_cast<unsigned>(k + 1));
    std::vector<Element> powers{ay};
    for (std::size_t k = 1; k <= t; ++k) powers.push_back(a * powers.back());
    std::vector<Element> comps;
    for (std::size_t j = 0; j <= t; ++j) {
      Vec e(t + 1, Scalar::zero(f));
      e[j] = one;
      auto w = solve(V.transpose(), e);  // row j of V^{-1}
      if (!w) fail(ErrorCode::SingularVandermonde, "Vandermonde system is singular");
      Element comp = Element::zero(alg);
      for (std::size_t k = 0; k <= t; ++k)
        if (!(*w)[k].isZero()) comp = comp + powers[k].scaled((*w)[k]);
      comps.push_back(comp);
    }
    c.y1 = comps[0];
    for (std::size_t j = 0; j < t; ++j) c.ymu.emplace_back(S[j], comps[j + 1]);
  }
  c.y0 = y - c.y1;
  for (const auto& [mu, e] : c.ymu) c.y0 = c.y0 - e;

  // Every component must be an eigenvector for its eigenvalue.
  bool ok = a * c.y1 == c.y1 && (a * c.y0).isZero();
  for (const auto& [mu, e] : c.ymu) ok = ok && a * e == e.scaled(mu);
  if (!ok) fail(ErrorCode::SelfCheckFailed, "recovered components are not eigenvectors");
  return c;
}

Components eigenprojection(const EigenData& eigen, const Element& y, const std::vector<Scalar>& Sin) {
  const AlgebraPtr& alg = y.algebra();
  const FieldDesc& f = alg->field();
  std::vector<Scalar> values{Scalar::one(f), Scalar::zero(f)};
  for (const auto& mu : Sin) values.push_back(lift(mu, alg));
  std::vector<Element> all;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < values.size(); ++k)
    for (const auto& v : eigen.space(values[k])) {
      all.push_back(v);
      owner.push_back(k);
    }
  Span s = spanOf(alg, all);
  if (s.dim() != all.size()) fail(ErrorCode::SelfCheckFailed, "eigenvectors are dependent");
  auto coords = s.coordinates(y.coords());
  if (!coords) fail(ErrorCode::IncompleteDecomposition, "element is not in the sum of the listed eigenspaces");
  std::vector<Element> parts(values.size(), Element::zero(alg));
  for (std::size_t i = 0; i < all.size(); ++i) parts[owner[i]] = parts[owner[i]] + all[i].scaled((*coords)[i]);
  Components c;
  c.y1 = parts[0];
  c.y0 = parts[1];
  for (std::size_t k = 2; k < values.size(); ++k) c.ymu.emplace_back(values[k], parts[k]);
  return c;
}

Element MiyamotoMap::apply(const Element& y) const { return Element(y.algebra(), matrix.apply(y.coords())); }

MiyamotoMap miyamoto(const Element& a, const Scalar& lambdaIn) {
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  const Scalar lambda = lift(lambdaIn, alg);
  if (lambda.isZero() || lambda.isOne()) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  requireAxisFor(a, {lambda});
  const std::size_t n = alg->dim();
  Matrix L = leftMultiplicationMatrix(a);
  Matrix I = Matrix::identity(f, n);
  // y_lambda = (L^2 - L) y / (lambda (lambda - 1))
  Matrix proj = (L * L - L).scaled((lambda * (lambda - Scalar::one(f))).inverse());
  MiyamotoMap m{a, lambda, I - proj.scaled(Scalar::fromInt(f, 2))};
  m.involution = m.matrix * m.matrix == I;
  m.isAutomorphism = true;
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(m.apply(Element::basis(alg, i)));
  for (std::size_t i = 0; i < n && m.isAutomorphism; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Element lhs = m.apply(Element(alg, alg->product(i, j)));
      if (lhs != images[i] * images[j]) {
        m.isAutomorphism = false;
        break;
      }
    }
  return m;
}

std::vector<Element> axisOrbit(const std::vector<Element>& axes, const Scalar& lambda, std::size_t maxSize) {
  std::vector<Element> orbit;
  std::vector<MiyamotoMap> maps;
  auto insert = [&](const Element& x) {
    if (std::find(orbit.begin(), orbit.end(), x) != orbit.end()) return;
    if (orbit.size() >= maxSize)
      fail(ErrorCode::OrbitOverflow, "orbit exceeds " + std::to_string(maxSize) + " axes (it may be infinite)");
    orbit.push_back(x);
    maps.push_back(miyamoto(x, lambda));
  };
  for (const auto& a : axes) insert(a);
  // Pairs (i, k) with i <= k are processed once k is reached.
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      Element x = maps[k].apply(orbit[i]);
      Element y = maps[i].apply(orbit[k]);
      insert(x);
      insert(y);
    }
  return orbit;
}

SeressResult seressCheck(const Element& a, const Scalar& lambdaIn) {
  const AlgebraPtr& alg = a.algebra();
  const FieldDesc& f = alg->field();
  const Scalar lambda = lift(lambdaIn, alg);
  requireAxisFor(a, {lambda});
  EigenData eigen = eigenDecompose(a, {lambda});
  auto A01 = concat(eigen.space(Scalar::one(f)), eigen.space(Scalar::zero(f)));
  SeressResult r;
  for (std::size_t i = 0; i < alg->dim() && r.holds; ++i) {
    Element y = Element::basis(alg, i);
    Element y0 = componentRecovery(a, y, {lambda}).y0;
    for (const auto& z : A01) {
      Element z0 = componentRecovery(a, z, {lambda}).y0;
      Element lhs = a * (y * z);
      Element rhs = (a * y) * z + a * (y0 * z0);
      if (lhs != rhs) {
        r.holds = false;
        r.violation = "y = " + y.str() + ", z = " + z.str();
        break;
      }
    }
  }
  return r;
}

}  // namespace axial
