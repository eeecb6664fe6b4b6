#include "solidity.hpp"

#include <algorithm>

namespace axial {

const char* pairKindName(PairKind k) noexcept {
  switch (k) {
    case PairKind::Equal: return "equal";
    case PairKind::Orthogonal: return "orthogonal";
    case PairKind::Flat: return "flat";
    case PairKind::Baric: return "baric";
    case PairKind::Toric: return "toric";
  }
  return "?";
}

namespace {

void requirePrimitiveAxis(const Element& x, const Scalar& lambda, const char* what) {
  AxisReport r = checkAxis(x, lambda);
  if (!r.isAxis || !r.primitive)
    fail(ErrorCode::NotAxes, std::string(what) + " = " + x.str() + " is not a primitive axis of type " + r.lambda.str());
}

// gamma with x * y = gamma y, if y != 0 and such a scalar exists.
std::optional<Scalar> ratio(const Element& xy, const Element& y) {
  for (std::size_t i = 0; i < y.coords().size(); ++i)
    if (!y[i].isZero()) {
      Scalar g = xy[i] / y[i];
      if (xy == y.scaled(g)) return g;
      return std::nullopt;
    }
  return std::nullopt;
}

bool isUnitOf(const Subalgebra& B, const Element& x) {
  return std::all_of(B.basis.begin(), B.basis.end(), [&](const Element& b) { return x * b == b; });
}

}  // namespace

PairClass classifyPair(const Element& a, const Element& b, const BilinearForm& form, const Scalar& lambdaIn) {
  const FieldDesc& f = a.algebra()->field();
  const Scalar lambda = embed(lambdaIn, f);
  requirePrimitiveAxis(a, lambda, "a");
  requirePrimitiveAxis(b, lambda, "b");
  PairClass c;
  c.pi = form(a, b);
  const Scalar half = Scalar::one(f) / Scalar::fromInt(f, 2);
  c.quarterSpecial = lambda == half && c.pi == half / Scalar::fromInt(f, 2);
  if (a == b)
    c.kind = PairKind::Equal;
  else if ((a * b).isZero())
    c.kind = PairKind::Orthogonal;
  else if (c.pi.isZero())
    c.kind = PairKind::Flat;
  else if (c.pi.isOne())
    c.kind = PairKind::Baric;
  else
    c.kind = PairKind::Toric;
  return c;
}

// ------------------------------------------------------------------ family

Element IdempotentFamily::at(const AlgebraPtr& ambient, const Scalar& tIn) const {
  const FieldDesc& f = ambient->field();
  Scalar t = embed(tIn, f);
  Scalar den = denominator.eval(t);
  if (den.isZero()) fail(ErrorCode::InvalidArgument, parameter + " = " + t.str() + " is excluded");
  Vec v = ambient->zero();
  Scalar p = Scalar::one(f);
  for (const auto& c : coeffs) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += p * c[i];
    p *= t;
  }
  for (auto& x : v) x = x / den;
  return Element(ambient, std::move(v));
}

Element IdempotentFamily::generic(const AlgebraPtr& ambient) const {
  if (ambient->field().kind() != FieldKind::Rationals)
    fail(ErrorCode::InvalidArgument, "symbolic family members need an algebra over Q");
  FieldDesc pf = FieldDesc::rationalFunctions(parameter);
  AlgebraPtr big = changeField(*ambient, pf);
  Scalar t = Scalar::variable(pf);
  Vec v = big->zero();
  Scalar p = Scalar::one(pf);
  for (const auto& c : coeffs) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += p * embed(c[i], pf);
    p *= t;
  }
  Scalar den = Scalar::zero(pf);
  p = Scalar::one(pf);
  for (const auto& c : denominator.coeffs()) {
    den += p * embed(c, pf);
    p *= t;
  }
  for (auto& x : v) x = x / den;
  return Element(big, std::move(v));
}

// ------------------------------------------------------------ enumeration

IdempotentSet enumerateIdempotents2Gen(const Subalgebra& B, const Scalar& lambdaIn) {
  const AlgebraPtr& A = B.parent;
  const FieldDesc& f = A->field();
  const Scalar lambda = embed(lambdaIn, f);
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f), two = Scalar::fromInt(f, 2);
  const Scalar half = one / two;
  if (B.dim() > 3) fail(ErrorCode::UnsupportedShape, "subalgebra has dimension " + std::to_string(B.dim()) + " > 3");

  IdempotentSet out;
  auto addPoint = [&](const Element& x) {
    if (!isIdempotent(x)) fail(ErrorCode::SelfCheckFailed, "enumerated element is not idempotent: " + x.str());
    for (const auto& p : out.points)
      if (p.x == x) return;
    out.points.push_back({x.isZero() ? "0" : x.str(), x, x.isZero() || isUnitOf(B, x)});
  };
  auto addFamily = [&](IdempotentFamily fam) {
    if (fam.excluded.empty()) fam.excluded = rootsInField(fam.denominator);
    if (f.kind() == FieldKind::Rationals) {
      if (!isIdempotent(fam.generic(A)))
        fail(ErrorCode::SelfCheckFailed, "family " + fam.description + " is not idempotent");
    } else {
      int checked = 0;
      for (long t = 1; checked < 3 && t < 100; ++t) {
        Scalar s = Scalar::fromInt(f, t);
        if (fam.denominator.eval(s).isZero()) continue;
        if (!isIdempotent(fam.at(A, s)))
          fail(ErrorCode::SelfCheckFailed, "family " + fam.description + " is not idempotent at " + s.str());
        ++checked;
      }
    }
    out.families.push_back(std::move(fam));
  };

  addPoint(Element::zero(A));
  if (B.dim() == 0) return out;
  const Element a = B.basis[0];

  if (B.dim() == 1) {
    auto c = ratio(a * a, a);
    if (c && !c->isZero()) addPoint(a.scaled(c->inverse()));
    return out;
  }

  const Element b = B.basis[1];
  if (!isIdempotent(a) || !isIdempotent(b))
    fail(ErrorCode::UnsupportedShape, "generators of the subalgebra must be idempotents");
  const Element ab = a * b;

  if (B.dim() == 2) {
    // ab = p a + q b
    auto c = B.coordinates(ab);
    const Scalar p = (*c)[0], q = (*c)[1];
    addPoint(a);
    addPoint(b);
    // alpha + 2 p beta = 1, 2 q alpha + beta = 1 when alpha beta != 0
    const Scalar det = one - Scalar::fromInt(f, 4) * p * q;
    if (!det.isZero()) {
      Scalar alpha = (one - two * p) / det, beta = (one - two * q) / det;
      if (!alpha.isZero() && !beta.isZero()) addPoint(a.scaled(alpha) + b.scaled(beta));
    } else if (p == half && q == half) {
      // Both equations read alpha + beta = 1.
      IdempotentFamily fam;
      fam.parameter = "t";
      fam.coeffs = {b.coords(), (a - b).coords()};
      fam.denominator = UniPoly::constant(one);
      fam.description = "t*a + (1-t)*b";
      addFamily(std::move(fam));
    }
    return out;
  }

  // dim 3: ab = s + lambda a + lambda b
  const Element s = ab - a.scaled(lambda) - b.scaled(lambda);
  auto g1 = ratio(s * a, a), g2 = ratio(s * b, b);
  if (!g1 || !g2 || *g1 != *g2)
    fail(ErrorCode::UnsupportedShape, "subalgebra is not of the 2-generated form for lambda = " + lambda.str());
  const Scalar gamma = *g1;
  if (s * s != s.scaled(gamma))
    fail(ErrorCode::UnsupportedShape, "s^2 != gamma s in the subalgebra for lambda = " + lambda.str());
  auto elem = [&](const Scalar& al, const Scalar& be, const Scalar& de) {
    return a.scaled(al) + b.scaled(be) + s.scaled(de);
  };

  if (lambda == half && !gamma.isZero()) {
    // u = s / gamma is the unit; idempotents other than 0, u are w + u/2 with
    // w in span{a - u/2, b - u/2} and q(w) = 1/4, where
    // q(x a' + y b') = (x^2 + y^2 + 2k x y) / 4, k = 1 + 4 gamma.
    const Element u = s.scaled(gamma.inverse());
    addPoint(u);
    addPoint(a);
    addPoint(b);
    const Element ap = a - u.scaled(half), bp = b - u.scaled(half);
    const Scalar k = one + Scalar::fromInt(f, 4) * gamma;
    const Scalar disc = k * k - one;
    auto quad = [&](const Scalar& x, const Scalar& y) {
      return (x * x + y * y + two * k * x * y) / Scalar::fromInt(f, 4);
    };
    if (disc.isZero()) {
      // q(w) = (x + k y)^2 / 4: two lines x + k y = +-1.
      for (int sign : {1, -1}) {
        IdempotentFamily fam;
        fam.parameter = "t";
        Scalar sg = Scalar::fromInt(f, sign);
        fam.coeffs = {(ap.scaled(sg) + u.scaled(half)).coords(), (bp - ap.scaled(k)).coords()};
        fam.denominator = UniPoly::constant(one);
        fam.description = "(" + std::string(sign > 0 ? "1" : "-1") + " - k t)(a - u/2) + t (b - u/2) + u/2, k = " + k.str();
        addFamily(std::move(fam));
      }
    } else if (auto r = squareRoot(disc)) {
      // Isotropic directions e0, f0; scaled so that q(eps e0 + f/eps) = 1/4.
      const Element e0 = ap.scaled(*r - k) + bp;
      const Element f0 = ap.scaled(-*r - k) + bp;
      const Scalar c0 = -*r - k;
      const Scalar polar = quad((*r - k) + c0, two);
      const Element fs = f0.scaled((Scalar::fromInt(f, 4) * polar).inverse());
      IdempotentFamily fam;
      fam.parameter = "eps";
      fam.coeffs = {fs.coords(), u.scaled(half).coords(), e0.coords()};
      fam.denominator = UniPoly::x(f);
      fam.description = "eps*(" + e0.str() + ") + eps^-1*(" + fs.str() + ") + 1/2*(" + u.str() + ")";
      addFamily(std::move(fam));
    } else {
      // Anisotropic: lines through (1, 0) with slope t.
      const Scalar twoK = two * k;
      const Element p0 = -ap + u.scaled(half);
      const Element p1 = bp.scaled(-two) + u.scaled(k);
      const Element p2 = ap - bp.scaled(twoK) + u.scaled(half);
      IdempotentFamily fam;
      fam.parameter = "t";
      fam.coeffs = {p0.coords(), p1.coords(), p2.coords()};
      fam.denominator = UniPoly(f, {one, twoK, one});
      fam.description = "((t^2-1)(a-u/2) - (2t+2k t^2)(b-u/2))/(1+2k t+t^2) + u/2, k = " + k.str();
      addFamily(std::move(fam));
      addPoint(p2);  // t -> infinity
      out.notes.push_back("q is anisotropic; idempotents parametrized rationally through a");
    }
    return out;
  }

  // Remaining cases from the coordinate equations
  //   a: alpha^2 + 2 lambda alpha beta + 2 gamma alpha delta = alpha
  //   b: beta^2 + 2 lambda alpha beta + 2 gamma beta delta = beta
  //   s: gamma delta^2 + 2 alpha beta = delta
  addPoint(a);
  addPoint(b);
  if (!gamma.isZero()) {
    const Scalar ig = gamma.inverse();
    addPoint(s.scaled(ig));
    addPoint(elem(-one, zero, ig));
    addPoint(elem(zero, -one, ig));
  }
  if (lambda == half) {
    // gamma = 0: alpha + beta = 1, delta = 2 alpha beta.
    IdempotentFamily fam;
    fam.parameter = "t";
    fam.coeffs = {b.coords(), (a - b + s.scaled(two)).coords(), s.scaled(-two).coords()};
    fam.denominator = UniPoly::constant(one);
    fam.description = "t*a + (1-t)*b + 2t(1-t)*s";
    addFamily(std::move(fam));
    return out;
  }
  // lambda != 1/2 forces alpha = beta.
  const Scalar c = one + two * lambda;
  if (gamma.isZero()) {
    Scalar al = c.inverse();
    addPoint(elem(al, al, two * al * al));
  } else {
    Scalar m = c * c + Scalar::fromInt(f, 8) * gamma;
    if (!m.isZero()) {
      if (auto r = squareRoot(m.inverse())) {
        for (const Scalar& al : {*r, -*r}) addPoint(elem(al, al, (one - c * al) / (two * gamma)));
      } else {
        out.notes.push_back("alpha = beta = +-1/sqrt(" + m.str() + ") lies outside the field");
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------- audit

SolidityReport solidAudit(const Element& a, const Element& b, const BilinearForm& form, const Scalar& lambdaIn,
                          const std::vector<Scalar>& samples) {
  const AlgebraPtr& A = a.algebra();
  const FieldDesc& f = A->field();
  const Scalar lambda = embed(lambdaIn, f);
  SolidityReport rep;
  rep.pairClass = classifyPair(a, b, form, lambda);
  Subalgebra B = generateSubalgebra({a, b});
  rep.subalgebraDim = B.dim();
  IdempotentSet set = enumerateIdempotents2Gen(B, lambda);
  rep.notes = set.notes;

  auto record = [&](AuditedIdempotent entry) {
    if (!entry.trivial) {
      bool prim = entry.report.isAxis && entry.report.primitive;
      bool jordan = prim && entry.report.fusion.jordanType();
      rep.allPrimitiveAxes = rep.allPrimitiveAxes && prim;
      rep.allJordanType = rep.allJordanType && jordan;
      if (!jordan && !rep.witness) rep.witness = entry.label;
    }
    rep.idempotents.push_back(std::move(entry));
  };

  for (const auto& p : set.points) {
    AuditedIdempotent e{p.label, p.x, p.trivial, false, {}};
    if (!p.trivial) e.report = checkAxis(p.x, lambda);
    record(std::move(e));
  }
  for (const auto& fam : set.families) {
    if (f.kind() == FieldKind::Rationals) {
      Element g = fam.generic(A);
      AuditedIdempotent e{fam.description + " (generic " + fam.parameter + ")", g, false, true, {}};
      e.report = checkAxis(g, embed(lambda, g.algebra()->field()));
      record(std::move(e));
      rep.notes.push_back("generic member over Q(" + fam.parameter +
                          ") certifies all but finitely many parameter values; excluded: " +
                          [&] {
                            std::string s;
                            for (const auto& x : fam.excluded) s += (s.empty() ? "" : ", ") + x.str();
                            return s.empty() ? std::string("none") : s;
                          }());
    }
    for (const auto& t : samples) {
      Scalar tt = embed(t, f);
      if (fam.denominator.eval(tt).isZero()) {
        rep.notes.push_back(fam.parameter + " = " + tt.str() + " skipped (excluded)");
        continue;
      }
      Element x = fam.at(A, tt);
      bool trivial = x.isZero() || isUnitOf(B, x);
      AuditedIdempotent e{fam.parameter + " = " + tt.str() + ": " + x.str(), x, trivial, false, {}};
      if (!trivial) e.report = checkAxis(x, lambda);
      record(std::move(e));
    }
  }
  rep.solid = rep.allPrimitiveAxes && rep.allJordanType;
  return rep;
}

HardnessProbe hardnessProbe(const Subalgebra& B, const std::vector<Element>& idempotents,
                            const std::vector<Element>& axes) {
  const FieldDesc& f = B.parent->field();
  HardnessProbe p;
  auto coordsOf = [&](const Element& x) {
    auto c = B.coordinates(x);
    if (!c) fail(ErrorCode::InvalidArgument, "element " + x.str() + " is not in the subalgebra");
    return *c;
  };
  Span si(f, B.dim()), sa(f, B.dim()), sj(f, B.dim());
  for (const auto& x : idempotents) {
    p.idempotentCoords.push_back(coordsOf(x));
    si.add(p.idempotentCoords.back());
    sj.add(p.idempotentCoords.back());
  }
  for (const auto& x : axes) {
    p.axisCoords.push_back(coordsOf(x));
    sa.add(p.axisCoords.back());
    sj.add(p.axisCoords.back());
  }
  p.idempotentRank = si.dim();
  p.axisRank = sa.dim();
  p.jointRank = sj.dim();
  p.isHard = p.idempotentRank == p.jointRank && p.axisRank == p.jointRank;
  return p;
}

}  // namespace axial
