#include <algorithm>

#include "identities.hpp"

namespace axial {

namespace {

// y_0-type and z_{0,1}-type combinations for a primitive axis E1 under a
// normal form; used by the seress entry.
const char* const kY0 = "(lam*x1 + (1-lam)*B(E1,x1)*E1 - E1*x1)";
const char* const kZ0 = "(lam*x2 + (1-lam)*B(E1,x2)*E1 - E1*x2)";
const char* const kZ01 = "(lam*x2 - E1*x2 + B(E1,x2)*E1)";

std::vector<CatalogEntry> buildCatalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"jordan", "((x1*x1)*x2)*x1 - (x1*x1)*(x2*x1)", "Jordan identity (x^2 y) x = x^2 (y x)", false, false});
  c.push_back({"almostJordan", "2*(((x2*x1)*x1)*x1) + x2*((x1*x1)*x1) - 3*((x2*(x1*x1))*x1)",
               "almost-Jordan identity 2((yx)x)x + y((xx)x) = 3(y(xx))x", false, false});
  c.push_back({"fourPowerAssoc", "((x1*x1)*x1)*x1 - (x1*x1)*(x1*x1)", "4-power associativity ((xx)x)x = (xx)(xx)", false,
               false});
  c.push_back({"linearizedPA",
               "-4*((x1*x2)*(x3*x4)) - 4*((x1*x3)*(x2*x4)) - 4*((x1*x4)*(x2*x3))"
               " + x1*(x2*(x3*x4)) + x1*(x3*(x4*x2)) + x1*(x4*(x2*x3))"
               " + x2*(x1*(x3*x4)) + x2*(x3*(x4*x1)) + x2*(x4*(x1*x3))"
               " + x3*(x1*(x2*x4)) + x3*(x2*(x4*x1)) + x3*(x4*(x1*x2))"
               " + x4*(x1*(x2*x3)) + x4*(x2*(x3*x1)) + x4*(x3*(x1*x2))",
               "multilinear form h(x,y,z,w) of 4-power associativity", false, false});
  c.push_back({"linearizedPA-partial",
               "4*((x1*x2)*(x1*x1)) - 2*(((x1*x2)*x1)*x1) - ((x1*x1)*x2)*x1 - ((x1*x1)*x1)*x2",
               "4-power associativity linearized once in the second variable", false, false});
  c.push_back({"ax1", "E1*(E1*(E1*x1)) - (lam+1)*(E1*(E1*x1)) + lam*(E1*x1)",
               "axis relation L^3 = (lambda+1) L^2 - lambda L", false, false});
  c.push_back({"semisimpleSpectrum", "E1*(E1*(E1*x1)) - (lam+1)*(E1*(E1*x1)) + lam*(E1*x1)",
               "L(L-1)(L-lambda) = 0 on every element", false, false});
  c.push_back({"primitivityFrobenius", "lam*(E1*x1) + (1-lam)*B(E1,x1)*E1 - E1*(E1*x1)",
               "primitivity under a normal form: a(ay) = lambda ay + (1-lambda)(a,y)a", true, false});
  c.push_back({"fusionLambdaLambda",
               "E1*((E1*x1)*(E1*x2)) - lam^2*B(E1,x2)*(E1*x1) - lam^2*B(E1,x1)*(E1*x2)"
               " - lam^2*B(E1*x1,x2)*E1 - (1-3*lam^2)*B(E1,x1)*B(E1,x2)*E1",
               "lambda-lambda fusion expressed through the form", true, false});
  c.push_back({"miyamotoClosure",
               "(2/lam)*B(E1,x1*x2)*E1 - (2/lam)*(E1*(x1*x2))"
               " - (2/lam)*B(E1,x1)*(E1*x2) - (2/lam)*B(E1,x2)*(E1*x1) + (2/lam)*((E1*x1)*x2) + (2/lam)*((E1*x2)*x1)"
               " - (4/lam^2)*B(E1,x1)*B(E1,x2)*E1 - (4/lam^2)*((E1*x1)*(E1*x2))"
               " + (4/lam^2)*B(E1,x1)*(E1*(E1*x2)) + (4/lam^2)*B(E1,x2)*(E1*(E1*x1))",
               "the Miyamoto map of E1 is multiplicative", true, false});
  c.push_back({"matsuoPairA",
               "((E1*(E1*E2)) - (E2*(E1*E2)) - (lam*(1-lam)/2)*E1 + (lam*(1-lam)/2)*E2)*(E1*E2)",
               "Matsuo pair condition (a(ab) - b(ab) - lambda(1-lambda)/2 (a-b)) ab = 0", false, false});
  c.push_back({"matsuoPairB", "((E1*(E1*E2)) - lam*(E1*E2) - (lam*(1-lam)/2)*E1)*((E1*E2) - E2)",
               "Matsuo pair condition (a(ab) - lambda ab - lambda(1-lambda)/2 a)(ab - b) = 0", false, false});
  c.push_back({"matsuoCriterion", "((E1*(E1*E2)) - lam*(E1*E2) - (lam*(1-lam)/2)*E1)*(E1*E2)",
               "Matsuo criterion (a(ab) - lambda ab - lambda(1-lambda)/2 a) ab = 0 for a != b", false, true});
  c.push_back({"seress",
               std::string("lam*(E1*(x1*") + kZ01 + ")) - lam*((E1*x1)*" + kZ01 + ") - E1*(" + kY0 + "*" + kZ0 + ")",
               "Seress: a(yz) = (ay)z + a(y_0 z_0) for z in A_{0,1}(a), scaled by lambda", true, false});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& identityCatalog() {
  static const std::vector<CatalogEntry> c = buildCatalog();
  return c;
}

const CatalogEntry& catalogEntry(const std::string& name) {
  const auto& c = identityCatalog();
  auto it = std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == c.end()) fail(ErrorCode::UnknownName, "no built-in identity named '" + name + "'");
  return *it;
}

GenPoly builtinIdentity(const std::string& name, const std::optional<Scalar>& lambda) {
  GenPoly f = parsePoly(catalogEntry(name).text);
  if (!lambda) return f;
  mpq_class q;
  if (!lambda->asRational(q)) {
    f.bindLambda(lambda);
    return f;
  }
  if (q == 0 || q == 1) fail(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  const FieldDesc& cf = GenPoly::coefficientField();
  GenPoly out;
  Scalar point = Scalar::fromRational(FieldDesc::rationals(), q);
  for (const auto& [k, m] : f.terms()) {
    GenMonomial n = m;
    mpq_class c;
    if (!m.coeff.asRational(c)) n.coeff = embed(evaluateAt(m.coeff.function(), point), cf);
    out.add(std::move(n));
  }
  out.bindLambda(lambda);
  return out;
}

}  // namespace axial
