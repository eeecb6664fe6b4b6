#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace axial {

bool isIdempotent(const Element& x);

struct EigenSpace {
  Scalar value;
  std::vector<Element> basis;
};

struct EigenData {
  Element axis;
  UniPoly minimalPolynomial{FieldDesc::rationals()};
  std::vector<EigenSpace> spaces;  // in order of discovery
  bool complete = false;           // eigenspaces fill the algebra

  // Basis of A_mu(a); empty if mu is not an eigenvalue.
  std::vector<Element> space(const Scalar& mu) const;
  std::vector<Scalar> eigenvalues() const;
};

// `hints` are tried first as roots (useful over Q(t), where only hinted
// values and a residual linear factor are found).
EigenData eigenDecompose(const Element& a, const std::vector<Scalar>& hints = {});

struct FusionVerdicts {
  bool basicA01Subalgebra = false;    // A_{0,1} A_{0,1} in A_{0,1}
  bool moduleRule = false;            // A_{0,1} A_lambda in A_lambda
  bool preJordanOffDiagonal = false;  // A_lambda A_lambda in A_{0,1}
  bool jordanA0Squared = false;       // A_0 A_0 in A_0
  // Human-readable description of the first failing product per rule.
  std::vector<std::string> violations;

  bool jordanType() const {
    return basicA01Subalgebra && moduleRule && preJordanOffDiagonal && jordanA0Squared;
  }
};

struct AxisReport {
  Scalar lambda;
  bool isIdempotent = false;
  std::vector<Scalar> spectrum;
  std::string minimalPolynomial;
  bool semisimple = false;        // minimal polynomial squarefree
  bool spectrumInTarget = false;  // minimal polynomial divides x(x-1)(x-lambda)
  bool complete = false;
  bool ax1Holds = false;          // L^3 = (lambda+1) L^2 - lambda L
  bool isAxis = false;
  bool primitive = false;
  std::size_t dim0 = 0, dim1 = 0, dimLambda = 0;
  FusionVerdicts fusion;
  bool miyamotoIsAutomorphism = false;

  bool primitiveJordan() const { return isAxis && primitive && fusion.jordanType(); }
};

// Raises BadLambda for lambda in {0, 1}.
AxisReport checkAxis(const Element& a, const Scalar& lambda);

// The eigenvalue outside {0, 1} when there is exactly one.
std::optional<Scalar> inferLambda(const Element& a);

// Raises IncompleteDecomposition unless `eigen` is complete with spectrum in
// {0, 1, lambda}.
FusionVerdicts checkFusion(const Element& a, const Scalar& lambda, const EigenData& eigen);

struct Components {
  Element y1, y0;
  std::vector<std::pair<Scalar, Element>> ymu;  // in the order of S

  const Element& at(const Scalar& mu) const;
};

// Components of y from powers of L_a: closed forms for |S| = 1, a
// Vandermonde solve otherwise.
Components componentRecovery(const Element& a, const Element& y, const std::vector<Scalar>& S);

// Components read off an eigenbasis (independent of componentRecovery).
Components eigenprojection(const EigenData& eigen, const Element& y, const std::vector<Scalar>& S);

struct MiyamotoMap {
  Element axis;
  Scalar lambda;
  Matrix matrix;
  bool involution = false;
  bool isAutomorphism = false;

  Element apply(const Element& y) const;
};

// tau(y) = y - 2 y_lambda. Raises NotAnAxis.
MiyamotoMap miyamoto(const Element& a, const Scalar& lambda);

// Closure of `axes` under their Miyamoto maps. Raises OrbitOverflow once the
// closure would exceed maxSize.
std::vector<Element> axisOrbit(const std::vector<Element>& axes, const Scalar& lambda, std::size_t maxSize);

struct SeressResult {
  bool holds = true;
  std::string violation;
};

// a(yz) = (ay)z + a(y_0 z_0) for basis y and z in a basis of A_{0,1}(a).
SeressResult seressCheck(const Element& a, const Scalar& lambda);

}  // namespace axial
