#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "frobenius.hpp"

namespace axial {

// Algebra on {a, b, s} with a^2 = a, b^2 = b, ab = s + lambda(a + b),
// s a = gamma a, s b = gamma b, s^2 = gamma s, gamma = (1-lambda) pi - lambda.
struct TwoGenAlgebra {
  AlgebraPtr algebra;
  Element a, b, sigma;
  Scalar lambda, pi, gamma;
  std::optional<BilinearForm> form;
  bool formUnique = false;
  bool flatAnnihilating = false;
};

// With flatAnnihilating, s multiplies everything to 0 (and pi is whatever
// the form forces from (a,a) = (b,b) = 1). Raises BadLambda, and
// SelfCheckFailed when a or b is not a primitive axis of Jordan type.
TwoGenAlgebra universal2Gen(const Scalar& lambda, const Scalar& pi, const FieldDesc& field,
                            bool flatAnnihilating = false);

// Basis {e, u, f}: u the unit, e^2 = f^2 = 0, ef = u/8.
struct ToricAlgebra {
  AlgebraPtr algebra;
  Element e, u, f;
  BilinearForm form;

  // eps e + eps^{-1} f + u/2
  Element family(const Scalar& eps) const;
};

ToricAlgebra toricEUF(const FieldDesc& field);

struct TripleSystem {
  std::vector<std::string> points;
  std::vector<std::array<std::size_t, 3>> lines;

  // Lines as "a,b,c;b,d,e". Points listed in `points` come first, in that
  // order; points only named by lines follow in order of appearance.
  static TripleSystem parse(const std::string& lines, const std::vector<std::string>& points = {});
  // Raises InvalidTripleSystem.
  void validate() const;
  // Third point on the line through p and q, if any.
  std::optional<std::size_t> third(std::size_t p, std::size_t q) const;
};

struct MatsuoAlgebra {
  AlgebraPtr algebra;
  std::vector<Element> axes;  // the points
  std::optional<BilinearForm> form;  // normal form, when unique
};

// p q = (lambda/2)(p + q - r) on a line {p, q, r}, 0 for non-collinear p, q.
// Raises BadLambda, InvalidTripleSystem, SelfCheckFailed.
MatsuoAlgebra matsuoFromTripleSystem(const TripleSystem& ts, const Scalar& lambda, const FieldDesc& field);

// Symmetric k x k matrices with x.y = (xy + yx)/2; basis E_ii and E_ij + E_ji
// (i < j) in row-major order of the upper triangle.
struct JordanMatrices {
  AlgebraPtr algebra;
  std::size_t k = 0;
  BilinearForm traceForm;
  Element unit;

  std::size_t index(std::size_t i, std::size_t j) const;  // 0-based
};

JordanMatrices jordanSymmetricMatrices(std::size_t k, const FieldDesc& field);

}  // namespace axial
