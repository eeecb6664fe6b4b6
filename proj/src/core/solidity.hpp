#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axes.hpp"
#include "frobenius.hpp"

namespace axial {

enum class PairKind { Equal, Orthogonal, Flat, Baric, Toric };

const char* pairKindName(PairKind k) noexcept;

struct PairClass {
  PairKind kind = PairKind::Toric;
  Scalar pi;                    // (a, b)
  bool quarterSpecial = false;  // pi = 1/4 and lambda = 1/2
};

// Raises NotAxes unless a and b are primitive lambda-axes.
PairClass classifyPair(const Element& a, const Element& b, const BilinearForm& form, const Scalar& lambda);

// x(t) = (sum_i t^i coeffs[i]) / denominator(t), coordinates in the ambient
// algebra.
struct IdempotentFamily {
  std::string parameter;  // "eps" or "t"
  std::string description;
  std::vector<Vec> coeffs;
  UniPoly denominator{FieldDesc::rationals()};
  std::vector<Scalar> excluded;  // parameter values with zero denominator

  // Raises InvalidArgument at an excluded value.
  Element at(const AlgebraPtr& ambient, const Scalar& t) const;
  // The generic member over Q(parameter); only for algebras over Q.
  Element generic(const AlgebraPtr& ambient) const;
};

struct NamedIdempotent {
  std::string label;
  Element x;
  bool trivial = false;  // 0 or the unit of the subalgebra
};

struct IdempotentSet {
  std::vector<NamedIdempotent> points;
  std::vector<IdempotentFamily> families;
  std::vector<std::string> notes;
};

// Idempotents of the subalgebra generated by its first two basis elements
// a, b (dim <= 3); every returned point is re-verified. Raises
// UnsupportedShape for dim > 3 or a table that is not of the 2-generated
// form ab = s + lambda(a + b), s a = gamma a, s b = gamma b, s^2 = gamma s.
IdempotentSet enumerateIdempotents2Gen(const Subalgebra& B, const Scalar& lambda);

struct AuditedIdempotent {
  std::string label;
  Element x;
  bool trivial = false;
  bool symbolic = false;
  AxisReport report;
};

struct SolidityReport {
  std::size_t subalgebraDim = 0;
  PairClass pairClass;
  std::vector<AuditedIdempotent> idempotents;
  std::vector<std::string> notes;
  bool allPrimitiveAxes = true;
  bool allJordanType = true;
  bool solid = true;
  std::optional<std::string> witness;  // label of the first failing idempotent
};

// Nontrivial idempotents (explicit points, family samples, and the generic
// family member over Q(param) when the base field is Q) are certified in
// the ambient algebra.
SolidityReport solidAudit(const Element& a, const Element& b, const BilinearForm& form, const Scalar& lambda,
                          const std::vector<Scalar>& samples);

struct HardnessProbe {
  std::vector<Vec> idempotentCoords, axisCoords;  // in the subalgebra basis
  std::size_t idempotentRank = 0, axisRank = 0, jointRank = 0;
  bool isHard = false;
};

HardnessProbe hardnessProbe(const Subalgebra& B, const std::vector<Element>& idempotents,
                            const std::vector<Element>& axes);

}  // namespace axial
