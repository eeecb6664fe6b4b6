#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace axial {

// Symmetric associative bilinear form, stored as its Gram matrix.
class BilinearForm {
 public:
  // Validates symmetry and (b_i b_j, b_k) = (b_i, b_j b_k).
  BilinearForm(AlgebraPtr algebra, Matrix gram);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Matrix& gram() const noexcept { return gram_; }

  Scalar operator()(const Vec& x, const Vec& y) const;
  Scalar operator()(const Element& x, const Element& y) const { return (*this)(x.coords(), y.coords()); }

  Scalar determinant() const { return axial::determinant(gram_); }

 private:
  AlgebraPtr alg_;
  Matrix gram_;
};

// Bilinear combination check without validation; used while solving.
bool isAssociativeForm(const Algebra& alg, const Matrix& gram);

struct FormConstraint {
  Element x, y;
  Scalar value;
};

struct FormSolution {
  std::optional<BilinearForm> particular;
  // Symmetric associative Gram matrices vanishing on every constrained pair.
  std::vector<Matrix> homogeneousBasis;

  bool unique() const { return particular.has_value() && homogeneousBasis.empty(); }
};

// All associative symmetric forms with (x, y) = value for each constraint.
// Raises Inconsistent when there is none.
FormSolution solveFrobenius(const AlgebraPtr& alg, const std::vector<FormConstraint>& constraints);

// Kernel of the Gram matrix, checked to be an ideal.
std::vector<Element> radical(const BilinearForm& form);

// Intersection of ker(L_a - lambda) over the axes; whole space for no axes.
std::vector<Element> axialRadical(const AlgebraPtr& alg, const std::vector<Element>& axes, const Scalar& lambda);

// y^3 y = 0 and y^2 y^2 = 0.
bool is4Nilpotent(const Element& y);

struct TraceViolation {
  Element x, y;
  Scalar value;
};

// Pairs with xy 4-nilpotent but (x, y) != 0.
std::vector<TraceViolation> traceAdmissibilityAudit(const BilinearForm& form,
                                                    const std::vector<std::pair<Element, Element>>& pairs);
// Same over all pairs of basis vectors.
std::vector<TraceViolation> traceAdmissibilityAudit(const BilinearForm& form);

}  // namespace axial
