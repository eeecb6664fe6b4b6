#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace axial {

// Commutative algebra given by structure constants: structure[i][j] holds
// the coordinates of b_i * b_j.
class Algebra {
 public:
  Algebra(FieldDesc field, std::vector<std::string> names, std::vector<std::vector<Vec>> structure);

  const FieldDesc& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basisNames() const noexcept { return names_; }
  const std::vector<std::vector<Vec>>& structure() const noexcept { return structure_; }
  const Vec& product(std::size_t i, std::size_t j) const { return structure_[i][j]; }

  Vec zero() const { return Vec(dim(), Scalar::zero(field_)); }
  Vec basisVector(std::size_t i) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  // Matrix of y -> x*y in the standard basis.
  Matrix leftMultiplication(const Vec& x) const;

  // Coordinates read as "2*a - 1/2*b".
  std::string format(const Vec& x) const;

 private:
  FieldDesc field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> structure_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates shape, field membership and commutativity.
AlgebraPtr makeAlgebra(const FieldDesc& field, std::vector<std::string> names,
                       std::vector<std::vector<Vec>> structure);

// Same table read in a larger field (Q into Q(t) or F_p).
AlgebraPtr changeField(const Algebra& a, const FieldDesc& target);

// Element of a specific algebra.
class Element {
 public:
  Element() = default;
  Element(AlgebraPtr algebra, Vec coords);

  static Element zero(const AlgebraPtr& algebra);
  static Element basis(const AlgebraPtr& algebra, std::size_t i);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  const Vec& coords() const noexcept { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  bool isZero() const { return isZeroVec(c_); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;  // algebra product
  Element scaled(const Scalar& s) const;

  std::string str() const { return alg_->format(c_); }

  friend bool operator==(const Element& x, const Element& y) {
    return x.alg_ == y.alg_ && x.c_ == y.c_;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

 private:
  void checkSame(const Element& o) const;
  AlgebraPtr alg_;
  Vec c_;
};

Element operator*(const Scalar& s, const Element& x);

Matrix leftMultiplicationMatrix(const Element& a);

// Closure of the span of the generators under multiplication.
struct Subalgebra {
  AlgebraPtr parent;
  std::vector<Element> basis;
  // Word in the generators g1, g2, ... producing each basis element.
  std::vector<std::string> witness;
  // Structure constants in `basis`.
  AlgebraPtr induced;

  std::size_t dim() const { return basis.size(); }
  // Coordinates of a parent element in `basis`, if it lies in the span.
  std::optional<Vec> coordinates(const Element& x) const;
  Element embed(const Vec& coords) const;
};

// Breadth-first by word length, then by generator/basis index.
Subalgebra generateSubalgebra(const std::vector<Element>& gens);

}  // namespace axial
