#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace axial {

// Univariate polynomial over a FieldDesc; coefficients low to high with no
// trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(FieldDesc field) : field_(std::move(field)) {}
  UniPoly(FieldDesc field, std::vector<Scalar> coeffs);

  // x - root
  static UniPoly linear(const Scalar& root);
  static UniPoly x(const FieldDesc& field);
  static UniPoly constant(const Scalar& c);

  const FieldDesc& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const noexcept { return c_.empty(); }
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Scalar& s) const;
  void divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const;
  UniPoly operator%(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  Scalar eval(const Scalar& x) const;

  std::string str(const std::string& var = "x") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  FieldDesc field_;
  std::vector<Scalar> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);

bool isSquarefree(const UniPoly& p);

// Roots of p lying in its field, without multiplicity, in discovery order.
// Candidate values in `hints` are tried first. Over Q all rational roots are
// found; over F_p all roots; over Q(t) only hint roots and the root of a
// remaining linear factor.
std::vector<Scalar> rootsInField(const UniPoly& p, const std::vector<Scalar>& hints = {});

// Square root in the field when one exists (Q, F_p, and Q(t) for squares of
// reduced fractions).
std::optional<Scalar> squareRoot(const Scalar& x);

}  // namespace axial
