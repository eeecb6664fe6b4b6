#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace axial {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

// Description of an exact scalar field of characteristic != 2.
class FieldDesc {
 public:
  FieldDesc() = default;

  static FieldDesc rationals();
  // Primes 3 and 5 are rejected unless allowSmall is set.
  static FieldDesc primeField(std::uint64_t p, bool allowSmall = false);
  static FieldDesc rationalFunctions(std::string variable);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return p_; }
  const std::string& variable() const noexcept { return var_; }

  // "Q", "F_7", "Q(t)"
  std::string describe() const;

  friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.var_ == b.var_;
  }

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
  std::string var_;
};

// Dense univariate polynomial over Q, coefficients low to high, no trailing
// zeros. The zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t degree);

  bool isZero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
  mpq_class coeff(std::size_t i) const;
  const mpq_class& leading() const { return c_.back(); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const mpq_class& s) const;

  // Euclidean division; divisor must be nonzero.
  void divmod(const QPoly& d, QPoly& q, QPoly& r) const;
  QPoly monic() const;

  mpq_class eval(const mpq_class& x) const;

  std::string str(const std::string& var) const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

// Reduced fraction num/den over Q[t] with den monic.
struct RationalFunction {
  QPoly num;
  QPoly den = QPoly::constant(1);

  static RationalFunction make(QPoly num, QPoly den);
  bool isConstant() const { return num.degree() <= 0 && den.degree() == 0; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Exact field element. Values are normalized eagerly, so equality is
// representation equality.
class Scalar {
 public:
  Scalar();  // rational zero

  static Scalar zero(const FieldDesc& f);
  static Scalar one(const FieldDesc& f);
  static Scalar fromInt(const FieldDesc& f, long n);
  static Scalar fromRational(const FieldDesc& f, const mpq_class& q);
  // The field variable t of Q(t).
  static Scalar variable(const FieldDesc& f);
  static Scalar fromRationalFunction(const FieldDesc& f, RationalFunction rf);

  const FieldDesc& field() const noexcept { return field_; }

  bool isZero() const;
  bool isOne() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  // Underlying representation; only valid for the matching field kind.
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const RationalFunction& function() const { return std::get<RationalFunction>(v_); }

  // True when the value lies in the prime subfield image of Q (always for Q,
  // constants for Q(t)); the rational is written to out.
  bool asRational(mpq_class& out) const;

  // Canonical text; parseScalar(str(), field()) == *this.
  std::string str() const;

  // Total order on representations, used only for canonical sorting.
  static int compare(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void checkSameField(const Scalar& o) const;

  FieldDesc field_;
  std::variant<mpq_class, std::uint64_t, RationalFunction> v_;
};

// Parses `int`, `a/b`, and arithmetic expressions (+ - * / ^ parentheses) in
// the declared variable for Q(t), e.g. "(3*t^2-1)/(2*t)".
Scalar parseScalar(std::string_view text, const FieldDesc& field);

// Image of a rational-function-in-one-variable evaluated at a point of
// another field: maps Q coefficients into point's field.
Scalar evaluateAt(const RationalFunction& rf, const Scalar& point);

// Embeds x into target: Q into anything, F_p to F_p, Q(t) to Q(t) (same var).
Scalar embed(const Scalar& x, const FieldDesc& target);

}  // namespace axial
