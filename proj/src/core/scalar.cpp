#include "scalar.hpp"

#include <cctype>
#include <utility>

namespace axial {

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AsymmetricStructure: return "AsymmetricStructure";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::NotAnAxis: return "NotAnAxis";
    case ErrorCode::IncompleteDecomposition: return "IncompleteDecomposition";
    case ErrorCode::SingularVandermonde: return "SingularVandermonde";
    case ErrorCode::OrbitOverflow: return "OrbitOverflow";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::MissingForm: return "MissingForm";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::FreshCollision: return "FreshCollision";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::InvalidTripleSystem: return "InvalidTripleSystem";
    case ErrorCode::SelfCheckFailed: return "SelfCheckFailed";
    case ErrorCode::NotAxes: return "NotAxes";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- FieldDesc

FieldDesc FieldDesc::rationals() { return FieldDesc{}; }

FieldDesc FieldDesc::primeField(std::uint64_t p, bool allowSmall) {
  if (p == 2) fail(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (p >= (std::uint64_t{1} << 62))
    fail(ErrorCode::InvalidField, "prime too large: " + std::to_string(p));
  mpz_class z(std::to_string(p));
  if (p < 3 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    fail(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p <= 5 && !allowSmall)
    fail(ErrorCode::InvalidField,
         "prime fields of characteristic 3 or 5 need the small-prime override");
  FieldDesc f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = p;
  return f;
}

FieldDesc FieldDesc::rationalFunctions(std::string variable) {
  if (variable.empty() || !std::isalpha(static_cast<unsigned char>(variable[0])))
    fail(ErrorCode::InvalidField, "bad variable name '" + variable + "'");
  for (char c : variable)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      fail(ErrorCode::InvalidField, "bad variable name '" + variable + "'");
  FieldDesc f;
  f.kind_ = FieldKind::RationalFunctions;
  f.var_ = std::move(variable);
  return f;
}

std::string FieldDesc::describe() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F_" + std::to_string(p_);
    case FieldKind::RationalFunctions: return "Q(" + var_ + ")";
  }
  return "?";
}

// -------------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x = -x;
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (isZero() || o.isZero()) return {};
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& s) const {
  std::vector<mpq_class> r = c_;
  for (auto& x : r) x *= s;
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& d, QPoly& q, QPoly& r) const {
  if (d.isZero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<mpq_class> rem = c_;
  const int dd = d.degree();
  std::vector<mpq_class> quo(std::max(0, degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    if (rem[k] == 0) continue;
    mpq_class f = rem[k] / d.leading();
    quo[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
  }
  q = QPoly(std::move(quo));
  r = QPoly(std::move(rem));
}

QPoly QPoly::monic() const {
  if (isZero()) return {};
  return scaled(1 / leading());
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::str(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      if (c == 1) {
      } else if (c == -1) {
        term = "-";
      } else {
        term = c.get_str() + "*";
      }
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.isZero()) {
    QPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction RationalFunction::make(QPoly num, QPoly den) {
  if (den.isZero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.isZero()) return RationalFunction{};
  QPoly g = gcd(num, den);
  QPoly q, r;
  num.divmod(g, q, r);
  num = q;
  den.divmod(g, q, r);
  den = q;
  mpq_class lc = den.leading();
  return RationalFunction{num.scaled(1 / lc), den.scaled(1 / lc)};
}

// ------------------------------------------------------------------- Scalar

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) fail(ErrorCode::DivisionByZero, "division by zero in F_" + std::to_string(p));
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduceMpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m(std::to_string(p));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return std::stoull(r.get_str());
}

}  // namespace

Scalar::Scalar() : v_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldDesc& f) { return fromInt(f, 0); }
Scalar Scalar::one(const FieldDesc& f) { return fromInt(f, 1); }

Scalar Scalar::fromInt(const FieldDesc& f, long n) { return fromRational(f, mpq_class(n)); }

Scalar Scalar::fromRational(const FieldDesc& f, const mpq_class& q) {
  Scalar s;
  s.field_ = f;
  switch (f.kind()) {
    case FieldKind::Rationals: {
      mpq_class c = q;
      c.canonicalize();
      s.v_ = c;
      break;
    }
    case FieldKind::PrimeField: {
      std::uint64_t n = reduceMpz(q.get_num(), f.prime());
      std::uint64_t d = reduceMpz(q.get_den(), f.prime());
      if (d == 0)
        fail(ErrorCode::DivisionByZero,
             "denominator of " + q.get_str() + " vanishes in " + f.describe());
      s.v_ = mulmod(n, invmod(d, f.prime()), f.prime());
      break;
    }
    case FieldKind::RationalFunctions: {
      mpq_class c = q;
      c.canonicalize();
      s.v_ = RationalFunction::make(QPoly::constant(c), QPoly::constant(1));
      break;
    }
  }
  return s;
}

Scalar Scalar::variable(const FieldDesc& f) {
  if (f.kind() != FieldKind::RationalFunctions)
    fail(ErrorCode::Parse, f.describe() + " has no variable");
  return fromRationalFunction(f, RationalFunction{QPoly::monomial(1, 1), QPoly::constant(1)});
}

Scalar Scalar::fromRationalFunction(const FieldDesc& f, RationalFunction rf) {
  if (f.kind() != FieldKind::RationalFunctions)
    fail(ErrorCode::FieldMismatch, "rational function in " + f.describe());
  Scalar s;
  s.field_ = f;
  s.v_ = RationalFunction::make(std::move(rf.num), std::move(rf.den));
  return s;
}

bool Scalar::isZero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational() == 0;
    case FieldKind::PrimeField: return residue() == 0;
    case FieldKind::RationalFunctions: return function().num.isZero();
  }
  return false;
}

bool Scalar::isOne() const { return *this == one(field_); }

void Scalar::checkSameField(const Scalar& o) const {
  if (!(field_ == o.field_))
    fail(ErrorCode::FieldMismatch,
         "mixing scalars of " + field_.describe() + " and " + o.field_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkSameField(o);
  Scalar r;
  r.field_ = field_;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(rational() + o.rational());
      break;
    case FieldKind::PrimeField: {
      std::uint64_t s = residue() + o.residue();
      if (s >= field_.prime()) s -= field_.prime();
      r.v_ = s;
      break;
    }
    case FieldKind::RationalFunctions: {
      const auto& a = function();
      const auto& b = o.function();
      if (a.den == b.den)
        r.v_ = RationalFunction::make(a.num + b.num, a.den);
      else
        r.v_ = RationalFunction::make(a.num * b.den + b.num * a.den, a.den * b.den);
      break;
    }
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(-rational());
      break;
    case FieldKind::PrimeField:
      r.v_ = residue() == 0 ? std::uint64_t{0} : field_.prime() - residue();
      break;
    case FieldKind::RationalFunctions:
      r.v_ = RationalFunction{-function().num, function().den};
      break;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  checkSameField(o);
  Scalar r;
  r.field_ = field_;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(rational() * o.rational());
      break;
    case FieldKind::PrimeField:
      r.v_ = mulmod(residue(), o.residue(), field_.prime());
      break;
    case FieldKind::RationalFunctions: {
      const auto& a = function();
      const auto& b = o.function();
      if (a.num.isZero() || b.num.isZero()) {
        r.v_ = RationalFunction{};
      } else if (a.den.degree() == 0 && b.den.degree() == 0) {
        r.v_ = RationalFunction{a.num * b.num, QPoly::constant(1)};
      } else {
        r.v_ = RationalFunction::make(a.num * b.num, a.den * b.den);
      }
      break;
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (isZero()) fail(ErrorCode::DivisionByZero, "division by zero in " + field_.describe());
  Scalar r;
  r.field_ = field_;
  switch (field_.kind()) {
    case FieldKind::Rationals:
      r.v_ = mpq_class(1 / rational());
      break;
    case FieldKind::PrimeField:
      r.v_ = invmod(residue(), field_.prime());
      break;
    case FieldKind::RationalFunctions:
      r.v_ = RationalFunction::make(function().den, function().num);
      break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  checkSameField(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

bool Scalar::asRational(mpq_class& out) const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      out = rational();
      return true;
    case FieldKind::PrimeField:
      return false;
    case FieldKind::RationalFunctions:
      if (!function().isConstant()) return false;
      out = function().num.coeff(0) / function().den.coeff(0);
      return true;
  }
  return false;
}

std::string Scalar::str() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational().get_str();
    case FieldKind::PrimeField: return std::to_string(residue());
    case FieldKind::RationalFunctions: {
      const auto& f = function();
      if (f.den.degree() == 0) return f.num.str(field_.variable());
      return "(" + f.num.str(field_.variable()) + ")/(" + f.den.str(field_.variable()) + ")";
    }
  }
  return "?";
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  if (a.field_.kind() == FieldKind::Rationals && b.field_.kind() == FieldKind::Rationals)
    return cmp(a.rational(), b.rational()) < 0 ? -1 : (a.rational() == b.rational() ? 0 : 1);
  std::string sa = a.str(), sb = b.str();
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  return sa.compare(sb) < 0 ? -1 : (sa == sb ? 0 : 1);
}

// ------------------------------------------------------------------ parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const FieldDesc& field) : s_(text), field_(field) {}

  Scalar parse() {
    Scalar v = expr();
    skipSpace();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "scalar '" + std::string(s_) + "' at position " +
                               std::to_string(pos_) + ": " + msg);
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.isZero()) error("denominator is zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skipSpace();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected a nonnegative integer exponent");
      if (pos_ - start > 6) error("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Scalar atom() {
    skipSpace();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return Scalar::fromRational(field_, mpq_class(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (field_.kind() != FieldKind::RationalFunctions || name != field_.variable())
        error("identifier '" + name + "' is not the variable of " + field_.describe());
      return Scalar::variable(field_);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const FieldDesc& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parseScalar(std::string_view text, const FieldDesc& field) {
  return ScalarParser(text, field).parse();
}

Scalar evaluateAt(const RationalFunction& rf, const Scalar& point) {
  const FieldDesc& f = point.field();
  auto horner = [&](const QPoly& p) {
    Scalar acc = Scalar::zero(f);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
      acc = acc * point + Scalar::fromRational(f, *it);
    return acc;
  };
  Scalar d = horner(rf.den);
  if (d.isZero())
    fail(ErrorCode::DivisionByZero, "denominator vanishes at " + point.str());
  return horner(rf.num) / d;
}

Scalar embed(const Scalar& x, const FieldDesc& target) {
  if (x.field() == target) return x;
  mpq_class q;
  if (x.asRational(q)) return Scalar::fromRational(target, q);
  fail(ErrorCode::FieldMismatch,
       "cannot embed " + x.str() + " of " + x.field().describe() + " into " + target.describe());
}

}  // namespace axial
