#include "polynomial.hpp"

#include <algorithm>
#include <random>

namespace axial {

UniPoly::UniPoly(FieldDesc field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == field_))
      fail(ErrorCode::FieldMismatch, "polynomial coefficient outside " + field_.describe());
  trim();
}

UniPoly UniPoly::linear(const Scalar& root) {
  return UniPoly(root.field(), {-root, Scalar::one(root.field())});
}

UniPoly UniPoly::x(const FieldDesc& field) {
  return UniPoly(field, {Scalar::zero(field), Scalar::one(field)});
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Scalar UniPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Scalar::zero(field_);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(-Scalar::one(field_)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (isZero() || o.isZero()) return UniPoly(field_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].isZero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(field_, std::move(r));
}

void UniPoly::divmod(const UniPoly& d, UniPoly& q, UniPoly& r) const {
  if (d.isZero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = c_;
  const int dd = d.degree();
  std::vector<Scalar> quo(std::max(0, degree() - dd + 1), Scalar::zero(field_));
  Scalar lcInv = d.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].isZero()) continue;
    Scalar f = rem[k] * lcInv;
    quo[k - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
  }
  q = UniPoly(field_, std::move(quo));
  r = UniPoly(field_, std::move(rem));
}

UniPoly UniPoly::operator%(const UniPoly& d) const {
  UniPoly q(field_), r(field_);
  divmod(d, q, r);
  return r;
}

UniPoly UniPoly::monic() const {
  if (isZero()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<Scalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.push_back(c_[i] * Scalar::fromInt(field_, static_cast<long>(i)));
  return UniPoly(field_, std::move(r));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::str(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].isZero()) continue;
    std::string c = c_[k].str();
    // plain rationals print bare; anything else keeps parentheses
    bool plain = c.find_first_not_of("-0123456789/") == std::string::npos && c.find('-', 1) == std::string::npos;
    bool negative = plain && c[0] == '-';
    if (negative) c.erase(0, 1);
    std::string term;
    if (k == 0) {
      term = plain ? c : "(" + c + ")";
    } else {
      if (!plain) term = "(" + c + ")*";
      else if (c != "1") term = c + "*";
      term += var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.isZero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool isSquarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  UniPoly d = p.derivative();
  if (d.isZero()) return false;
  return gcd(p, d).degree() == 0;
}

namespace {

// Removes every factor (x - r) from p; returns true if r was a root.
bool divideOutRoot(UniPoly& p, const Scalar& r) {
  bool found = false;
  while (p.degree() >= 1 && p.eval(r).isZero()) {
    UniPoly q(p.field()), rem(p.field());
    p.divmod(UniPoly::linear(r), q, rem);
    p = q;
    found = true;
  }
  return found;
}

// Positive divisors of |n| by trial division; empty when n is too large to
// factor this way.
std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class d = 2;
  unsigned long steps = 0;
  while (d * d <= n) {
    if (++steps > 2000000) return {};
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2 ? 1 : 2);
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (auto& [prime, e] : fac) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

void rationalRoots(UniPoly p, std::vector<Scalar>& roots) {
  const FieldDesc& f = p.field();
  // strip x factors
  if (divideOutRoot(p, Scalar::zero(f))) roots.push_back(Scalar::zero(f));
  if (p.degree() < 1) return;
  // integer primitive form
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) {
    mpq_class v = c.rational() * lcm;
    ints.push_back(v.get_num());
  }
  auto nums = divisors(ints.front());
  auto dens = divisors(ints.back());
  if (nums.empty() || dens.empty()) return;
  for (const auto& q : dens) {
    for (const auto& n : nums) {
      for (int sign : {1, -1}) {
        if (p.degree() < 1) return;
        mpq_class cand(n * sign, q);
        cand.canonicalize();
        Scalar r = Scalar::fromRational(f, cand);
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (divideOutRoot(p, r)) roots.push_back(r);
      }
    }
  }
}

UniPoly powmod(UniPoly base, mpz_class e, const UniPoly& m) {
  UniPoly result = UniPoly::constant(Scalar::one(m.field())) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

// Rabin splitting of a product of distinct linear factors over F_p.
void splitLinear(const UniPoly& g, std::vector<Scalar>& roots, std::mt19937_64& rng) {
  const FieldDesc& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    roots.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const std::uint64_t p = f.prime();
  for (;;) {
    Scalar delta = Scalar::fromRational(f, mpq_class(mpz_class(std::to_string(rng() % p))));
    UniPoly shifted = UniPoly::linear(-delta);  // x + delta
    UniPoly h = powmod(shifted, mpz_class(std::to_string((p - 1) / 2)), g) -
                UniPoly::constant(Scalar::one(f));
    UniPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      UniPoly q(f), r(f);
      g.divmod(d, q, r);
      splitLinear(d, roots, rng);
      splitLinear(q.monic(), roots, rng);
      return;
    }
  }
}

void primeFieldRoots(UniPoly p, std::vector<Scalar>& roots) {
  const FieldDesc& f = p.field();
  const std::uint64_t prime = f.prime();
  if (p.degree() < 1) return;
  if (prime <= (1u << 16)) {
    for (std::uint64_t v = 0; v < prime && p.degree() >= 1; ++v) {
      Scalar r = Scalar::fromInt(f, static_cast<long>(v));
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      if (divideOutRoot(p, r)) roots.push_back(r);
    }
    return;
  }
  p = p.monic();
  UniPoly xp = powmod(UniPoly::x(f), mpz_class(std::to_string(prime)), p);
  UniPoly g = gcd(p, xp - UniPoly::x(f));
  std::mt19937_64 rng(0x5eed);
  std::vector<Scalar> found;
  splitLinear(g, found, rng);
  for (auto& r : found)
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
}

}  // namespace

std::vector<Scalar> rootsInField(const UniPoly& poly, const std::vector<Scalar>& hints) {
  std::vector<Scalar> roots;
  if (poly.degree() < 1) return roots;
  UniPoly p = poly;
  for (const auto& h : hints) {
    if (!(h.field() == p.field())) continue;
    if (std::find(roots.begin(), roots.end(), h) != roots.end()) continue;
    if (divideOutRoot(p, h)) roots.push_back(h);
  }
  switch (p.field().kind()) {
    case FieldKind::Rationals:
      rationalRoots(p, roots);
      break;
    case FieldKind::PrimeField:
      primeFieldRoots(p, roots);
      break;
    case FieldKind::RationalFunctions:
      if (p.degree() == 1) {
        Scalar r = -p.coeff(0) / p.coeff(1);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      break;
  }
  return roots;
}

namespace {

std::optional<mpq_class> rationalSqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

// Square root of a polynomial over Q, if it is a perfect square.
std::optional<QPoly> polySqrt(const QPoly& p) {
  if (p.isZero()) return QPoly{};
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead = rationalSqrt(p.leading());
  if (!lead) return std::nullopt;
  const int m = p.degree() / 2;
  std::vector<mpq_class> r(m + 1);
  r[m] = *lead;
  // Match coefficients from the top: p_{m+k} = sum_{i+j=m+k} r_i r_j.
  for (int k = m - 1; k >= 0; --k) {
    mpq_class acc = p.coeff(static_cast<std::size_t>(m + k));
    for (int i = k + 1; i <= m; ++i) {
      int j = m + k - i;
      if (j < k + 1 || j > m) continue;
      acc -= r[i] * r[j];
    }
    r[k] = acc / (2 * r[m]);
  }
  QPoly root(r);
  if (!(root * root == p)) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Scalar> squareRoot(const Scalar& x) {
  const FieldDesc& f = x.field();
  if (x.isZero()) return x;
  switch (f.kind()) {
    case FieldKind::Rationals: {
      auto r = rationalSqrt(x.rational());
      if (!r) return std::nullopt;
      return Scalar::fromRational(f, *r);
    }
    case FieldKind::PrimeField: {
      UniPoly q(f, {-x, Scalar::zero(f), Scalar::one(f)});
      auto roots = rootsInField(q);
      if (roots.empty()) return std::nullopt;
      return roots.front();
    }
    case FieldKind::RationalFunctions: {
      // num/den with den monic: sqrt exists iff num*den is a square.
      const auto& rf = x.function();
      auto s = polySqrt(rf.num * rf.den);
      if (!s) return std::nullopt;
      return Scalar::fromRationalFunction(f, RationalFunction{*s, rf.den});
    }
  }
  return std::nullopt;
}

}  // namespace axial
