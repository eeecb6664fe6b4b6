#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "frobenius.hpp"

namespace axial {

// Commutative nonassociative term: a free variable x_j, an idempotent slot
// E_i, or a product whose children are stored in canonical order.
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
  enum class Kind { X, E, Prod };
  Kind kind = Kind::X;
  int index = 0;
  TreePtr left, right;
  std::string key;  // canonical text; equal keys mean equal terms
};

TreePtr leafX(int j);
TreePtr leafE(int i);
TreePtr product(TreePtr a, TreePtr b);

struct Bracket {
  TreePtr first, second;  // first->key <= second->key
};

// coeff * B(..)*...*B(..) * body, with coeff in Q(lam).
struct GenMonomial {
  Scalar coeff;
  std::vector<Bracket> brackets;  // sorted by key
  TreePtr body;

  std::string key() const;
};

class GenPoly {
 public:
  GenPoly() = default;

  // Q(lam), the coefficient field of every polynomial.
  static const FieldDesc& coefficientField();

  const std::map<std::string, GenMonomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool isZero() const noexcept { return terms_.empty(); }

  // Merges with an existing monomial of the same shape; drops zeros.
  void add(GenMonomial m);

  GenPoly operator+(const GenPoly& o) const;
  GenPoly operator-(const GenPoly& o) const;
  GenPoly scaled(const Scalar& c) const;

  // Binding for lam used when coefficients are evaluated.
  const std::optional<Scalar>& lambda() const noexcept { return lambda_; }
  void bindLambda(std::optional<Scalar> l) { lambda_ = std::move(l); }
  // True when some coefficient depends on lam.
  bool usesLambda() const;

  // Per-variable maximal degree over all monomials (brackets included).
  std::map<int, int> xDegrees() const;
  std::map<int, int> eDegrees() const;
  bool hasBrackets() const;

  std::string str() const;

  friend bool operator==(const GenPoly& a, const GenPoly& b);

 private:
  std::map<std::string, GenMonomial> terms_;
  std::optional<Scalar> lambda_;
};

// Grammar: x1.., E1.., lam, integers, + - * / ^, parentheses, B(p,q).
// A product of more than two element-valued factors must be parenthesized.
GenPoly parsePoly(std::string_view text);

// X_j-linearization step f(x_j + x_fresh) - f(x_j) - f(x_fresh).
GenPoly linearizeStep(const GenPoly& f, int j, int fresh);

// Repeats linearizeStep on every variable until f is multilinear; fresh
// variables are numbered after the largest one present.
GenPoly fullyLinearize(const GenPoly& f);

// Splits f by its X-degree vector.
std::vector<GenPoly> multihomogeneousComponents(const GenPoly& f);

// Replaces the slot E_i by the free variable x_fresh.
GenPoly specializeIdempotentSlot(const GenPoly& f, int i, int fresh);

struct EvalOptions {
  const BilinearForm* form = nullptr;
  std::optional<Scalar> lambda;  // overrides the polynomial's binding
  bool checkIdempotent = true;
};

Element evaluate(const GenPoly& f, const AlgebraPtr& alg, const std::map<int, Element>& x,
                 const std::map<int, Element>& e, const EvalOptions& opts = {});

struct IdentityOptions {
  const BilinearForm* form = nullptr;
  std::optional<Scalar> lambda;
  // Slots must receive pairwise different pool elements.
  bool distinctSlots = false;
  // Cap on assignments when exhaustive enumeration over a small field is needed.
  std::uint64_t exhaustiveBudget = 2'000'000;
  std::uint64_t seed = 0x1de7;
};

struct Witness {
  std::map<int, Element> x, e;
  Element value;
  // The polynomial evaluated: f itself, or one of its linearized components
  // when no falsifying point of f was found directly.
  GenPoly evaluated;
  bool forComponent = false;
};

struct IdentityVerdict {
  bool holds = true;
  std::string method;  // multilinear-basis | exhaustive-field
  std::optional<Witness> witness;
  std::size_t components = 0;
  std::uint64_t evaluations = 0;
};

IdentityVerdict holdsAsIdentity(const GenPoly& f, const AlgebraPtr& alg, const std::vector<Element>& pool,
                                const IdentityOptions& opts = {});

struct CatalogEntry {
  std::string name;
  std::string text;
  std::string summary;
  bool needsForm = false;
  bool distinctSlots = false;
};

const std::vector<CatalogEntry>& identityCatalog();
const CatalogEntry& catalogEntry(const std::string& name);  // UnknownName

// Catalog polynomial; a rational lambda is substituted into coefficients,
// any other lambda is kept as the binding.
GenPoly builtinIdentity(const std::string& name, const std::optional<Scalar>& lambda = std::nullopt);

}  // namespace axial
