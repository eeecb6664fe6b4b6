#include "identities.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_map>

namespace axial {

// -------------------------------------------------------------------- trees

TreePtr leafX(int j) {
  if (j < 1) fail(ErrorCode::InvalidArgument, "variable indices start at 1");
  auto t = std::make_shared<Tree>();
  t->kind = Tree::Kind::X;
  t->index = j;
  t->key = "x" + std::to_string(j);
  return t;
}

TreePtr leafE(int i) {
  if (i < 1) fail(ErrorCode::InvalidArgument, "slot indices start at 1");
  auto t = std::make_shared<Tree>();
  t->kind = Tree::Kind::E;
  t->index = i;
  t->key = "E" + std::to_string(i);
  return t;
}

TreePtr product(TreePtr a, TreePtr b) {
  if (b->key < a->key) std::swap(a, b);
  auto t = std::make_shared<Tree>();
  t->kind = Tree::Kind::Prod;
  t->key = "(" + a->key + "*" + b->key + ")";
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

namespace {

Bracket makeBracket(TreePtr a, TreePtr b) {
  if (b->key < a->key) std::swap(a, b);
  return Bracket{std::move(a), std::move(b)};
}

std::string stripOuter(const std::string& k) {
  if (k.size() >= 2 && k.front() == '(' && k.back() == ')') return k.substr(1, k.size() - 2);
  return k;
}

std::string bracketKey(const Bracket& b) { return "B(" + stripOuter(b.first->key) + "," + stripOuter(b.second->key) + ")"; }

void sortBrackets(std::vector<Bracket>& bs) {
  std::sort(bs.begin(), bs.end(), [](const Bracket& x, const Bracket& y) { return bracketKey(x) < bracketKey(y); });
}

void countLeaves(const Tree& t, std::map<int, int>& xs, std::map<int, int>& es) {
  switch (t.kind) {
    case Tree::Kind::X: ++xs[t.index]; break;
    case Tree::Kind::E: ++es[t.index]; break;
    case Tree::Kind::Prod:
      countLeaves(*t.left, xs, es);
      countLeaves(*t.right, xs, es);
      break;
  }
}

void monomialDegrees(const GenMonomial& m, std::map<int, int>& xs, std::map<int, int>& es) {
  for (const auto& b : m.brackets) {
    countLeaves(*b.first, xs, es);
    countLeaves(*b.second, xs, es);
  }
  if (m.body) countLeaves(*m.body, xs, es);
}

Scalar cOne() { return Scalar::one(GenPoly::coefficientField()); }

bool plainRational(const std::string& c) {
  return !c.empty() && c.find_first_of("+-", 1) == std::string::npos && c.find_first_of("()") == std::string::npos;
}

}  // namespace

std::string GenMonomial::key() const {
  std::string k;
  for (const auto& b : brackets) k += bracketKey(b) + "*";
  return k + "|" + (body ? body->key : "#");
}

// ---------------------------------------------------------------- GenPoly

const FieldDesc& GenPoly::coefficientField() {
  static const FieldDesc f = FieldDesc::rationalFunctions("lam");
  return f;
}

void GenPoly::add(GenMonomial m) {
  if (m.coeff.isZero()) return;
  sortBrackets(m.brackets);
  std::string k = m.key();
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), std::move(m));
    return;
  }
  it->second.coeff += m.coeff;
  if (it->second.coeff.isZero()) terms_.erase(it);
}

GenPoly GenPoly::operator+(const GenPoly& o) const {
  GenPoly r = *this;
  for (const auto& [k, m] : o.terms_) r.add(m);
  if (!r.lambda_) r.lambda_ = o.lambda_;
  return r;
}

GenPoly GenPoly::operator-(const GenPoly& o) const { return *this + o.scaled(-cOne()); }

GenPoly GenPoly::scaled(const Scalar& c) const {
  GenPoly r;
  r.lambda_ = lambda_;
  Scalar cc = embed(c, coefficientField());
  for (const auto& [k, m] : terms_) {
    GenMonomial n = m;
    n.coeff = m.coeff * cc;
    r.add(std::move(n));
  }
  return r;
}

bool GenPoly::usesLambda() const {
  mpq_class q;
  for (const auto& [k, m] : terms_)
    if (!m.coeff.asRational(q)) return true;
  return false;
}

std::map<int, int> GenPoly::xDegrees() const {
  std::map<int, int> out;
  for (const auto& [k, m] : terms_) {
    std::map<int, int> xs, es;
    monomialDegrees(m, xs, es);
    for (auto [v, d] : xs) out[v] = std::max(out[v], d);
  }
  return out;
}

std::map<int, int> GenPoly::eDegrees() const {
  std::map<int, int> out;
  for (const auto& [k, m] : terms_) {
    std::map<int, int> xs, es;
    monomialDegrees(m, xs, es);
    for (auto [v, d] : es) out[v] = std::max(out[v], d);
  }
  return out;
}

bool GenPoly::hasBrackets() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return !kv.second.brackets.empty(); });
}

std::string GenPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : terms_) {
    std::string c = m.coeff.str();
    bool neg = false;
    std::string prefix;
    if (plainRational(c)) {
      if (c[0] == '-') {
        neg = true;
        c.erase(0, 1);
      }
      if (c != "1") prefix = c + "*";
    } else {
      prefix = "(" + c + ")*";
    }
    for (const auto& b : m.brackets) prefix += bracketKey(b) + "*";
    std::string term = prefix + (prefix.empty() ? stripOuter(m.body->key) : m.body->key);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

bool operator==(const GenPoly& a, const GenPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second.coeff != j->second.coeff) return false;
  return true;
}

// ------------------------------------------------------------------ parser

namespace {

// Intermediate value: like GenPoly but terms may lack a body (scalar-valued).
struct Val {
  std::map<std::string, GenMonomial> terms;

  void add(GenMonomial m) {
    if (m.coeff.isZero()) return;
    sortBrackets(m.brackets);
    std::string k = m.key();
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(std::move(k), std::move(m));
      return;
    }
    it->second.coeff += m.coeff;
    if (it->second.coeff.isZero()) terms.erase(it);
  }
  bool anyBody() const {
    return std::any_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.second.body != nullptr; });
  }
  bool allBody() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return kv.second.body != nullptr; });
  }
  bool isElement() const { return anyBody(); }
  // 0 empty, 1 scalar, 2 element, 3 mixed
  int kind() const {
    if (terms.empty()) return 0;
    if (allBody()) return 2;
    return anyBody() ? 3 : 1;
  }
  // A bare coefficient: no bracket factors and no body.
  std::optional<Scalar> coefficient() const {
    if (terms.empty()) return Scalar::zero(GenPoly::coefficientField());
    if (terms.size() != 1) return std::nullopt;
    const auto& m = terms.begin()->second;
    if (m.body || !m.brackets.empty()) return std::nullopt;
    return m.coeff;
  }
};

Val constant(const Scalar& c) {
  Val v;
  v.add(GenMonomial{c, {}, nullptr});
  return v;
}

Val leafVal(TreePtr t) {
  Val v;
  v.add(GenMonomial{cOne(), {}, std::move(t)});
  return v;
}

Val scaleVal(const Val& v, const Scalar& c) {
  Val r;
  for (const auto& [k, m] : v.terms) {
    GenMonomial n = m;
    n.coeff = m.coeff * c;
    r.add(std::move(n));
  }
  return r;
}

Val mulVal(const Val& a, const Val& b) {
  Val r;
  for (const auto& [ka, x] : a.terms)
    for (const auto& [kb, y] : b.terms) {
      GenMonomial m;
      m.coeff = x.coeff * y.coeff;
      m.brackets = x.brackets;
      m.brackets.insert(m.brackets.end(), y.brackets.begin(), y.brackets.end());
      if (x.body && y.body)
        m.body = product(x.body, y.body);
      else
        m.body = x.body ? x.body : y.body;
      r.add(std::move(m));
    }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GenPoly run() {
    Val v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (!v.allBody()) fail(ErrorCode::Parse, "polynomial must be element-valued (every term needs a body)");
    GenPoly p;
    for (auto& [k, m] : v.terms) p.add(m);
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, msg + " at position " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ - start > 15) error("integer literal too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Val expr() {
    Val v = term();
    for (;;) {
      int sign;
      if (peek('+'))
        sign = 1;
      else if (peek('-'))
        sign = -1;
      else
        return v;
      std::size_t at = pos_++;
      Val r = term();
      bool mixed = v.kind() == 3 || r.kind() == 3 || (v.kind() && r.kind() && v.kind() != r.kind());
      if (mixed) {
        pos_ = at;
        error("cannot add a scalar and an element");
      }
      for (auto& [k, m] : r.terms) {
        GenMonomial n = m;
        if (sign < 0) n.coeff = -n.coeff;
        v.add(std::move(n));
      }
    }
  }

  Val term() {
    Val v = unary();
    int elements = v.isElement() ? 1 : 0;
    for (;;) {
      if (peek('*')) {
        ++pos_;
        Val r = unary();
        if (r.isElement() && ++elements > 2) error("a product of three elements needs parentheses");
        v = mulVal(v, r);
      } else if (peek('/')) {
        ++pos_;
        Val r = unary();
        auto c = r.coefficient();
        if (!c) error("can only divide by a coefficient");
        if (c->isZero()) error("division by zero");
        v = scaleVal(v, c->inverse());
      } else {
        return v;
      }
    }
  }

  Val unary() {
    if (peek('-')) {
      ++pos_;
      return scaleVal(unary(), -cOne());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Val power() {
    Val base = atom();
    if (!peek('^')) return base;
    ++pos_;
    long e = number();
    auto c = base.coefficient();
    if (!c) error("only coefficients can be raised to a power");
    return constant(c->pow(static_cast<unsigned>(e)));
  }

  Val atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Scalar::fromInt(GenPoly::coefficientField(), number()));
    if (c == '(') {
      ++pos_;
      Val v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 3) == "lam") {
      pos_ += 3;
      return constant(Scalar::variable(GenPoly::coefficientField()));
    }
    if (c == 'x' || c == 'E') {
      ++pos_;
      long i = number();
      if (i < 1) error("indices start at 1");
      return leafVal(c == 'x' ? leafX(static_cast<int>(i)) : leafE(static_cast<int>(i)));
    }
    if (c == 'B') {
      ++pos_;
      expect('(');
      Val p = expr();
      expect(',');
      Val q = expr();
      expect(')');
      if (!p.allBody() || !q.allBody()) error("bracket arguments must be elements");
      Val r;
      for (const auto& [ka, x] : p.terms)
        for (const auto& [kb, y] : q.terms) {
          GenMonomial m;
          m.coeff = x.coeff * y.coeff;
          m.brackets = x.brackets;
          m.brackets.insert(m.brackets.end(), y.brackets.begin(), y.brackets.end());
          m.brackets.push_back(makeBracket(x.body, y.body));
          r.add(std::move(m));
        }
      return r;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------ substitution

using Lin = std::vector<std::pair<Scalar, TreePtr>>;

Lin expandTree(const TreePtr& t, Tree::Kind kind, int idx, const Lin& repl) {
  if (t->kind == kind && t->index == idx) return repl;
  if (t->kind != Tree::Kind::Prod) return {{cOne(), t}};
  Lin l = expandTree(t->left, kind, idx, repl);
  Lin r = expandTree(t->right, kind, idx, repl);
  Lin out;
  for (const auto& [ca, a] : l)
    for (const auto& [cb, b] : r) out.emplace_back(ca * cb, product(a, b));
  return out;
}

GenPoly substitute(const GenPoly& f, Tree::Kind kind, int idx, const Lin& repl) {
  GenPoly out;
  out.bindLambda(f.lambda());
  struct Partial {
    Scalar c;
    std::vector<Bracket> br;
  };
  for (const auto& [k, m] : f.terms()) {
    std::vector<Partial> acc{{m.coeff, {}}};
    for (const auto& b : m.brackets) {
      Lin L = expandTree(b.first, kind, idx, repl);
      Lin R = expandTree(b.second, kind, idx, repl);
      std::vector<Partial> next;
      for (const auto& p : acc)
        for (const auto& [ca, ta] : L)
          for (const auto& [cb, tb] : R) {
            Partial q{p.c * ca * cb, p.br};
            q.br.push_back(makeBracket(ta, tb));
            next.push_back(std::move(q));
          }
      acc = std::move(next);
    }
    Lin B = expandTree(m.body, kind, idx, repl);
    for (const auto& p : acc)
      for (const auto& [cb, tb] : B) out.add(GenMonomial{p.c * cb, p.br, tb});
  }
  return out;
}

}  // namespace

GenPoly parsePoly(std::string_view text) { return Parser(text).run(); }

GenPoly linearizeStep(const GenPoly& f, int j, int fresh) {
  if (f.xDegrees().count(fresh)) fail(ErrorCode::FreshCollision, "x" + std::to_string(fresh) + " already occurs");
  if (fresh == j) fail(ErrorCode::FreshCollision, "fresh variable equals the linearized one");
  Lin both{{cOne(), leafX(j)}, {cOne(), leafX(fresh)}};
  Lin only{{cOne(), leafX(fresh)}};
  return substitute(f, Tree::Kind::X, j, both) - f - substitute(f, Tree::Kind::X, j, only);
}

GenPoly fullyLinearize(const GenPoly& fin) {
  GenPoly f = fin;
  auto degs = f.xDegrees();
  if (degs.empty()) return f;
  int fresh = degs.rbegin()->first + 1;
  for (const auto& [j, d] : degs) {
    (void)d;
    for (;;) {
      auto cur = f.xDegrees();
      auto it = cur.find(j);
      if (it == cur.end() || it->second <= 1) break;
      f = linearizeStep(f, j, fresh++);
    }
  }
  return f;
}

std::vector<GenPoly> multihomogeneousComponents(const GenPoly& f) {
  std::map<std::map<int, int>, GenPoly> groups;
  for (const auto& [k, m] : f.terms()) {
    std::map<int, int> xs, es;
    monomialDegrees(m, xs, es);
    auto& g = groups[xs];
    g.bindLambda(f.lambda());
    g.add(m);
  }
  std::vector<GenPoly> out;
  for (auto& [d, g] : groups) out.push_back(std::move(g));
  return out;
}

GenPoly specializeIdempotentSlot(const GenPoly& f, int i, int fresh) {
  if (!f.eDegrees().count(i)) fail(ErrorCode::InvalidArgument, "E" + std::to_string(i) + " does not occur");
  if (f.xDegrees().count(fresh)) fail(ErrorCode::FreshCollision, "x" + std::to_string(fresh) + " already occurs");
  return substitute(f, Tree::Kind::E, i, {{cOne(), leafX(fresh)}});
}

// --------------------------------------------------------------- evaluation

namespace {

bool isIdempotentVec(const Algebra& a, const Vec& v) { return a.multiply(v, v) == v; }

Scalar coefficientIn(const Scalar& c, const FieldDesc& field, const std::optional<Scalar>& lambda) {
  mpq_class q;
  if (c.asRational(q)) return Scalar::fromRational(field, q);
  if (!lambda) fail(ErrorCode::UnboundVariable, "coefficient " + c.str() + " depends on lam but no lambda is bound");
  return evaluateAt(c.function(), embed(*lambda, field));
}

struct Compiled {
  std::vector<std::pair<Scalar, const GenMonomial*>> terms;
};

Compiled compile(const GenPoly& f, const Algebra& alg, const std::optional<Scalar>& lambda) {
  Compiled c;
  for (const auto& [k, m] : f.terms()) c.terms.emplace_back(coefficientIn(m.coeff, alg.field(), lambda), &m);
  return c;
}

class Evaluator {
 public:
  Evaluator(const Algebra& alg, const std::map<int, Vec>& x, const std::map<int, Vec>& e, const BilinearForm* form)
      : alg_(alg), x_(x), e_(e), form_(form) {}

  const Vec& value(const TreePtr& t) {
    auto it = cache_.find(t->key);
    if (it != cache_.end()) return it->second;
    Vec v;
    switch (t->kind) {
      case Tree::Kind::X: {
        auto f = x_.find(t->index);
        if (f == x_.end()) fail(ErrorCode::UnboundVariable, "x" + std::to_string(t->index) + " has no value");
        v = f->second;
        break;
      }
      case Tree::Kind::E: {
        auto f = e_.find(t->index);
        if (f == e_.end()) fail(ErrorCode::UnboundVariable, "E" + std::to_string(t->index) + " has no value");
        v = f->second;
        break;
      }
      case Tree::Kind::Prod: {
        Vec l = value(t->left);
        v = alg_.multiply(l, value(t->right));
        break;
      }
    }
    return cache_.emplace(t->key, std::move(v)).first->second;
  }

  Vec run(const Compiled& c) {
    Vec out = alg_.zero();
    for (const auto& [coeff, m] : c.terms) {
      Scalar s = coeff;
      for (const auto& b : m->brackets) {
        if (!form_) fail(ErrorCode::MissingForm, "bracket factor needs a Frobenius form");
        Vec p = value(b.first);
        s *= (*form_)(p, value(b.second));
        if (s.isZero()) break;
      }
      if (s.isZero()) continue;
      const Vec& v = value(m->body);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!v[i].isZero()) out[i] += s * v[i];
    }
    return out;
  }

 private:
  const Algebra& alg_;
  const std::map<int, Vec>& x_;
  const std::map<int, Vec>& e_;
  const BilinearForm* form_;
  std::unordered_map<std::string, Vec> cache_;
};

std::map<int, Vec> coordsOf(const std::map<int, Element>& m, const AlgebraPtr& alg) {
  std::map<int, Vec> out;
  for (const auto& [k, v] : m) {
    if (v.algebra()->dim() != alg->dim() || !(v.algebra()->field() == alg->field()))
      fail(ErrorCode::AlgebraMismatch, "assigned element from another algebra");
    out.emplace(k, v.coords());
  }
  return out;
}

std::map<int, Element> elementsOf(const std::map<int, Vec>& m, const AlgebraPtr& alg) {
  std::map<int, Element> out;
  for (const auto& [k, v] : m) out.emplace(k, Element(alg, v));
  return out;
}

// Mixed-radix counter over `digits` positions with the given base.
bool advance(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < base) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace

Element evaluate(const GenPoly& f, const AlgebraPtr& alg, const std::map<int, Element>& x,
                 const std::map<int, Element>& e, const EvalOptions& opts) {
  if (opts.form && opts.form->algebra()->dim() != alg->dim()) fail(ErrorCode::AlgebraMismatch, "form of another algebra");
  if (opts.checkIdempotent)
    for (const auto& [i, v] : e)
      if (!isIdempotentVec(*alg, v.coords()))
        fail(ErrorCode::NotIdempotent, "E" + std::to_string(i) + " is not idempotent: " + v.str());
  if (f.hasBrackets() && !opts.form) fail(ErrorCode::MissingForm, "bracket factor needs a Frobenius form");
  Compiled c = compile(f, *alg, opts.lambda ? opts.lambda : f.lambda());
  auto xv = coordsOf(x, alg), ev = coordsOf(e, alg);
  Evaluator ev2(*alg, xv, ev, opts.form);
  return Element(alg, ev2.run(c));
}

IdentityVerdict holdsAsIdentity(const GenPoly& f, const AlgebraPtr& alg, const std::vector<Element>& pool,
                                const IdentityOptions& opts) {
  IdentityVerdict verdict;
  verdict.method = "multilinear-basis";
  const std::optional<Scalar> lambda = opts.lambda ? opts.lambda : f.lambda();
  const FieldDesc& field = alg->field();
  const std::size_t n = alg->dim();

  std::vector<int> slots;
  for (auto [i, d] : f.eDegrees()) slots.push_back(i);
  std::vector<Vec> poolVecs;
  for (const auto& p : pool) {
    if (p.algebra()->dim() != n || !(p.algebra()->field() == field))
      fail(ErrorCode::AlgebraMismatch, "pool element from another algebra");
    if (!isIdempotentVec(*alg, p.coords())) fail(ErrorCode::NotIdempotent, "pool element is not idempotent: " + p.str());
    if (std::find(poolVecs.begin(), poolVecs.end(), p.coords()) == poolVecs.end()) poolVecs.push_back(p.coords());
  }
  if (!slots.empty() && poolVecs.empty()) fail(ErrorCode::InvalidArgument, "polynomial has idempotent slots but the pool is empty");
  if (f.hasBrackets() && !opts.form) fail(ErrorCode::MissingForm, "bracket factor needs a Frobenius form");
  if (f.isZero()) return verdict;

  // All slot assignments, in canonical order.
  std::vector<std::map<int, Vec>> eAssign;
  {
    std::vector<std::size_t> idx(slots.size(), 0);
    do {
      bool ok = true;
      if (opts.distinctSlots)
        for (std::size_t a = 0; a < idx.size() && ok; ++a)
          for (std::size_t b = a + 1; b < idx.size() && ok; ++b) ok = idx[a] != idx[b];
      if (ok) {
        std::map<int, Vec> m;
        for (std::size_t s = 0; s < slots.size(); ++s) m.emplace(slots[s], poolVecs[idx[s]]);
        eAssign.push_back(std::move(m));
      }
    } while (!slots.empty() && advance(idx, poolVecs.size()));
  }
  if (eAssign.empty()) return verdict;  // e.g. distinct slots with a one-element pool

  auto evalAt = [&](const Compiled& c, const std::map<int, Vec>& x, const std::map<int, Vec>& e) {
    ++verdict.evaluations;
    Evaluator ev(*alg, x, e, opts.form);
    return ev.run(c);
  };

  int maxDeg = 0;
  for (auto [j, d] : f.xDegrees()) maxDeg = std::max(maxDeg, d);
  const bool smallField = field.kind() == FieldKind::PrimeField && field.prime() <= static_cast<std::uint64_t>(maxDeg);

  if (smallField) {
    // Component splitting and linearization are not conclusive; enumerate.
    verdict.method = "exhaustive-field";
    std::vector<int> vars;
    for (auto [j, d] : f.xDegrees()) vars.push_back(j);
    const std::uint64_t p = field.prime();
    long double total = static_cast<long double>(eAssign.size());
    for (std::size_t i = 0; i < n * vars.size(); ++i) total *= static_cast<long double>(p);
    if (total > static_cast<long double>(opts.exhaustiveBudget))
      fail(ErrorCode::FieldTooSmall, "field F_" + std::to_string(p) + " is too small for degree " + std::to_string(maxDeg) +
                                         " and exhaustive search exceeds the budget");
    Compiled c = compile(f, *alg, lambda);
    verdict.components = 1;
    std::vector<std::size_t> digits(n * vars.size(), 0);
    do {
      std::map<int, Vec> x;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        Vec vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = Scalar::fromInt(field, static_cast<long>(digits[v * n + i]));
        x.emplace(vars[v], std::move(vec));
      }
      for (const auto& e : eAssign) {
        Vec val = evalAt(c, x, e);
        if (!isZeroVec(val)) {
          verdict.holds = false;
          verdict.witness = Witness{elementsOf(x, alg), elementsOf(e, alg), Element(alg, val), f, false};
          return verdict;
        }
      }
    } while (!vars.empty() && advance(digits, static_cast<std::size_t>(p)));
    return verdict;
  }

  std::optional<Witness> componentWitness;
  for (const auto& comp : multihomogeneousComponents(f)) {
    ++verdict.components;
    GenPoly lin = fullyLinearize(comp);
    if (lin.isZero()) continue;
    Compiled c = compile(lin, *alg, lambda);
    std::vector<int> vars;
    for (auto [j, d] : lin.xDegrees()) vars.push_back(j);
    std::vector<std::size_t> idx(vars.size(), 0);
    do {
      std::map<int, Vec> x;
      for (std::size_t v = 0; v < vars.size(); ++v) x.emplace(vars[v], alg->basisVector(idx[v]));
      for (const auto& e : eAssign) {
        Vec val = evalAt(c, x, e);
        if (!isZeroVec(val)) {
          componentWitness = Witness{elementsOf(x, alg), elementsOf(e, alg), Element(alg, val), lin, true};
          break;
        }
      }
    } while (!componentWitness && !vars.empty() && advance(idx, n));
    if (componentWitness) break;
  }
  if (!componentWitness) return verdict;
  verdict.holds = false;

  // Look for a falsifying point of f itself: basis tuples first, then
  // seeded random small-integer combinations.
  Compiled c = compile(f, *alg, lambda);
  std::vector<int> vars;
  for (auto [j, d] : f.xDegrees()) vars.push_back(j);
  auto tryPoint = [&](const std::map<int, Vec>& x) -> bool {
    for (const auto& e : eAssign) {
      Vec val = evalAt(c, x, e);
      if (!isZeroVec(val)) {
        verdict.witness = Witness{elementsOf(x, alg), elementsOf(e, alg), Element(alg, val), f, false};
        return true;
      }
    }
    return false;
  };
  {
    std::vector<std::size_t> idx(vars.size(), 0);
    std::uint64_t budget = 20000;
    do {
      std::map<int, Vec> x;
      for (std::size_t v = 0; v < vars.size(); ++v) x.emplace(vars[v], alg->basisVector(idx[v]));
      if (tryPoint(x)) return verdict;
    } while (!vars.empty() && --budget > 0 && advance(idx, n));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int sample = 0; sample < 200 && !vars.empty(); ++sample) {
    std::map<int, Vec> x;
    for (int j : vars) {
      Vec v(n);
      for (auto& s : v) s = Scalar::fromInt(field, coef(rng));
      x.emplace(j, std::move(v));
    }
    if (tryPoint(x)) return verdict;
  }
  verdict.witness = componentWitness;
  return verdict;
}

}  // namespace axial
