#pragma once

// Reference implementations that share no code with the library's
// arithmetic: plain mpq_class vectors, naive structure-constant products,
// cofactor determinants and seeded random substitution.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "algebra.hpp"
#include "identities.hpp"

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<std::vector<Q>>;

inline Q toQ(const axial::Scalar& s) {
  Q q;
  if (!s.asRational(q)) throw std::runtime_error("oracle needs rational scalars");
  return q;
}

inline QVec toQ(const axial::Vec& v) {
  QVec out;
  for (const auto& x : v) out.push_back(toQ(x));
  return out;
}

inline QMat toQ(const axial::Matrix& m) {
  QMat out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out[i][k] = toQ(m.at(i, k));
  return out;
}

struct Table {
  std::size_t n = 0;
  std::vector<std::vector<QVec>> st;
  QMat gram;  // empty when no form
};

inline Table tableOf(const axial::Algebra& a, const axial::Matrix* gram = nullptr) {
  Table t;
  t.n = a.dim();
  t.st.assign(t.n, std::vector<QVec>(t.n));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t k = 0; k < t.n; ++k) t.st[i][k] = toQ(a.product(i, k));
  if (gram) t.gram = toQ(*gram);
  return t;
}

inline QVec mul(const Table& t, const QVec& x, const QVec& y) {
  QVec out(t.n, 0);
  for (std::size_t i = 0; i < t.n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < t.n; ++k) {
      if (y[k] == 0) continue;
      Q c = x[i] * y[k];
      for (std::size_t l = 0; l < t.n; ++l) out[l] += c * t.st[i][k][l];
    }
  }
  return out;
}

inline Q form(const Table& t, const QVec& x, const QVec& y) {
  Q s = 0;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t k = 0; k < t.n; ++k) s += x[i] * t.gram[i][k] * y[k];
  return s;
}

inline QVec add(QVec a, const QVec& b, const Q& c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  return a;
}

inline bool isZero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVec unitVec(std::size_t n, std::size_t i) {
  QVec v(n, 0);
  v[i] = 1;
  return v;
}

// Laplace expansion along the first row.
inline Q cofactorDet(const QMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Q s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    QMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Q> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Q term = m[0][c] * cofactorDet(minor);
    s += (c % 2 == 0) ? term : Q(-term);
  }
  return s;
}

// Tree walk with naive products.
inline QVec evalTree(const axial::Tree& t, const Table& tab, const std::map<int, QVec>& x,
                     const std::map<int, QVec>& e) {
  switch (t.kind) {
    case axial::Tree::Kind::X: return x.at(t.index);
    case axial::Tree::Kind::E: return e.at(t.index);
    case axial::Tree::Kind::Prod:
      return mul(tab, evalTree(*t.left, tab, x, e), evalTree(*t.right, tab, x, e));
  }
  return {};
}

// Coefficients in Q(lam) are evaluated at `lambda`.
inline QVec evalPoly(const axial::GenPoly& f, const Table& tab, const std::map<int, QVec>& x,
                     const std::map<int, QVec>& e, const Q& lambda) {
  QVec out(tab.n, 0);
  for (const auto& [key, m] : f.terms()) {
    const auto& rf = m.coeff.function();
    Q c = rf.num.eval(lambda) / rf.den.eval(lambda);
    for (const auto& b : m.brackets)
      c *= form(tab, evalTree(*b.first, tab, x, e), evalTree(*b.second, tab, x, e));
    if (c == 0) continue;
    out = add(out, evalTree(*m.body, tab, x, e), c);
  }
  return out;
}

inline void collect(const axial::Tree& t, std::map<int, int>& xs, std::map<int, int>& es) {
  if (t.kind == axial::Tree::Kind::X) xs[t.index] = 1;
  if (t.kind == axial::Tree::Kind::E) es[t.index] = 1;
  if (t.left) collect(*t.left, xs, es);
  if (t.right) collect(*t.right, xs, es);
}

// true when every one of `samples` random substitutions (coordinates in
// {-3..3} for x-slots, pool members for E-slots) gives 0.
inline bool randomVerdict(const axial::GenPoly& f, const Table& tab, const std::vector<QVec>& pool,
                          bool distinct, const Q& lambda, int samples = 500, std::uint64_t seed = 20260601) {
  std::map<int, int> xs, es;
  for (const auto& [k, m] : f.terms()) {
    collect(*m.body, xs, es);
    for (const auto& b : m.brackets) {
      collect(*b.first, xs, es);
      collect(*b.second, xs, es);
    }
  }
  if (!es.empty() && (pool.empty() || (distinct && pool.size() < es.size()))) return true;  // vacuous
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.empty() ? 0 : pool.size() - 1);
  for (int s = 0; s < samples; ++s) {
    std::map<int, QVec> x, e;
    for (const auto& [j, _] : xs) {
      QVec v(tab.n);
      for (auto& c : v) c = coord(rng);
      x[j] = v;
    }
    std::vector<std::size_t> used;
    for (const auto& [i, _] : es) {
      std::size_t p;
      do p = pick(rng);
      while (distinct && std::find(used.begin(), used.end(), p) != used.end());
      used.push_back(p);
      e[i] = pool[p];
    }
    if (!isZero(evalPoly(f, tab, x, e, lambda))) return false;
  }
  return true;
}

}  // namespace oracle
