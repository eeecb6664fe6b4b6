#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polynomial.hpp"
#include "scalar.hpp"

namespace axial {

using Vec = std::vector<Scalar>;

// Dense matrix over one FieldDesc, row-major.
class Matrix {
 public:
  Matrix(FieldDesc field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldDesc& field, std::size_t n);
  static Matrix fromRows(const FieldDesc& field, const std::vector<Vec>& rows, std::size_t cols);
  // Columns given as vectors of equal length.
  static Matrix fromColumns(const FieldDesc& field, const std::vector<Vec>& cols, std::size_t rows);

  const FieldDesc& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;

  bool isZero() const;
  bool isSymmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  FieldDesc field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

// Basis of {v : m v = 0}, one vector per free column (free entry set to 1).
std::vector<Vec> kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

// Least-degree monic p with p(m) = 0, found by the first linear dependence
// among I, m, m^2, ...
UniPoly minimalPolynomial(const Matrix& m);

// Evaluates p at a square matrix.
Matrix evaluate(const UniPoly& p, const Matrix& m);

// Solution of a x = b if one exists (free variables set to zero).
std::optional<Vec> solve(const Matrix& a, const Vec& b);

bool isZeroVec(const Vec& v);

// A subspace of F^n given by spanning vectors; answers membership and
// coordinates against a fixed independent subset of the generators.
class Span {
 public:
  Span(FieldDesc field, std::size_t ambientDim, const std::vector<Vec>& generators = {});

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambientDim() const noexcept { return n_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }

  bool contains(const Vec& v) const;
  // Coordinates of v in basis(), or nullopt if v is not in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Adds v if independent; returns true if the span grew.
  bool add(const Vec& v);

  bool sameAs(const Span& o) const;

 private:
  FieldDesc field_;
  std::size_t n_;
  std::vector<Vec> basis_;
  // Echelon rows of [basis | I]: reduced rows of the basis matrix together
  // with the transformation expressing them in the basis.
  std::vector<Vec> echelon_;
  std::vector<Vec> transform_;
  std::vector<std::size_t> pivots_;
};

}  // namespace axial
