#pragma once

#include <optional>
#include <vector>

#include "assignalg/rational.hpp"

namespace assignalg {

// Dense matrix over the rationals. Elimination always picks the first
// nonzero entry scanning top to bottom; the arithmetic is exact, so no
// magnitude-based pivoting is needed and all outputs are deterministic.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                  int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * cols_ + j];
  }

  std::vector<Rational> row(int i) const;

  bool operator==(const RationalMatrix& other) const = default;

  // Reduced row echelon form; unique. Optionally reports pivot columns.
  RationalMatrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;

  // Exact basis of the right nullspace. Free variables are taken in
  // ascending column order and set to 1 in turn.
  std::vector<std::vector<Rational>> nullspace_basis() const;

  RationalMatrix multiplied_by(const RationalMatrix& other) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  RationalMatrix transposed() const;
  std::optional<RationalMatrix> inverse() const;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// Incrementally maintained row space in RREF, used for exact span, rank
// and canonical-residue computations.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols) {}

  // Returns true when the vector enlarged the span.
  bool insert(std::vector<Rational> v);
  bool contains(const std::vector<Rational>& v) const;
  // Canonical residue of v modulo the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;  // RREF, sorted by pivot column
  std::vector<int> pivots_;
};

// Particular solution of a*x = b with free variables set to zero. On an
// inconsistent system returns nullopt and, when requested, the RREF row
// of the augmented matrix witnessing 0 = 1.
std::optional<std::vector<Rational>> solve_particular(
    const RationalMatrix& a, const std::vector<Rational>& b,
    std::vector<Rational>* inconsistency_row = nullptr);

}  // namespace assignalg
