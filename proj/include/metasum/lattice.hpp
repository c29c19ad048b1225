#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "metasum/numtheory.hpp"

namespace metasum {

/// Dense row-major integer matrix. Arithmetic on entries is overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<i64>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  i64& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  i64 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<i64> row(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, i64 factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, i64 factor);
  void negate_row(std::size_t i);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<i64> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<i64> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Finite abelian group Z^free_rank ⊕ Z/d_1 ⊕ ... with d_1 | d_2 | ... and d_i >= 2.
struct AbelianStructure {
  std::vector<i64> invariant_factors;
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  /// Product of the invariant factors; nullopt when infinite.
  std::optional<i64> order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

/**
 * Z^n modulo the row space of a relation matrix, with the change of basis
 * kept so that integer vectors can be mapped to quotient coordinates.
 */
class AbelianQuotient {
 public:
  explicit AbelianQuotient(const IntMatrix& relations);

  const AbelianStructure& structure() const { return structure_; }
  std::size_t generators() const { return moduli_.size(); }

  /// Modulus of each coordinate after the change of basis, including the
  /// trivial 1's; 0 marks a free coordinate.
  const std::vector<i64>& moduli() const { return moduli_; }

  /// Image of an exponent vector, one entry per coordinate, reduced mod its modulus.
  std::vector<i64> coordinates(const std::vector<i64>& exponents) const;

  /// Order of the image of an exponent vector; nullopt if it has infinite order.
  std::optional<i64> order_of(const std::vector<i64>& exponents) const;

  /// True iff the images of the given exponent vectors generate the whole quotient.
  bool generated_by(const std::vector<std::vector<i64>>& exponent_vectors) const;

 private:
  std::vector<i64> moduli_;
  IntMatrix change_of_basis_;  // V from the Smith form
  AbelianStructure structure_;
};

AbelianStructure abelian_quotient(const IntMatrix& relations);

std::vector<i64> coordinates_in_quotient(const IntMatrix& relations, const std::vector<i64>& exponents);

}  // namespace metasum
