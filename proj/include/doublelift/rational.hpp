#pragma once

// Exact rational matrices: products, Kronecker powers and rank.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace dlift {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major integer entries.
  static RationalMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
/// a ⊗ ... ⊗ a with m factors; the 1x1 identity for m = 0.
RationalMatrix kronecker_power(const RationalMatrix& a, std::size_t m);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
std::size_t rank(const RationalMatrix& a);

std::string to_string(const RationalMatrix& a);

}  // namespace dlift
