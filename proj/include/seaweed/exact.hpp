#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace seaweed {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Lowest terms with positive denominator, e.g. "-7/6"; integers print as "p/1".
std::string fraction_string(const Rational& r);

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix transposed() const;

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

// Exact rank by fraction-free (Bareiss) elimination with full pivoting.
// Intermediate entries stay minors of the input, so every division is exact.
int rank_bareiss(IntMatrix m);

// Solves the square system a x = b over the rationals by exact Gauss-Jordan
// elimination; nullopt when a is singular.
std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace seaweed
