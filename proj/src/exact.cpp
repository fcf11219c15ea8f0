#include "seaweed/exact.hpp"

#include <utility>

#include "seaweed/types.hpp"

namespace seaweed {

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

int rank_bareiss(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int steps = rows < cols ? rows : cols;
  Int prev = 1;
  int rank = 0;
  for (int k = 0; k < steps; ++k) {
    // Any nonzero entry of the trailing submatrix can serve as the pivot.
    int pr = -1, pc = -1;
    for (int i = k; i < rows && pr < 0; ++i) {
      for (int j = k; j < cols; ++j) {
        if (m.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    if (pr != k) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(pr, j));
    }
    if (pc != k) {
      for (int i = 0; i < rows; ++i) std::swap(m.at(i, k), m.at(i, pc));
    }
    const Int pivot = m.at(k, k);
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_exact(const IntMatrix& a, const std::vector<Int>& b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) {
    throw InternalError("solve_exact requires a square system");
  }

  std::vector<std::vector<Rational>> aug(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    aug[static_cast<size_t>(i)].resize(static_cast<size_t>(n) + 1);
    for (int j = 0; j < n; ++j) aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
    aug[static_cast<size_t>(i)][static_cast<size_t>(n)] = b[static_cast<size_t>(i)];
  }

  for (int k = 0; k < n; ++k) {
    int pivot_row = -1;
    for (int i = k; i < n; ++i) {
      if (aug[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) return std::nullopt;
    if (pivot_row != k) std::swap(aug[static_cast<size_t>(pivot_row)], aug[static_cast<size_t>(k)]);
    auto& row = aug[static_cast<size_t>(k)];
    const Rational pivot = row[static_cast<size_t>(k)];
    for (int j = k; j <= n; ++j) row[static_cast<size_t>(j)] /= pivot;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rational factor = aug[static_cast<size_t>(i)][static_cast<size_t>(k)];
      if (factor == 0) continue;
      for (int j = k; j <= n; ++j) {
        aug[static_cast<size_t>(i)][static_cast<size_t>(j)] -= factor * row[static_cast<size_t>(j)];
      }
    }
  }

  std::vector<Rational> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = aug[static_cast<size_t>(i)][static_cast<size_t>(n)];
  return x;
}

}  // namespace seaweed
