#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace Eigen {

// GMP integers as Eigen scalars; enough for products, sums and block ops.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace kbar {

using Int = mpz_class;
using Rat = mpq_class;
using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using GF2Matrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool same_vector(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool is_zero_matrix(const IntMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

inline bool is_zero_vector(const IntVector& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) return false;
  return true;
}

// Row-major fill, mostly for tests and fixed constants.
inline IntMatrix int_matrix(Index rows, Index cols, std::initializer_list<long> entries) {
  if (static_cast<Index>(entries.size()) != rows * cols)
    throw std::invalid_argument("int_matrix: entry count does not match shape");
  IntMatrix m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

inline IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

inline int to_int(const Int& x) {
  if (!x.fits_sint_p()) throw std::overflow_error("to_int: value out of int range");
  return static_cast<int>(x.get_si());
}

}  // namespace kbar
