#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/errors.hpp"

namespace fano {

// All lattice arithmetic is exact; entries are arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

IntVector make_vec(std::initializer_list<long long> entries);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;

  IntVector apply(const IntVector& v) const;       // this * v
  IntMatrix multiply(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  // row[dst] += f * row[src]
  void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& f);

  bool operator==(const IntMatrix& other) const;
  // Row-major entry order; shorter-dimension comparisons never arise in use.
  bool lex_less(const IntMatrix& other) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

Int dot(const IntVector& a, const IntVector& b);
int compare_vec(const IntVector& a, const IntVector& b);  // lex, -1/0/+1
IntVector sub(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
bool is_zero(const IntVector& v);

Int gcd_all(const IntVector& v);  // gcd of absolute values, 0 for zero vector

// v / gcd(v). The zero vector has no primitive representative.
IntVector primitive(const IntVector& v);

// Exact determinant of a square matrix, fraction-free (Bareiss).
Int determinant(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

struct HermiteResult {
  IntMatrix h;  // the normal form
  IntMatrix u;  // unimodular, h = u * m
};

// Left Hermite normal form of a full-row-rank matrix: h = u * m with
// pivot columns j_1 < ... < j_r, h[i][j_i] > 0, zeros below each pivot,
// and 0 <= h[k][j_i] < h[i][j_i] for k < i. Unique for fixed row span.
HermiteResult hermite_normal_form(const IntMatrix& m);

// Primitive generator of the kernel of m (must have nullity exactly 1),
// sign-normalized so the first nonzero entry is positive.
IntVector kernel_primitive(const IntMatrix& m);

// As above but empty when the nullity is not 1 (cheap skip in hot loops).
std::optional<IntVector> kernel_primitive_opt(const IntMatrix& m);

// Square integer matrix with determinant +-1.
class UnimodularMap {
 public:
  explicit UnimodularMap(IntMatrix m);
  static UnimodularMap identity(std::size_t n);

  const IntMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.rows(); }
  IntVector apply(const IntVector& v) const { return m_.apply(v); }
  UnimodularMap compose(const UnimodularMap& inner) const;  // this ∘ inner
  UnimodularMap inverse() const;

 private:
  IntMatrix m_;
};

// Unimodular U with U * v = e_d (last basis vector); v must be primitive.
UnimodularMap complete_to_basis(const IntVector& v);

}  // namespace fano
