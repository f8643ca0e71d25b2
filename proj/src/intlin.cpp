#include "fano/intlin.hpp"

#include <sstream>
#include <utility>

namespace fano {

IntVector make_vec(std::initializer_list<long long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long long e : entries) v.emplace_back(e);
  return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: size mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = std::move(s);
  }
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("multiply: size mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::add_multiple_of_row(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += f * at(src, j);
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool IntMatrix::lex_less(const IntMatrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != other.data_[i]) return data_[i] < other.data_[i];
  }
  return false;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
  }
  return os.str();
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int compare_vec(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("compare: size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: size mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("add: size mismatch");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector negate(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Int gcd_all(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  Int g = gcd_all(v);
  if (g == 0) throw DomainError("primitive: zero vector");
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// g = x*a + y*b with g = gcd(|a|,|b|) >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine for the invariants
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

// Integer row echelon via unimodular row operations. Rows at index >= result
// are zero afterwards. Tracks the transform when u != nullptr.
std::size_t echelon(IntMatrix& h, IntMatrix* u) {
  const std::size_t r = h.rows(), c = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t p = row;
    while (p < r && h.at(p, col) == 0) ++p;
    if (p == r) continue;
    if (p != row) {
      h.swap_rows(row, p);
      if (u) u->swap_rows(row, p);
    }
    for (std::size_t i = row + 1; i < r; ++i) {
      if (h.at(i, col) == 0) continue;
      Int g, x, y;
      const Int a = h.at(row, col), b = h.at(i, col);
      ext_gcd(a, b, g, x, y);
      const Int am = a / g, bm = b / g;
      // [[x, y], [-bm, am]] has determinant +1 and sends (a,b) to (g,0).
      for (std::size_t j = 0; j < c; ++j) {
        Int hr = h.at(row, j), hi = h.at(i, j);
        h.at(row, j) = x * hr + y * hi;
        h.at(i, j) = am * hi - bm * hr;
      }
      if (u) {
        for (std::size_t j = 0; j < u->cols(); ++j) {
          Int ur = u->at(row, j), ui = u->at(i, j);
          u->at(row, j) = x * ur + y * ui;
          u->at(i, j) = am * ui - bm * ur;
        }
      }
    }
    if (h.at(row, col) < 0) {
      h.negate_row(row);
      if (u) u->negate_row(row);
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix h = m;
  return echelon(h, nullptr);
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows())};
  std::size_t rk = echelon(res.h, &res.u);
  if (rk < m.rows()) throw RankError("hermite_normal_form: rank-deficient input");
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t j = 0;
    while (j < m.cols() && res.h.at(i, j) == 0) ++j;
    for (std::size_t k = 0; k < i; ++k) {
      Int q = floor_div(res.h.at(k, j), res.h.at(i, j));
      if (q != 0) {
        res.h.add_multiple_of_row(k, i, -q);
        res.u.add_multiple_of_row(k, i, -q);
      }
    }
  }
  return res;
}

std::optional<IntVector> kernel_primitive_opt(const IntMatrix& m) {
  // Row-reduce the transpose with a tracked transform; zero rows of the
  // echelon correspond to transform rows annihilated by m.
  IntMatrix t = m.transpose();
  IntMatrix u = IntMatrix::identity(t.rows());
  std::size_t rk = echelon(t, &u);
  if (t.rows() - rk != 1) return std::nullopt;
  IntVector w = u.row(t.rows() - 1);
  w = primitive(w);
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x < 0) w = negate(w);
    break;
  }
  return w;
}

IntVector kernel_primitive(const IntMatrix& m) {
  auto w = kernel_primitive_opt(m);
  if (!w) throw DegeneracyError("kernel_primitive: nullity is not 1");
  return *w;
}

UnimodularMap::UnimodularMap(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("unimodular map must be square");
  Int d = determinant(m_);
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
}

UnimodularMap UnimodularMap::identity(std::size_t n) {
  return UnimodularMap(IntMatrix::identity(n));
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
  return UnimodularMap(m_.multiply(inner.m_));
}

UnimodularMap UnimodularMap::inverse() const {
  const std::size_t n = m_.rows();
  Int d = determinant(m_);
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m_.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;  // adjugate is the transposed cofactor matrix
    }
  // inverse = adj / det and det is +-1
  if (d == -1) {
    for (std::size_t i = 0; i < n; ++i) adj.negate_row(i);
  }
  return UnimodularMap(adj);
}

UnimodularMap complete_to_basis(const IntVector& v) {
  const std::size_t d = v.size();
  if (d == 0) throw DimensionError("complete_to_basis: empty vector");
  if (gcd_all(v) != 1) throw DomainError("complete_to_basis: vector is not primitive");
  IntMatrix u = IntMatrix::identity(d);
  IntVector w = v;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (w[i] == 0) continue;
    Int g, x, y;
    const Int a = w[d - 1], b = w[i];
    ext_gcd(a, b, g, x, y);
    const Int am = a / g, bm = b / g;
    for (std::size_t j = 0; j < d; ++j) {
      Int ul = u.at(d - 1, j), ui = u.at(i, j);
      u.at(d - 1, j) = x * ul + y * ui;
      u.at(i, j) = am * ui - bm * ul;
    }
    w[d - 1] = g;
    w[i] = 0;
  }
  if (w[d - 1] < 0) u.negate_row(d - 1);
  UnimodularMap result{std::move(u)};
  IntVector img = result.apply(v);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if (img[i] != 0) throw InternalInvariantError("complete_to_basis: image not e_d");
  }
  if (img[d - 1] != 1) throw InternalInvariantError("complete_to_basis: image not e_d");
  return result;
}

}  // namespace fano
