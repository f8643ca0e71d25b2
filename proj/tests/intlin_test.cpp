#include "fano/intlin.hpp"

#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace fano;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> rv;
  for (auto& r : rows) rv.push_back(make_vec(r));
  return IntMatrix::from_rows(rv);
}

// Shape-based HNF recognizer, independent of the production algorithm:
// pivots strictly right-down, positive, zeros below, entries above a pivot
// reduced into [0, pivot).
bool looks_like_hnf(const IntMatrix& h) {
  std::size_t prev_pivot = 0;
  bool first = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h.at(i, j) == 0) ++j;
    if (j == h.cols()) return false;  // zero row: not full rank
    if (!first && j <= prev_pivot) return false;
    if (h.at(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h.at(k, j) < 0 || h.at(k, j) >= h.at(i, j)) return false;
    for (std::size_t k = i + 1; k < h.rows(); ++k)
      if (h.at(k, j) != 0) return false;
    prev_pivot = j;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("determinant hand expansions") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  IntMatrix swapped = IntMatrix::identity(3);
  swapped.swap_rows(0, 1);
  CHECK(determinant(swapped) == -1);
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  // 1*(5*10-6*8) - 2*(4*10-6*7) + 3*(4*8-5*7) = 2 + 4 - 9
  CHECK(determinant(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
}

TEST_CASE("determinant multiplicativity (random)") {
  for (int t = 0; t < 200; ++t) {
    std::size_t n = static_cast<std::size_t>(testutil::rand_int(1, 4));
    IntMatrix a = testutil::random_matrix(n, n, 3);
    IntMatrix b = testutil::random_matrix(n, n, 3);
    CHECK(determinant(a.multiply(b)) == determinant(a) * determinant(b));
  }
}

TEST_CASE("primitive") {
  CHECK(primitive(make_vec({2, 4})) == make_vec({1, 2}));
  CHECK(primitive(make_vec({0, -3})) == make_vec({0, -1}));
  CHECK(primitive(make_vec({5})) == make_vec({1}));
  CHECK(primitive(make_vec({-7, 0, 7})) == make_vec({-1, 0, 1}));
  CHECK_THROWS_AS(primitive(make_vec({0, 0})), DomainError);
}

TEST_CASE("hermite normal form: frozen examples") {
  CHECK(hermite_normal_form(IntMatrix::identity(3)).h == IntMatrix::identity(3));

  auto r = hermite_normal_form(mat({{0, 1}, {1, 0}}));
  CHECK(r.h == IntMatrix::identity(2));
  CHECK(r.u.multiply(mat({{0, 1}, {1, 0}})) == r.h);

  // Oracle below confirms this is the unique matrix of HNF shape in the
  // unimodular row-orbit of [[2,4],[1,3]].
  auto r2 = hermite_normal_form(mat({{2, 4}, {1, 3}}));
  CHECK(r2.h == mat({{1, 1}, {0, 2}}));
  CHECK(r2.u.multiply(mat({{2, 4}, {1, 3}})) == r2.h);
  CHECK((determinant(r2.u) == 1 || determinant(r2.u) == -1));
}

TEST_CASE("hermite normal form: exhaustive unimodular oracle for [[2,4],[1,3]]") {
  // Search all U with entries in [-6,6] and det +-1; exactly one U*m has
  // HNF shape and it must match the production result.
  IntMatrix m = mat({{2, 4}, {1, 3}});
  std::vector<IntMatrix> found;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c)
        for (int d = -6; d <= 6; ++d) {
          long long det = static_cast<long long>(a) * d - static_cast<long long>(b) * c;
          if (det != 1 && det != -1) continue;
          IntMatrix u = mat({{a, b}, {c, d}});
          IntMatrix um = u.multiply(m);
          if (looks_like_hnf(um)) found.push_back(um);
        }
  REQUIRE(!found.empty());
  for (const auto& f : found) CHECK(f == found.front());
  CHECK(hermite_normal_form(m).h == found.front());
}

TEST_CASE("hermite normal form: shape, idempotence, unimodular invariance") {
  for (int t = 0; t < 1000; ++t) {
    std::size_t d = static_cast<std::size_t>(testutil::rand_int(1, 5));
    std::size_t n = d + static_cast<std::size_t>(testutil::rand_int(0, 3));
    IntMatrix m = testutil::random_full_row_rank(d, n);
    auto r = hermite_normal_form(m);
    CHECK(looks_like_hnf(r.h));
    CHECK(r.u.multiply(m) == r.h);
    Int du = determinant(r.u);
    CHECK((du == 1 || du == -1));
    CHECK(hermite_normal_form(r.h).h == r.h);
    UnimodularMap u = testutil::random_unimodular(d);
    CHECK(hermite_normal_form(u.matrix().multiply(m)).h == r.h);
  }
}

TEST_CASE("hermite normal form: rank-deficient input rejected") {
  CHECK_THROWS_AS(hermite_normal_form(mat({{1, 2}, {2, 4}})), RankError);
}

TEST_CASE("kernel_primitive") {
  CHECK(kernel_primitive(mat({{1, 1, 1}, {-1, 0, 1}})) == make_vec({1, -2, 1}));
  CHECK(kernel_primitive(mat({{1, -1}})) == make_vec({1, 1}));
  CHECK_THROWS_AS(kernel_primitive(mat({{0, 0}})), DegeneracyError);
  CHECK_THROWS_AS(kernel_primitive(IntMatrix::identity(2)), DegeneracyError);

  for (int t = 0; t < 300; ++t) {
    std::size_t n = static_cast<std::size_t>(testutil::rand_int(2, 5));
    IntMatrix m = testutil::random_full_row_rank(n - 1, n);
    IntVector w = kernel_primitive(m);
    CHECK(gcd_all(w) == 1);
    bool first_sign_ok = false;
    for (const auto& x : w) {
      if (x != 0) {
        first_sign_ok = x > 0;
        break;
      }
    }
    CHECK(first_sign_ok);
    for (std::size_t i = 0; i < n - 1; ++i) CHECK(dot(m.row(i), w) == 0);
  }
}

TEST_CASE("complete_to_basis") {
  // e_d maps to itself under the identity.
  IntVector ed = make_vec({0, 0, 1});
  CHECK(complete_to_basis(ed).matrix() == IntMatrix::identity(3));

  for (auto v : {make_vec({1, 0}), make_vec({2, 3}), make_vec({-1, 2, 2}),
                 make_vec({3, -5, 7, 2})}) {
    UnimodularMap u = complete_to_basis(v);
    IntVector img = u.apply(v);
    for (std::size_t i = 0; i + 1 < img.size(); ++i) CHECK(img[i] == 0);
    CHECK(img.back() == 1);
    Int d = determinant(u.matrix());
    CHECK((d == 1 || d == -1));
  }
  CHECK_THROWS_AS(complete_to_basis(make_vec({2, 4})), DomainError);
  CHECK_THROWS_AS(complete_to_basis(make_vec({0, 0})), DomainError);
}

TEST_CASE("unimodular map") {
  CHECK_THROWS_AS(UnimodularMap(mat({{2, 0}, {0, 1}})), DomainError);
  UnimodularMap u(mat({{1, 1}, {0, 1}}));
  UnimodularMap v = u.inverse();
  CHECK(u.compose(v).matrix() == IntMatrix::identity(2));
  CHECK(v.matrix() == mat({{1, -1}, {0, 1}}));
  CHECK(u.apply(make_vec({3, 4})) == make_vec({7, 4}));
}
