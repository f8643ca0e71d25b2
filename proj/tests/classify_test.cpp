#include "fano/classify.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fano/canon.hpp"
#include "test_util.hpp"

using namespace fano;

namespace {

IntVector vec(std::initializer_list<long long> v) { return make_vec(v); }

std::vector<IntVector> pts(std::vector<std::vector<long long>> ps) {
  std::vector<IntVector> out;
  for (auto& p : ps) {
    IntVector w;
    for (auto x : p) w.push_back(Int(x));
    out.push_back(std::move(w));
  }
  return out;
}

LatticePolytope poly(std::size_t d, std::vector<std::vector<long long>> ps) {
  return LatticePolytope::from_points(d, pts(ps));
}

LatticePolytope segment() { return poly(1, {{1}, {-1}}); }
LatticePolytope hexagon() {
  return poly(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}});
}
// reflexive triangle with one lattice-length-2 edge (on x = 1)
LatticePolytope long_edge_triangle() {
  return poly(2, {{1, -1}, {1, 1}, {-1, 0}});
}

}  // namespace

TEST_CASE("seed polytopes") {
  auto s1 = seed_polytopes(1);
  REQUIRE(s1.size() == 1);
  CHECK(normal_form(s1[0]).key == "1 2 1 -1");

  auto s2 = seed_polytopes(2);
  REQUIRE(s2.size() == 2);
  std::set<std::string> keys2 = {normal_form(s2[0]).key, normal_form(s2[1]).key};
  CHECK(keys2.count("2 3 1 0 -1;0 1 -1") == 1);                  // plane simplex
  CHECK(keys2.count("2 6 1 0 1 -1 0 -1;0 1 -1 1 -1 0") == 1);    // hexagon

  auto s3 = seed_polytopes(3);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].vertices().size() == 4);
  CHECK(s3[0].is_fano());

  // simplex plus the double hexagon; block sum has 3d vertices, 6^(d/2) facets
  auto s4 = seed_polytopes(4);
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].vertices().size() == 5);
  CHECK(s4[1].vertices().size() == 12);
  CHECK(s4[1].facets().size() == 36);
  for (const auto& s : s4) CHECK(s.is_fano());
}

TEST_CASE("circuit relations of a lattice-length-two segment") {
  auto rel = circuit_relations(pts({{1, -1}, {1, 0}, {1, 1}}));
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].lhs == std::vector<std::size_t>{0, 2});
  CHECK(rel[0].rhs == std::vector<std::size_t>{1});
  REQUIRE(rel[0].k.size() == 1);
  CHECK(rel[0].k[0] == 2);
}

TEST_CASE("circuit relations of the unit square come as a swappable pair") {
  auto rel = circuit_relations(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  REQUIRE(rel.size() == 2);
  CHECK(rel[0].lhs == std::vector<std::size_t>{0, 3});
  CHECK(rel[0].rhs == std::vector<std::size_t>{1, 2});
  CHECK(rel[0].k == std::vector<Int>{1, 1});
  CHECK(rel[1].lhs == std::vector<std::size_t>{1, 2});
  CHECK(rel[1].rhs == std::vector<std::size_t>{0, 3});
  CHECK(rel[1].k == std::vector<Int>{1, 1});
}

TEST_CASE("circuit relations reject volume mismatches and bad coefficients") {
  // dependency (1,-1,1,-1) has all-ones sides, but the hull has volume 4
  CHECK(circuit_relations(pts({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})).empty());
  // dependency (1,-3,2): neither side is all ones
  CHECK(circuit_relations(pts({{3, 0}, {1, 2}, {0, 3}})).empty());
}

TEST_CASE("circuit relations need a unique dependency") {
  CHECK_THROWS_AS(circuit_relations(pts({{0, 0}, {1, 0}, {0, 1}})),
                  DegeneracyError);
  CHECK_THROWS_AS(circuit_relations(pts({{0, 0}, {1, 0}, {2, 0}, {3, 0}})),
                  DegeneracyError);
}

TEST_CASE("base simplices of the segment") {
  auto bases = base_simplices(segment());
  REQUIRE(bases.size() == 2);
  for (const auto& b : bases) {
    REQUIRE(b.points.size() == 1);
    CHECK(b.transform.apply(b.points[0]) == vec({1}));
  }
}

TEST_CASE("base simplices of the hexagon use its six edges") {
  std::size_t skipped = 7;
  auto bases = base_simplices(hexagon(), &skipped);
  CHECK(bases.size() == 6);
  CHECK(skipped == 0);
  std::set<std::size_t> facet_ids;
  for (const auto& b : bases) {
    facet_ids.insert(b.facet_index);
    REQUIRE(b.points.size() == 2);
    CHECK(b.transform.apply(b.points[0]) == vec({1, 0}));
    CHECK(b.transform.apply(b.points[1]) == vec({0, 1}));
  }
  CHECK(facet_ids.size() == 6);
}

TEST_CASE("a circuit edge contributes one base per lhs member") {
  auto bases = base_simplices(long_edge_triangle());
  // two unimodular edges plus two choices on the length-2 edge
  CHECK(bases.size() == 4);
  for (const auto& b : bases) {
    CHECK(b.transform.apply(b.points[0]) == vec({1, 0}));
    CHECK(b.transform.apply(b.points[1]) == vec({0, 1}));
  }
}

TEST_CASE("k assignments of the transformed segment") {
  // segment lattice points {-1,0,1} under the identity-like base at facet {1}
  auto ks = k_assignments(pts({{-1}, {0}, {1}}), 2);
  REQUIRE(ks.size() == 2);
  CHECK(ks[0].k == std::vector<int>{0, -1, -1});
  CHECK(ks[1].k == std::vector<int>{1, -1, -1});
}

TEST_CASE("k assignments with no free points") {
  auto ks = k_assignments(pts({{0, 0}, {1, 0}, {0, 1}}), 3);
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].k == std::vector<int>{-1, -1, -1});
}

TEST_CASE("k assignment stream matches a direct filter") {
  // four free points in dimension 3: heights 0..2, sum <= 3, at most 3 zeros
  auto free_pts = pts({{2, 0}, {0, 2}, {-2, 0}, {0, -2}});
  auto ks = k_assignments(free_pts, 3);
  std::size_t expected = 0;
  std::vector<std::vector<int>> tuples;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          int zeros = (a == 0) + (b == 0) + (c == 0) + (d == 0);
          if (a + b + c + d <= 3 && zeros <= 3) {
            ++expected;
            tuples.push_back({a, b, c, d});
          }
        }
  CHECK(expected == 30);
  REQUIRE(ks.size() == expected);
  // stream is in ascending lexicographic order over the point order
  for (std::size_t i = 0; i < ks.size(); ++i) CHECK(ks[i].k == tuples[i]);
}

TEST_CASE("lift pins the origin and basis points") {
  auto tp = pts({{-1}, {0}, {1}});
  KAssignment k1{{1, -1, -1}};
  CHECK(lift(tp, k1) == pts({{-1, 0}, {0, 1}, {1, 0}}));
  KAssignment k0{{0, -1, -1}};
  CHECK(lift(tp, k0) == pts({{-1, 1}, {0, 1}, {1, 0}}));
}

TEST_CASE("double point choices over the segment, height one") {
  auto tp = pts({{-1}, {0}, {1}});
  auto lifted = pts({{-1, 0}, {0, 1}, {1, 0}});
  auto cands = double_point_choices(segment(), tp, lifted);
  // empty set, {0}, each singleton; the pair is blocked since lifts sum to 0
  CHECK(cands.size() == 6);
  bool found_single = false, found_zero = false;
  for (const auto& c : cands) {
    if (c.double_points == pts({{-1}})) {
      found_single = true;
      REQUIRE(c.points.size() == 4);
      CHECK(c.points[3] == vec({-1, -1}));
      auto hull = LatticePolytope::from_points(2, c.points);
      CHECK(hull.is_fano());
    }
    if (c.double_points == pts({{0}})) {
      found_zero = true;
      REQUIRE(c.points.size() == 4);
      CHECK(c.points[3] == vec({0, -1}));
    }
  }
  CHECK(found_single);
  CHECK(found_zero);
}

TEST_CASE("double point choices admit the symmetric pair at height zero") {
  auto tp = pts({{-1}, {0}, {1}});
  auto lifted = pts({{-1, 1}, {0, 1}, {1, 0}});
  auto cands = double_point_choices(segment(), tp, lifted);
  CHECK(cands.size() == 7);
  bool found_pair = false;
  for (const auto& c : cands) {
    if (c.double_points == pts({{-1}, {1}})) {
      found_pair = true;
      // budget 3 + 2 = 5 <= 3d-1; both extras present
      REQUIRE(c.points.size() == 5);
      CHECK(c.points[3] == vec({-1, 0}));
      CHECK(c.points[4] == vec({1, -1}));
      auto hull = LatticePolytope::from_points(2, c.points);
      CHECK(hull.is_fano());
      CHECK(hull.vertices().size() == 5);
    }
  }
  CHECK(found_pair);
}

TEST_CASE("double points stay off circuit facets") {
  auto p = long_edge_triangle();
  // base at the unimodular edge {(1,1),(-1,0)}: transform sends it to e1,e2
  auto bases = base_simplices(p);
  const BaseSimplex* base = nullptr;
  for (const auto& b : bases)
    if (b.points == pts({{-1, 0}, {1, 1}}) || b.points == pts({{1, 1}, {-1, 0}}))
      base = &b;
  REQUIRE(base != nullptr);
  std::vector<IntVector> tp;
  for (const auto& x : p.lattice_points()) tp.push_back(base->transform.apply(x));
  auto ks = k_assignments(tp, 3);
  REQUIRE(!ks.empty());
  auto lifted = lift(tp, ks[0]);
  for (const auto& c : double_point_choices(p, tp, lifted)) {
    for (const auto& s : c.double_points) {
      if (is_zero(s)) continue;
      // preimage must avoid the 3-point edge on x = 1
      auto orig = base->transform.inverse().apply(s);
      CHECK(orig[0] != 1);
    }
  }
}

TEST_CASE("classify in dimension one yields the segment alone") {
  ClassList empty;
  empty.dim = 0;
  auto out = classify(1, empty);
  REQUIRE(out.keys.size() == 1);
  CHECK(out.keys[0] == "1 2 1 -1");
}

TEST_CASE("classify in dimension two finds the five classes") {
  ClassList base;
  base.dim = 1;
  base.entries.push_back(segment());
  base.keys.push_back(normal_form(segment()).key);
  ClassifyStats stats;
  auto out = classify(2, base, &stats);
  REQUIRE(out.keys.size() == 5);
  std::vector<std::string> expected = {
      "2 3 1 0 -1;0 1 -1",
      "2 4 1 0 0 -1;0 1 -1 0",
      "2 4 1 0 0 -1;0 1 -1 1",
      "2 5 1 0 1 -1 0;0 1 -1 1 -1",
      "2 6 1 0 1 -1 0 -1;0 1 -1 1 -1 0"};
  std::sort(expected.begin(), expected.end());
  CHECK(out.keys == expected);
  CHECK(stats.admissible_inputs == 1);
  CHECK(stats.bases == 2);
  CHECK(stats.skipped_bases == 0);
  CHECK(stats.fano_hits > 0);
  CHECK(stats.unique_classes == 5);
  CHECK(stats.candidates >= stats.fano_hits);
}

TEST_CASE("classified polytopes project back onto their source") {
  ClassList base;
  base.dim = 1;
  base.entries.push_back(segment());
  base.keys.push_back(normal_form(segment()).key);
  auto out = classify(2, base);
  auto source_key = normal_form(segment()).key;
  IntVector ed = vec({0, 1});
  std::size_t checked = 0;
  for (const auto& p : out.entries) {
    bool has_ed = false;
    for (const auto& v : p.vertices()) has_ed = has_ed || v == ed;
    if (!has_ed) continue;
    auto pr = project_along_vertex(p, ed);
    CHECK(normal_form(pr.image).key == source_key);
    ++checked;
  }
  CHECK(checked >= 3);
}

TEST_CASE("classify output is invariant under input basis changes") {
  ClassList a, b;
  a.dim = 1;
  a.entries.push_back(segment());
  a.keys.push_back(normal_form(segment()).key);
  b = a;
  auto out1 = classify(2, a, nullptr, 1);
  auto out2 = classify(2, b, nullptr, 2);
  CHECK(out1.keys == out2.keys);
}
