#include "fano/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "fano/classify.hpp"
#include "fano/io.hpp"
#include "fano/parallel.hpp"

namespace fano {

ClassList dedup_classes(std::size_t dim, std::vector<LatticePolytope> polytopes,
                        std::size_t* duplicates) {
  std::map<std::string, LatticePolytope> classes;
  std::size_t dup = 0;
  for (auto& p : polytopes) {
    auto nf = normal_form(p);
    // store the embedding the normal form dictates; the list then depends
    // only on which classes occur, not on who reported them first
    if (!classes.emplace(std::move(nf.key), canonical_embedding(nf)).second)
      ++dup;
  }
  ClassList out;
  out.dim = dim;
  for (auto& [key, poly] : classes) {
    out.keys.push_back(key);
    out.entries.push_back(std::move(poly));
  }
  if (duplicates) *duplicates = dup;
  return out;
}

namespace {

struct Pt2 {
  long long x, y;
};

// counterclockwise hull of lex-sorted distinct points (monotone chain);
// collinear middle points are dropped, which is what callers want
std::vector<Pt2> hull_ccw(const std::vector<Pt2>& s) {
  const std::size_t n = s.size();
  if (n < 3) return s;
  auto turn = [](const Pt2& o, const Pt2& a, const Pt2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Pt2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], s[i]) <= 0) --k;
    h[k++] = s[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && turn(h[k - 2], h[k - 1], s[i]) <= 0) --k;
    h[k++] = s[i];
  }
  h.resize(k - 1);
  return h;
}

long long llgcd(long long a, long long b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

// cheap exact test: s (lex-sorted) is the vertex set of a reflexive polygon
// with the origin strictly inside
bool screen_polygon(const std::vector<Pt2>& s) {
  auto h = hull_ccw(s);
  if (h.size() != s.size()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Pt2& a = h[i];
    const Pt2& b = h[(i + 1) % h.size()];
    long long cr = a.x * b.y - a.y * b.x;  // positive iff origin left of a->b
    if (cr <= 0) return false;
    if (cr != llgcd(b.x - a.x, b.y - a.y)) return false;
  }
  return true;
}

std::vector<IntVector> to_exact(const std::vector<Pt2>& s) {
  std::vector<IntVector> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    IntVector v(2);
    v[0] = p.x;
    v[1] = p.y;
    out.push_back(std::move(v));
  }
  return out;
}

// next k-combination of indices over [0, n); returns false after the last
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

ClassList segment_class() {
  std::vector<IntVector> pts(2, IntVector(1));
  pts[0][0] = 1;
  pts[1][0] = -1;
  ClassList out;
  out.dim = 1;
  auto seg = LatticePolytope::from_points(1, pts);
  out.keys.push_back(normal_form(seg).key);
  out.entries.push_back(std::move(seg));
  return out;
}

}  // namespace

ClassList reflexive_classes(std::size_t d) {
  if (d == 1) return segment_class();
  if (d != 2)
    throw DimensionError(
        "built-in reflexive enumeration covers dimensions 1 and 2; "
        "import a database for higher dimensions");

  // vertices of reflexive polytopes pair to -1 with a primitive normal, so
  // they are primitive; the box is validated by the class-count assertion
  std::vector<Pt2> ground;
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y)
      if ((x != 0 || y != 0) && llgcd(x, y) == 1) ground.push_back({x, y});

  std::vector<LatticePolytope> found;
  std::vector<Pt2> subset;
  for (std::size_t k = 3; k <= 6; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      subset.clear();
      for (auto i : idx) subset.push_back(ground[i]);
      if (!screen_polygon(subset)) continue;
      auto p = LatticePolytope::from_points(2, to_exact(subset));
      if (p.vertices().size() == k && p.is_reflexive())
        found.push_back(std::move(p));
    } while (next_combination(idx, ground.size()));
  }

  auto list = dedup_classes(2, std::move(found));
  if (list.keys.size() != 16)
    throw InternalInvariantError(
        "reflexive polygon search found " + std::to_string(list.keys.size()) +
        " classes where 16 are known; the search box is miscalibrated");
  return list;
}

namespace {

// all nonzero points of {-1,0,1}^d, lex order
std::vector<IntVector> box_points(std::size_t d) {
  std::vector<IntVector> out;
  std::vector<long long> cur(d, -1);
  for (;;) {
    bool zero = std::all_of(cur.begin(), cur.end(),
                            [](long long v) { return v == 0; });
    if (!zero) {
      IntVector v(d);
      for (std::size_t i = 0; i < d; ++i) v[i] = cur[i];
      out.push_back(std::move(v));
    }
    std::size_t i = d;
    while (i > 0 && cur[i - 1] == 1) cur[--i] = -1;
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

ClassList oracle_exact(std::size_t d) {
  auto ground = box_points(d);
  const std::size_t max_size = d % 2 == 0 ? 3 * d : 3 * d - 1;
  std::vector<LatticePolytope> found;
  for (std::size_t k = d + 1; k <= max_size && k <= ground.size(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<IntVector> pts;
      pts.reserve(k);
      for (auto i : idx) pts.push_back(ground[i]);
      try {
        auto p = LatticePolytope::from_points(d, pts);
        if (p.vertices().size() == k && p.is_fano()) found.push_back(std::move(p));
      } catch (const UserError&) {
      }
    } while (next_combination(idx, ground.size()));
  }
  return dedup_classes(d, std::move(found));
}

// precomputed supporting-plane data for one ordered triple of ground points
struct TripleData {
  bool spanning = false;
  std::int8_t c = 0;           // det of the three points; plane offset
  std::int8_t dot[26] = {0};   // plane normal paired with every ground point
};

// The 3d screen: every supporting plane through three chosen points must hold
// exactly those three, at determinant +-1 with the origin strictly inside;
// every chosen point must lie on at least three such planes. True vertex sets
// of Fano polytopes satisfy all of it, so rejects are lossless; accepts are
// re-verified exactly afterwards.
class OracleScreen3 {
 public:
  explicit OracleScreen3(const std::vector<IntVector>& ground) {
    const std::size_t n = ground.size();
    long long p[26][3];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < 3; ++c)
        p[i][c] = ground[i][c].convert_to<long long>();
    table_.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          TripleData t;
          long long ux = p[j][0] - p[i][0], uy = p[j][1] - p[i][1],
                    uz = p[j][2] - p[i][2];
          long long vx = p[k][0] - p[i][0], vy = p[k][1] - p[i][1],
                    vz = p[k][2] - p[i][2];
          long long nx = uy * vz - uz * vy, ny = uz * vx - ux * vz,
                    nz = ux * vy - uy * vx;
          if (nx != 0 || ny != 0 || nz != 0) {
            t.spanning = true;
            for (std::size_t l = 0; l < n; ++l)
              t.dot[l] = static_cast<std::int8_t>(nx * p[l][0] + ny * p[l][1] +
                                                  nz * p[l][2]);
            t.c = t.dot[i];
          }
          table_[(i * n + j) * n + k] = t;
        }
    n_ = n;
  }

  bool accept(const std::vector<std::size_t>& g) const {
    const std::size_t m = g.size();
    std::array<std::uint8_t, 8> incident{};
    std::size_t facets = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          const TripleData& t = table_[(g[a] * n_ + g[b]) * n_ + g[c]];
          if (!t.spanning) continue;
          bool ge = true, le = true;
          for (std::size_t l = 0; l < m; ++l) {
            int r = t.dot[g[l]] - t.c;
            ge = ge && r >= 0;
            le = le && r <= 0;
            if (!ge && !le) break;
          }
          if (!ge && !le) continue;
          if (ge && le) return false;  // chosen points all coplanar
          // supporting plane; inner normal needs plane offset -1 resp. +1
          if (ge && t.c != -1) return false;
          if (le && t.c != 1) return false;
          std::size_t zeros = 0;
          std::array<std::size_t, 4> members{};
          for (std::size_t l = 0; l < m; ++l)
            if (t.dot[g[l]] == t.c) {
              if (zeros < members.size()) members[zeros] = l;
              ++zeros;
            }
          if (zeros != 3) return false;
          ++facets;
          for (std::size_t z = 0; z < 3; ++z) ++incident[members[z]];
        }
    if (facets < 4) return false;
    for (std::size_t l = 0; l < m; ++l)
      if (incident[l] < 3) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<TripleData> table_;
};

ClassList oracle_screened3(std::size_t jobs) {
  auto ground = box_points(3);
  OracleScreen3 screen(ground);
  const std::size_t n = ground.size();

  std::vector<LatticePolytope> found;
  std::mutex mtx;
  // one task per (size, first element); each owns a contiguous slice
  struct Task {
    std::size_t k, first;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 4; k <= 8; ++k)
    for (std::size_t first = 0; first + k <= n; ++first)
      tasks.push_back({k, first});

  parallel_for(tasks.size(), jobs, [&](std::size_t ti) {
    const auto [k, first] = tasks[ti];
    std::vector<std::size_t> idx(k);
    idx[0] = first;
    std::iota(idx.begin() + 1, idx.end(), first + 1);
    std::vector<LatticePolytope> mine;
    do {
      if (!screen.accept(idx)) continue;
      std::vector<IntVector> pts;
      pts.reserve(k);
      for (auto i : idx) pts.push_back(ground[i]);
      try {
        auto p = LatticePolytope::from_points(3, pts);
        if (p.vertices().size() == k && p.is_fano()) mine.push_back(std::move(p));
      } catch (const UserError&) {
      }
    } while (next_combination(idx, n) && idx[0] == first);
    if (!mine.empty()) {
      std::lock_guard<std::mutex> lock(mtx);
      for (auto& p : mine) found.push_back(std::move(p));
    }
  });

  return dedup_classes(3, std::move(found));
}

}  // namespace

ClassList fano_oracle(std::size_t d, std::size_t jobs) {
  if (d < 1 || d > 3)
    throw DimensionError("the brute-force catalogue covers dimensions 1 to 3");
  if (d <= 2) return oracle_exact(d);
  return oracle_screened3(jobs);
}

bool admissible(const LatticePolytope& p, std::size_t d) {
  if (d < 2 || p.dim() != d - 1)
    throw DimensionError("admissibility compares a polytope against dimension d-1");
  if (!p.is_reflexive()) return false;
  const auto lp = p.lattice_points();
  if (lp.size() > 3 * d - 1) return false;
  for (const auto& f : p.facets()) {
    std::vector<IntVector> fpts;
    for (const auto& x : lp)
      if (dot(f.normal, x) == -f.denominator) fpts.push_back(x);
    if (fpts.size() == d - 1) {
      IntMatrix b(d - 1, d - 1);
      for (std::size_t j = 0; j < fpts.size(); ++j)
        for (std::size_t i = 0; i < d - 1; ++i) b.at(i, j) = fpts[j][i];
      Int det = determinant(b);
      if (det != 1 && det != -1) return false;
    } else if (fpts.size() == d) {
      try {
        if (circuit_relations(fpts).empty()) return false;
      } catch (const DegeneracyError&) {
        return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

ImportResult import_classes(const std::string& path, std::size_t dim,
                            bool transpose) {
  auto blocks = read_vertex_blocks(path, transpose);
  std::vector<LatticePolytope> ps;
  ps.reserve(blocks.size());
  for (const auto& b : blocks) {
    const std::string where = "block at line " + std::to_string(b.line);
    if (b.dim != dim)
      throw ValidationError(where + ": dimension " + std::to_string(b.dim) +
                            ", expected " + std::to_string(dim));
    try {
      auto p = LatticePolytope::from_points(dim, b.points);
      if (!p.is_reflexive()) throw ValidationError(where + ": not reflexive");
      ps.push_back(std::move(p));
    } catch (const ValidationError&) {
      throw;
    } catch (const UserError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  ImportResult r;
  r.list = dedup_classes(dim, std::move(ps), &r.duplicates);
  return r;
}

void export_classes(const ClassList& list, const std::string& path) {
  std::vector<VertexBlock> blocks;
  blocks.reserve(list.entries.size());
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    VertexBlock b;
    b.dim = list.dim;
    b.points = list.entries[i].vertices();
    b.comment = i < list.keys.size() ? list.keys[i] : "";
    blocks.push_back(std::move(b));
  }
  write_vertex_blocks(path, blocks);
}

}  // namespace fano
