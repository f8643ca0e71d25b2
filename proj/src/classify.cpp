#include "fano/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>

#include "fano/canon.hpp"
#include "fano/parallel.hpp"

namespace fano {

namespace {

LatticePolytope fano_simplex(std::size_t d) {
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  pts.emplace_back(d, Int(-1));
  return LatticePolytope::from_points(d, pts);
}

// one hexagon per pair of coordinates, vertex sets embedded block by block
LatticePolytope hexagon_blocks(std::size_t d) {
  static const long long hex[6][2] = {{1, 0}, {0, 1},  {1, 1},
                                      {-1, 0}, {0, -1}, {-1, -1}};
  std::vector<IntVector> pts;
  for (std::size_t b = 0; b + 1 < d; b += 2)
    for (const auto& v : hex) {
      IntVector w(d, 0);
      w[b] = v[0];
      w[b + 1] = v[1];
      pts.push_back(std::move(w));
    }
  return LatticePolytope::from_points(d, pts);
}

}  // namespace

std::vector<LatticePolytope> seed_polytopes(std::size_t d) {
  if (d == 0) throw DimensionError("seed polytopes need dimension >= 1");
  std::vector<LatticePolytope> out;
  out.push_back(fano_simplex(d));
  if (d >= 2 && d % 2 == 0) out.push_back(hexagon_blocks(d));
  for (const auto& s : out)
    if (!s.is_fano()) throw InternalInvariantError("seed polytope is not Fano");
  return out;
}

namespace {

// every simplex left by dropping one lhs point must be unimodular inside the
// saturated lattice of its span, i.e. the gcd of the maximal minors of the
// difference matrix is 1; together the drops triangulate the hull, so this is
// exactly the volume condition sum k = |lhs| = Vol
bool drops_are_unimodular(const std::vector<IntVector>& points,
                          const std::vector<std::size_t>& lhs) {
  const std::size_t m = points.size();
  const std::size_t n = points[0].size();
  for (std::size_t drop : lhs) {
    std::vector<const IntVector*> kept;
    for (std::size_t j = 0; j < m; ++j)
      if (j != drop) kept.push_back(&points[j]);
    const std::size_t rows = kept.size() - 1;  // m - 2
    if (rows > n) return false;
    IntMatrix diff(rows, n);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < n; ++c)
        diff.at(r, c) = (*kept[r + 1])[c] - (*kept[0])[c];
    // gcd over all maximal minors
    std::vector<std::size_t> cols(rows);
    for (std::size_t i = 0; i < rows; ++i) cols[i] = i;
    Int g = 0;
    for (;;) {
      IntMatrix sq(rows, rows);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < rows; ++c) sq.at(r, c) = diff.at(r, cols[c]);
      Int det = determinant(sq);
      g = boost::multiprecision::gcd(g, abs(det));
      if (g == 1) break;
      // next column combination
      std::size_t i = rows;
      while (i > 0 && cols[i - 1] == n - rows + (i - 1)) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (std::size_t j = i; j < rows; ++j) cols[j] = cols[j - 1] + 1;
    }
    if (g != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<CircuitRelation> circuit_relations(const std::vector<IntVector>& points) {
  if (points.size() < 3) throw DegeneracyError("circuit needs at least 3 points");
  const std::size_t m = points.size();
  const std::size_t n = points[0].size();
  IntMatrix homog(n + 1, m);
  for (std::size_t j = 0; j < m; ++j) {
    homog.at(0, j) = 1;
    for (std::size_t i = 0; i < n; ++i) homog.at(i + 1, j) = points[j][i];
  }
  IntVector dep = kernel_primitive(homog);  // unique dependency or throws
  for (const auto& e : dep)
    if (e == 0) return {};  // a proper subset is already dependent

  std::vector<CircuitRelation> out;
  for (int side = 0; side < 2; ++side) {
    CircuitRelation rel;
    bool ones = true;
    for (std::size_t j = 0; j < m; ++j) {
      Int c = side ? -dep[j] : dep[j];
      if (c > 0) {
        if (c != 1) ones = false;
        rel.lhs.push_back(j);
      } else {
        rel.rhs.push_back(j);
        rel.k.push_back(-c);
      }
    }
    if (!ones) continue;
    if (!drops_are_unimodular(points, rel.lhs)) continue;
    out.push_back(std::move(rel));
  }
  return out;
}

namespace {

// facet lattice points in lex order (lattice_points() is already sorted)
std::vector<IntVector> facet_points(const LatticePolytope& p, const Facet& f,
                                    const std::vector<IntVector>& lp) {
  std::vector<IntVector> out;
  for (const auto& x : lp)
    if (dot(f.normal, x) == -f.denominator) out.push_back(x);
  return out;
}

void push_base(std::vector<BaseSimplex>& out, std::size_t* skipped,
               std::size_t facet_index, std::vector<IntVector> pts) {
  const std::size_t n = pts[0].size();
  IntMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) b.at(i, j) = pts[j][i];
  Int det = determinant(b);
  if (det != 1 && det != -1) {
    if (skipped) ++*skipped;
    return;
  }
  out.push_back(BaseSimplex{facet_index, std::move(pts),
                            UnimodularMap(b).inverse()});
}

}  // namespace

std::vector<BaseSimplex> base_simplices(const LatticePolytope& p,
                                        std::size_t* skipped) {
  const std::size_t n = p.dim();
  if (skipped) *skipped = 0;
  const auto lp = p.lattice_points();
  std::vector<BaseSimplex> out;
  for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
    auto fpts = facet_points(p, p.facets()[fi], lp);
    if (fpts.size() == n) {
      push_base(out, skipped, fi, std::move(fpts));
    } else if (fpts.size() == n + 1) {
      std::vector<CircuitRelation> rels;
      try {
        rels = circuit_relations(fpts);
      } catch (const DegeneracyError&) {
        continue;  // not a circuit; nothing to contribute
      }
      for (const auto& rel : rels)
        for (std::size_t i : rel.lhs) {
          std::vector<IntVector> cpts;
          for (std::size_t j = 0; j < fpts.size(); ++j)
            if (j != i) cpts.push_back(fpts[j]);
          push_base(out, skipped, fi, std::move(cpts));
        }
    }
  }
  return out;
}

namespace {

bool is_unit_vector(const IntVector& v) {
  int ones = 0;
  for (const auto& e : v) {
    if (e == 1)
      ++ones;
    else if (e != 0)
      return false;
  }
  return ones == 1;
}

}  // namespace

std::vector<KAssignment> k_assignments(const std::vector<IntVector>& transformed,
                                       std::size_t d) {
  std::vector<std::size_t> free_idx;
  std::vector<int> base(transformed.size(), -1);
  for (std::size_t i = 0; i < transformed.size(); ++i)
    if (!is_zero(transformed[i]) && !is_unit_vector(transformed[i]))
      free_idx.push_back(i);

  std::vector<KAssignment> out;
  std::vector<int> cur(free_idx.size(), 0);
  const int max_value = static_cast<int>(d) - 1;
  auto rec = [&](auto&& self, std::size_t pos, int sum, int zeros) -> void {
    if (zeros > static_cast<int>(d)) return;
    if (pos == free_idx.size()) {
      KAssignment ka{base};
      for (std::size_t i = 0; i < free_idx.size(); ++i)
        ka.k[free_idx[i]] = cur[i];
      out.push_back(std::move(ka));
      return;
    }
    for (int v = 0; v <= max_value && sum + v <= static_cast<int>(d); ++v) {
      cur[pos] = v;
      self(self, pos + 1, sum + v, zeros + (v == 0));
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

std::vector<IntVector> lift(const std::vector<IntVector>& transformed,
                            const KAssignment& k) {
  if (transformed.size() != k.k.size())
    throw InternalInvariantError("lift: assignment length mismatch");
  const std::size_t n = transformed.empty() ? 0 : transformed[0].size();
  std::vector<IntVector> out;
  out.reserve(transformed.size());
  for (std::size_t i = 0; i < transformed.size(); ++i) {
    IntVector w(n + 1);
    Int sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
      w[c] = transformed[i][c];
      sum += transformed[i][c];
    }
    w[n] = -sum - k.k[i];
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Candidate> double_point_choices(const LatticePolytope& p,
                                            const std::vector<IntVector>& transformed,
                                            const std::vector<IntVector>& lifted) {
  if (transformed.empty() || transformed.size() != lifted.size())
    throw InternalInvariantError("double points: inconsistent layers");
  const std::size_t d = transformed[0].size() + 1;
  const std::size_t budget = 3 * d - 1;
  const std::size_t m = transformed.size();
  const auto lp = p.lattice_points();
  if (lp.size() != m)
    throw InternalInvariantError("double points: transformed list is not the point list");

  // classify facets of the layer below: a facet carrying d points is a
  // circuit; nonzero double points must avoid those entirely, and the point 0
  // is eligible only when every circuit has an all-ones relation
  std::vector<bool> on_circuit(m, false);
  bool zero_ok = true;
  for (const auto& f : p.facets()) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m; ++i)
      if (dot(f.normal, lp[i]) == -f.denominator) members.push_back(i);
    if (members.size() != d) continue;
    std::vector<IntVector> fpts;
    for (auto i : members) fpts.push_back(lp[i]);
    std::vector<CircuitRelation> rels;
    try {
      rels = circuit_relations(fpts);
    } catch (const DegeneracyError&) {
      rels.clear();
    }
    bool all_ones = false;
    for (const auto& r : rels) {
      bool ones = true;
      for (const auto& kj : r.k) ones = ones && kj == 1;
      all_ones = all_ones || ones;
    }
    zero_ok = zero_ok && all_ones;
    for (auto i : members) on_circuit[i] = true;
  }

  std::size_t zero_idx = m;
  for (std::size_t i = 0; i < m; ++i)
    if (is_zero(transformed[i])) zero_idx = i;

  IntVector ed(d, 0);
  ed[d - 1] = 1;

  std::vector<Candidate> out;
  auto emit = [&](const std::vector<std::size_t>& s) {
    Candidate c;
    c.points = lifted;
    for (auto i : s) {
      c.double_points.push_back(transformed[i]);
      if (i == zero_idx)
        c.points.push_back(negate(ed));
      else
        c.points.push_back(sub(lifted[i], ed));
    }
    out.push_back(std::move(c));
  };

  std::vector<std::size_t> singles;  // eligible nonzero double points
  for (std::size_t i = 0; i < m; ++i)
    if (i != zero_idx && !is_zero(transformed[i]) && !on_circuit[i])
      singles.push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = a + 1; b < singles.size(); ++b) {
      std::size_t i = singles[a], j = singles[b];
      if (transformed[j] != negate(transformed[i])) continue;
      if (add(lifted[i], lifted[j]) == ed) pairs.emplace_back(i, j);
    }

  emit({});
  if (m + 1 <= budget) {
    if (zero_ok && zero_idx < m) emit({zero_idx});
    for (auto s : singles) emit({s});
  }
  if (m + 2 <= budget) {
    if (zero_ok && zero_idx < m)
      for (auto s : singles) emit({zero_idx, s});
    for (auto& [a, b] : pairs) emit({a, b});
  }
  if (m + 3 <= budget && zero_ok && zero_idx < m)
    for (auto& [a, b] : pairs) emit({zero_idx, a, b});
  return out;
}

ClassList classify(std::size_t d, const ClassList& reflexive,
                   ClassifyStats* stats, std::size_t jobs) {
  if (d == 0) throw DimensionError("classification needs dimension >= 1");
  ClassifyStats local;
  local.inputs = reflexive.entries.size();

  std::map<std::string, LatticePolytope> classes;
  std::mutex mtx;
  auto add = [&](const LatticePolytope& p) {
    auto nf = normal_form(p);
    // the stored embedding comes from the normal form, never from whichever
    // worker got here first
    auto canonical = canonical_embedding(nf);
    std::lock_guard<std::mutex> lock(mtx);
    classes.emplace(std::move(nf.key), std::move(canonical));
  };

  for (const auto& s : seed_polytopes(d)) add(s);

  struct Work {
    const LatticePolytope* source;
    BaseSimplex base;
  };
  std::vector<Work> work;
  for (const auto& q : reflexive.entries) {
    if (d >= 2 && q.dim() != d - 1)
      throw DimensionError("classification input must have dimension d-1");
    if (!admissible(q, d)) continue;
    ++local.admissible_inputs;
    std::size_t skipped = 0;
    for (auto& b : base_simplices(q, &skipped))
      work.push_back(Work{&q, std::move(b)});
    local.skipped_bases += skipped;
  }
  local.bases = work.size();

  std::atomic<std::size_t> candidates{0}, invalid{0}, hits{0};
  parallel_for(work.size(), jobs, [&](std::size_t wi) {
    const auto& w = work[wi];
    const auto lp = w.source->lattice_points();
    std::vector<IntVector> tp;
    tp.reserve(lp.size());
    for (const auto& x : lp) tp.push_back(w.base.transform.apply(x));
    for (const auto& ka : k_assignments(tp, d)) {
      auto lifted = lift(tp, ka);
      for (auto& cand : double_point_choices(*w.source, tp, lifted)) {
        candidates.fetch_add(1);
        try {
          auto hull = LatticePolytope::from_points(d, cand.points);
          if (hull.is_fano()) {
            hits.fetch_add(1);
            add(hull);
          }
        } catch (const UserError&) {
          invalid.fetch_add(1);
        }
      }
    }
  });

  local.candidates = candidates.load();
  local.invalid_hulls = invalid.load();
  local.fano_hits = hits.load();

  ClassList out;
  out.dim = d;
  for (auto& [key, poly] : classes) {
    out.keys.push_back(key);
    out.entries.push_back(std::move(poly));
  }
  local.unique_classes = out.keys.size();
  if (stats) *stats = local;
  return out;
}

}  // namespace fano
