#include "fano/analyze.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fano/canon.hpp"
#include "fano/classify.hpp"
#include "fano/errors.hpp"
#include "fano/parallel.hpp"

namespace fano {

namespace {

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

Int gcd_fold(Int acc, const IntVector& v) {
  for (const auto& x : v) acc = boost::multiprecision::gcd(acc, x);
  return acc;
}

// next k-combination of indices over [0, n)
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<std::vector<IntVector>> ewald_basis(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  const auto dual_points = p.dual().lattice_points();
  // one representative per symmetric pair {u, -u}, nonzero
  std::vector<IntVector> reps;
  for (const auto& u : dual_points) {
    if (is_zero(u)) continue;
    auto m = negate(u);
    if (compare_vec(u, m) < 0) continue;  // keep the lex-larger of the pair
    if (std::binary_search(dual_points.begin(), dual_points.end(), m,
                           [](const IntVector& a, const IntVector& b) {
                             return compare_vec(a, b) < 0;
                           }))
      reps.push_back(u);
  }
  if (reps.size() < d) return std::nullopt;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    IntMatrix b(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) b.at(i, j) = reps[idx[j]][i];
    Int det = determinant(b);
    if (det == 1 || det == -1) {
      std::vector<IntVector> out;
      for (auto j : idx) out.push_back(reps[j]);
      return out;
    }
  } while (next_combination(idx, reps.size()));
  return std::nullopt;
}

PolytopeReport report(const LatticePolytope& p) {
  PolytopeReport r;
  r.key = normal_form(p).key;
  r.dim = static_cast<std::size_t>(p.dim());
  r.vertex_count = p.vertices().size();
  r.facet_count = p.facets().size();
  r.picard = r.vertex_count - r.dim;
  auto q = p.dual();
  r.degree = q.normalized_volume();
  r.h0 = q.lattice_points().size();
  r.max_edge = 0;
  for (const auto& len : p.dual_edge_lengths()) r.max_edge = std::max(r.max_edge, len);
  const auto& du = q.vertices();
  Int g = 0;
  for (std::size_t i = 1; i < du.size(); ++i) g = gcd_fold(g, sub(du[i], du[0]));
  r.index = g == 0 ? Int(1) : g;
  r.ewald = ewald_basis(p).has_value();
  return r;
}

bool SuiteReport::ok() const { return total_failed() == 0; }

std::size_t SuiteReport::total_failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

namespace {

// fixed check order so that reports over many polytopes merge index-wise
enum CheckId {
  kLowExcess = 0,
  kDistanceBound,
  kSharpDistance,
  kZeroPairing,
  kVertexBound,
  kFarthestVertex,
  kProjections,
  kDualEdges,
  kEmbedding,
  kCheckCount
};

const char* const kCheckNames[kCheckCount] = {
    "a facet of low pairing excess exists",
    "vertex distances stay within d+1 of a low-excess facet",
    "a low-excess facet within distance d exists (non-simplex)",
    "at most d vertices lie on each facet hyperplane",
    "vertex count within the global bound",
    "vertex count bounded by the farthest distance",
    "vertex projections keep their invariants",
    "dual edges at the witness facet are short",
    "an embedding basis into {-1,0,1}^d exists",
};

SuiteReport empty_report() {
  SuiteReport r;
  r.checks.resize(kCheckCount);
  for (std::size_t i = 0; i < kCheckCount; ++i) r.checks[i].name = kCheckNames[i];
  return r;
}

void record(CheckResult& c, bool pass, const std::string& witness) {
  if (pass) {
    ++c.passed;
  } else {
    ++c.failed;
    c.failures.push_back(witness);
  }
}

std::vector<std::string> projection_failures(const LatticePolytope& p,
                                             const IntVector& v) {
  std::vector<std::string> out;
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const std::string at = "projection along " + vec_str(v);
  std::optional<ProjectionResult> held;
  try {
    held.emplace(project_along_vertex(p, v));
  } catch (const std::exception& e) {
    out.push_back(at + " raised: " + std::string(e.what()));
    return out;
  }
  const ProjectionResult& pr = *held;
  if (!pr.image.is_reflexive()) out.push_back(at + ": image not reflexive");

  std::vector<std::size_t> doubles;  // fibers of size two over nonzero points
  for (std::size_t i = 0; i < pr.fibers.size(); ++i)
    if (pr.fibers[i].second.size() == 2 && !is_zero(pr.fibers[i].first))
      doubles.push_back(i);
  if (doubles.size() > 2) {
    out.push_back(at + ": " + std::to_string(doubles.size()) +
                  " nonzero double points");
  } else if (doubles.size() == 2) {
    const auto& fx = pr.fibers[doubles[0]];
    const auto& fy = pr.fibers[doubles[1]];
    if (!(negate(fx.first) == fy.first)) {
      out.push_back(at + ": double points " + vec_str(fx.first) + ", " +
                    vec_str(fy.first) + " not centrally symmetric");
    } else {
      bool hit = false;
      for (const auto& a : fx.second)
        for (const auto& b : fy.second)
          if (add(a, b) == v) hit = true;
      if (!hit)
        out.push_back(at + ": no preimage pair over " + vec_str(fx.first) +
                      " sums to the vertex");
    }
  }

  // every image facet carries d-1 points forming a basis or d points forming
  // a circuit that admits the valid swap relations
  const auto lp = pr.image.lattice_points();
  for (const auto& f : pr.image.facets()) {
    std::vector<IntVector> fpts;
    for (const auto& x : lp)
      if (dot(f.normal, x) == -f.denominator) fpts.push_back(x);
    const std::string fat = at + ", image facet " + vec_str(f.normal);
    if (fpts.size() == d - 1) {
      IntMatrix b(d - 1, d - 1);
      for (std::size_t j = 0; j < fpts.size(); ++j)
        for (std::size_t i = 0; i + 1 < d; ++i) b.at(i, j) = fpts[j][i];
      Int det = determinant(b);
      if (det != 1 && det != -1)
        out.push_back(fat + ": facet points are not a lattice basis");
    } else if (fpts.size() == d) {
      try {
        if (circuit_relations(fpts).empty())
          out.push_back(fat + ": circuit facet admits no relation");
      } catch (const DegeneracyError&) {
        out.push_back(fat + ": circuit facet is degenerate");
      }
    } else {
      out.push_back(fat + ": " + std::to_string(fpts.size()) +
                    " lattice points, expected " + std::to_string(d - 1) +
                    " or " + std::to_string(d));
    }
  }
  return out;
}

}  // namespace

SuiteReport verify(const LatticePolytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  bool simplicial = true;
  for (const auto& f : p.facets())
    if (f.vertex_indices.size() != d) simplicial = false;
  if (!p.is_reflexive() || !simplicial)
    throw ValidationError("the theorem suite covers simplicial reflexive polytopes");

  SuiteReport r = empty_report();
  const auto& vs = p.vertices();
  const bool fano = p.is_fano();
  const bool simplex = vs.size() == d + 1;
  const Int dd = d;

  // pairing of every facet normal against every vertex; denominators are 1
  std::vector<std::vector<Int>> pairing(p.facets().size());
  for (std::size_t fi = 0; fi < p.facets().size(); ++fi) {
    pairing[fi].reserve(vs.size());
    for (const auto& v : vs) pairing[fi].push_back(dot(p.facets()[fi].normal, v));
  }

  // facets whose total pairing above zero stays within d
  std::vector<std::size_t> witness;
  for (std::size_t fi = 0; fi < pairing.size(); ++fi) {
    Int excess = 0;
    for (const auto& t : pairing[fi])
      if (t >= 1) excess += t;
    if (excess <= dd) witness.push_back(fi);
  }
  record(r.checks[kLowExcess], !witness.empty(),
         "every facet has pairing excess above " + std::to_string(d));

  for (auto fi : witness) {
    Int far = 0;
    for (const auto& t : pairing[fi]) far = std::max(far, Int(t + 1));
    record(r.checks[kDistanceBound], far <= dd + 1,
           "facet " + vec_str(p.facets()[fi].normal) + ": distance " + far.str());
    // with w the farthest distance from this facet, at most 3d + 2 - w vertices
    Int bound = 3 * dd + 2 - far;
    record(r.checks[kFarthestVertex], Int(vs.size()) <= bound,
           "facet " + vec_str(p.facets()[fi].normal) + ": " +
               std::to_string(vs.size()) + " vertices, bound " + bound.str());
  }

  // a facet with all vertices within distance d exists off the simplex
  std::size_t sharp = pairing.size();
  for (auto fi : witness) {
    bool near = true;
    for (const auto& t : pairing[fi])
      if (t + 1 > dd) near = false;
    if (near) {
      sharp = fi;
      break;
    }
  }
  if (fano && !simplex)
    record(r.checks[kSharpDistance], sharp != pairing.size(),
           "no low-excess facet keeps all vertices within distance " +
               std::to_string(d));

  for (std::size_t fi = 0; fi < pairing.size(); ++fi) {
    std::size_t zeros = 0;
    for (const auto& t : pairing[fi])
      if (t == 0) ++zeros;
    record(r.checks[kZeroPairing], zeros <= d,
           "facet " + vec_str(p.facets()[fi].normal) + ": " +
               std::to_string(zeros) + " vertices at pairing zero");
  }

  const std::size_t cap = d % 2 == 0 ? 3 * d : 3 * d - 1;
  record(r.checks[kVertexBound], vs.size() <= cap,
         std::to_string(vs.size()) + " vertices, cap " + std::to_string(cap));

  if (fano && d >= 2)
    for (const auto& v : vs) {
      auto fails = projection_failures(p, v);
      if (fails.empty()) {
        ++r.checks[kProjections].passed;
      } else {
        ++r.checks[kProjections].failed;
        for (auto& m : fails)
          r.checks[kProjections].failures.push_back(std::move(m));
      }
    }

  if (fano && !simplex) {
    if (sharp == pairing.size()) {
      record(r.checks[kDualEdges], false, "no witness facet to measure at");
    } else {
      auto adj = p.facet_adjacency();
      auto lens = p.dual_edge_lengths();
      std::size_t edges = 0;
      bool short_enough = true;
      Int longest = 0;
      for (std::size_t i = 0; i < adj.size(); ++i)
        if (adj[i].first == sharp || adj[i].second == sharp) {
          ++edges;
          longest = std::max(longest, lens[i]);
          if (lens[i] > dd) short_enough = false;
        }
      record(r.checks[kDualEdges], edges == d && short_enough,
             "facet " + vec_str(p.facets()[sharp].normal) + ": " +
                 std::to_string(edges) + " dual edges, longest " + longest.str());
    }
  }

  if (fano && d <= 5)
    record(r.checks[kEmbedding], ewald_basis(p).has_value(),
           "no d lattice points of the dual form a symmetric basis");

  return r;
}

SuiteReport verify_all(const ClassList& list, std::size_t jobs) {
  std::vector<SuiteReport> parts(list.entries.size());
  parallel_for(list.entries.size(), jobs,
               [&](std::size_t i) { parts[i] = verify(list.entries[i]); });
  SuiteReport r = empty_report();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string& key = i < list.keys.size() ? list.keys[i] : "";
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      r.checks[c].passed += parts[i].checks[c].passed;
      r.checks[c].failed += parts[i].checks[c].failed;
      for (const auto& m : parts[i].checks[c].failures)
        r.checks[c].failures.push_back("[" + key + "] " + m);
    }
  }
  return r;
}

std::vector<PolytopeReport> class_reports(const ClassList& list,
                                          std::size_t jobs) {
  std::vector<PolytopeReport> rows(list.entries.size());
  parallel_for(list.entries.size(), jobs,
               [&](std::size_t i) { rows[i] = report(list.entries[i]); });
  return rows;
}

namespace {

void count_max(Extremum& e, const Int& value) {
  if (e.count == 0 || value > e.value) {
    e.value = value;
    e.count = 1;
  } else if (value == e.value) {
    ++e.count;
  }
}

}  // namespace

Summary summarize(const ClassList& list) {
  Summary s;
  s.dim = list.dim;
  s.classes = list.entries.size();
  std::map<std::size_t, std::size_t> ph, eh;
  for (const auto& row : class_reports(list)) {
    count_max(s.degree, row.degree);
    count_max(s.h0, Int(row.h0));
    count_max(s.picard, Int(row.picard));
    count_max(s.euler, Int(row.facet_count));
    count_max(s.edge, row.max_edge);
    ++ph[row.picard];
    ++eh[row.facet_count];
  }
  s.picard_histogram.assign(ph.begin(), ph.end());
  s.euler_histogram.assign(eh.begin(), eh.end());
  return s;
}

std::string csv_report(const std::vector<PolytopeReport>& rows) {
  std::ostringstream os;
  os << "key,dim,vertices,facets,picard,degree,h0,max_edge,index,ewald\n";
  for (const auto& r : rows)
    os << '"' << r.key << "\"," << r.dim << "," << r.vertex_count << ","
       << r.facet_count << "," << r.picard << "," << r.degree << "," << r.h0
       << "," << r.max_edge << "," << r.index << ","
       << (r.ewald ? "true" : "false") << "\n";
  return os.str();
}

namespace {

std::string classes_word(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " class" : " classes");
}

void histogram_line(std::ostringstream& os, const char* label,
                    const std::vector<std::pair<std::size_t, std::size_t>>& h) {
  os << label;
  for (const auto& [value, count] : h) os << " " << value << ":" << count;
  os << "\n";
}

}  // namespace

std::string summary_table(const Summary& s) {
  std::ostringstream os;
  os << "dimension " << s.dim << ": " << classes_word(s.classes) << "\n";
  if (s.classes == 0) return os.str();
  os << "  max degree    " << s.degree.value << " (" << classes_word(s.degree.count)
     << ")\n";
  os << "  max h0        " << s.h0.value << " (" << classes_word(s.h0.count)
     << ")\n";
  os << "  max picard    " << s.picard.value << " ("
     << classes_word(s.picard.count) << ")\n";
  os << "  max euler     " << s.euler.value << " (" << classes_word(s.euler.count)
     << ")\n";
  os << "  max dual edge " << s.edge.value << " (" << classes_word(s.edge.count)
     << ")\n";
  histogram_line(os, "  picard histogram:", s.picard_histogram);
  histogram_line(os, "  euler histogram: ", s.euler_histogram);
  return os.str();
}

}  // namespace fano
