#pragma once

#include <cstddef>
#include <vector>

#include "fano/enumerate.hpp"
#include "fano/polytope.hpp"

namespace fano {

// Known Fano polytopes seeded directly: the simplex conv{e_1..e_d, -sum e_i}
// for every d, plus for even d the direct sum of d/2 hexagons (vertices of
// each factor embedded in its own coordinate block). Both are checked Fano.
std::vector<LatticePolytope> seed_polytopes(std::size_t d);

// sum_{i in lhs} p_i = sum_{j in rhs} k_j p_j with every k_j >= 1 and
// sum k = |lhs| = normalized volume of conv(points).
struct CircuitRelation {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
  std::vector<Int> k;  // parallel to rhs
};

// The 0, 1 or 2 relations of the above shape carried by d points whose affine
// hull has dimension d-2 (so the affine dependency is unique up to sign).
// Throws DegeneracyError when the dependency is not unique.
std::vector<CircuitRelation> circuit_relations(const std::vector<IntVector>& points);

// A choice of d-1 facet lattice points forming a lattice basis, with the map
// sending them to e_1..e_{d-1}. Unimodular facets contribute themselves;
// circuit facets contribute one choice per (relation, lhs member) pair.
struct BaseSimplex {
  std::size_t facet_index;
  std::vector<IntVector> points;  // lex order
  UnimodularMap transform;        // transform(points[i]) = e_{i+1}
};
std::vector<BaseSimplex> base_simplices(const LatticePolytope& p,
                                        std::size_t* skipped = nullptr);

// Lift heights for the transformed lattice points: -1 is pinned on 0 and on
// the basis points e_i, free points carry a value in {0..d-1}. Valid
// assignments have value sum <= d and at most d zeros.
struct KAssignment {
  std::vector<int> k;  // parallel to the transformed point list
};
std::vector<KAssignment> k_assignments(const std::vector<IntVector>& transformed,
                                       std::size_t d);

// One output point per input point: w' in Z^{d-1} with height h = k(w') goes
// to (w', -sum_i w'_i - h). The pinned heights send 0 to e_d and e_i to e_i.
std::vector<IntVector> lift(const std::vector<IntVector>& transformed,
                            const KAssignment& k);

struct Candidate {
  std::vector<IntVector> points;         // lifted points plus double-point extras
  std::vector<IntVector> double_points;  // chosen subset, in transformed coords
};

// All admissible double-point subsets S (|S| <= 3) applied to the lifted list:
// every point count stays within 3d-1; nonzero members avoid circuit facets;
// 0 is allowed only when every circuit facet has an all-ones relation; two
// nonzero members must be a pair s,-s whose lifts sum to e_d. Each nonzero s
// appends lift(s) - e_d, membership of 0 appends -e_d.
std::vector<Candidate> double_point_choices(const LatticePolytope& p,
                                            const std::vector<IntVector>& transformed,
                                            const std::vector<IntVector>& lifted);

struct ClassifyStats {
  std::size_t inputs = 0;            // reflexive classes received
  std::size_t admissible_inputs = 0;
  std::size_t bases = 0;
  std::size_t skipped_bases = 0;     // points not a lattice basis (defensive)
  std::size_t candidates = 0;
  std::size_t invalid_hulls = 0;     // origin not interior / degenerate
  std::size_t fano_hits = 0;         // candidates passing the Fano check
  std::size_t unique_classes = 0;
};

// Reconstructs every Fano d-polytope class from the complete reflexive
// (d-1)-class list: seeds plus all candidate hulls over admissible inputs,
// deduped by normal form, sorted by key. An incomplete input list yields an
// incomplete output.
ClassList classify(std::size_t d, const ClassList& reflexive,
                   ClassifyStats* stats = nullptr, std::size_t jobs = 1);

}  // namespace fano
