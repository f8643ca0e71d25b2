#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fano/intlin.hpp"

namespace fano {

// One facet of a full-dimensional lattice polytope with 0 in its interior:
// the points x of the polytope satisfy <normal, x> >= -denominator, with
// equality exactly on the facet. The normal is primitive and inward.
struct Facet {
  IntVector normal;
  Int denominator;                          // > 0 since 0 is interior
  std::vector<std::size_t> vertex_indices;  // ascending, into vertices()
};

// Full-dimensional lattice polytope containing the origin strictly in its
// interior. Vertices are stored lex-sorted, facets sorted by normal.
class LatticePolytope {
 public:
  // Deduplicates, discards non-vertices, derives the facet description.
  // Throws DimensionError if the points do not span dimension dim,
  // InteriorityError if the origin is not strictly interior.
  static LatticePolytope from_points(int dim, const std::vector<IntVector>& pts);

  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const IntVector& x) const;

  // All facets at lattice distance 1 (the dual is again a lattice polytope).
  bool is_reflexive() const;

  // Simplicial, reflexive, and every facet's vertices form a lattice basis.
  bool is_fano() const;

  // Vertices of the dual are the facet normals. Requires is_reflexive().
  LatticePolytope dual() const;

  // All lattice points of the polytope, lex-sorted (origin included).
  std::vector<IntVector> lattice_points() const;

  // dim! times the Euclidean volume, via cones over a pulling triangulation
  // of each facet (apex: lex-smallest vertex, recursively on faces).
  Int normalized_volume() const;

  // Pairs of facet indices meeting in a ridge, each pair ascending.
  std::vector<std::pair<std::size_t, std::size_t>> facet_adjacency() const;

  // Lattice lengths gcd(normal_F - normal_G) of the dual edges, one per
  // adjacent facet pair, in facet_adjacency() order.
  std::vector<Int> dual_edge_lengths() const;

  std::size_t vertex_index(const IntVector& v) const;  // throws DomainError

 private:
  LatticePolytope() = default;
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
};

// <normal, x> + denominator: 0 on the facet, positive inside.
Int integral_distance(const Facet& f, const IntVector& x);

struct ProjectionResult {
  LatticePolytope image;     // (d-1)-dimensional, reflexive
  IntVector projected_vertex;
  UnimodularMap transform;   // maps projected_vertex to e_d
  // (image lattice point, vertices of the source mapping there); outer list
  // sorted lex by image point, inner lists sorted lex.
  std::vector<std::pair<IntVector, std::vector<IntVector>>> fibers;
};

// Project a Fano polytope along one of its vertices v (quotient by Zv,
// realized by dropping the last coordinate after the basis change).
// Postconditions guaranteed for Fano input are enforced and raise
// InternalInvariantError on violation: reflexive image, every image lattice
// point covered by at least one vertex, fibers of size <= 2, a size-2 fiber
// differing by exactly +-v, zero fiber inside {v, -v}.
ProjectionResult project_along_vertex(const LatticePolytope& p, const IntVector& v);

}  // namespace fano
