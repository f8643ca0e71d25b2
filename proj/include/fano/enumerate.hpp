#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fano/canon.hpp"
#include "fano/polytope.hpp"

namespace fano {

// One polytope per lattice-isomorphism class, sorted by normal-form key.
struct ClassList {
  std::size_t dim = 0;
  std::vector<LatticePolytope> entries;
  std::vector<std::string> keys;  // parallel to entries, pairwise distinct
};

// Dedups arbitrary polytopes by normal-form key into a sorted ClassList.
ClassList dedup_classes(std::size_t dim, std::vector<LatticePolytope> polytopes,
                        std::size_t* duplicates = nullptr);

// All reflexive classes for d <= 2, found by brute-force search over vertex
// sets drawn from the primitive points of [-3,3]^2 (d=2) and checked exactly;
// the d=2 result is asserted to have the known 16 classes.
ClassList reflexive_classes(std::size_t d);

// Independent brute-force catalogue of Fano polytopes for d <= 3: hulls of
// subsets of the nonzero points of {-1,0,1}^d, subset sizes d+1 .. 3d (even d)
// or 3d-1 (odd d). Serves as the ground truth the reconstruction pipeline is
// compared against.
ClassList fano_oracle(std::size_t d, std::size_t jobs = 1);

// Input filter for the d-dimensional reconstruction: p (reflexive, dim d-1)
// qualifies iff it has at most 3d-1 lattice points and every facet either is a
// unimodular simplex on d-1 lattice points or carries exactly d lattice points
// admitting a circuit relation.
bool admissible(const LatticePolytope& p, std::size_t d);

struct ImportResult {
  ClassList list;
  std::size_t duplicates = 0;  // blocks merged away by normal-form dedup
};

// Reads a vertex-block file, validates each block (full-dimensional, origin
// interior, reflexive), and dedups. transpose reads d rows by n columns.
ImportResult import_classes(const std::string& path, std::size_t dim,
                            bool transpose = false);

void export_classes(const ClassList& list, const std::string& path);

}  // namespace fano
