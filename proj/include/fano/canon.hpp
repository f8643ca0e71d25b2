#pragma once

#include <string>

#include "fano/polytope.hpp"

namespace fano {

// Facet-vertex pairing matrix: entry (i, j) = <normal_i, vertex_j> in the
// deterministic constructor orders. For a reflexive polytope every entry is
// >= -1 and each row attains -1 exactly at the facet's vertices.
IntMatrix pairing_matrix(const LatticePolytope& p);

// Canonical representative of a lattice-isomorphism class. Two polytopes have
// equal keys exactly when a unimodular map carries one vertex set to the other.
struct NormalForm {
  IntMatrix matrix;  // d x n, columns are the canonically ordered vertices
  std::string key;   // "d n" then decimal entries, space separated, ';' rows
};

// Searches all row/column orders of the pairing matrix for the lex-maximal
// row-major reading (branch and bound over partial column refinements), then
// takes the lex-smallest left-HNF of the vertex matrix over the column orders
// that attain the maximum.
NormalForm normal_form(const LatticePolytope& p);

bool are_isomorphic(const LatticePolytope& a, const LatticePolytope& b);

// The polytope spanned by the normal-form columns: one fixed embedding per
// isomorphism class, so lists stay byte-stable however their members were found.
LatticePolytope canonical_embedding(const NormalForm& nf);

}  // namespace fano
