#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/enumerate.hpp"
#include "fano/polytope.hpp"

namespace fano {

// Numerical profile of one Fano class. All dual-side quantities exist since
// the polytope is reflexive.
struct PolytopeReport {
  std::string key;
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::size_t facet_count = 0;  // Euler characteristic of the toric variety
  std::size_t picard = 0;       // vertex_count - dim
  Int degree;                   // normalized volume of the dual
  std::size_t h0 = 0;           // lattice points of the dual
  Int max_edge;                 // longest edge of the dual
  Int index;                    // gcd of all dual-vertex coordinate differences
  bool ewald = false;           // an embedding basis into {-1,0,1}^d exists
};

PolytopeReport report(const LatticePolytope& p);

// Lattice points u of dual(p) with -u also a lattice point, d of which form a
// lattice basis; in that basis every vertex of p has coordinates in {-1,0,1}.
std::optional<std::vector<IntVector>> ewald_basis(const LatticePolytope& p);

// One structural theorem checked over many instances (facets, vertices, or
// whole polytopes, depending on the statement).
struct CheckResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // one witness description per failure
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t total_failed() const;
};

// Evaluates every structural bound the classification relies on against one
// simplicial reflexive polytope (ValidationError otherwise). A failure here
// means a bug, not bad input: the statements are theorems.
SuiteReport verify(const LatticePolytope& p);

// verify() over a whole class list; failure witnesses are prefixed with the
// class key. Result is independent of the worker count.
SuiteReport verify_all(const ClassList& list, std::size_t jobs = 1);

std::vector<PolytopeReport> class_reports(const ClassList& list,
                                          std::size_t jobs = 1);

struct Extremum {
  Int value;
  std::size_t count = 0;  // classes attaining the maximum
};

struct Summary {
  std::size_t dim = 0;
  std::size_t classes = 0;
  Extremum degree, h0, picard, euler, edge;
  // value -> number of classes, ascending by value
  std::vector<std::pair<std::size_t, std::size_t>> picard_histogram;
  std::vector<std::pair<std::size_t, std::size_t>> euler_histogram;
};

Summary summarize(const ClassList& list);

// CSV with header key,dim,vertices,facets,picard,degree,h0,max_edge,index,ewald
std::string csv_report(const std::vector<PolytopeReport>& rows);

std::string summary_table(const Summary& s);

}  // namespace fano
