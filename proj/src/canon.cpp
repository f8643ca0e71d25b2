#include "fano/canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace fano {

IntMatrix pairing_matrix(const LatticePolytope& p) {
  const auto& vs = p.vertices();
  const auto& fs = p.facets();
  IntMatrix m(fs.size(), vs.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      m.at(i, j) = dot(fs[i].normal, vs[j]);
  return m;
}

namespace {

using Blocks = std::vector<std::vector<std::size_t>>;

int compare_ints(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

// Finds every column order tau participating in the lex-maximal row-major
// reading of m under simultaneous row and column permutation. Columns are kept
// as an ordered partition: within a block the order is still undecided, and
// committing a row sorts each block's entries descending, splitting it by
// value. A full reading is maximal iff every committed row was, per level, as
// large as the constraints allowed, so branching is restricted to rows whose
// block-sorted signature ties for the level maximum; since ties can refine the
// partition differently, complete readings are still compared against the best
// leaf seen so far and the collected taus reset whenever a leaf improves it.
class MaxReadingSearch {
 public:
  explicit MaxReadingSearch(const IntMatrix& m) : m_(m), used_(m.rows(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    Blocks all(1);
    all[0].resize(m_.cols());
    for (std::size_t j = 0; j < m_.cols(); ++j) all[0][j] = j;
    path_.clear();
    best_.clear();
    dfs(0, all);
    return std::vector<std::vector<std::size_t>>(taus_.begin(), taus_.end());
  }

 private:
  std::vector<Int> signature(std::size_t r, const Blocks& blocks) const {
    std::vector<Int> s;
    s.reserve(m_.cols());
    for (const auto& b : blocks) {
      std::size_t base = s.size();
      for (auto c : b) s.push_back(m_.at(r, c));
      std::sort(s.begin() + base, s.end(), std::greater<Int>());
    }
    return s;
  }

  Blocks refine(std::size_t r, const Blocks& blocks) const {
    Blocks out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) {
      if (b.size() == 1) {
        out.push_back(b);
        continue;
      }
      std::map<Int, std::vector<std::size_t>, std::greater<Int>> groups;
      for (auto c : b) groups[m_.at(r, c)].push_back(c);
      for (auto& [val, g] : groups) out.push_back(std::move(g));
    }
    return out;
  }

  void dfs(std::size_t depth, const Blocks& blocks) {
    const std::size_t n = m_.cols();
    if (depth == m_.rows()) {
      int cmp = best_.empty() ? 1 : compare_ints(path_, best_);
      if (cmp > 0) {
        best_ = path_;
        taus_.clear();
      }
      if (cmp >= 0) {
        std::vector<std::size_t> tau;
        tau.reserve(n);
        for (const auto& b : blocks) {
          if (b.size() != 1)
            throw InternalInvariantError("normal form: equal pairing columns");
          tau.push_back(b[0]);
        }
        taus_.insert(std::move(tau));
      }
      return;
    }
    std::vector<std::size_t> cand;
    std::vector<Int> top;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (used_[r]) continue;
      auto s = signature(r, blocks);
      if (cand.empty()) {
        top = std::move(s);
        cand.push_back(r);
        continue;
      }
      int c = compare_ints(s, top);
      if (c > 0) {
        top = std::move(s);
        cand.assign(1, r);
      } else if (c == 0) {
        cand.push_back(r);
      }
    }
    // a complete reading below this node starts with path_ + top; prune if
    // that prefix already falls short of the best leaf
    if (!best_.empty()) {
      path_.insert(path_.end(), top.begin(), top.end());
      bool worse = compare_ints(path_, best_) < 0;
      path_.resize(path_.size() - n);
      if (worse) return;
    }
    for (auto r : cand) {
      used_[r] = true;
      path_.insert(path_.end(), top.begin(), top.end());
      dfs(depth + 1, refine(r, blocks));
      path_.resize(path_.size() - n);
      used_[r] = false;
    }
  }

  const IntMatrix& m_;
  std::vector<bool> used_;
  std::vector<Int> path_;   // concatenated signatures along the current path
  std::vector<Int> best_;   // best complete reading seen so far
  std::set<std::vector<std::size_t>> taus_;
};

}  // namespace

NormalForm normal_form(const LatticePolytope& p) {
  auto m = pairing_matrix(p);
  auto taus = MaxReadingSearch(m).run();
  if (taus.empty()) throw InternalInvariantError("normal form: no column order");
  const std::size_t d = p.dim(), n = p.vertices().size();
  bool have = false;
  IntMatrix best;
  for (const auto& tau : taus) {
    IntMatrix v(d, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < d; ++i) v.at(i, j) = p.vertices()[tau[j]][i];
    auto h = hermite_normal_form(v).h;
    if (!have || h.lex_less(best)) {
      best = std::move(h);
      have = true;
    }
  }
  std::ostringstream key;
  key << d << " " << n << " ";
  for (std::size_t i = 0; i < best.rows(); ++i) {
    if (i) key << ";";
    for (std::size_t j = 0; j < best.cols(); ++j) {
      if (j) key << " ";
      key << best.at(i, j);
    }
  }
  return NormalForm{std::move(best), key.str()};
}

bool are_isomorphic(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size() ||
      a.facets().size() != b.facets().size())
    return false;
  return normal_form(a).key == normal_form(b).key;
}

LatticePolytope canonical_embedding(const NormalForm& nf) {
  std::vector<IntVector> pts;
  pts.reserve(nf.matrix.cols());
  for (std::size_t j = 0; j < nf.matrix.cols(); ++j) {
    IntVector v(nf.matrix.rows());
    for (std::size_t i = 0; i < nf.matrix.rows(); ++i) v[i] = nf.matrix.at(i, j);
    pts.push_back(std::move(v));
  }
  return LatticePolytope::from_points(static_cast<int>(nf.matrix.rows()), pts);
}

}  // namespace fano
