#include "fano/polytope.hpp"
#include <functional>
#include <limits>

#include <algorithm>
#include <map>
#include <set>

namespace fano {

namespace {

struct VecLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return compare_vec(a, b) < 0;
  }
};

// Affine rank of a point set: dimension of its affine hull.
std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVector> diffs;
  diffs.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return rank(IntMatrix::from_rows(diffs));
}

long long to_ll(const Int& x) {
  if (x < std::numeric_limits<long long>::min() ||
      x > std::numeric_limits<long long>::max())
    throw DomainError("coordinate out of machine range");
  return x.convert_to<long long>();
}

// Next ascending index combination; false when exhausted.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dim,
                                             const std::vector<IntVector>& pts) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  if (pts.empty()) throw DimensionError("no points");
  for (const auto& p : pts)
    if (p.size() != static_cast<std::size_t>(dim))
      throw DimensionError("point dimension mismatch");

  std::vector<IntVector> ps = pts;
  std::sort(ps.begin(), ps.end(), VecLess{});
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  const std::size_t n = ps.size();
  const std::size_t d = static_cast<std::size_t>(dim);

  if (affine_rank(ps) != d) throw DimensionError("points do not span the space");

  // Supporting-plane scan: every facet contains d affinely independent
  // points, so enumerating all d-subsets finds every facet.
  std::map<IntVector, std::pair<Int, std::vector<std::size_t>>, VecLess> found;
  std::set<IntVector, VecLess> tried;
  std::vector<std::size_t> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  do {
    IntMatrix diffs(d - 1, d);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      const IntVector& a = ps[comb[r + 1]];
      const IntVector& base = ps[comb[0]];
      for (std::size_t c = 0; c < d; ++c) diffs.at(r, c) = a[c] - base[c];
    }
    auto eta = kernel_primitive_opt(diffs);
    if (!eta) continue;
    if (!tried.insert(*eta).second) continue;

    // Each primitive direction supports the hull on two sides; either side
    // is a facet exactly when its contact set is (d-1)-dimensional.
    std::vector<Int> vals(n);
    Int mn = dot(*eta, ps[0]), mx = mn;
    vals[0] = mn;
    for (std::size_t i = 1; i < n; ++i) {
      vals[i] = dot(*eta, ps[i]);
      if (vals[i] < mn) mn = vals[i];
      if (vals[i] > mx) mx = vals[i];
    }
    for (int side = 0; side < 2; ++side) {
      const Int& level = side == 0 ? mn : mx;
      std::vector<std::size_t> incident;
      std::vector<IntVector> contact;
      for (std::size_t i = 0; i < n; ++i) {
        if (vals[i] == level) {
          incident.push_back(i);
          contact.push_back(ps[i]);
        }
      }
      if (incident.size() < d || affine_rank(contact) != d - 1) continue;
      IntVector inner = side == 0 ? *eta : negate(*eta);
      Int q = side == 0 ? Int(-level) : level;
      found.emplace(std::move(inner), std::make_pair(std::move(q), std::move(incident)));
    }
  } while (next_combination(comb, n));

  for (const auto& [normal, fq] : found)
    if (fq.first <= 0) throw InteriorityError("origin is not strictly interior");

  // A point is a vertex iff its incident facet normals span the space.
  std::vector<char> is_vertex(n, 0);
  std::vector<std::vector<IntVector>> normals_at(n);
  for (const auto& [normal, fq] : found)
    for (std::size_t i : fq.second) normals_at[i].push_back(normal);
  for (std::size_t i = 0; i < n; ++i) {
    if (normals_at[i].size() < d) continue;
    if (rank(IntMatrix::from_rows(normals_at[i])) == d) is_vertex[i] = 1;
  }

  std::vector<std::size_t> new_index(n, SIZE_MAX);
  LatticePolytope poly;
  poly.dim_ = dim;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_vertex[i]) continue;
    new_index[i] = poly.vertices_.size();
    poly.vertices_.push_back(ps[i]);
  }
  for (auto& [normal, fq] : found) {
    Facet f;
    f.normal = normal;
    f.denominator = fq.first;
    for (std::size_t i : fq.second)
      if (new_index[i] != SIZE_MAX) f.vertex_indices.push_back(new_index[i]);
    poly.facets_.push_back(std::move(f));
  }
  return poly;
}

bool LatticePolytope::contains(const IntVector& x) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) < -f.denominator) return false;
  return true;
}

bool LatticePolytope::is_reflexive() const {
  for (const auto& f : facets_)
    if (f.denominator != 1) return false;
  return true;
}

bool LatticePolytope::is_fano() const {
  const std::size_t d = static_cast<std::size_t>(dim_);
  for (const auto& f : facets_) {
    if (f.vertex_indices.size() != d) return false;
    IntMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m.at(r, c) = vertices_[f.vertex_indices[r]][c];
    Int det = determinant(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

LatticePolytope LatticePolytope::dual() const {
  if (!is_reflexive()) throw ReflexivityError("dual requires a reflexive polytope");
  std::vector<IntVector> normals;
  normals.reserve(facets_.size());
  for (const auto& f : facets_) normals.push_back(f.normal);
  return from_points(dim_, normals);
}

std::vector<IntVector> LatticePolytope::lattice_points() const {
  const std::size_t d = static_cast<std::size_t>(dim_);
  std::vector<long long> lo(d), hi(d);
  for (std::size_t c = 0; c < d; ++c) {
    Int mn = vertices_[0][c], mx = vertices_[0][c];
    for (const auto& v : vertices_) {
      if (v[c] < mn) mn = v[c];
      if (v[c] > mx) mx = v[c];
    }
    lo[c] = to_ll(mn);
    hi[c] = to_ll(mx);
  }
  std::vector<IntVector> out;
  std::vector<long long> cur(lo);
  for (;;) {
    IntVector x(d);
    for (std::size_t c = 0; c < d; ++c) x[c] = cur[c];
    if (contains(x)) out.push_back(std::move(x));
    std::size_t c = d;
    while (c > 0) {
      --c;
      if (cur[c] < hi[c]) {
        ++cur[c];
        for (std::size_t j = c + 1; j < d; ++j) cur[j] = lo[j];
        break;
      }
      if (c == 0) return out;
    }
  }
}

namespace {

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

Int LatticePolytope::normalized_volume() const {
  const std::size_t d = static_cast<std::size_t>(dim_);

  // Pulling triangulation of a face given by ascending vertex indices:
  // cone from the lex-smallest vertex over the recursively triangulated
  // subfaces that miss it. Subfaces are cut out by the polytope's facets.
  auto points_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<IntVector> ps;
    ps.reserve(idx.size());
    for (std::size_t i : idx) ps.push_back(vertices_[i]);
    return ps;
  };
  std::function<void(const std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
      triangulate = [&](const std::vector<std::size_t>& face,
                        std::vector<std::vector<std::size_t>>& out) {
        std::size_t k = affine_rank(points_of(face));
        if (face.size() == k + 1) {
          out.push_back(face);
          return;
        }
        std::size_t apex = face[0];
        std::set<std::vector<std::size_t>> subfaces;
        for (const auto& g : facets_) {
          auto common = intersect_sorted(face, g.vertex_indices);
          if (common.size() == face.size() || common.empty()) continue;
          if (affine_rank(points_of(common)) == k - 1) subfaces.insert(common);
        }
        for (const auto& b : subfaces) {
          if (std::binary_search(b.begin(), b.end(), apex)) continue;
          std::vector<std::vector<std::size_t>> sub;
          triangulate(b, sub);
          for (auto& s : sub) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
          }
        }
      };

  Int total = 0;
  for (const auto& f : facets_) {
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(f.vertex_indices, simplices);
    for (const auto& s : simplices) {
      IntMatrix m(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m.at(r, c) = vertices_[s[r]][c];
      Int det = determinant(m);
      total += det < 0 ? Int(-det) : det;
    }
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticePolytope::facet_adjacency()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim_ == 1) {
    out.emplace_back(0, 1);
    return out;
  }
  const std::size_t k = static_cast<std::size_t>(dim_);
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = i + 1; j < facets_.size(); ++j) {
      auto common = intersect_sorted(facets_[i].vertex_indices,
                                     facets_[j].vertex_indices);
      if (common.size() + 1 < k) continue;
      std::vector<IntVector> ps;
      for (std::size_t c : common) ps.push_back(vertices_[c]);
      if (affine_rank(ps) == k - 2) out.emplace_back(i, j);
    }
  return out;
}

std::vector<Int> LatticePolytope::dual_edge_lengths() const {
  std::vector<Int> out;
  for (const auto& [i, j] : facet_adjacency())
    out.push_back(gcd_all(sub(facets_[i].normal, facets_[j].normal)));
  return out;
}

std::size_t LatticePolytope::vertex_index(const IntVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             [](const IntVector& a, const IntVector& b) {
                               return compare_vec(a, b) < 0;
                             });
  if (it == vertices_.end() || compare_vec(*it, v) != 0)
    throw DomainError("not a vertex of the polytope");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Int integral_distance(const Facet& f, const IntVector& x) {
  return dot(f.normal, x) + f.denominator;
}

ProjectionResult project_along_vertex(const LatticePolytope& p, const IntVector& v) {
  p.vertex_index(v);  // throws DomainError if v is not a vertex
  const std::size_t d = static_cast<std::size_t>(p.dim());
  if (d < 2) throw DimensionError("projection needs dimension at least 2");

  UnimodularMap u = complete_to_basis(v);
  auto project = [&](const IntVector& x) {
    IntVector y = u.apply(x);
    y.pop_back();
    return y;
  };

  std::vector<IntVector> images;
  images.reserve(p.vertices().size());
  for (const auto& x : p.vertices()) images.push_back(project(x));

  LatticePolytope image = [&] {
    try {
      return LatticePolytope::from_points(p.dim() - 1, images);
    } catch (const UserError& e) {
      throw InternalInvariantError(std::string("projection image invalid: ") +
                                   e.what());
    }
  }();
  if (!image.is_reflexive())
    throw InternalInvariantError("projection image is not reflexive");

  std::map<IntVector, std::vector<IntVector>, VecLess> fibers;
  for (const auto& x : image.lattice_points()) fibers[x] = {};
  for (const auto& x : p.vertices()) {
    auto it = fibers.find(project(x));
    if (it == fibers.end())
      throw InternalInvariantError("vertex projects outside the image lattice");
    it->second.push_back(x);
  }

  ProjectionResult res{std::move(image), v, std::move(u), {}};
  for (auto& [pt, fib] : fibers) {
    std::sort(fib.begin(), fib.end(), VecLess{});
    if (fib.empty())
      throw InternalInvariantError("image lattice point with no vertex above it");
    if (fib.size() > 2)
      throw InternalInvariantError("projection fiber with more than two vertices");
    if (is_zero(pt)) {
      for (const auto& x : fib)
        if (compare_vec(x, v) != 0 && compare_vec(x, negate(v)) != 0)
          throw InternalInvariantError("zero fiber outside {v, -v}");
    } else if (fib.size() == 2) {
      IntVector diff = sub(fib[1], fib[0]);
      if (compare_vec(diff, v) != 0 && compare_vec(diff, negate(v)) != 0)
        throw InternalInvariantError("double point fiber does not differ by v");
    }
    res.fibers.emplace_back(pt, std::move(fib));
  }
  return res;
}

}  // namespace fano
