#include "convexsym/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

namespace csym::hull {

namespace {

using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Frame {
  Vector center;
  double scale;
};

Frame frame_of(std::span<const Vector> points) {
  Vector c = Vector::Zero(points.front().size());
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  double r = 0.0;
  for (const auto& p : points) r = std::max(r, (p - c).norm());
  return {c, std::max(r, 1e-300)};
}

// Generalized cross product of the d - 1 edge vectors p_k - p_0. Its norm is
// (d - 1)! times the (d - 1)-volume of the simplex.
Vector simplex_normal(std::span<const Vector> points, std::span<const int> idx, int d) {
  SmallMatrix rows(d - 1, d);
  for (int k = 1; k < d; ++k) rows.row(k - 1) = (points[idx[k]] - points[idx[0]]).transpose();
  Vector n(d);
  if (d == 2) {
    n << rows(0, 1), -rows(0, 0);
    return n;
  }
  if (d == 3) {
    Eigen::Vector3d a = rows.row(0).transpose();
    Eigen::Vector3d b = rows.row(1).transpose();
    Eigen::Vector3d c = a.cross(b);
    n << c(0), c(1), c(2);
    return n;
  }
  for (int col = 0; col < d; ++col) {
    SmallMatrix minor(d - 1, d - 1);
    for (int r = 0; r < d - 1; ++r) {
      int mc = 0;
      for (int cc = 0; cc < d; ++cc) {
        if (cc == col) continue;
        minor(r, mc++) = rows(r, cc);
      }
    }
    double det = minor.determinant();
    n(col) = (col % 2 == 0) ? det : -det;
  }
  return n;
}

// Merges near-parallel facet normals and recomputes each offset as the
// maximum over the surviving vertices.
std::vector<Facet> merge_facets(std::vector<Vector> normals, std::span<const Vector> points,
                                std::span<const int> vertices) {
  std::vector<int> order(normals.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::lexicographical_compare(normals[a].data(), normals[a].data() + normals[a].size(),
                                        normals[b].data(), normals[b].data() + normals[b].size());
  });
  std::vector<Vector> reps;
  for (int i : order) {
    const Vector& n = normals[i];
    bool merged = false;
    for (int g = static_cast<int>(reps.size()) - 1; g >= 0; --g) {
      if (reps[g](0) < n(0) - kNormalMergeTol) break;
      if ((reps[g] - n).cwiseAbs().maxCoeff() < kNormalMergeTol) {
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(n);
  }
  std::vector<Facet> facets;
  facets.reserve(reps.size());
  for (auto& n : reps) {
    double b = -std::numeric_limits<double>::infinity();
    for (int v : vertices) b = std::max(b, n.dot(points[v]));
    facets.push_back({n, b});
  }
  return facets;
}

// A hull vertex is extreme iff the normals of the facets through it span R^d.
std::vector<int> extreme_only(std::span<const Vector> points, std::span<const int> vertices,
                              const std::vector<Facet>& facets, double incidence_tol, int d) {
  std::vector<int> keep;
  for (int v : vertices) {
    std::vector<Vector> basis;
    for (const auto& f : facets) {
      if (std::abs(f.normal.dot(points[v]) - f.offset) > incidence_tol) continue;
      Vector w = f.normal;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) w -= q.dot(w) * q;
      }
      double nw = w.norm();
      if (nw > 1e-10) basis.push_back(w / nw);
      if (static_cast<int>(basis.size()) == d) break;
    }
    if (static_cast<int>(basis.size()) == d) keep.push_back(v);
  }
  return keep;
}

double cross2(const Vector& o, const Vector& a, const Vector& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

}  // namespace

Result monotone_chain(std::span<const Vector> points) {
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (points[a](0) != points[b](0)) return points[a](0) < points[b](0);
    return points[a](1) < points[b](1);
  });
  auto turns_left = [&](int o, int a, int b) {
    double c = cross2(points[o], points[a], points[b]);
    double tol = kNormalMergeTol * (points[a] - points[o]).norm() * (points[b] - points[a]).norm();
    return c > tol;
  };
  std::vector<int> chain(2 * idx.size());
  int k = 0;
  for (int i : idx) {
    while (k >= 2 && !turns_left(chain[k - 2], chain[k - 1], i)) --k;
    chain[k++] = i;
  }
  for (int t = static_cast<int>(idx.size()) - 2, lower = k + 1; t >= 0; --t) {
    int i = idx[t];
    while (k >= lower && !turns_left(chain[k - 2], chain[k - 1], i)) --k;
    chain[k++] = i;
  }
  chain.resize(std::max(k - 1, 1));
  if (chain.size() < 3) throw InternalError("monotone_chain: input is not full rank");

  Result out;
  std::vector<Vector> normals;
  double area2 = 0.0;
  for (std::size_t e = 0; e < chain.size(); ++e) {
    const Vector& a = points[chain[e]];
    const Vector& b = points[chain[(e + 1) % chain.size()]];
    area2 += a(0) * b(1) - a(1) * b(0);
    Vector n(2);
    n << b(1) - a(1), a(0) - b(0);
    normals.push_back(n / n.norm());
  }
  out.volume = 0.5 * std::abs(area2);
  out.vertices = chain;
  std::sort(out.vertices.begin(), out.vertices.end());
  out.facets = merge_facets(std::move(normals), points, out.vertices);
  return out;
}

Result quickhull(std::span<const Vector> points, int d) {
  if (d < 2 || d > kMaxHullDim) throw UnsupportedDimension("quickhull: d outside [2, 4]");
  const int count = static_cast<int>(points.size());
  if (count < d + 1) throw InternalError("quickhull: too few points");
  const Frame frame = frame_of(points);
  const double eps = 1e-11 * frame.scale;

  // Initial simplex: lexicographic minimum, then repeatedly the point
  // farthest from the affine span of those chosen.
  std::vector<int> simplex;
  {
    int first = 0;
    for (int i = 1; i < count; ++i) {
      if (std::lexicographical_compare(points[i].data(), points[i].data() + d,
                                       points[first].data(), points[first].data() + d)) {
        first = i;
      }
    }
    simplex.push_back(first);
    std::vector<Vector> span_basis;
    while (static_cast<int>(simplex.size()) < d + 1) {
      int best = -1;
      double best_norm = 0.0;
      Vector best_w;
      for (int i = 0; i < count; ++i) {
        Vector w = points[i] - points[first];
        for (int pass = 0; pass < 2; ++pass) {
          for (const auto& q : span_basis) w -= q.dot(w) * q;
        }
        double nw = w.norm();
        if (nw > best_norm) {
          best_norm = nw;
          best = i;
          best_w = w;
        }
      }
      if (best < 0 || best_norm <= 1e-10 * frame.scale) {
        throw InternalError("quickhull: input is not full rank");
      }
      simplex.push_back(best);
      span_basis.push_back(best_w / best_norm);
    }
  }
  Vector interior = Vector::Zero(d);
  for (int i : simplex) interior += points[i];
  interior /= static_cast<double>(d + 1);

  struct SimplexFacet {
    std::array<int, kMaxHullDim> v{};
    Vector normal;
    double offset = 0.0;
    double raw_norm = 0.0;
    std::vector<int> outside;
    bool alive = true;
  };
  std::vector<SimplexFacet> facets;

  auto make_facet = [&](std::array<int, kMaxHullDim> v) {
    SimplexFacet f;
    f.v = v;
    Vector n = simplex_normal(points, std::span<const int>(f.v.data(), d), d);
    double len = n.norm();
    if (!(len > 0.0)) throw InternalError("quickhull: degenerate facet");
    n /= len;
    double b = n.dot(points[v[0]]);
    if (n.dot(interior) > b) {
      n = -n;
      b = -b;
    }
    f.normal = n;
    f.offset = b;
    f.raw_norm = len;
    return f;
  };

  for (int skip = 0; skip <= d; ++skip) {
    std::array<int, kMaxHullDim> v{};
    int k = 0;
    for (int i = 0; i <= d; ++i) {
      if (i != skip) v[k++] = simplex[i];
    }
    facets.push_back(make_facet(v));
  }

  std::vector<char> in_simplex(count, 0);
  for (int i : simplex) in_simplex[i] = 1;
  auto assign = [&](int p, std::size_t from) {
    for (std::size_t f = from; f < facets.size(); ++f) {
      if (!facets[f].alive) continue;
      if (facets[f].normal.dot(points[p]) - facets[f].offset > eps) {
        facets[f].outside.push_back(p);
        return;
      }
    }
  };
  for (int p = 0; p < count; ++p) {
    if (!in_simplex[p]) assign(p, 0);
  }

  using Ridge = std::array<int, kMaxHullDim - 1>;
  for (std::size_t current = 0; current < facets.size(); ++current) {
    if (!facets[current].alive || facets[current].outside.empty()) continue;

    int eye = -1;
    double far = -1.0;
    for (int p : facets[current].outside) {
      double dist = facets[current].normal.dot(points[p]) - facets[current].offset;
      if (dist > far) {
        far = dist;
        eye = p;
      }
    }

    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].alive && facets[f].normal.dot(points[eye]) - facets[f].offset > eps) {
        visible.push_back(f);
      }
    }

    std::map<Ridge, int> ridge_count;
    for (std::size_t f : visible) {
      for (int drop = 0; drop < d; ++drop) {
        Ridge r{};
        int k = 0;
        for (int i = 0; i < d; ++i) {
          if (i != drop) r[k++] = facets[f].v[i];
        }
        std::sort(r.begin(), r.begin() + (d - 1));
        ++ridge_count[r];
      }
    }

    std::vector<int> orphans;
    for (std::size_t f : visible) {
      facets[f].alive = false;
      for (int p : facets[f].outside) {
        if (p != eye) orphans.push_back(p);
      }
      facets[f].outside.clear();
      facets[f].outside.shrink_to_fit();
    }

    const std::size_t first_new = facets.size();
    for (const auto& [ridge, seen] : ridge_count) {
      if (seen != 1) continue;
      std::array<int, kMaxHullDim> v{};
      for (int i = 0; i < d - 1; ++i) v[i] = ridge[i];
      v[d - 1] = eye;
      facets.push_back(make_facet(v));
    }
    for (int p : orphans) assign(p, first_new);
  }

  Result out;
  std::vector<Vector> normals;
  std::vector<char> used(count, 0);
  const double simplex_factor = factorial(d - 1) * d;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    for (int i = 0; i < d; ++i) used[f.v[i]] = 1;
    out.volume += (f.offset - f.normal.dot(interior)) * f.raw_norm / simplex_factor;
    normals.push_back(f.normal);
  }
  std::vector<int> verts;
  for (int i = 0; i < count; ++i) {
    if (used[i]) verts.push_back(i);
  }
  auto merged = merge_facets(std::move(normals), points, verts);
  out.vertices = extreme_only(points, verts, merged, 1e-9 * frame.scale, d);
  out.facets = merge_facets([&] {
    std::vector<Vector> ns;
    for (const auto& f : merged) ns.push_back(f.normal);
    return ns;
  }(), points, out.vertices);
  return out;
}

Result full_rank_hull(std::span<const Vector> points, int d) {
  if (points.empty()) throw InvalidInput("hull of an empty point set");
  if (d == 1) {
    int lo = 0;
    int hi = 0;
    for (int i = 1; i < static_cast<int>(points.size()); ++i) {
      if (points[i](0) < points[lo](0)) lo = i;
      if (points[i](0) > points[hi](0)) hi = i;
    }
    Result out;
    out.vertices = {std::min(lo, hi), std::max(lo, hi)};
    out.facets = {{make_vector({-1.0}), -points[lo](0)}, {make_vector({1.0}), points[hi](0)}};
    out.volume = points[hi](0) - points[lo](0);
    return out;
  }
  if (d == 2) return monotone_chain(points);
  return quickhull(points, d);
}

}  // namespace csym::hull
