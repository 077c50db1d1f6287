#include "prymsv/flatcount.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

namespace prymsv {

namespace {

constexpr double kEps = 1e-10;

int next(int k) { return (k + 1) % 3; }
int prev(int k) { return (k + 2) % 3; }

double corner_angle(const std::array<Vec2, 3>& e, int k) {
  Vec2 a = e[k];
  Vec2 b = -e[prev(k)];
  return std::atan2(cross(a, b), dot(a, b));
}

double max_edge(const FlatSurface& s) {
  double m = 0;
  for (const auto& t : s.edges)
    for (const auto& v : t) m = std::max(m, norm(v));
  return m;
}

double dist_to_segment(Vec2 p, Vec2 q) {
  Vec2 d = q - p;
  double len2 = dot(d, d);
  double s = len2 > 0 ? std::clamp(-dot(p, d) / len2, 0.0, 1.0) : 0.0;
  return norm(p + s * d);
}

// Distance from the origin to the part of segment [rt, l] inside the wedge (dr, dl).
double clipped_distance(Vec2 rt, Vec2 l, Vec2 dr, Vec2 dl) {
  Vec2 d = l - rt;
  double lo = 0, hi = 1;
  auto clip = [&](double f0, double slope) {
    // keep s with f0 + s * slope >= 0
    if (std::abs(slope) < 1e-300) {
      if (f0 < 0) lo = 2;
      return;
    }
    double root = -f0 / slope;
    if (slope > 0)
      lo = std::max(lo, root);
    else
      hi = std::min(hi, root);
  };
  clip(cross(dr, rt), cross(dr, d));
  clip(cross(rt, dl), cross(d, dl));
  if (lo > hi) return dist_to_segment(rt, l);
  return dist_to_segment(rt + lo * d, rt + hi * d);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

void glue(FlatSurface& s, EdgeRef x, EdgeRef y) {
  s.gluing[x.tri][x.edge] = y;
  s.gluing[y.tri][y.edge] = x;
}

bool angle_less(Vec2 u, Vec2 v) { return std::atan2(u.y, u.x) < std::atan2(v.y, v.x); }

}  // namespace

double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }
double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }
double norm(Vec2 v) { return std::hypot(v.x, v.y); }

LatticeBasis reduce_basis(Vec2 u, Vec2 v) {
  if (std::abs(cross(u, v)) < 1e-300)
    fail(ErrorCode::InvalidArgument, "degenerate lattice basis");
  if (dot(u, u) > dot(v, v)) std::swap(u, v);
  for (;;) {
    v = v - std::round(dot(u, v) / dot(u, u)) * u;
    if (dot(v, v) >= dot(u, u)) break;
    std::swap(u, v);
  }
  if (cross(u, v) < 0) v = -v;
  return {u, v};
}

double systole(const LatticeBasis& b) { return std::min(norm(b.u), norm(b.v)); }

namespace {

std::array<LatticeBasis, 3> torus_bases(const TripleProto& p) {
  if (!is_valid(p)) fail(ErrorCode::InvalidPrototype, "invalid triple prototype");
  double lambda = (p.e + std::sqrt(static_cast<double>(p.D))) / 2;
  LatticeBasis x0 = reduce_basis({lambda, 0}, {0, lambda});
  LatticeBasis x1 = reduce_basis({static_cast<double>(p.a), 0},
                                 {static_cast<double>(p.b), static_cast<double>(p.d)});
  return {x0, x1, x1};
}

}  // namespace

Vec2 default_slit(const TripleProto& p) {
  auto bases = torus_bases(p);
  double sys = std::min({systole(bases[0]), systole(bases[1]), systole(bases[2])});
  Vec2 dir{1 / std::numbers::pi, 1 / std::numbers::e};
  return (0.05 * sys / norm(dir)) * dir;
}

FlatSurface build_slit_triple(const TripleProto& p, Vec2 t) {
  auto bases = torus_bases(p);
  double tl = norm(t);
  if (tl == 0 || !std::isfinite(tl))
    fail(ErrorCode::DegenerateDirection, "slit vector must be non-zero");
  FlatSurface s;
  s.edges.resize(12);
  s.gluing.resize(12);
  s.vertex.resize(12);
  std::array<EdgeRef, 3> slit_a, slit_b;
  for (int i = 0; i < 3; ++i) {
    const LatticeBasis& b = bases[i];
    if (tl >= systole(b) / 2)
      fail(ErrorCode::SlitTooLong, "slit must be shorter than half the systole");
    for (int m = -5; m <= 5; ++m)
      for (int n = -5; n <= 5; ++n) {
        if (m == 0 && n == 0) continue;
        Vec2 w = m * b.u + n * b.v;
        if (std::abs(cross(t, w)) <= 1e-9 * tl * norm(w))
          fail(ErrorCode::DegenerateDirection, "slit is parallel to a short lattice vector");
      }
    double det = cross(b.u, b.v);
    double alpha = cross(t, b.v) / det;
    double beta = cross(b.u, t) / det;
    if (std::abs(alpha) >= 1 || std::abs(beta) >= 1)
      fail(ErrorCode::SlitTooLong, "slit leaves the fundamental domain");
    double qa = alpha < 0 ? alpha + 1 : alpha;
    double qb = beta < 0 ? beta + 1 : beta;
    int ca = alpha < 0 ? 1 : 0;
    int cb = beta < 0 ? 1 : 0;
    Vec2 corners[4] = {{0, 0}, b.u, b.u + b.v, b.v};
    Vec2 q = qa * b.u + qb * b.v;
    int j = ca == 0 ? (cb == 0 ? 0 : 3) : (cb == 0 ? 1 : 2);
    for (int k = 0; k < 4; ++k) {
      int T = 4 * i + k;
      Vec2 c0 = corners[k], c1 = corners[(k + 1) % 4];
      s.edges[T] = {c1 - c0, q - c1, c0 - q};
    }
    for (int k = 0; k < 4; ++k) glue(s, {4 * i + k, 1}, {4 * i + (k + 1) % 4, 2});
    glue(s, {4 * i, 0}, {4 * i + 2, 0});
    glue(s, {4 * i + 1, 0}, {4 * i + 3, 0});
    slit_a[i] = {4 * i + (j + 3) % 4, 1};
    slit_b[i] = {4 * i + j, 2};
  }
  for (int i = 0; i < 3; ++i) glue(s, slit_a[i], slit_b[(i + 1) % 3]);
  s.area = 0;
  for (const auto& e : s.edges) s.area += cross(e[0], e[1]) / 2;
  rebuild_vertices(s);
  return s;
}

void rebuild_vertices(FlatSurface& s) {
  int n = s.num_triangles();
  UnionFind uf(3 * n);
  for (int T = 0; T < n; ++T)
    for (int k = 0; k < 3; ++k) {
      EdgeRef g = s.gluing[T][k];
      uf.unite(3 * T + k, 3 * g.tri + next(g.edge));
      uf.unite(3 * T + next(k), 3 * g.tri + g.edge);
    }
  std::map<int, int> ids;
  s.cone_points.clear();
  for (int T = 0; T < n; ++T)
    for (int k = 0; k < 3; ++k) {
      int root = uf.find(3 * T + k);
      auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
      if (fresh) s.cone_points.push_back({it->second, 0});
      s.vertex[T][k] = it->second;
      s.cone_points[it->second].angle_pi += corner_angle(s.edges[T], k) / std::numbers::pi;
    }
}

bool InvariantReport::ok() const {
  return edge_sums && gluing_involution && gluing_opposite && orientation && angles &&
         gauss_bonnet;
}

InvariantReport check_invariants(const FlatSurface& s) {
  InvariantReport r;
  double tol = 1e-12 * std::max(1.0, max_edge(s));
  int n = s.num_triangles();
  r.edge_sums = r.gluing_involution = r.gluing_opposite = r.orientation = true;
  for (int T = 0; T < n; ++T) {
    const auto& e = s.edges[T];
    if (norm(e[0] + e[1] + e[2]) > tol) r.edge_sums = false;
    if (cross(e[0], e[1]) <= 0) r.orientation = false;
    for (int k = 0; k < 3; ++k) {
      EdgeRef g = s.gluing[T][k];
      if (g.tri < 0 || g.tri >= n || g.edge < 0 || g.edge > 2) {
        r.gluing_involution = false;
        continue;
      }
      if (!(s.glued(g) == EdgeRef{T, k}) || (g == EdgeRef{T, k})) r.gluing_involution = false;
      if (norm(e[k] + s.edges[g.tri][g.edge]) > tol) r.gluing_opposite = false;
    }
  }
  r.angles = true;
  r.excess_pi = 0;
  for (const auto& c : s.cone_points) {
    bool regular = std::abs(c.angle_pi - 2) < 1e-9;
    bool zero = std::abs(c.angle_pi - 6) < 1e-9;
    if (zero) ++r.zeros;
    if (!regular && !zero) r.angles = false;
    r.excess_pi += c.angle_pi - 2;
  }
  int V = static_cast<int>(s.cone_points.size());
  int F = n;
  int E = 3 * n / 2;
  r.genus = (2 - V + E - F) / 2;
  r.gauss_bonnet = std::abs(r.excess_pi - 2.0 * (2 * r.genus - 2)) < 1e-9;
  return r;
}

bool flip_edge(FlatSurface& s, EdgeRef r) {
  EdgeRef g = s.glued(r);
  int T = r.tri, k = r.edge, T2 = g.tri, k2 = g.edge;
  if (T == T2) return false;
  const auto e = s.edges[T];
  const auto e2 = s.edges[T2];
  Vec2 pB = e[k];
  Vec2 pC = -e[prev(k)];
  Vec2 pD = e2[next(k2)];
  double scale = std::max({norm(pB), norm(pC), norm(pD)});
  double eps = 1e-12 * scale * scale;
  if (cross(-pC, pD - pC) <= eps || cross(pB - pD, pC - pD) <= eps) return false;
  int vA = s.vertex[T][k], vB = s.vertex[T][next(k)], vC = s.vertex[T][prev(k)];
  int vD = s.vertex[T2][prev(k2)];
  EdgeRef oldBC{T, next(k)}, oldCA{T, prev(k)}, oldAD{T2, next(k2)}, oldDB{T2, prev(k2)};
  EdgeRef newCA{T, 0}, newAD{T, 1}, newDB{T2, 0}, newBC{T2, 1};
  std::array<std::pair<EdgeRef, EdgeRef>, 4> remap = {
      {{oldCA, newCA}, {oldAD, newAD}, {oldDB, newDB}, {oldBC, newBC}}};
  auto map_ref = [&](EdgeRef x) {
    for (const auto& [from, to] : remap)
      if (from == x) return to;
    return x;
  };
  std::array<EdgeRef, 4> partners;
  for (int i = 0; i < 4; ++i) partners[i] = map_ref(s.glued(remap[i].first));
  s.edges[T] = {-pC, pD, pC - pD};
  s.edges[T2] = {pB - pD, pC - pB, pD - pC};
  s.vertex[T] = {vC, vA, vD};
  s.vertex[T2] = {vD, vB, vC};
  for (int i = 0; i < 4; ++i) glue(s, remap[i].second, partners[i]);
  glue(s, {T, 2}, {T2, 2});
  return true;
}

int make_delaunay(FlatSurface& s, int max_flips) {
  int flips = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int T = 0; T < s.num_triangles(); ++T)
      for (int k = 0; k < 3; ++k) {
        EdgeRef g = s.gluing[T][k];
        if (g.tri == T) continue;
        const auto& e = s.edges[T];
        Vec2 b = e[k];
        Vec2 c = -e[prev(k)];
        Vec2 d = s.edges[g.tri][next(g.edge)];
        double bb = dot(b, b), cc = dot(c, c), dd = dot(d, d);
        double incircle = b.x * (c.y * dd - cc * d.y) - b.y * (c.x * dd - cc * d.x) +
                          bb * (c.x * d.y - c.y * d.x);
        double scale = std::max({bb, cc, dd});
        if (incircle < -1e-10 * scale * scale && flip_edge(s, {T, k})) {
          if (++flips >= max_flips) return flips;
          changed = true;
        }
      }
  }
  return flips;
}

std::vector<SaddleConnection> enumerate_sc(const FlatSurface& s, double R) {
  struct State {
    int tri, edge;
    Vec2 left, right, dr, dl;
  };
  std::vector<SaddleConnection> out;
  std::vector<State> stack;
  auto record = [&](int from, int to, Vec2 h) {
    out.push_back({from, to, h, norm(h)});
  };
  auto inside = [](Vec2 dr, Vec2 w, Vec2 dl) {
    double scale = norm(w);
    return cross(dr, w) > kEps * norm(dr) * scale && cross(w, dl) > kEps * norm(dl) * scale;
  };
  for (int T = 0; T < s.num_triangles(); ++T)
    for (int k = 0; k < 3; ++k) {
      int origin = s.vertex[T][k];
      const auto& e = s.edges[T];
      Vec2 p1 = e[k];
      Vec2 p2 = -e[prev(k)];
      if (norm(p1) <= R) record(origin, s.vertex[T][next(k)], p1);
      EdgeRef g = s.gluing[T][next(k)];
      stack.push_back({g.tri, g.edge, p2, p1, p1, p2});
      while (!stack.empty()) {
        State st = stack.back();
        stack.pop_back();
        if (clipped_distance(st.right, st.left, st.dr, st.dl) > R) continue;
        const auto& te = s.edges[st.tri];
        int j = st.edge;
        Vec2 w = st.right + te[next(j)];
        EdgeRef right_edge = s.gluing[st.tri][next(j)];
        EdgeRef left_edge = s.gluing[st.tri][prev(j)];
        if (inside(st.dr, w, st.dl)) {
          if (norm(w) <= R) record(origin, s.vertex[st.tri][prev(j)], w);
          stack.push_back({right_edge.tri, right_edge.edge, w, st.right, st.dr, w});
          stack.push_back({left_edge.tri, left_edge.edge, st.left, w, w, st.dl});
        } else if (cross(st.dr, w) <= kEps * norm(st.dr) * norm(w)) {
          stack.push_back({left_edge.tri, left_edge.edge, st.left, w, st.dr, st.dl});
        } else {
          stack.push_back({right_edge.tri, right_edge.edge, w, st.right, st.dr, st.dl});
        }
      }
    }
  std::sort(out.begin(), out.end(), [](const SaddleConnection& x, const SaddleConnection& y) {
    if (x.length != y.length) return x.length < y.length;
    if (angle_less(x.holonomy, y.holonomy) != angle_less(y.holonomy, x.holonomy))
      return angle_less(x.holonomy, y.holonomy);
    if (x.start != y.start) return x.start < y.start;
    return x.end < y.end;
  });
  return out;
}

std::vector<SCFamily> group_families(const std::vector<SaddleConnection>& sc, double tol,
                                     int from, int to) {
  if (tol < 0 || !std::isfinite(tol))
    fail(ErrorCode::InvalidArgument, "tolerance must be non-negative");
  std::vector<Vec2> pts;
  for (const auto& c : sc)
    if (c.start == from && c.end == to) pts.push_back(c.holonomy);
  int n = static_cast<int>(pts.size());
  UnionFind uf(n);
  if (tol == 0) {
    std::map<std::pair<double, double>, int> seen;
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = seen.emplace(std::make_pair(pts[i].x, pts[i].y), i);
      if (!fresh) uf.unite(i, it->second);
    }
  } else {
    double cell = 2 * tol;
    struct KeyHash {
      std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
        return std::hash<std::int64_t>()(k.first * 1000003 + k.second);
      }
    };
    std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<int>, KeyHash> grid;
    for (int i = 0; i < n; ++i) {
      auto cx = static_cast<std::int64_t>(std::floor(pts[i].x / cell));
      auto cy = static_cast<std::int64_t>(std::floor(pts[i].y / cell));
      for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
          auto it = grid.find({cx + dx, cy + dy});
          if (it == grid.end()) continue;
          for (int jdx : it->second) {
            double d = norm(pts[i] - pts[jdx]);
            if (d <= tol)
              uf.unite(i, jdx);
            else if (d <= 2 * tol)
              fail(ErrorCode::AmbiguousGrouping,
                   "two holonomies lie within twice the grouping tolerance");
          }
        }
      grid[{cx, cy}].push_back(i);
    }
  }
  std::map<int, SCFamily> fams;
  for (int i = 0; i < n; ++i) {
    auto& f = fams[uf.find(i)];
    if (f.members == 0) f = {pts[i], 0, from, to};
    ++f.members;
  }
  std::vector<SCFamily> out;
  for (auto& [root, f] : fams) {
    if (f.members > 3)
      fail(ErrorCode::AmbiguousGrouping, "a family has more than three members");
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const SCFamily& x, const SCFamily& y) {
    double lx = norm(x.holonomy), ly = norm(y.holonomy);
    if (lx != ly) return lx < ly;
    return angle_less(x.holonomy, y.holonomy);
  });
  return out;
}

SVEstimate estimate_from_families(const std::vector<SCFamily>& fam, double area, double R) {
  SVEstimate est;
  est.R = R;
  est.area = area;
  for (const auto& f : fam) ++est.families[f.members - 1];
  for (int k = 0; k < 3; ++k)
    est.c[k] = static_cast<double>(est.families[k]) * area / (std::numbers::pi * R * R);
  return est;
}

SVEstimate estimate_sv(const FlatSurface& s, double R, double tol) {
  if (!(R > 0)) fail(ErrorCode::InvalidArgument, "radius must be positive");
  auto sc = enumerate_sc(s, R);
  return estimate_from_families(group_families(sc, tol), s.area, R);
}

std::string to_json(const SVEstimate& e) {
  nlohmann::ordered_json j;
  j["R"] = e.R;
  j["area"] = e.area;
  j["families"] = {{"1", e.families[0]}, {"2", e.families[1]}, {"3", e.families[2]}};
  j["estimates"] = {{"c1", e.c[0]}, {"c2", e.c[1]}, {"c3", e.c[2]},
                    {"sum", e.c[0] + e.c[1] + e.c[2]}};
  return j.dump();
}

}  // namespace prymsv
