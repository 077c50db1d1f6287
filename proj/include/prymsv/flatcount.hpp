/// @file flatcount.hpp
/// @brief Slit-tori translation surfaces and saddle connection counting.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "prymsv/prototypes.hpp"

namespace prymsv {

struct Vec2 {
  double x = 0;
  double y = 0;

  friend Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  Vec2 operator-() const { return {-x, -y}; }
};

double cross(Vec2 u, Vec2 v);
double dot(Vec2 u, Vec2 v);
double norm(Vec2 v);

struct EdgeRef {
  int tri = -1;
  int edge = -1;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct ConePoint {
  int id = 0;
  double angle_pi = 0;  ///< total angle divided by pi
};

/// Triangulated translation surface. Edge k of a triangle runs from its
/// vertex k to vertex k+1; glued edges carry opposite vectors.
struct FlatSurface {
  std::vector<std::array<Vec2, 3>> edges;
  std::vector<std::array<EdgeRef, 3>> gluing;
  std::vector<std::array<int, 3>> vertex;
  std::vector<ConePoint> cone_points;
  double area = 0;

  int num_triangles() const { return static_cast<int>(edges.size()); }
  const EdgeRef& glued(EdgeRef r) const { return gluing[r.tri][r.edge]; }
};

/// Lattice basis u, v of a flat torus, Gauss reduced and positively oriented.
struct LatticeBasis {
  Vec2 u;
  Vec2 v;
};

LatticeBasis reduce_basis(Vec2 u, Vec2 v);
double systole(const LatticeBasis& b);

/// The slit direction used when none is given: (1/pi, 1/e) scaled to
/// 0.05 times the shortest systole of the three tori.
Vec2 default_slit(const TripleProto& p);

FlatSurface build_slit_triple(const TripleProto& p, Vec2 t);

/// Recomputes vertex classes and cone angles from the gluing.
void rebuild_vertices(FlatSurface& s);

struct InvariantReport {
  bool edge_sums = false;
  bool gluing_involution = false;
  bool gluing_opposite = false;
  bool orientation = false;
  bool angles = false;  ///< every cone angle is 2 pi or 6 pi
  bool gauss_bonnet = false;
  int genus = 0;
  int zeros = 0;
  double excess_pi = 0;  ///< sum of (angle - 2 pi) divided by pi
  bool ok() const;
};

InvariantReport check_invariants(const FlatSurface& s);

/// Flips the edge shared by the two triangles; false if the quadrilateral
/// is not strictly convex.
bool flip_edge(FlatSurface& s, EdgeRef r);

/// Flips edges until every edge is locally Delaunay; returns the flip count.
int make_delaunay(FlatSurface& s, int max_flips = 100000);

struct SaddleConnection {
  int start = 0;
  int end = 0;
  Vec2 holonomy;
  double length = 0;
};

/// All saddle connections of length at most R, sorted by length then angle.
std::vector<SaddleConnection> enumerate_sc(const FlatSurface& s, double R);

struct SCFamily {
  Vec2 holonomy;
  int members = 0;
  int start = 0;
  int end = 0;
};

/// Groups connections from zero `from` to zero `to` by holonomy within tol.
std::vector<SCFamily> group_families(const std::vector<SaddleConnection>& sc, double tol,
                                     int from = 0, int to = 1);

struct SVEstimate {
  double R = 0;
  double area = 0;
  std::array<std::int64_t, 3> families{};
  std::array<double, 3> c{};
};

SVEstimate estimate_from_families(const std::vector<SCFamily>& fam, double area, double R);

/// Families of multiplicity k between the two zeros, scaled by area/(pi R^2).
SVEstimate estimate_sv(const FlatSurface& s, double R, double tol);

std::string to_json(const SVEstimate& e);

}  // namespace prymsv
