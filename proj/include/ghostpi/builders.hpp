#pragma once

// Small triangulated spaces and symmetries of them.

#include <optional>
#include <string>
#include <vector>

#include "ghostpi/action.hpp"
#include "ghostpi/complex.hpp"

namespace ghostpi::build {

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

/// Boundary of an n-gon on vertices 0..n-1.
inline SimplicialComplex polygon(int n) {
  std::vector<Simplex> s;
  for (int i = 0; i < n; ++i)
    s.push_back({i, wrap(i + 1, n)});
  return SimplicialComplex::from_simplices(s).complex;
}

/// n-gon coned to a centre vertex n.
inline SimplicialComplex wheel(int n) {
  std::vector<Simplex> s;
  for (int i = 0; i < n; ++i)
    s.push_back({i, wrap(i + 1, n), n});
  return SimplicialComplex::from_simplices(s).complex;
}

/// n-gon suspended to poles n (north) and n + 1 (south).
inline SimplicialComplex suspension(int n) {
  std::vector<Simplex> s;
  for (int i = 0; i < n; ++i) {
    s.push_back({i, wrap(i + 1, n), n});
    s.push_back({i, wrap(i + 1, n), n + 1});
  }
  return SimplicialComplex::from_simplices(s).complex;
}

/// Octahedral sphere: 0/1 = +-x, 2/3 = +-y, 4/5 = +-z.
inline SimplicialComplex octahedron() {
  std::vector<Simplex> s;
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5})
        s.push_back({x, y, z});
  return SimplicialComplex::from_simplices(s).complex;
}

inline VertexMap octahedron_antipode() { return {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}}; }

/// Octahedron with the poles 4 and 5 joined by the arc 4 - 6 - 5.
inline SimplicialComplex decorated_sphere() {
  std::vector<Simplex> s = {{4, 6}, {5, 6}};
  for (int x : {0, 1})
    for (int y : {2, 3})
      for (int z : {4, 5})
        s.push_back({x, y, z});
  return SimplicialComplex::from_simplices(s).complex;
}

inline int torus_vertex(int i, int j, int rows, int cols) { return wrap(i, rows) * cols + wrap(j, cols); }

/// rows x cols grid on the torus, squares cut along the (1,1) diagonal.
/// Needs rows, cols >= 3.
inline SimplicialComplex torus(int rows, int cols) {
  std::vector<Simplex> s;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int a = torus_vertex(i, j, rows, cols), b = torus_vertex(i + 1, j, rows, cols);
      int c = torus_vertex(i + 1, j + 1, rows, cols), d = torus_vertex(i, j + 1, rows, cols);
      s.push_back({a, b, c});
      s.push_back({a, d, c});
    }
  return SimplicialComplex::from_simplices(s).complex;
}

/// Vertex map of an affine map (i, j) -> (a i + b j + di, c i + d j + dj) on the torus grid.
inline VertexMap torus_map(int rows, int cols, int a, int b, int c, int d, int di = 0, int dj = 0) {
  VertexMap m;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m[torus_vertex(i, j, rows, cols)] = torus_vertex(a * i + b * j + di, c * i + d * j + dj, rows, cols);
  return m;
}

inline VertexMap polygon_rotation(int n, int by) {
  VertexMap m;
  for (int i = 0; i < n; ++i)
    m[i] = wrap(i + by, n);
  return m;
}

/// Reflection i -> -i, whose axis passes through vertex 0 (and n/2 for even n).
inline VertexMap polygon_reflection(int n) {
  VertexMap m;
  for (int i = 0; i < n; ++i)
    m[i] = wrap(-i, n);
  return m;
}

/// Two n-gons sharing vertex 0: 0..n-1 and 0, n..2n-2.
inline SimplicialComplex wedge_of_polygons(int n) {
  std::vector<Simplex> s;
  for (int i = 0; i < n; ++i)
    s.push_back({i, wrap(i + 1, n)});
  std::vector<int> second{0};
  for (int i = 0; i < n - 1; ++i)
    second.push_back(n + i);
  for (int i = 0; i < n; ++i)
    s.push_back({second[static_cast<std::size_t>(i)], second[static_cast<std::size_t>(wrap(i + 1, n))]});
  return SimplicialComplex::from_simplices(s).complex;
}

inline VertexMap wedge_swap(int n) {
  VertexMap m;
  for (int i = 1; i < n; ++i) {
    m[i] = n + i - 1;
    m[n + i - 1] = i;
  }
  return m;
}

/// A complex, generators of a group acting on it, and an optional basepoint.
struct ActionSpec {
  std::string name;
  SimplicialComplex complex;
  std::vector<VertexMap> generators;
  std::optional<VertexId> basepoint;
  std::string description;

  FiniteAction action() const { return FiniteAction(complex, generators); }
};

/// The reference set of actions on circles, disks, spheres and tori.
inline std::vector<ActionSpec> reference_actions() {
  std::vector<ActionSpec> v;
  v.push_back({"flip_hexagon", polygon(6), {polygon_reflection(6)}, 0, "Z/2 flip of a circle, basepoint on the axis"});
  v.push_back({"rotation_hexagon_z3", polygon(6), {polygon_rotation(6, 2)}, std::nullopt, "free Z/3 rotation of a circle"});
  v.push_back({"rotation_9gon_z3", polygon(9), {polygon_rotation(9, 3)}, std::nullopt, "free Z/3 rotation of a 9-gon"});
  v.push_back({"rotation_hexagon_z6", polygon(6), {polygon_rotation(6, 1)}, 3, "free Z/6 rotation of a circle"});
  v.push_back({"dihedral_hexagon_d6", polygon(6), {polygon_rotation(6, 1), polygon_reflection(6)}, std::nullopt,
               "dihedral group of order 12 on a hexagon"});
  v.push_back({"triangle_dihedral_d3", polygon(3), {polygon_rotation(3, 1), polygon_reflection(3)}, std::nullopt,
               "S3 on a hollow triangle"});
  v.push_back({"wedge_swap", wedge_of_polygons(5), {wedge_swap(5)}, 0, "swap of two circles glued at a point"});
  auto wheel_rot = polygon_rotation(6, 2);
  wheel_rot[6] = 6;
  v.push_back({"wheel_rotation_z3", wheel(6), {wheel_rot}, 6, "Z/3 rotation of a disk about its centre"});
  auto wheel_flip = polygon_reflection(6);
  wheel_flip[6] = 6;
  v.push_back({"wheel_flip", wheel(6), {wheel_flip}, 6, "reflection of a disk"});
  v.push_back({"decorated_sphere_antipodal", decorated_sphere(), {octahedron_antipode()}, 6,
               "antipodal map of a sphere whose poles are joined by an arc"});
  v.push_back({"octahedron_antipodal", octahedron(), {octahedron_antipode()}, std::nullopt,
               "free antipodal map of the sphere"});
  v.push_back({"octahedron_half_turn", octahedron(), {VertexMap{{0, 1}, {1, 0}, {2, 3}, {3, 2}}}, 4,
               "half turn of the sphere about the poles"});
  auto equator_flip = VertexMap{{6, 7}, {7, 6}};
  v.push_back({"suspension_reflection", suspension(6), {equator_flip}, 0, "reflection of a sphere in its equator"});
  auto suspension_antipode = polygon_rotation(6, 3);
  suspension_antipode[6] = 7;
  suspension_antipode[7] = 6;
  v.push_back({"suspension_antipodal", suspension(6), {suspension_antipode}, std::nullopt,
               "free antipodal map of a suspended hexagon"});
  v.push_back({"torus_translation_z2", torus(4, 3), {torus_map(4, 3, 1, 0, 0, 1, 2, 0)}, std::nullopt,
               "free Z/2 translation of a torus"});
  v.push_back({"torus_involution", torus(4, 4), {torus_map(4, 4, -1, 0, 0, -1)}, 0,
               "hyperelliptic involution of a torus (four fixed points)"});
  v.push_back({"torus_swap", torus(3, 3), {torus_map(3, 3, 0, 1, 1, 0)}, 0, "coordinate swap of a torus"});
  v.push_back({"torus_rotation_z3", torus(3, 3), {torus_map(3, 3, 0, -1, 1, -1)}, 0,
               "order-3 rotation of the hexagonal torus"});
  return v;
}

/// Actions whose regularization exceeds a few hundred simplices.
inline std::vector<ActionSpec> larger_actions() {
  std::vector<ActionSpec> v;
  v.push_back({"octahedron_rotation_z4", octahedron(), {VertexMap{{0, 2}, {2, 1}, {1, 3}, {3, 0}}}, 4,
               "quarter turn of the sphere about the poles"});
  v.push_back({"torus_translations_z2xz2", torus(4, 4),
               {torus_map(4, 4, 1, 0, 0, 1, 2, 0), torus_map(4, 4, 1, 0, 0, 1, 0, 2)}, std::nullopt,
               "free Z/2 x Z/2 translations of a torus"});
  v.push_back({"torus_rotation_z6", torus(3, 3), {torus_map(3, 3, 1, -1, 1, 0)}, 0,
               "order-6 rotation of the hexagonal torus"});
  return v;
}

} // namespace ghostpi::build
