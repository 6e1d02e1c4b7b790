#include "croftonlab/sphere_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace croftonlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct IcoMesh {
  std::vector<Eigen::Vector3d> verts;
  std::vector<std::array<int, 3>> tris;
};

IcoMesh base_icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> v = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> t = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  return {std::move(v), std::move(t)};
}

IcoMesh subdivide(const IcoMesh& mesh) {
  IcoMesh out;
  out.verts = mesh.verts;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Eigen::Vector3d m = (out.verts[a] + out.verts[b]).normalized();
    out.verts.push_back(m);
    int idx = static_cast<int>(out.verts.size()) - 1;
    midpoint.emplace(key, idx);
    return idx;
  };
  for (const auto& t : mesh.tris) {
    int ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
    out.tris.push_back({t[0], ab, ca});
    out.tris.push_back({t[1], bc, ab});
    out.tris.push_back({t[2], ca, bc});
    out.tris.push_back({ab, bc, ca});
  }
  return out;
}

double spherical_triangle_area(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                               const Eigen::Vector3d& c) {
  double num = std::abs(a.dot(b.cross(c)));
  double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

SphereQuadrature circle_grid(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("circle_grid: even n >= 4 required");
  SphereQuadrature q;
  q.points.resize(2, n);
  q.weights = Vec::Constant(n, 2.0 * kPi / n);
  for (int k = 0; k < n; ++k) {
    double th = 2.0 * kPi * k / n;
    q.points(0, k) = std::cos(th);
    q.points(1, k) = std::sin(th);
  }
  q.resolution = n;
  return q;
}

SphereQuadrature icosphere_grid(int level) {
  if (level < 0 || level > 7) throw std::invalid_argument("icosphere_grid: level in [0,7]");
  IcoMesh mesh = base_icosahedron();
  for (int i = 0; i < level; ++i) mesh = subdivide(mesh);
  int n = static_cast<int>(mesh.verts.size());
  SphereQuadrature q;
  q.points.resize(3, n);
  for (int i = 0; i < n; ++i) q.points.col(i) = mesh.verts[i];
  q.weights = Vec::Zero(n);
  for (const auto& t : mesh.tris) {
    double a = spherical_triangle_area(mesh.verts[t[0]], mesh.verts[t[1]], mesh.verts[t[2]]);
    for (int j = 0; j < 3; ++j) q.weights[t[j]] += a / 3.0;
  }
  q.resolution = level;
  return q;
}

SphereQuadrature s3_product_grid(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("s3_product_grid: even n >= 4 required");
  int np = n, nt = n, nf = 2 * n;
  SphereQuadrature q;
  q.points.resize(4, np * nt * nf);
  q.weights.resize(np * nt * nf);
  int idx = 0;
  for (int i = 0; i < np; ++i) {
    double psi = kPi * (i + 0.5) / np;
    for (int j = 0; j < nt; ++j) {
      double th = kPi * (j + 0.5) / nt;
      for (int k = 0; k < nf; ++k) {
        double ph = 2.0 * kPi * k / nf;
        q.points(0, idx) = std::sin(psi) * std::sin(th) * std::cos(ph);
        q.points(1, idx) = std::sin(psi) * std::sin(th) * std::sin(ph);
        q.points(2, idx) = std::sin(psi) * std::cos(th);
        q.points(3, idx) = std::cos(psi);
        q.weights[idx] = std::sin(psi) * std::sin(psi) * std::sin(th) *
                         (kPi / np) * (kPi / nt) * (2.0 * kPi / nf);
        ++idx;
      }
    }
  }
  q.resolution = n;
  return q;
}

SphereQuadrature euclidean_sphere_grid(int dim, int resolution) {
  switch (dim) {
    case 2:
      return circle_grid(resolution);
    case 3:
      return icosphere_grid(resolution);
    case 4:
      return s3_product_grid(resolution);
    default:
      throw std::invalid_argument("euclidean_sphere_grid: dim must be in [2,4]");
  }
}

double sphere_surface_area(int dim) {
  switch (dim) {
    case 2:
      return 2.0 * kPi;
    case 3:
      return 4.0 * kPi;
    case 4:
      return 2.0 * kPi * kPi;
    default:
      throw std::invalid_argument("sphere_surface_area: dim must be in [2,4]");
  }
}

}  // namespace croftonlab
