#ifndef HSRG_HERMITIAN_HPP
#define HSRG_HERMITIAN_HPP

#include <array>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/fields.hpp"
#include "hsrg/projective.hpp"

namespace hsrg {

using Mat4 = std::array<Vec4, 4>;  // row-major

inline Mat4 identity_matrix() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = Gf4::one();
  return m;
}

inline Vec4 matvec(const Mat4& m, const Vec4& x) {
  return {dot(m[0], x), dot(m[1], x), dot(m[2], x), dot(m[3], x)};
}

inline Mat4 multiply(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat4 conjugate_transpose(const Mat4& m) {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = conj(m[j][i]);
  return t;
}

inline int matrix_rank(const Mat4& m) { return vector_rank({m[0], m[1], m[2], m[3]}); }

/// Nondegenerate unitary polarity given by a Hermitian Gram matrix G, with
/// form h(x, y) = x^T G conj(y).
class UnitaryPolarity {
 public:
  UnitaryPolarity() : gram_(identity_matrix()) {}

  explicit UnitaryPolarity(const Mat4& gram) : gram_(gram) {
    if (conjugate_transpose(gram) != gram)
      throw std::invalid_argument("UnitaryPolarity: Gram matrix is not Hermitian");
    if (matrix_rank(gram) != 4)
      throw std::invalid_argument("UnitaryPolarity: Gram matrix is degenerate");
  }

  const Mat4& gram() const { return gram_; }

 private:
  Mat4 gram_;
};

inline Gf4 hermitian_eval(const UnitaryPolarity& pol, const Vec4& x, const Vec4& y) {
  return dot(x, matvec(pol.gram(), conj(y)));
}

/// Coefficient vector of the polar plane of a point, normalized.
inline Vec4 polar_coeffs(const UnitaryPolarity& pol, const Vec4& p) {
  return normalize(matvec(pol.gram(), conj(p)));
}

/// Index of the polar plane p^perp in ProjectiveSpace::planes().
inline int polar_plane(const UnitaryPolarity& pol, int p) {
  const auto& space = ProjectiveSpace::instance();
  return space.plane_index(polar_coeffs(pol, space.coords(p)));
}

/// H(3,4): isotropic points and the three-way classification of lines.
struct HermitianSurface {
  UnitaryPolarity polarity;
  std::vector<int> points;  // sorted, 45 entries
  PointSet mask;
  std::vector<int> generators;  // lines inside the surface (5 points)
  std::vector<int> secants;     // lines meeting it in 3 points
  std::vector<int> tangents;    // lines meeting it in 1 point
  std::vector<int> meet_size;   // per line, |line cap H|
  std::vector<int> polar;       // per point, index of its polar plane

  bool contains(int p) const { return mask.test(static_cast<std::size_t>(p)); }
  bool is_generator(int line) const { return meet_size.at(line) == 5; }
  bool is_secant(int line) const { return meet_size.at(line) == 3; }

  /// Plane index of the tangent plane at a surface point.
  int tangent_plane(int p) const {
    if (!contains(p)) throw std::invalid_argument("tangent_plane: point not on surface");
    return polar[p];
  }

  /// r^perp as the common points of the polar planes of two points of r.
  int polar_line(int line) const {
    const auto& space = ProjectiveSpace::instance();
    const auto& l = space.lines().at(line);
    PointSet meet = space.planes()[polar[l.span_pair[0]]].mask &
                    space.planes()[polar[l.span_pair[1]]].mask;
    auto pts = to_indices(meet);
    if (pts.size() != 5) throw StructureError("polar_line: polar planes do not meet in a line");
    return space.line_index(pts[0], pts[1]);
  }

  /// The three generators through a surface point, sorted by line index.
  std::array<int, 3> generators_through(int p) const {
    if (!contains(p)) throw std::invalid_argument("generators_through: point not on surface");
    std::array<int, 3> out{};
    int k = 0;
    for (int l : ProjectiveSpace::instance().lines_through(p)) {
      if (!is_generator(l)) continue;
      if (k == 3) throw StructureError("generators_through: more than 3 generators");
      out[k++] = l;
    }
    if (k != 3) throw StructureError("generators_through: fewer than 3 generators");
    return out;
  }
};

inline HermitianSurface build_surface(const UnitaryPolarity& pol = UnitaryPolarity{}) {
  const auto& space = ProjectiveSpace::instance();
  HermitianSurface h{pol, {}, {}, {}, {}, {}, {}, {}};
  for (const auto& p : space.points()) {
    if (hermitian_eval(pol, p.coords, p.coords).is_zero()) {
      h.points.push_back(p.index);
      h.mask.set(p.index);
    }
    h.polar.push_back(polar_plane(pol, p.index));
  }
  h.meet_size.resize(space.lines().size());
  for (const auto& l : space.lines()) {
    int n = static_cast<int>((l.mask & h.mask).count());
    h.meet_size[l.index] = n;
    switch (n) {
      case 5: h.generators.push_back(l.index); break;
      case 3: h.secants.push_back(l.index); break;
      case 1: h.tangents.push_back(l.index); break;
      default:
        throw StructureError("build_surface: line " + std::to_string(l.index) + " meets the surface in " +
                             std::to_string(n) + " points");
    }
  }
  return h;
}

}  // namespace hsrg

#endif  // HSRG_HERMITIAN_HPP
