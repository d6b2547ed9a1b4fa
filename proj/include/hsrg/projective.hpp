#ifndef HSRG_PROJECTIVE_HPP
#define HSRG_PROJECTIVE_HPP

#include <algorithm>
#include <array>
#include <bitset>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hsrg/errors.hpp"
#include "hsrg/fields.hpp"

namespace hsrg {

inline constexpr int kNumPoints = 85;
inline constexpr int kNumLines = 357;
inline constexpr int kNumPlanes = 85;

using Vec4 = std::array<Gf4, 4>;
using PointSet = std::bitset<kNumPoints>;

inline Vec4 scale(Gf4 a, const Vec4& v) { return {a * v[0], a * v[1], a * v[2], a * v[3]}; }

inline Vec4 operator+(const Vec4& u, const Vec4& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

inline bool is_zero(const Vec4& v) {
  return std::all_of(v.begin(), v.end(), [](Gf4 x) { return x.is_zero(); });
}

inline Gf4 dot(const Vec4& u, const Vec4& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

inline Vec4 conj(const Vec4& v) { return {conj(v[0]), conj(v[1]), conj(v[2]), conj(v[3])}; }

/// Scales v so its first nonzero coordinate is 1. v must be nonzero.
inline Vec4 normalize(const Vec4& v) {
  for (Gf4 x : v) {
    if (!x.is_zero()) return scale(inv(x), v);
  }
  throw std::invalid_argument("normalize: zero vector");
}

/// 8-bit code of a vector: coordinate i occupies bits 2(3-i)..2(3-i)+1, so
/// code order equals lexicographic coordinate order.
inline int vec_code(const Vec4& v) {
  return (v[0].code() << 6) | (v[1].code() << 4) | (v[2].code() << 2) | v[3].code();
}

inline std::vector<int> to_indices(const PointSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (int i = 0; i < kNumPoints; ++i)
    if (s[i]) out.push_back(i);
  return out;
}

inline PointSet to_mask(std::span<const int> indices) {
  PointSet s;
  for (int i : indices) s.set(static_cast<std::size_t>(i));
  return s;
}

/// Rank over GF(4) of a list of vectors, by row reduction.
inline int vector_rank(std::vector<Vec4> rows) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [col](const Vec4& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    Vec4 p = scale(inv(rows[rank][col]), rows[rank]);
    rows[rank] = p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && !rows[r][col].is_zero())
        rows[r] = rows[r] + scale(rows[r][col], p);
    }
    ++rank;
  }
  return rank;
}

struct ProjPoint {
  Vec4 coords;
  int index = 0;
};

struct LineRec {
  std::array<int, 5> points{};     // sorted
  std::array<int, 2> span_pair{};  // two smallest points
  int index = 0;
  PointSet mask;
};

struct PlaneRec {
  Vec4 coeffs;  // normalized
  std::vector<int> points;
  PointSet mask;
};

/// A copy of PG(3,2) inside PG(3,4).
struct BaerSubgeometry {
  std::vector<int> points;  // sorted, 15 entries
  std::array<int, 5> frame{};
  PointSet mask;
};

/// Every nonzero vector normalized, in lexicographic order of the coordinates.
inline std::vector<ProjPoint> enumerate_points() {
  std::vector<ProjPoint> out;
  for (int code = 1; code < 256; ++code) {
    Vec4 v{Gf4(static_cast<std::uint8_t>(code >> 6)), Gf4(static_cast<std::uint8_t>(code >> 4)),
           Gf4(static_cast<std::uint8_t>(code >> 2)), Gf4(static_cast<std::uint8_t>(code))};
    if (normalize(v) == v) out.push_back({v, static_cast<int>(out.size())});
  }
  return out;
}

/// PG(3,4) with canonical indices for points, lines and planes.
///
/// Points are indexed by enumerate_points(). Lines are sorted by their sorted
/// point-index sequences; planes use the same order as points on their
/// normalized coefficient vectors. Tables are immutable after construction.
class ProjectiveSpace {
 public:
  ProjectiveSpace() : points_(enumerate_points()) {
    code_to_point_.fill(-1);
    for (const auto& p : points_) code_to_point_[vec_code(p.coords)] = p.index;

    std::vector<std::array<int, 5>> sets;
    std::vector<std::vector<bool>> covered(kNumPoints, std::vector<bool>(kNumPoints, false));
    for (int p = 0; p < kNumPoints; ++p) {
      for (int q = p + 1; q < kNumPoints; ++q) {
        if (covered[p][q]) continue;
        auto pts = span_points(p, q);
        for (int a : pts)
          for (int b : pts) covered[a][b] = true;
        sets.push_back(pts);
      }
    }
    std::sort(sets.begin(), sets.end());
    lines_.reserve(sets.size());
    for (const auto& pts : sets) {
      LineRec l;
      l.points = pts;
      l.span_pair = {pts[0], pts[1]};
      l.index = static_cast<int>(lines_.size());
      for (int x : pts) l.mask.set(x);
      lines_.push_back(l);
    }
    line_of_pair_.assign(kNumPoints * kNumPoints, -1);
    lines_through_.assign(kNumPoints, {});
    for (const auto& l : lines_) {
      for (int a : l.points) {
        lines_through_[a].push_back(l.index);
        for (int b : l.points)
          if (a != b) line_of_pair_[a * kNumPoints + b] = l.index;
      }
    }

    for (const auto& p : points_) {
      PlaneRec pl;
      pl.coeffs = p.coords;
      for (const auto& x : points_) {
        if (dot(pl.coeffs, x.coords).is_zero()) {
          pl.points.push_back(x.index);
          pl.mask.set(x.index);
        }
      }
      planes_.push_back(std::move(pl));
    }
  }

  /// Shared immutable instance.
  static const ProjectiveSpace& instance() {
    static const ProjectiveSpace space;
    return space;
  }

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<LineRec>& lines() const { return lines_; }
  const std::vector<PlaneRec>& planes() const { return planes_; }

  const Vec4& coords(int p) const { return points_.at(static_cast<std::size_t>(p)).coords; }

  /// Index of the point represented by a nonzero vector.
  int point_index(const Vec4& v) const { return code_to_point_[vec_code(normalize(v))]; }

  int line_index(int p, int q) const {
    if (p == q) throw std::invalid_argument("line_through: identical points");
    return line_of_pair_[p * kNumPoints + q];
  }

  const LineRec& line_through(int p, int q) const { return lines_[line_index(p, q)]; }

  const std::vector<int>& lines_through(int p) const { return lines_through_.at(p); }

  /// Index of the plane with the given (not necessarily normalized) coefficients.
  int plane_index(const Vec4& coeffs) const { return point_index(coeffs); }

  int span_rank(std::span<const int> pts) const {
    if (pts.empty()) throw std::invalid_argument("span_rank: empty point set");
    std::vector<Vec4> rows;
    rows.reserve(pts.size());
    for (int p : pts) rows.push_back(coords(p));
    return vector_rank(std::move(rows));
  }

  /// Points of all nonzero GF(2)-combinations of four vectors. No validation.
  PointSet closure_of_basis(const std::array<Vec4, 4>& basis) const {
    PointSet s;
    for (unsigned m = 1; m < 16; ++m) {
      Vec4 v{};
      for (int i = 0; i < 4; ++i)
        if (m & (1u << i)) v = v + basis[i];
      s.set(point_index(v));
    }
    return s;
  }

  /// Baer subgeometry with the given frame: the first four points are scaled
  /// so their sum represents the fifth, then closed under GF(2)-combinations.
  BaerSubgeometry baer_closure(const std::array<int, 5>& frame) const {
    // Solve sum c_i v_i = v_5 by elimination on the augmented 4x5 system.
    std::array<std::array<Gf4, 5>, 4> m{};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m[r][c] = coords(frame[c])[r];
      m[r][4] = coords(frame[4])[r];
    }
    for (int col = 0; col < 4; ++col) {
      int piv = -1;
      for (int r = col; r < 4; ++r)
        if (!m[r][col].is_zero()) { piv = r; break; }
      if (piv < 0) throw RankDeficiencyError("baer_closure: first four frame points are dependent");
      std::swap(m[col], m[piv]);
      Gf4 s = inv(m[col][col]);
      for (auto& x : m[col]) x *= s;
      for (int r = 0; r < 4; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        Gf4 f = m[r][col];
        for (int c = 0; c < 5; ++c) m[r][c] += f * m[col][c];
      }
    }
    std::array<Vec4, 4> basis;
    for (int i = 0; i < 4; ++i) {
      if (m[i][4].is_zero())
        throw FrameError("baer_closure: fifth point lies on a coordinate face of the first four");
      basis[i] = scale(m[i][4], coords(frame[i]));
    }
    BaerSubgeometry b;
    b.mask = closure_of_basis(basis);
    b.points = to_indices(b.mask);
    b.frame = frame;
    return b;
  }

 private:
  std::array<int, 5> span_points(int p, int q) const {
    std::array<int, 5> out{};
    const Vec4& u = coords(p);
    const Vec4& v = coords(q);
    // (1:0) gives p, (mu:1) gives mu*u + v.
    out[0] = p;
    for (int k = 0; k < 4; ++k) out[k + 1] = point_index(scale(kGf4Elements[k], u) + v);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ProjPoint> points_;
  std::array<int, 256> code_to_point_{};
  std::vector<LineRec> lines_;
  std::vector<int> line_of_pair_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<PlaneRec> planes_;
};

}  // namespace hsrg

#endif  // HSRG_PROJECTIVE_HPP
