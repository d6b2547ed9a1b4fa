#ifndef HSRG_GQ_HPP
#define HSRG_GQ_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsrg/projective.hpp"

namespace hsrg {

/// Checks the generalized quadrangle axioms of order (s, t) for a point set
/// and a family of lines (each line given as the subset of points it carries).
/// Returns a description of the first violation, or nullopt.
inline std::optional<std::string> gq_violation(const PointSet& points, const std::vector<PointSet>& lines, int s,
                                               int t) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if ((lines[i] & ~points).any()) return "line " + std::to_string(i) + " leaves the point set";
    if (static_cast<int>(lines[i].count()) != s + 1)
      return "line " + std::to_string(i) + " has " + std::to_string(lines[i].count()) + " points";
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if ((lines[i] & lines[j]).count() > 1)
        return "lines " + std::to_string(i) + " and " + std::to_string(j) + " share more than one point";
  }
  const auto pts = to_indices(points);
  for (int p : pts) {
    int on = 0;
    PointSet collinear;
    for (const auto& l : lines) {
      if (l.test(p)) {
        ++on;
        collinear |= l;
      }
    }
    if (on != t + 1) return "point " + std::to_string(p) + " lies on " + std::to_string(on) + " lines";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].test(p)) continue;
      auto seen = (lines[i] & collinear).count();
      if (seen != 1)
        return "point " + std::to_string(p) + " is collinear with " + std::to_string(seen) + " points of line " +
               std::to_string(i);
    }
  }
  return std::nullopt;
}

}  // namespace hsrg

#endif  // HSRG_GQ_HPP
