#ifndef HSRG_TESTS_SUPPORT_HPP
#define HSRG_TESTS_SUPPORT_HPP

#include "hsrg/geometry.hpp"
#include "hsrg/graph.hpp"

namespace hsrg::test {

inline const Geometry& geometry() {
  static const Geometry geo = build_geometry();
  return geo;
}

inline const SrgGraph& graph() {
  static const SrgGraph g = build_graph(geometry());
  return g;
}

inline Vec4 vec(int a, int b, int c, int d) {
  return {Gf4(static_cast<std::uint8_t>(a)), Gf4(static_cast<std::uint8_t>(b)), Gf4(static_cast<std::uint8_t>(c)),
          Gf4(static_cast<std::uint8_t>(d))};
}

}  // namespace hsrg::test

#endif  // HSRG_TESTS_SUPPORT_HPP
