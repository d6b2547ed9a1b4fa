#ifndef HSRG_IO_HPP
#define HSRG_IO_HPP

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hsrg/errors.hpp"
#include "hsrg/geometry.hpp"
#include "hsrg/graph.hpp"

namespace hsrg {

// ---------------------------------------------------------------------------
// Geometry cache
// ---------------------------------------------------------------------------

/// Bumped whenever the canonical ordering of any cached object changes.
inline constexpr int kCacheVersion = 1;

struct CachedOvoid {
  int id = 0;
  int parent = 0;
  std::array<int, 5> points{};
  friend bool operator==(const CachedOvoid&, const CachedOvoid&) = default;
};

struct GeometryCache {
  int version = kCacheVersion;
  std::vector<Vec4> points;
  std::vector<std::array<int, 5>> lines;
  std::vector<int> surface_points;
  std::vector<int> surface_generators;
  std::vector<std::vector<int>> subquadrangles;
  std::vector<CachedOvoid> ovoids;
  std::string checksum;

  friend bool operator==(const GeometryCache&, const GeometryCache&) = default;
};

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace detail {
inline nlohmann::json cache_payload(const GeometryCache& c);
}  // namespace detail

inline std::string cache_checksum(const GeometryCache& c) { return fnv1a64(detail::cache_payload(c).dump()); }

inline GeometryCache make_cache(const Geometry& geo) {
  const auto& space = ProjectiveSpace::instance();
  GeometryCache c;
  for (const auto& p : space.points()) c.points.push_back(p.coords);
  for (const auto& l : space.lines()) c.lines.push_back(l.points);
  c.surface_points = geo.surface.points;
  c.surface_generators = geo.surface.generators;
  for (const auto& w : geo.subquadrangles) c.subquadrangles.push_back(w.points);
  for (const auto& v : geo.vertices) c.ovoids.push_back({v.id, v.parent, v.points});
  c.checksum = cache_checksum(c);
  return c;
}

namespace detail {

inline nlohmann::json cache_payload(const GeometryCache& c) {
  using nlohmann::json;
  json points = json::array();
  for (const auto& v : c.points) {
    json row = json::array();
    for (Gf4 x : v) row.push_back(std::string(to_string(x)));
    points.push_back(row);
  }
  json ovoids = json::array();
  for (const auto& o : c.ovoids) ovoids.push_back({{"id", o.id}, {"parent", o.parent}, {"points", o.points}});
  return {
      {"points", points},
      {"lines", c.lines},
      {"surface", {{"points", c.surface_points}, {"generators", c.surface_generators}}},
      {"subquadrangles", c.subquadrangles},
      {"ovoids", ovoids},
  };
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw CacheInvariantError("cache: " + what);
}

/// Structural checks on a decoded cache against the geometry it claims to describe.
inline void validate_cache(const GeometryCache& c) {
  const auto& space = ProjectiveSpace::instance();
  require(c.points.size() == kNumPoints, "expected 85 points");
  for (std::size_t i = 0; i < c.points.size(); ++i)
    require(c.points[i] == space.coords(static_cast<int>(i)), "point " + std::to_string(i) + " out of canonical order");
  require(c.lines.size() == kNumLines, "expected 357 lines");
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    const auto& pts = c.lines[i];
    require(std::is_sorted(pts.begin(), pts.end()) && pts[0] >= 0 && pts[4] < kNumPoints && pts[0] < pts[1],
            "line " + std::to_string(i) + " is not a sorted point list");
    require(space.line_through(pts[0], pts[1]).points == pts && space.line_index(pts[0], pts[1]) == static_cast<int>(i),
            "line " + std::to_string(i) + " is not the canonical span of its points");
  }
  const auto surface = build_surface();
  require(c.surface_points == surface.points, "surface points are not the isotropic points");
  require(c.surface_generators == surface.generators, "surface generators do not match the line classification");
  require(c.subquadrangles.size() == kNumSubquadrangles, "expected 36 subquadrangles");
  require(std::is_sorted(c.subquadrangles.begin(), c.subquadrangles.end()) &&
              std::set(c.subquadrangles.begin(), c.subquadrangles.end()).size() == c.subquadrangles.size(),
          "subquadrangles are not in canonical order");
  for (std::size_t i = 0; i < c.subquadrangles.size(); ++i) {
    const auto& pts = c.subquadrangles[i];
    const auto tag = "subquadrangle " + std::to_string(i);
    require(pts.size() == 15 && std::is_sorted(pts.begin(), pts.end()), tag + " is not 15 sorted points");
    for (int p : pts) require(p >= 0 && p < kNumPoints && surface.contains(p), tag + " leaves the surface");
    const PointSet mask = to_mask(pts);
    require(space.span_rank(pts) == 4, tag + " does not span the space");
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        require((space.line_through(pts[a], pts[b]).mask & mask).count() == 3, tag + " is not a Baer subgeometry");
  }
  require(c.ovoids.size() == kNumVertices, "expected 216 ovoids");
  for (std::size_t i = 0; i < c.ovoids.size(); ++i) {
    const auto& o = c.ovoids[i];
    const auto tag = "ovoid " + std::to_string(i);
    require(o.id == static_cast<int>(i) && o.parent == o.id / kOvoidsPerSubquadrangle, tag + " has a bad id or parent");
    require(std::is_sorted(o.points.begin(), o.points.end()), tag + " is not sorted");
    const auto& w = c.subquadrangles[o.parent];
    PointSet set;
    for (int p : o.points) {
      require(std::binary_search(w.begin(), w.end(), p), tag + " leaves its subquadrangle");
      set.set(p);
    }
    require(set.count() == 5, tag + " has repeated points");
    for (int l : surface.generators) {
      const auto hits = (space.lines()[l].mask & set).count();
      const auto in_w = (space.lines()[l].mask & to_mask(w)).count();
      require(in_w == 0 || hits == 1, tag + " is not an ovoid of its subquadrangle");
    }
  }
}

}  // namespace detail

/// Canonical text of the cache: sorted keys, two-space indent, trailing newline.
inline std::string serialize_cache(GeometryCache c) {
  const auto payload = detail::cache_payload(c);
  const nlohmann::json doc{{"version", c.version}, {"checksum", fnv1a64(payload.dump())}, {"payload", payload}};
  return doc.dump(2) + "\n";
}

inline GeometryCache parse_cache(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheChecksumError(std::string("cache: unreadable or corrupted: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer())
    throw CacheVersionError("cache: missing version");
  const int version = doc["version"].get<int>();
  if (version != kCacheVersion)
    throw CacheVersionError("cache: version " + std::to_string(version) + ", expected " +
                            std::to_string(kCacheVersion));
  if (!doc.contains("payload") || !doc.contains("checksum") || !doc["checksum"].is_string())
    throw CacheChecksumError("cache: missing payload or checksum");
  const auto& payload = doc["payload"];
  const std::string checksum = doc["checksum"].get<std::string>();
  if (fnv1a64(payload.dump()) != checksum) throw CacheChecksumError("cache: checksum mismatch");

  GeometryCache c;
  c.version = version;
  c.checksum = checksum;
  try {
    for (const auto& row : payload.at("points")) {
      Vec4 v{};
      if (row.size() != 4) throw CacheInvariantError("cache: point with wrong arity");
      for (int i = 0; i < 4; ++i) v[i] = gf4_from_string(row.at(i).get<std::string>());
      c.points.push_back(v);
    }
    c.lines = payload.at("lines").get<std::vector<std::array<int, 5>>>();
    c.surface_points = payload.at("surface").at("points").get<std::vector<int>>();
    c.surface_generators = payload.at("surface").at("generators").get<std::vector<int>>();
    c.subquadrangles = payload.at("subquadrangles").get<std::vector<std::vector<int>>>();
    for (const auto& o : payload.at("ovoids"))
      c.ovoids.push_back(
          {o.at("id").get<int>(), o.at("parent").get<int>(), o.at("points").get<std::array<int, 5>>()});
  } catch (const nlohmann::json::exception& e) {
    throw CacheInvariantError(std::string("cache: malformed section: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheInvariantError(std::string("cache: ") + e.what());
  }
  detail::validate_cache(c);
  return c;
}

inline void save_cache(const std::string& path, const GeometryCache& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_cache: cannot open " + path);
  out << serialize_cache(c);
  if (!out) throw Error("save_cache: write failed for " + path);
}

inline GeometryCache load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_cache: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto c = parse_cache(text);
  return c;
}

/// Rebuilds the in-memory geometry from a validated cache without re-running the search.
inline Geometry geometry_from_cache(const GeometryCache& c) {
  Geometry g;
  g.surface = build_surface();
  for (const auto& pts : c.subquadrangles)
    g.subquadrangles.push_back(make_subquadrangle(g.surface, static_cast<int>(g.subquadrangles.size()), to_mask(pts)));
  for (const auto& o : c.ovoids) g.vertices.push_back({o.id, o.points, to_mask(o.points), o.parent});
  g.index_vertices();
  return g;
}

// ---------------------------------------------------------------------------
// Graph export
// ---------------------------------------------------------------------------

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

enum class GraphFormat { Graph6, Dimacs, EdgeCsv, Json };

inline GraphFormat parse_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "edge-csv") return GraphFormat::EdgeCsv;
  if (name == "json") return GraphFormat::Json;
  throw UnsupportedFormatError("unsupported graph format '" + std::string(name) + "'");
}

/// graph6: size field, then the upper triangle column by column, 6 bits per
/// byte offset by 63. One line, newline terminated.
inline std::string to_graph6(const SrgGraph& g) {
  std::string out;
  const int n = g.n;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw UnsupportedFormatError("graph6: graphs with more than 258047 vertices are not supported");
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  out.push_back('\n');
  return out;
}

inline SrgGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  auto byte = [&](std::size_t i) {
    if (i >= text.size()) throw std::invalid_argument("graph6: truncated input");
    const int b = static_cast<unsigned char>(text[i]) - 63;
    if (b < 0 || b > 63) throw std::invalid_argument("graph6: byte out of range");
    return b;
  };
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = byte(pos++);
  } else if (text.size() > 1 && text[1] == '~') {
    throw UnsupportedFormatError("graph6: 8-byte size field not supported");
  } else {
    pos = 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos++);
  }
  if (n > kNumVertices) throw UnsupportedFormatError("graph6: graphs above 216 vertices are not supported here");
  SrgGraph g;
  g.n = n;
  g.adjacency.assign(n, VertexSet{});
  const std::size_t needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  if (pos + (needed + 5) / 6 != text.size()) throw std::invalid_argument("graph6: trailing data");
  return g;
}

inline std::string to_dimacs(const SrgGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

inline std::string to_edge_csv(const SrgGraph& g) {
  std::ostringstream out;
  out << "u,v\n";
  for (auto [u, v] : g.edges()) out << u << ',' << v << '\n';
  return out.str();
}

inline std::string to_json(const SrgGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return nlohmann::json{{"n", g.n}, {"edges", edges}}.dump() + "\n";
}

inline std::string export_graph(const SrgGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return to_graph6(g);
    case GraphFormat::Dimacs: return to_dimacs(g);
    case GraphFormat::EdgeCsv: return to_edge_csv(g);
    case GraphFormat::Json: return to_json(g);
  }
  throw UnsupportedFormatError("export_graph: unknown format");
}

inline std::string export_graph(const SrgGraph& g, std::string_view format) {
  return export_graph(g, parse_format(format));
}

}  // namespace hsrg

#endif  // HSRG_IO_HPP
