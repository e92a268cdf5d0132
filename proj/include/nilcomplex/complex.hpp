#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace nilcomplex {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using TileId = std::int32_t;
using LineId = std::int32_t;
using PlaneId = std::int32_t;

constexpr std::int32_t kNone = -1;
constexpr std::int64_t kLineLength = std::int64_t{1} << 40;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : Error {
  using Error::Error;
};

enum class Position : std::uint8_t { LU, RU, M, LL, RL, Bot, Root };
enum class Side : std::uint8_t { Left, Top, Right, Bottom };
enum class Corner : std::uint8_t { UL, UR, DR, DL };
enum class VertexKind : std::uint8_t { Corner, Mid, A, B, C };
enum class PastingMode : std::uint8_t { Flat, BaseOnly, Recursive };

const char* to_string(Position p);
const char* to_string(Side s);
const char* to_string(VertexKind k);
const char* to_string(PastingMode m);
PastingMode parse_pasting_mode(const std::string& s);

struct Line {
  PlaneId plane = kNone;
  TileId owner = kNone;
  int index = 0;  // 1..8 internal, 0 for a root side
  Side side = Side::Top;
  VertexId start = kNone;
  VertexId end = kNone;
  bool main1_forward = true;
  int created_round = 0;
};

struct Edge {
  VertexId a = kNone;  // a -> b is the forward direction of the line
  VertexId b = kNone;
  LineId line = kNone;
};

struct Vertex {
  VertexKind kind = VertexKind::Corner;
  PlaneId base = kNone;
  TileId birth = kNone;  // A/B/C: the subdivided tile; corners: the root
  LineId owner_line = kNone;
  std::int64_t pos = 0;
  int created_round = 0;
  std::vector<std::pair<TileId, Side>> mid_of;
};

struct Tile {
  PlaneId plane = kNone;
  TileId parent = kNone;
  Position pos = Position::Root;
  int depth = 0;
  int created_round = 0;
  std::array<VertexId, 4> corners{kNone, kNone, kNone, kNone};  // UL, UR, DR, DL
  std::array<std::string, 4> env;                               // left, top, right, bottom
  std::array<LineId, 4> side_line{kNone, kNone, kNone, kNone};
  std::array<TileId, 6> children{kNone, kNone, kNone, kNone, kNone, kNone};
  std::array<VertexId, 4> mids{kNone, kNone, kNone, kNone};  // by Side
  VertexId a = kNone, b = kNone, c = kNone;
  std::array<LineId, 9> line{kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone, kNone};

  bool subdivided() const { return children[0] != kNone; }
  VertexId corner(Corner k) const { return corners[static_cast<int>(k)]; }
  VertexId mid(Side s) const { return mids[static_cast<int>(s)]; }
};

struct Plane {
  TileId root = kNone;
  int pasting = kNone;
};

struct PastingRecord {
  VertexId core = kNone;
  std::string e1, e2;  // exit names at the core: top side, left side
  EdgeId e1_edge = kNone, e2_edge = kNone;
  TileId tile = kNone;
  PlaneId plane = kNone;
  PlaneId host = kNone;
  int round = 0;
};

// A pasting trigger: vertices matching `kind` (or the first midpoint of line 8
// when `line8_mid` is set) receive a pasting `delay` rounds after birth.
struct PastingTrigger {
  VertexKind kind = VertexKind::A;
  bool line8_mid = false;
  int delay = 2;
  std::string e1, e2;
};

const std::vector<PastingTrigger>& pasting_rule();

// ==== Subdivision table ====

struct SubtileSpec {
  Position pos;
  // corner sources: 0..3 parent corners UL,UR,DR,DL; 4..7 mids L,U,R,D; 8 A, 9 B, 10 C
  std::array<int, 4> corners;
  // env tokens: "@l" "@t" "@r" "@b" copy the parent env, otherwise literal
  std::array<const char*, 4> env;
  // side lines: negative = parent side (-1 - side), positive = internal index
  std::array<int, 4> side_line;
};

const std::array<SubtileSpec, 6>& subdivision_table();

struct InternalLineSpec {
  int start, end;  // corner sources as in SubtileSpec
  bool main1_forward;
};

const std::array<InternalLineSpec, 9>& internal_lines();

std::array<std::string, 4> child_env(const std::array<std::string, 4>& parent_env, Position p);

// ==== Complex ====

class Complex {
 public:
  static Complex base(PastingMode mode = PastingMode::Recursive);
  static Complex grow(int level, PastingMode mode = PastingMode::Recursive,
                      std::size_t face_cap = 1'000'000);

  void subdivide();
  void apply_pastings();
  void finalize();

  int level() const { return round_ + 1; }
  int round() const { return round_; }
  PastingMode mode() const { return mode_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Plane>& planes() const { return planes_; }
  const std::vector<PastingRecord>& pastings() const { return pastings_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const Tile& tile(TileId t) const { return tiles_.at(t); }
  const Line& line(LineId l) const { return lines_.at(l); }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::vector<TileId> faces() const;
  std::size_t num_faces() const;
  std::vector<TileId> faces_of_plane(PlaneId p) const;

  const std::vector<EdgeId>& incident(VertexId v) const { return incident_.at(v); }
  EdgeId find_edge(VertexId a, VertexId b) const;
  VertexId other(EdgeId e, VertexId v) const;
  PlaneId edge_plane(EdgeId e) const { return lines_[edges_[e].line].plane; }
  std::int64_t position_on(LineId l, VertexId v) const;

  std::string edge_name(EdgeId e, VertexId at) const;
  bool edge_hatted(EdgeId e, VertexId at) const;
  std::string edge_letter(EdgeId e, VertexId at) const;
  EdgeId edge_by_name(VertexId v, const std::string& letter) const;

  int tile_level(TileId t) const { return level() - tiles_[t].created_round; }
  bool is_root(TileId t) const { return tiles_[t].parent == kNone; }
  Position tile_position(TileId t) const { return tiles_[t].pos; }

  // after finalize()
  const std::vector<PlaneId>& planes_of(VertexId v) const { return vplanes_.at(v); }
  const std::vector<EdgeId>& rotation(PlaneId p, VertexId v) const;
  bool on_plane_boundary(PlaneId p, VertexId v) const;
  std::vector<std::pair<TileId, Side>> mid_of_in(VertexId v, PlaneId p) const;
  // the leaf reached from t by repeated LU children (shares t's UL corner)
  TileId ul_leaf(TileId t) const;
  // the edge at corner `from` running along side s of tile t
  EdgeId side_exit(TileId t, Side s, VertexId from) const;
  std::pair<VertexId, VertexId> side_ends(TileId t, Side s) const;

  std::vector<int> bfs(VertexId from) const;
  int geodesic_distance(VertexId u, VertexId v) const;

  nlohmann::json to_json() const;
  std::string to_dot(PlaneId p) const;
  nlohmann::json to_cache() const;
  static Complex from_cache(const nlohmann::json& j);

 private:
  VertexId new_vertex(VertexKind kind, PlaneId base, int round);
  EdgeId new_edge(VertexId a, VertexId b, LineId line);
  LineId new_line(PlaneId plane, TileId owner, int index, Side side, VertexId s, VertexId e,
                  bool main1_forward, int round);
  TileId new_root(PlaneId plane, int created_round, std::array<VertexId, 4> corners);
  void subdivide_tile(TileId t, const std::array<VertexId, 4>& mids, int round);
  void paste(VertexId core, const PastingTrigger& trig, int round);
  std::pair<VertexId, VertexId> walk_two(VertexId v, EdgeId e) const;
  void index_edge(EdgeId e);
  void rebuild_indices();

  PastingMode mode_ = PastingMode::Recursive;
  int round_ = 0;
  std::size_t face_cap_ = 1'000'000;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Line> lines_;
  std::vector<Tile> tiles_;
  std::vector<Plane> planes_;
  std::vector<PastingRecord> pastings_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> edge_index_;
  std::vector<std::vector<PlaneId>> vplanes_;
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> rotation_;
  std::unordered_map<std::uint64_t, bool> boundary_;
};

inline std::uint64_t pair_key(std::int32_t a, std::int32_t b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace nilcomplex
