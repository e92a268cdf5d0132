#include "nilcomplex/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nilcomplex {

const char* to_string(Position p) {
  switch (p) {
    case Position::LU: return "LU";
    case Position::RU: return "RU";
    case Position::M: return "M";
    case Position::LL: return "LL";
    case Position::RL: return "RL";
    case Position::Bot: return "Bot";
    case Position::Root: return "Root";
  }
  return "?";
}

const char* to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Top: return "top";
    case Side::Right: return "right";
    case Side::Bottom: return "bottom";
  }
  return "?";
}

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Corner: return "corner";
    case VertexKind::Mid: return "mid";
    case VertexKind::A: return "A";
    case VertexKind::B: return "B";
    case VertexKind::C: return "C";
  }
  return "?";
}

const char* to_string(PastingMode m) {
  switch (m) {
    case PastingMode::Flat: return "flat";
    case PastingMode::BaseOnly: return "base-only";
    case PastingMode::Recursive: return "recursive";
  }
  return "?";
}

PastingMode parse_pasting_mode(const std::string& s) {
  if (s == "flat") return PastingMode::Flat;
  if (s == "base-only") return PastingMode::BaseOnly;
  if (s == "recursive") return PastingMode::Recursive;
  throw Error("unknown pasting mode: " + s);
}

const std::vector<PastingTrigger>& pasting_rule() {
  static const std::vector<PastingTrigger> rule = {
      {VertexKind::A, false, 2, "1", "3"},
      {VertexKind::B, false, 2, "1", "2"},
      {VertexKind::C, false, 2, "1", "2"},
      {VertexKind::Mid, true, 2, "1", "2"},
  };
  return rule;
}

// ==== Subdivision table ====

namespace {
constexpr int kUL = 0, kUR = 1, kDR = 2, kDL = 3, kL = 4, kU = 5, kR = 6, kD = 7, kA = 8, kB = 9, kC = 10;
constexpr int kPL = -1, kPT = -2, kPR = -3, kPB = -4;
}  // namespace

const std::array<SubtileSpec, 6>& subdivision_table() {
  static const std::array<SubtileSpec, 6> table = {{
      {Position::LU, {kUL, kU, kA, kL}, {"@l", "@t", "1A", "3A"}, {kPL, kPT, 1, 3}},
      {Position::RU, {kUR, kR, kB, kU}, {"@t", "@r", "6A", "2A"}, {kPT, kPR, 6, 2}},
      {Position::M, {kA, kU, kB, kC}, {"4B", "1B", "2B", "5B"}, {4, 1, 2, 5}},
      {Position::LL, {kDL, kL, kA, kC}, {"7A", "@l", "3B", "4A"}, {7, kPL, 3, 4}},
      {Position::RL, {kDR, kC, kB, kR}, {"@r", "8A", "5A", "6B"}, {kPR, 8, 5, 6}},
      {Position::Bot, {kDR, kD, kDL, kC}, {"8B", "@b", "@b", "7B"}, {8, kPB, kPB, 7}},
  }};
  return table;
}

const std::array<InternalLineSpec, 9>& internal_lines() {
  static const std::array<InternalLineSpec, 9> lines = {{
      {0, 0, true},
      {kU, kA, true},
      {kU, kB, false},
      {kL, kA, false},
      {kA, kC, true},
      {kC, kB, true},
      {kR, kB, true},
      {kDL, kC, false},
      {kDR, kC, true},
  }};
  return lines;
}

std::array<std::string, 4> child_env(const std::array<std::string, 4>& parent_env, Position p) {
  const auto& spec = subdivision_table()[static_cast<int>(p)];
  std::array<std::string, 4> out;
  for (int i = 0; i < 4; ++i) {
    std::string tok = spec.env[i];
    if (tok == "@l") out[i] = parent_env[0];
    else if (tok == "@t") out[i] = parent_env[1];
    else if (tok == "@r") out[i] = parent_env[2];
    else if (tok == "@b") out[i] = parent_env[3];
    else out[i] = tok;
  }
  return out;
}

// ==== Construction ====

VertexId Complex::new_vertex(VertexKind kind, PlaneId base, int round) {
  Vertex v;
  v.kind = kind;
  v.base = base;
  v.created_round = round;
  vertices_.push_back(std::move(v));
  incident_.emplace_back();
  return static_cast<VertexId>(vertices_.size() - 1);
}

void Complex::index_edge(EdgeId e) {
  const Edge& ed = edges_[e];
  edge_index_[pair_key(std::min(ed.a, ed.b), std::max(ed.a, ed.b))] = e;
}

EdgeId Complex::new_edge(VertexId a, VertexId b, LineId line) {
  edges_.push_back({a, b, line});
  EdgeId e = static_cast<EdgeId>(edges_.size() - 1);
  incident_[a].push_back(e);
  incident_[b].push_back(e);
  index_edge(e);
  return e;
}

LineId Complex::new_line(PlaneId plane, TileId owner, int index, Side side, VertexId s, VertexId e,
                         bool main1_forward, int round) {
  Line l;
  l.plane = plane;
  l.owner = owner;
  l.index = index;
  l.side = side;
  l.start = s;
  l.end = e;
  l.main1_forward = main1_forward;
  l.created_round = round;
  lines_.push_back(l);
  return static_cast<LineId>(lines_.size() - 1);
}

TileId Complex::new_root(PlaneId plane, int created_round, std::array<VertexId, 4> corners) {
  Tile t;
  t.plane = plane;
  t.pos = Position::Root;
  t.depth = 0;
  t.created_round = created_round;
  t.corners = corners;
  t.env = {"left", "top", "right", "bottom"};
  tiles_.push_back(t);
  return static_cast<TileId>(tiles_.size() - 1);
}

Complex Complex::base(PastingMode mode) {
  Complex c;
  c.mode_ = mode;
  std::array<VertexId, 4> cs{};
  for (int i = 0; i < 4; ++i) {
    cs[i] = c.new_vertex(VertexKind::Corner, 0, 0);
    c.vertices_[cs[i]].birth = 0;
  }
  TileId root = c.new_root(0, 0, cs);
  c.planes_.push_back({root, kNone});
  // clockwise sides: top UL->UR, right UR->DR, bottom DR->DL, left DL->UL
  const std::array<std::pair<Side, std::pair<int, int>>, 4> sides = {{
      {Side::Top, {0, 1}}, {Side::Right, {1, 2}}, {Side::Bottom, {2, 3}}, {Side::Left, {3, 0}}}};
  for (const auto& [side, ends] : sides) {
    LineId l = c.new_line(0, root, 0, side, cs[ends.first], cs[ends.second], true, 0);
    c.tiles_[root].side_line[static_cast<int>(side)] = l;
    c.new_edge(cs[ends.first], cs[ends.second], l);
  }
  c.finalize();
  return c;
}

Complex Complex::grow(int level, PastingMode mode, std::size_t face_cap) {
  if (level < 1) throw Error("level must be positive");
  Complex c = base(mode);
  c.face_cap_ = face_cap;
  for (int i = 1; i < level; ++i) {
    c.subdivide();
    c.apply_pastings();
  }
  c.finalize();
  return c;
}

std::int64_t Complex::position_on(LineId l, VertexId v) const {
  const Line& L = lines_[l];
  if (v == L.start) return 0;
  if (v == L.end) return kLineLength;
  if (vertices_[v].owner_line == l) return vertices_[v].pos;
  throw Error("vertex " + std::to_string(v) + " is not on line " + std::to_string(l));
}

void Complex::subdivide() {
  ++round_;
  const int r = round_;
  std::vector<TileId> leaves;
  for (TileId t = 0; t < static_cast<TileId>(tiles_.size()); ++t)
    if (!tiles_[t].subdivided()) leaves.push_back(t);
  if (leaves.size() * 6 > face_cap_) throw ResourceError("face cap exceeded");

  std::unordered_map<std::uint64_t, VertexId> split;
  const std::size_t ne = edges_.size();
  for (std::size_t i = 0; i < ne; ++i) {
    const EdgeId e = static_cast<EdgeId>(i);
    const Edge old = edges_[e];
    const Line& L = lines_[old.line];
    VertexId m = new_vertex(VertexKind::Mid, L.plane, r);
    vertices_[m].owner_line = old.line;
    vertices_[m].pos = (position_on(old.line, old.a) + position_on(old.line, old.b)) / 2;
    edge_index_.erase(pair_key(std::min(old.a, old.b), std::max(old.a, old.b)));
    edges_[e].b = m;
    index_edge(e);
    auto& inc_b = incident_[old.b];
    inc_b.erase(std::find(inc_b.begin(), inc_b.end(), e));
    incident_[m].push_back(e);
    new_edge(m, old.b, old.line);
    split[pair_key(std::min(old.a, old.b), std::max(old.a, old.b))] = m;
  }
  // pasting sides keep the half that touches the core
  for (PastingRecord& p : pastings_)
    for (EdgeId* pe : {&p.e1_edge, &p.e2_edge})
      if (edges_[*pe].a != p.core && edges_[*pe].b != p.core) *pe = find_edge(edges_[*pe].b, p.core);

  auto mid_between = [&](VertexId x, VertexId y) {
    auto it = split.find(pair_key(std::min(x, y), std::max(x, y)));
    if (it == split.end()) throw Error("leaf side is not a single edge");
    return it->second;
  };
  for (TileId t : leaves) {
    const auto cs = tiles_[t].corners;
    std::array<VertexId, 4> mids = {mid_between(cs[3], cs[0]), mid_between(cs[0], cs[1]),
                                    mid_between(cs[1], cs[2]), mid_between(cs[2], cs[3])};
    subdivide_tile(t, mids, r);
  }
}

void Complex::subdivide_tile(TileId t, const std::array<VertexId, 4>& mids, int round) {
  const Tile parent = tiles_[t];
  const PlaneId plane = parent.plane;
  std::array<VertexId, 11> src{};
  for (int i = 0; i < 4; ++i) src[i] = parent.corners[i];
  for (int i = 0; i < 4; ++i) src[4 + i] = mids[i];
  const VertexKind kinds[3] = {VertexKind::A, VertexKind::B, VertexKind::C};
  for (int i = 0; i < 3; ++i) {
    src[8 + i] = new_vertex(kinds[i], plane, round);
    vertices_[src[8 + i]].birth = t;
  }
  std::array<LineId, 9> lines{};
  lines.fill(kNone);
  for (int k = 1; k <= 8; ++k) {
    const auto& spec = internal_lines()[k];
    lines[k] = new_line(plane, t, k, Side::Top, src[spec.start], src[spec.end], spec.main1_forward, round);
    new_edge(src[spec.start], src[spec.end], lines[k]);
  }
  std::array<TileId, 6> kids{};
  for (int i = 0; i < 6; ++i) {
    const auto& spec = subdivision_table()[i];
    Tile c;
    c.plane = plane;
    c.parent = t;
    c.pos = spec.pos;
    c.depth = parent.depth + 1;
    c.created_round = round;
    for (int j = 0; j < 4; ++j) c.corners[j] = src[spec.corners[j]];
    c.env = child_env(parent.env, spec.pos);
    for (int j = 0; j < 4; ++j)
      c.side_line[j] = spec.side_line[j] < 0 ? parent.side_line[-1 - spec.side_line[j]] : lines[spec.side_line[j]];
    tiles_.push_back(std::move(c));
    kids[i] = static_cast<TileId>(tiles_.size() - 1);
  }
  for (int s = 0; s < 4; ++s) vertices_[mids[s]].mid_of.push_back({t, static_cast<Side>(s)});
  Tile& T = tiles_[t];
  T.mids = mids;
  T.a = src[kA];
  T.b = src[kB];
  T.c = src[kC];
  T.line = lines;
  T.children = kids;
}

std::pair<VertexId, VertexId> Complex::walk_two(VertexId v, EdgeId e) const {
  VertexId w1 = other(e, v);
  const LineId l = edges_[e].line;
  for (EdgeId f : incident_[w1])
    if (f != e && edges_[f].line == l) return {w1, other(f, w1)};
  throw Error("pasting path leaves its line at vertex " + std::to_string(w1));
}

void Complex::paste(VertexId core, const PastingTrigger& trig, int round) {
  const PlaneId host = vertices_[core].base;
  EdgeId e1 = edge_by_name(core, trig.e1);
  EdgeId e2 = edge_by_name(core, trig.e2);
  if (e1 == kNone || e2 == kNone) throw Error("pasting rule selects a non-existent path");
  auto [w1, w2] = walk_two(core, e1);
  auto [x1, x2] = walk_two(core, e2);
  const PlaneId P = static_cast<PlaneId>(planes_.size());
  VertexId cdr = new_vertex(VertexKind::Corner, P, round);
  TileId root = new_root(P, round - 1, {core, w2, cdr, x2});
  vertices_[cdr].birth = root;
  planes_.push_back({root, static_cast<int>(pastings_.size())});
  tiles_[root].side_line[static_cast<int>(Side::Top)] = edges_[e1].line;
  tiles_[root].side_line[static_cast<int>(Side::Left)] = edges_[e2].line;
  LineId right = new_line(P, root, 0, Side::Right, w2, cdr, true, round);
  LineId bottom = new_line(P, root, 0, Side::Bottom, cdr, x2, true, round);
  tiles_[root].side_line[static_cast<int>(Side::Right)] = right;
  tiles_[root].side_line[static_cast<int>(Side::Bottom)] = bottom;
  VertexId rm = new_vertex(VertexKind::Mid, P, round);
  vertices_[rm].owner_line = right;
  vertices_[rm].pos = kLineLength / 2;
  VertexId dm = new_vertex(VertexKind::Mid, P, round);
  vertices_[dm].owner_line = bottom;
  vertices_[dm].pos = kLineLength / 2;
  new_edge(w2, rm, right);
  new_edge(rm, cdr, right);
  new_edge(cdr, dm, bottom);
  new_edge(dm, x2, bottom);

  PastingRecord rec;
  rec.core = core;
  rec.e1 = trig.e1;
  rec.e2 = trig.e2;
  rec.e1_edge = e1;
  rec.e2_edge = e2;
  rec.tile = root;
  rec.plane = P;
  rec.host = host;
  rec.round = round;
  pastings_.push_back(rec);
  subdivide_tile(root, {x1, w1, rm, dm}, round);
}

void Complex::apply_pastings() {
  if (mode_ == PastingMode::Flat) return;
  const int r = round_;
  const std::size_t nv = vertices_.size();
  for (std::size_t i = 0; i < nv; ++i) {
    const VertexId v = static_cast<VertexId>(i);
    const Vertex& vx = vertices_[v];
    if (mode_ == PastingMode::BaseOnly && vx.base != 0) continue;
    for (const auto& trig : pasting_rule()) {
      if (vx.created_round != r - trig.delay || vx.kind != trig.kind) continue;
      if (trig.line8_mid) {
        const Line& L = lines_[vx.owner_line];
        if (L.index != 8 || vx.created_round != L.created_round + 1 || vx.pos != kLineLength / 2) continue;
      }
      paste(v, trig, r);
      break;
    }
  }
}

// ==== Queries ====

std::vector<TileId> Complex::faces() const {
  std::vector<TileId> out;
  for (TileId t = 0; t < static_cast<TileId>(tiles_.size()); ++t)
    if (!tiles_[t].subdivided()) out.push_back(t);
  return out;
}

std::size_t Complex::num_faces() const {
  return static_cast<std::size_t>(std::count_if(tiles_.begin(), tiles_.end(),
                                                [](const Tile& t) { return !t.subdivided(); }));
}

std::vector<TileId> Complex::faces_of_plane(PlaneId p) const {
  std::vector<TileId> out;
  for (TileId t = 0; t < static_cast<TileId>(tiles_.size()); ++t)
    if (!tiles_[t].subdivided() && tiles_[t].plane == p) out.push_back(t);
  return out;
}

EdgeId Complex::find_edge(VertexId a, VertexId b) const {
  auto it = edge_index_.find(pair_key(std::min(a, b), std::max(a, b)));
  return it == edge_index_.end() ? kNone : it->second;
}

VertexId Complex::other(EdgeId e, VertexId v) const {
  const Edge& ed = edges_[e];
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  throw Error("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

namespace {

const char* name7(Position p) {
  switch (p) {
    case Position::LU: return "l2";
    case Position::RU: return "u3";
    case Position::M: return "mid1";
    case Position::LL: return "ld1";
    case Position::RL: return "r2";
    case Position::Bot: return "d1";
    case Position::Root: return "d2";
  }
  return "?";
}

const char* name8(Position p) {
  switch (p) {
    case Position::LU: return "lu";
    case Position::RU: return "ru";
    case Position::M: return "mid";
    case Position::LL: return "ld";
    case Position::RL: return "rd";
    case Position::Bot: return "?";
    case Position::Root: return "d2";
  }
  return "?";
}

const char* name8_bot(Position parent) {
  switch (parent) {
    case Position::LU: return "l3";
    case Position::RU: return "u4";
    case Position::M: return "mid2";
    case Position::LL: return "ld2";
    case Position::RL: return "r3";
    case Position::Bot: return "d2";
    case Position::Root: return "d3";
  }
  return "?";
}

}  // namespace

std::string Complex::edge_name(EdgeId e, VertexId v) const {
  const Edge& ed = edges_[e];
  if (v != ed.a && v != ed.b) throw Error("edge_name: vertex not on edge");
  const Line& L = lines_[ed.line];
  if (v != L.start && v != L.end) {
    const bool forward = ed.a == v;
    if (L.index == 0 && L.side == Side::Bottom && v == tiles_[L.owner].mid(Side::Bottom))
      return forward ? "l" : "r";
    return forward == L.main1_forward ? "1" : "2";
  }
  if (L.index == 0) {
    switch (L.side) {
      case Side::Top: return "u";
      case Side::Right: return "r";
      case Side::Bottom: return "d";
      case Side::Left: return "l";
    }
  }
  const bool at_start = v == L.start;
  const Tile& O = tiles_[L.owner];
  switch (L.index) {
    case 1: return at_start ? "u2" : "1";
    case 2: return at_start ? "u1" : "1";
    case 3: return at_start ? "l" : "3";
    case 4: return at_start ? "2" : "1";
    case 5: return at_start ? "2" : "3";
    case 6: return at_start ? "r" : "2";
    case 7: return at_start ? name7(O.pos) : "4";
    case 8:
      if (!at_start) return "3";
      if (O.pos == Position::Bot) return name8_bot(tiles_[O.parent].pos);
      return name8(O.pos);
    default: break;
  }
  throw Error("bad line index");
}

bool Complex::edge_hatted(EdgeId e, VertexId at) const {
  return edge_plane(e) != vertices_[at].base;
}

std::string Complex::edge_letter(EdgeId e, VertexId at) const {
  return (edge_hatted(e, at) ? "^" : "") + edge_name(e, at);
}

EdgeId Complex::edge_by_name(VertexId v, const std::string& letter) const {
  for (EdgeId e : incident_[v])
    if (edge_letter(e, v) == letter) return e;
  return kNone;
}

// ==== Rotation system ====

void Complex::finalize() {
  vplanes_.assign(vertices_.size(), {});
  rotation_.clear();
  boundary_.clear();
  std::unordered_map<std::uint64_t, std::vector<std::pair<EdgeId, EdgeId>>> next;
  for (TileId t = 0; t < static_cast<TileId>(tiles_.size()); ++t) {
    const Tile& T = tiles_[t];
    if (T.subdivided()) continue;
    const auto& c = T.corners;
    const EdgeId top = find_edge(c[0], c[1]);
    const EdgeId right = find_edge(c[1], c[2]);
    const EdgeId bottom = find_edge(c[2], c[3]);
    const EdgeId left = find_edge(c[3], c[0]);
    if (top == kNone || right == kNone || bottom == kNone || left == kNone)
      throw Error("face " + std::to_string(t) + " is not a 4-cycle");
    next[pair_key(T.plane, c[0])].push_back({top, left});
    next[pair_key(T.plane, c[1])].push_back({right, top});
    next[pair_key(T.plane, c[2])].push_back({bottom, right});
    next[pair_key(T.plane, c[3])].push_back({left, bottom});
    for (VertexId v : c) vplanes_[v].push_back(T.plane);
  }
  for (auto& ps : vplanes_) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  }
  for (auto& [key, pairs] : next) {
    const VertexId v = static_cast<VertexId>(key & 0xffffffffu);
    std::unordered_map<EdgeId, EdgeId> succ;
    std::unordered_map<EdgeId, int> has_pred;
    for (auto [a, b] : pairs) {
      succ[a] = b;
      has_pred[b] = 1;
    }
    EdgeId start = kNone;
    bool boundary = false;
    for (auto [a, b] : pairs)
      if (!has_pred.count(a)) {
        start = a;
        boundary = true;
        break;
      }
    if (!boundary) {
      const PlaneId p = static_cast<PlaneId>(key >> 32);
      for (auto [a, b] : pairs)
        if (edge_plane(a) == p && edge_letter(a, v) == "1") start = a;
      if (start == kNone) {
        start = pairs.front().first;
        for (auto [a, b] : pairs) start = std::min(start, a);
      }
    }
    std::vector<EdgeId> seq{start};
    for (auto it = succ.find(start); it != succ.end() && it->second != start; it = succ.find(it->second))
      seq.push_back(it->second);
    rotation_[key] = std::move(seq);
    boundary_[key] = boundary;
  }
}

const std::vector<EdgeId>& Complex::rotation(PlaneId p, VertexId v) const {
  auto it = rotation_.find(pair_key(p, v));
  if (it == rotation_.end()) throw Error("vertex " + std::to_string(v) + " not in plane " + std::to_string(p));
  return it->second;
}

bool Complex::on_plane_boundary(PlaneId p, VertexId v) const {
  auto it = boundary_.find(pair_key(p, v));
  if (it == boundary_.end()) throw Error("vertex not in plane");
  return it->second;
}

std::vector<std::pair<TileId, Side>> Complex::mid_of_in(VertexId v, PlaneId p) const {
  std::vector<std::pair<TileId, Side>> out;
  for (const auto& ms : vertices_[v].mid_of)
    if (tiles_[ms.first].plane == p) out.push_back(ms);
  return out;
}

TileId Complex::ul_leaf(TileId t) const {
  while (tiles_[t].subdivided()) t = tiles_[t].children[0];
  return t;
}

std::pair<VertexId, VertexId> Complex::side_ends(TileId t, Side s) const {
  const auto& c = tiles_[t].corners;
  switch (s) {
    case Side::Top: return {c[0], c[1]};
    case Side::Right: return {c[1], c[2]};
    case Side::Bottom: return {c[2], c[3]};
    case Side::Left: return {c[3], c[0]};
  }
  return {kNone, kNone};
}

EdgeId Complex::side_exit(TileId t, Side s, VertexId from) const {
  const LineId l = tiles_[t].side_line[static_cast<int>(s)];
  auto [p, q] = side_ends(t, s);
  if (from != p && from != q) throw Error("side_exit: vertex is not an end of the side");
  const VertexId to = from == p ? q : p;
  const std::int64_t pf = position_on(l, from), pt = position_on(l, to);
  for (EdgeId e : incident_[from]) {
    if (edges_[e].line != l) continue;
    const std::int64_t pw = position_on(l, other(e, from));
    if ((pw > pf) == (pt > pf)) return e;
  }
  throw Error("side_exit: no edge along side");
}

std::vector<int> Complex::bfs(VertexId from) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::deque<VertexId> q{from};
  dist.at(from) = 0;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    for (EdgeId e : incident_[v]) {
      VertexId w = other(e, v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

int Complex::geodesic_distance(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= static_cast<VertexId>(vertices_.size()) ||
      v >= static_cast<VertexId>(vertices_.size()))
    throw Error("vertex not found");
  return bfs(u)[v];
}

// ==== Export ====

namespace {
std::string edge_type(const Complex& c, EdgeId e) {
  const Line& L = c.line(c.edge(e).line);
  if (L.index == 0) return to_string(L.side);
  return std::to_string(L.index) + "A/" + std::to_string(L.index) + "B";
}
}  // namespace

nlohmann::json Complex::to_json() const {
  using nlohmann::json;
  json j;
  j["level"] = level();
  j["pasting_mode"] = to_string(mode_);
  json vs = json::array();
  for (VertexId v = 0; v < static_cast<VertexId>(vertices_.size()); ++v)
    vs.push_back({{"id", v}, {"plane", vertices_[v].base}});
  json es = json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e)
    es.push_back({{"a", edges_[e].a}, {"b", edges_[e].b}, {"plane", edge_plane(e)}, {"type", edge_type(*this, e)}});
  json fs = json::array();
  for (TileId t : faces()) {
    const Tile& T = tiles_[t];
    fs.push_back({{"id", t},
                  {"corners", T.corners},
                  {"position", to_string(T.pos)},
                  {"macrotile", T.parent},
                  {"plane", T.plane},
                  {"env", T.env}});
  }
  json ps = json::array();
  for (const auto& p : pastings_)
    ps.push_back({{"core", p.core}, {"e1", p.e1}, {"e2", p.e2}, {"tile", p.tile}, {"plane", p.plane}});
  j["vertices"] = vs;
  j["edges"] = es;
  j["faces"] = fs;
  j["pastings"] = ps;
  return j;
}

std::string Complex::to_dot(PlaneId p) const {
  std::ostringstream os;
  os << "graph plane" << p << " {\n";
  std::vector<char> seen(edges_.size(), 0);
  for (TileId t : faces_of_plane(p)) {
    const auto& c = tiles_[t].corners;
    for (int i = 0; i < 4; ++i) {
      EdgeId e = find_edge(c[i], c[(i + 1) % 4]);
      if (seen[e]) continue;
      seen[e] = 1;
      os << "  " << edges_[e].a << " -- " << edges_[e].b << " [label=\"" << edge_type(*this, e) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

nlohmann::json Complex::to_cache() const {
  using nlohmann::json;
  json j;
  j["round"] = round_;
  j["mode"] = to_string(mode_);
  j["face_cap"] = face_cap_;
  json vs = json::array();
  for (const auto& v : vertices_) {
    json mo = json::array();
    for (auto [t, s] : v.mid_of) mo.push_back({t, static_cast<int>(s)});
    vs.push_back({static_cast<int>(v.kind), v.base, v.birth, v.owner_line, v.pos, v.created_round, mo});
  }
  json es = json::array();
  for (const auto& e : edges_) es.push_back({e.a, e.b, e.line});
  json ls = json::array();
  for (const auto& l : lines_)
    ls.push_back({l.plane, l.owner, l.index, static_cast<int>(l.side), l.start, l.end, l.main1_forward, l.created_round});
  json ts = json::array();
  for (const auto& t : tiles_)
    ts.push_back({t.plane, t.parent, static_cast<int>(t.pos), t.depth, t.created_round, t.corners, t.env,
                  t.side_line, t.children, t.mids, t.a, t.b, t.c, t.line});
  json ps = json::array();
  for (const auto& p : planes_) ps.push_back({p.root, p.pasting});
  json rs = json::array();
  for (const auto& p : pastings_)
    rs.push_back({p.core, p.e1, p.e2, p.e1_edge, p.e2_edge, p.tile, p.plane, p.host, p.round});
  j["vertices"] = vs;
  j["edges"] = es;
  j["lines"] = ls;
  j["tiles"] = ts;
  j["planes"] = ps;
  j["pastings"] = rs;
  return j;
}

Complex Complex::from_cache(const nlohmann::json& j) {
  Complex c;
  c.round_ = j.at("round").get<int>();
  c.mode_ = parse_pasting_mode(j.at("mode").get<std::string>());
  c.face_cap_ = j.at("face_cap").get<std::size_t>();
  for (const auto& a : j.at("vertices")) {
    Vertex v;
    v.kind = static_cast<VertexKind>(a[0].get<int>());
    v.base = a[1];
    v.birth = a[2];
    v.owner_line = a[3];
    v.pos = a[4];
    v.created_round = a[5];
    for (const auto& m : a[6]) v.mid_of.push_back({m[0].get<TileId>(), static_cast<Side>(m[1].get<int>())});
    c.vertices_.push_back(std::move(v));
  }
  for (const auto& a : j.at("edges")) c.edges_.push_back({a[0], a[1], a[2]});
  for (const auto& a : j.at("lines")) {
    Line l;
    l.plane = a[0];
    l.owner = a[1];
    l.index = a[2];
    l.side = static_cast<Side>(a[3].get<int>());
    l.start = a[4];
    l.end = a[5];
    l.main1_forward = a[6];
    l.created_round = a[7];
    c.lines_.push_back(l);
  }
  for (const auto& a : j.at("tiles")) {
    Tile t;
    t.plane = a[0];
    t.parent = a[1];
    t.pos = static_cast<Position>(a[2].get<int>());
    t.depth = a[3];
    t.created_round = a[4];
    t.corners = a[5].get<std::array<VertexId, 4>>();
    t.env = a[6].get<std::array<std::string, 4>>();
    t.side_line = a[7].get<std::array<LineId, 4>>();
    t.children = a[8].get<std::array<TileId, 6>>();
    t.mids = a[9].get<std::array<VertexId, 4>>();
    t.a = a[10];
    t.b = a[11];
    t.c = a[12];
    t.line = a[13].get<std::array<LineId, 9>>();
    c.tiles_.push_back(std::move(t));
  }
  for (const auto& a : j.at("planes")) c.planes_.push_back({a[0], a[1]});
  for (const auto& a : j.at("pastings")) {
    PastingRecord p;
    p.core = a[0];
    p.e1 = a[1];
    p.e2 = a[2];
    p.e1_edge = a[3];
    p.e2_edge = a[4];
    p.tile = a[5];
    p.plane = a[6];
    p.host = a[7];
    p.round = a[8];
    c.pastings_.push_back(std::move(p));
  }
  c.rebuild_indices();
  c.finalize();
  return c;
}

void Complex::rebuild_indices() {
  incident_.assign(vertices_.size(), {});
  edge_index_.clear();
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    incident_[edges_[e].a].push_back(e);
    incident_[edges_[e].b].push_back(e);
    index_edge(e);
  }
}

}  // namespace nilcomplex
