#include "nilcomplex/labeler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace nilcomplex {

std::string role_text(const Role& r) {
  return r.type + "|" + (r.level ? std::to_string(r.level) : std::string("-")) + "|" + r.env;
}

bool is_side_pair(const std::string& type) {
  return type.size() == 2 && std::string("LURD").find(type[0]) != std::string::npos &&
         std::string("LURD").find(type[1]) != std::string::npos;
}

bool is_corner_type(const std::string& type) {
  return type == "CUL" || type == "CUR" || type == "CDR" || type == "CDL";
}

int Chain::index_of(VertexId v) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].v == v) return static_cast<int>(i);
  return kNone;
}

namespace {

const char* side_letter(Side s) {
  switch (s) {
    case Side::Left: return "L";
    case Side::Top: return "U";
    case Side::Right: return "R";
    case Side::Bottom: return "D";
  }
  return "?";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string env_tuple(const Tile& t, LineId abstract_line = kNone) {
  std::vector<std::string> toks;
  for (int i = 0; i < 4; ++i) {
    std::string tok = t.env[i];
    if (abstract_line != kNone && t.side_line[i] == abstract_line) {
      const char last = tok.back();
      tok = (last == 'A' || last == 'B') ? std::string("x") + last : std::string("x");
    }
    toks.push_back(tok);
  }
  return "(" + join(toks, ",") + ")";
}

const char* const kCornerTypes[4] = {"CUL", "CUR", "CDR", "CDL"};

}  // namespace

Labeling::Labeling(const Complex& c, Alphabet& alphabet) : c_(c), alpha_(alphabet) {
  build_chains();
  build_roles();
  build_info();
  build_letters();
}

int Labeling::birth_depth(VertexId v, PlaneId p) const {
  const Tile& root = c_.tile(c_.planes()[p].root);
  for (VertexId k : root.corners)
    if (k == v) return -1;
  const Vertex& vx = c_.vertex(v);
  if (vx.base == p && (vx.kind == VertexKind::A || vx.kind == VertexKind::B || vx.kind == VertexKind::C))
    return c_.tile(vx.birth).depth;
  auto ms = c_.mid_of_in(v, p);
  if (ms.empty()) throw Error("vertex " + std::to_string(v) + " has no birth tile in plane " + std::to_string(p));
  return c_.tile(ms.front().first).depth;
}

std::string Labeling::mark(VertexId m, PlaneId p, LineId abstract_line) const {
  auto ms = c_.mid_of_in(m, p);
  if (ms.size() == 1) return env_tuple(c_.tile(ms[0].first), abstract_line);
  if (ms.size() != 2) throw Error("vertex " + std::to_string(m) + " bisects " + std::to_string(ms.size()) + " sides");
  const int k = c_.line(c_.vertex(m).owner_line).index;
  const std::string a_tok = std::to_string(k) + "A";
  auto [t0, s0] = ms[0];
  auto [t1, s1] = ms[1];
  if (c_.tile(t0).env[static_cast<int>(s0)] != a_tok) std::swap(t0, t1);
  return env_tuple(c_.tile(t0), abstract_line) + "-" + env_tuple(c_.tile(t1), abstract_line);
}

void Labeling::build_chains() {
  std::map<std::tuple<PlaneId, VertexId, int>, std::vector<TileId>> groups;
  for (TileId t = 0; t < static_cast<TileId>(c_.tiles().size()); ++t) {
    const Tile& T = c_.tile(t);
    if (T.subdivided()) groups[{T.plane, T.corner(Corner::UL), T.depth}].push_back(t);
  }
  for (const auto& [key, tiles] : groups) {
    const auto [p, x, depth] = key;
    Chain ch;
    ch.center = x;
    ch.plane = p;
    ch.depth = depth;
    ch.level = depth - birth_depth(x, p) - 1;
    ch.tiles = tiles;
    std::set<VertexId> seen;
    for (TileId t : tiles) {
      for (Side s : {Side::Top, Side::Left}) {
        VertexId m = c_.tile(t).mid(s);
        if (!seen.insert(m).second) continue;
        EdgeId e = c_.side_exit(t, s, x);
        // a pasting path edge is named as a root side of the pasted plane
        std::string ptr = c_.edge_plane(e) == p ? c_.edge_letter(e, x) : (s == Side::Top ? "u" : "l");
        ch.members.push_back({m, e, ptr});
      }
    }
    const auto& rot = c_.rotation(p, x);
    auto rank = [&](EdgeId e) {
      auto it = std::find(rot.begin(), rot.end(), e);
      if (it == rot.end()) throw Error("chain exit not in rotation");
      return it - rot.begin();
    };
    std::sort(ch.members.begin(), ch.members.end(),
              [&](const ChainMember& a, const ChainMember& b) { return rank(a.exit) < rank(b.exit); });
    const Vertex& cx = c_.vertex(x);
    const LineId own = cx.kind == VertexKind::Mid ? cx.owner_line : kNone;
    std::vector<std::string> marks, cmarks;
    for (const auto& m : ch.members) {
      marks.push_back(mark(m.v, p, kNone));
      cmarks.push_back(mark(m.v, p, own));
    }
    ch.env = "[" + join(marks, ";") + "]";
    ch.census_env = "[" + join(cmarks, ";") + "]";
    const int idx = static_cast<int>(chains_.size());
    for (const auto& m : ch.members) {
      auto [it, fresh] = member_chain_.emplace(pair_key(p, m.v), idx);
      if (!fresh) throw Error("vertex " + std::to_string(m.v) + " belongs to two chains");
    }
    chains_.push_back(std::move(ch));
  }
}

const Chain* Labeling::chain_of(VertexId v, PlaneId p) const {
  auto it = member_chain_.find(pair_key(p, v));
  return it == member_chain_.end() ? nullptr : &chains_[it->second];
}

void Labeling::build_roles() {
  for (VertexId v = 0; v < static_cast<VertexId>(c_.num_vertices()); ++v) {
    const Vertex& vx = c_.vertex(v);
    for (PlaneId p : c_.planes_of(v)) {
      Role r;
      const Tile& root = c_.tile(c_.planes()[p].root);
      int corner = kNone;
      for (int i = 0; i < 4; ++i)
        if (root.corners[i] == v) corner = i;
      auto set_chain = [&]() {
        auto it = member_chain_.find(pair_key(p, v));
        if (it == member_chain_.end()) throw Error("chain member without chain: " + std::to_string(v));
        const Chain& ch = chains_[it->second];
        const std::string& ptr = ch.members[ch.index_of(v)].pointer;
        r.env = ch.env + "#" + ptr;
        r.census_env = ch.census_env + "#" + ptr;
        r.chain = it->second;
      };
      if (corner != kNone) {
        r.type = kCornerTypes[corner];
        r.env = r.census_env = "(left,top,right,bottom)";
      } else if (vx.base == p && (vx.kind == VertexKind::A || vx.kind == VertexKind::B || vx.kind == VertexKind::C)) {
        r.type = to_string(vx.kind);
        r.env = r.census_env = env_tuple(c_.tile(vx.birth));
      } else {
        auto ms = c_.mid_of_in(v, p);
        if (ms.size() == 1) {
          auto [t, s] = ms[0];
          r.type = side_letter(s);
          r.level = std::min(c_.tile_level(t) - 1, 3);
          if (s == Side::Top || s == Side::Left) set_chain();
          else r.env = r.census_env = env_tuple(c_.tile(t));
        } else if (ms.size() == 2) {
          const int k = c_.line(vx.owner_line).index;
          const std::string a_tok = std::to_string(k) + "A";
          auto [t0, s0] = ms[0];
          auto [t1, s1] = ms[1];
          if (c_.tile(t0).env[static_cast<int>(s0)] != a_tok) {
            std::swap(t0, t1);
            std::swap(s0, s1);
          }
          r.type = std::string(side_letter(s0)) + side_letter(s1);
          r.level = std::min(c_.tile_level(t0) - 1, 3);
          if (r.type == "RD" || r.type == "DR") r.env = r.census_env = std::to_string(k);
          else set_chain();
        } else {
          throw Error("cannot classify vertex " + std::to_string(v));
        }
      }
      roles_.emplace(pair_key(p, v), std::move(r));
    }
  }
}

bool Labeling::has_role(VertexId v, PlaneId p) const { return roles_.count(pair_key(p, v)) > 0; }

const Role& Labeling::role(VertexId v, PlaneId p) const {
  auto it = roles_.find(pair_key(p, v));
  if (it == roles_.end())
    throw Error("vertex " + std::to_string(v) + " is not in plane " + std::to_string(p));
  return it->second;
}

std::string Labeling::ext_env(VertexId v) const {
  std::vector<std::string> others;
  for (PlaneId p : c_.planes_of(v))
    if (p != c_.vertex(v).base) others.push_back(role_text(role(v, p)));
  std::sort(others.begin(), others.end());
  return "B:" + role_text(base_role(v)) + (others.empty() ? "" : " P:" + join(others, ","));
}

std::string Labeling::triple(VertexId w, PlaneId p) const {
  return "[" + role_text(role(w, p)) + "/" + ext_env(w) + "]";
}

TileId Labeling::info_tile(VertexId v) const {
  const Vertex& vx = c_.vertex(v);
  switch (vx.kind) {
    case VertexKind::A:
    case VertexKind::B:
    case VertexKind::C: return vx.birth;
    case VertexKind::Mid: {
      const Line& L = c_.line(vx.owner_line);
      return L.index == 0 ? kNone : L.owner;
    }
    case VertexKind::Corner: return kNone;
  }
  return kNone;
}

void Labeling::build_info() {
  const auto nv = c_.num_vertices();
  info_.assign(nv, "");
  flag_.assign(nv, "");
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
    const Vertex& vx = c_.vertex(v);
    const PlaneId p = vx.base;
    if (vx.kind == VertexKind::Corner) {
      const Tile& root = c_.tile(c_.planes()[p].root);
      if (root.corner(Corner::DR) == v) info_[v] = "F=" + triple(root.corner(Corner::DL), p);
      continue;
    }
    const TileId t = info_tile(v);
    if (t == kNone) continue;
    const Tile& T = c_.tile(t);
    int bosses = 1;
    if (vx.kind == VertexKind::B) bosses = 2;
    else if (vx.kind == VertexKind::C) bosses = 3;
    else if (vx.kind == VertexKind::Mid) {
      const int k = c_.line(vx.owner_line).index;
      bosses = (k == 2 || k == 5 || k == 6) ? 2 : (k == 7 || k == 8) ? 3 : 1;
    }
    std::string s = "F=" + triple(T.mid(Side::Top), p);
    if (bosses == 2) s += ";DR=" + role(T.corner(Corner::DR), p).type;
    if (bosses == 3)
      s += ";S=" + triple(T.corner(Corner::DL), p) + ";T=" + triple(T.corner(Corner::DR), p);
    info_[v] = s;
  }
  for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
    const Plane& pl = c_.planes()[c_.vertex(v).base];
    if (pl.pasting == kNone) continue;
    const PastingRecord& rec = c_.pastings()[pl.pasting];
    flag_[v] = role_text(base_role(rec.core)) + "/" + info_[rec.core] + "/" + rec.e1 + "," + rec.e2;
  }
}

void Labeling::build_letters() {
  for (const auto& [key, r] : roles_) role_part_[key] = 0;
  // intern in vertex order for deterministic ids
  for (VertexId v = 0; v < static_cast<VertexId>(c_.num_vertices()); ++v)
    for (PlaneId p : c_.planes_of(v)) role_part_[pair_key(p, v)] = alpha_.part(role_text(role(v, p)));
  info_part_.resize(c_.num_vertices());
  flag_part_.resize(c_.num_vertices());
  for (VertexId v = 0; v < static_cast<VertexId>(c_.num_vertices()); ++v) {
    info_part_[v] = alpha_.part(info_[v]);
    flag_part_[v] = alpha_.part(flag_[v]);
  }
  edge_letters_.resize(2 * c_.num_edges());
  for (EdgeId e = 0; e < static_cast<EdgeId>(c_.num_edges()); ++e) {
    edge_letters_[2 * e] = alpha_.edge_letter(c_.edge_letter(e, c_.edge(e).a));
    edge_letters_[2 * e + 1] = alpha_.edge_letter(c_.edge_letter(e, c_.edge(e).b));
  }
}

VertexLetterParts Labeling::vertex_parts(VertexId v, PlaneId in_plane, PlaneId out_plane) const {
  const PlaneId base = c_.vertex(v).base;
  auto part_of = [&](PlaneId p) -> std::uint32_t {
    if (p == kNone || p == base) return 0;
    auto it = role_part_.find(pair_key(p, v));
    if (it == role_part_.end()) throw Error("plane not incident to vertex");
    return it->second;
  };
  VertexLetterParts parts;
  parts.in = part_of(in_plane);
  parts.base = role_part_.at(pair_key(base, v));
  parts.out = part_of(out_plane);
  parts.info = info_part_[v];
  parts.flag = flag_part_[v];
  return parts;
}

LetterId Labeling::vertex_letter(VertexId v, PlaneId in_plane, PlaneId out_plane) const {
  return alpha_.vertex_letter(vertex_parts(v, in_plane, out_plane));
}

LetterId Labeling::edge_letter(EdgeId e, VertexId at) const {
  const Edge& ed = c_.edge(e);
  if (at == ed.a) return edge_letters_[2 * e];
  if (at == ed.b) return edge_letters_[2 * e + 1];
  throw Error("edge_letter: vertex not on edge");
}

}  // namespace nilcomplex
