#include "nilcomplex/node_functions.hpp"

#include <algorithm>

namespace nilcomplex {

const std::vector<NodeFunction>& all_node_functions() {
  static const std::vector<NodeFunction> fs = {
      NodeFunction::TopFromCorner, NodeFunction::RightCorner,    NodeFunction::TopRightType,
      NodeFunction::BottomLeftType, NodeFunction::LevelPlus,     NodeFunction::BottomRightTypeFromRight,
      NodeFunction::TopFromRight,  NodeFunction::Next,           NodeFunction::Prev,
      NodeFunction::BottomRightType, NodeFunction::RightFromB,
  };
  return fs;
}

const char* to_string(NodeFunction f) {
  switch (f) {
    case NodeFunction::TopFromCorner: return "TopFromCorner";
    case NodeFunction::RightCorner: return "RightCorner";
    case NodeFunction::TopRightType: return "TopRightType";
    case NodeFunction::BottomLeftType: return "BottomLeftType";
    case NodeFunction::LevelPlus: return "LevelPlus";
    case NodeFunction::BottomRightTypeFromRight: return "BottomRightTypeFromRight";
    case NodeFunction::TopFromRight: return "TopFromRight";
    case NodeFunction::Next: return "Next";
    case NodeFunction::Prev: return "Prev";
    case NodeFunction::BottomRightType: return "BottomRightType";
    case NodeFunction::RightFromB: return "RightFromB";
  }
  return "?";
}

NodeFunction parse_node_function(const std::string& s) {
  for (NodeFunction f : all_node_functions())
    if (s == to_string(f)) return f;
  throw Error("unknown node function: " + s);
}

namespace {

// role text of v relative to plane p
std::string env_key(const Labeling& L, VertexId v, PlaneId p) {
  return role_text(L.role(v, p));
}

// type of v in plane p, plus the index of its line for side vertices
std::string type_key(const Labeling& L, VertexId v, PlaneId p) {
  const Complex& c = L.complex();
  std::string s = L.role(v, p).type;
  const Vertex& vx = c.vertex(v);
  if (vx.kind == VertexKind::Mid && !is_corner_type(s)) s += "@" + std::to_string(c.line(vx.owner_line).index);
  return s;
}

// the full vertex letter of v in plane p
std::string with_info(const Labeling& L, VertexId v, PlaneId p) {
  return env_key(L, v, p) + " ; " + L.info(v) + " ; " + L.flag(v);
}

// on the outer boundary of the finite complex, where roles depend on the truncation
bool on_outer_boundary(const Complex& c, VertexId v) {
  const auto& ps = c.planes_of(v);
  return std::find(ps.begin(), ps.end(), PlaneId{0}) != ps.end() && c.on_plane_boundary(0, v);
}

bool touches_boundary(const Complex& c, std::initializer_list<VertexId> vs) {
  for (VertexId v : vs)
    if (on_outer_boundary(c, v)) return true;
  return false;
}

void tile_sites(const Labeling& L, NodeFunction f, TileId t, std::vector<NodeApplication>& out) {
  const Complex& c = L.complex();
  const Tile& T = c.tile(t);
  if (!T.subdivided()) return;
  const PlaneId p = T.plane;
  const VertexId dl = T.corner(Corner::DL), dr = T.corner(Corner::DR), ur = T.corner(Corner::UR);
  const VertexId u = T.mid(Side::Top), r = T.mid(Side::Right);
  if (touches_boundary(c, {dl, dr, ur, u, r, T.b, T.corner(Corner::UL)})) return;
  NodeApplication a;
  a.tile = t;
  switch (f) {
    case NodeFunction::TopFromCorner:
    case NodeFunction::RightCorner: {
      a.arg = dl;
      a.args = with_info(L, dl, p) + " ; " + c.edge_letter(c.side_exit(t, Side::Bottom, dl), dl);
      a.value = f == NodeFunction::TopFromCorner ? env_key(L, u, p) : env_key(L, dr, p);
      break;
    }
    case NodeFunction::TopRightType:
      a.arg = u;
      a.args = with_info(L, u, p);
      a.value = type_key(L, ur, p);
      break;
    case NodeFunction::BottomLeftType:
      a.arg = u;
      a.args = with_info(L, u, p);
      a.value = type_key(L, dl, p);
      break;
    case NodeFunction::LevelPlus: {
      const TileId lu = T.children[static_cast<int>(Position::LU)];
      if (!c.tile(lu).subdivided()) return;
      a.arg = u;
      a.args = with_info(L, u, p);
      a.value = env_key(L, c.tile(lu).mid(Side::Top), p);
      break;
    }
    case NodeFunction::BottomRightTypeFromRight:
    case NodeFunction::TopFromRight:
      if (c.vertex(r).base != p) return;
      a.arg = r;
      a.args = with_info(L, r, p);
      a.value = f == NodeFunction::TopFromRight ? env_key(L, u, p) : type_key(L, dr, p);
      break;
    case NodeFunction::BottomRightType:
      if (c.vertex(u).base != p) return;
      a.arg = u;
      a.args = with_info(L, u, p);
      a.value = type_key(L, dr, p);
      break;
    case NodeFunction::RightFromB:
      a.arg = T.b;
      a.args = with_info(L, T.b, p);
      a.value = env_key(L, r, p);
      break;
    default: return;
  }
  out.push_back(std::move(a));
}

void chain_sites(const Labeling& L, NodeFunction f, const Chain& ch, std::vector<NodeApplication>& out) {
  const int n = static_cast<int>(ch.members.size());
  const int step = f == NodeFunction::Next ? 1 : -1;
  for (int i = 0; i < n; ++i) {
    const int j = i + step;
    if (j < 0 || j >= n) continue;
    NodeApplication a;
    a.arg = ch.members[i].v;
    if (touches_boundary(L.complex(), {a.arg, ch.members[j].v})) continue;
    a.args = with_info(L, a.arg, ch.plane);
    a.value = env_key(L, ch.members[j].v, ch.plane);
    out.push_back(std::move(a));
  }
}

bool is_chain_function(NodeFunction f) { return f == NodeFunction::Next || f == NodeFunction::Prev; }

}  // namespace

std::vector<NodeApplication> node_function_sites(const Labeling& L, NodeFunction f) {
  std::vector<NodeApplication> out;
  if (is_chain_function(f)) {
    for (const Chain& ch : L.chains()) chain_sites(L, f, ch, out);
  } else {
    for (TileId t = 0; t < static_cast<TileId>(L.complex().tiles().size()); ++t) tile_sites(L, f, t, out);
  }
  return out;
}

std::vector<NodeApplication> node_function_at(const Labeling& L, NodeFunction f, VertexId v) {
  std::vector<NodeApplication> out;
  for (auto& a : node_function_sites(L, f))
    if (a.arg == v) out.push_back(std::move(a));
  return out;
}

void FunctionalityTable::add(const Labeling& L, NodeFunction f) {
  Entry& e = entries_[f];
  for (auto& a : node_function_sites(L, f)) {
    ++e.sites;
    auto [it, fresh] = e.by_args.emplace(a.args, a);
    if (fresh || it->second.value == a.value) continue;
    ++e.violations;
    if (e.witnesses.size() < 8) e.witnesses.emplace_back(it->second, a);
  }
}

FunctionalityReport FunctionalityTable::report(NodeFunction f) const {
  FunctionalityReport r;
  r.f = f;
  auto it = entries_.find(f);
  if (it == entries_.end()) return r;
  r.sites = it->second.sites;
  r.distinct_args = it->second.by_args.size();
  r.violations = it->second.violations;
  r.witnesses = it->second.witnesses;
  return r;
}

// ==== Chains and pointers ====

const Chain* chain_of(const Labeling& L, VertexId v) {
  return L.chain_of(v, L.complex().vertex(v).base);
}

std::string pointer_of(const Labeling& L, VertexId v) {
  const Chain* ch = chain_of(L, v);
  if (!ch) throw Error("vertex " + std::to_string(v) + " is not a chain member");
  return ch->members[ch->index_of(v)].pointer;
}

// ==== Corner edges ====

const char* to_string(CornerEdge e) {
  switch (e) {
    case CornerEdge::E7: return "E7";
    case CornerEdge::E8: return "E8";
    case CornerEdge::E_ld: return "E_ld";
    case CornerEdge::E_rd: return "E_rd";
    case CornerEdge::E_ur: return "E_ur";
    case CornerEdge::E_ddl: return "E_ddl";
    case CornerEdge::E_ddr: return "E_ddr";
  }
  return "?";
}

std::string corner_edge_code(const Complex& c, TileId t, CornerEdge which) {
  const Tile& T = c.tile(t);
  auto on_line = [&](VertexId v, LineId l, EdgeId skip) -> EdgeId {
    for (EdgeId e : c.incident(v))
      if (c.edge(e).line == l && e != skip) return e;
    return kNone;
  };
  auto fail = [&]() -> std::string {
    throw Error(std::string("tile ") + std::to_string(t) + " has no corner edge " + to_string(which));
  };
  // continuation of side s beyond corner k
  auto beyond = [&](Side s, Corner k) {
    const VertexId v = T.corner(k);
    const EdgeId own = c.side_exit(t, s, v);
    const EdgeId e = on_line(v, T.side_line[static_cast<int>(s)], own);
    return e == kNone ? fail() : c.edge_letter(e, v);
  };
  switch (which) {
    case CornerEdge::E7:
    case CornerEdge::E8: {
      if (!T.subdivided()) return fail();
      const VertexId v = T.corner(which == CornerEdge::E7 ? Corner::DL : Corner::DR);
      const EdgeId e = on_line(v, T.line[which == CornerEdge::E7 ? 7 : 8], kNone);
      return e == kNone ? fail() : c.edge_letter(e, v);
    }
    case CornerEdge::E_ddl: return c.edge_letter(c.side_exit(t, Side::Bottom, T.corner(Corner::DL)), T.corner(Corner::DL));
    case CornerEdge::E_ddr: return c.edge_letter(c.side_exit(t, Side::Bottom, T.corner(Corner::DR)), T.corner(Corner::DR));
    case CornerEdge::E_ld: return beyond(Side::Left, Corner::DL);
    case CornerEdge::E_rd: return beyond(Side::Right, Corner::DR);
    case CornerEdge::E_ur: return beyond(Side::Right, Corner::UR);
  }
  return fail();
}

// ==== Pasting cores ====

const std::map<std::pair<std::string, std::string>, std::string>& core_exit_table() {
  static const std::map<std::pair<std::string, std::string>, std::string> t = {
      {{"A", "1"}, "1"},     {{"A", "2"}, "2"},     {{"A", "3"}, "2"},     {{"A", "lu"}, "2"},
      {{"A", "ld"}, "2"},    {{"B", "1"}, "2"},     {{"B", "2"}, "1"},     {{"B", "3"}, "1"},
      {{"B", "ru"}, "2"},    {{"B", "mid"}, "2"},   {{"B", "rd"}, "2"},    {{"C", "1"}, "1"},
      {{"C", "2"}, "2"},     {{"C", "3"}, "1"},     {{"C", "4"}, "2"},     {{"C", "ld1"}, "1"},
      {{"C", "ld2"}, "2"},   {{"C", "mid1"}, "1"},  {{"C", "mid2"}, "2"},  {{"C", "d1"}, "1"},
      {{"C", "d2"}, "2"},    {{"side", "1"}, "2"},  {{"side", "2"}, "1"},  {{"side", "u1"}, "1"},
      {{"side", "u2"}, "2"}, {{"side", "u3"}, "1"}, {{"side", "u4"}, "2"}, {{"side", "l"}, "1"},
      {{"side", "l2"}, "1"}, {{"side", "l3"}, "2"}, {{"side", "r"}, "2"},  {{"side", "r2"}, "1"},
      {{"side", "r3"}, "2"},
  };
  return t;
}

bool is_pasting_core(const Complex& c, VertexId v) {
  for (const auto& rec : c.pastings())
    if (rec.core == v) return true;
  return false;
}

namespace {

EdgeId host_edge_named(const Complex& c, VertexId v, const std::string& name) {
  const PlaneId base = c.vertex(v).base;
  for (EdgeId e : c.incident(v))
    if (c.edge_plane(e) == base && c.edge_letter(e, v) == name) return e;
  return kNone;
}

// split at top-level separators, ignoring those inside brackets
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int boss_count(const Complex& c, VertexId x) {
  const Vertex& vx = c.vertex(x);
  switch (vx.kind) {
    case VertexKind::A: return 1;
    case VertexKind::B: return 2;
    case VertexKind::C: return 3;
    case VertexKind::Mid: {
      const int k = c.line(vx.owner_line).index;
      if (k == 0) return 0;
      return (k == 2 || k == 5 || k == 6) ? 2 : (k == 7 || k == 8) ? 3 : 1;
    }
    case VertexKind::Corner: return 0;
  }
  return 0;
}

}  // namespace

CoreAdjacent core_adjacent(const Labeling& L, VertexId core, const std::string& in_name, const std::string& out_name) {
  const Complex& c = L.complex();
  if (!is_pasting_core(c, core)) throw Error("vertex " + std::to_string(core) + " is not a pasting core");
  const EdgeId ein = host_edge_named(c, core, in_name);
  const EdgeId eout = host_edge_named(c, core, out_name);
  if (ein == kNone || eout == kNone) throw Error("core " + std::to_string(core) + " has no such edge");
  return {c.edge_letter(ein, c.other(ein, core)), c.edge_letter(eout, c.other(eout, core))};
}

NearCoreInfo info_near_core(const Labeling& L, VertexId core, VertexId x) {
  const Complex& c = L.complex();
  if (!is_pasting_core(c, core)) throw Error("vertex " + std::to_string(core) + " is not a pasting core");
  const EdgeId e = c.find_edge(core, x);
  bool on_side = false;
  for (const auto& rec : c.pastings())
    if (rec.core == core && (rec.e1_edge == e || rec.e2_edge == e)) on_side = true;
  if (e == kNone || !on_side) throw Error("vertex " + std::to_string(x) + " is not next to the core on a pasted side");
  // a main edge keeps x on a line of the core's information tile
  const std::string name = c.edge_name(e, core);
  const Vertex& cx = c.vertex(core);
  const bool side_core = cx.kind == VertexKind::Mid;
  const bool main = side_core ? (name == "1" || name == "2")
                              : (name == "1" || name == "2" || name == "3" || name == "4");
  const int need = boss_count(c, x);
  if (main && L.info_tile(x) == L.info_tile(core)) {
    std::string f, dr, s, t;
    for (const auto& part : split_top(L.info(core), ';')) {
      if (part.rfind("F=", 0) == 0) f = part;
      else if (part.rfind("DR=", 0) == 0) dr = part;
      else if (part.rfind("S=", 0) == 0) s = part;
      else if (part.rfind("T=", 0) == 0) t = part;
    }
    if (dr.empty() && !t.empty()) dr = "DR=" + t.substr(3, t.find('|') - 3);
    if (need == 1 && !f.empty()) return {f, true};
    if (need == 2 && !f.empty() && !dr.empty()) return {f + ";" + dr, true};
    if (need == 3 && !f.empty() && !s.empty() && !t.empty()) return {f + ";" + s + ";" + t, true};
  }
  return {L.info(x), false};
}

}  // namespace nilcomplex
