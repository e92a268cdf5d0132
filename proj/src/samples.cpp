#include "nilcomplex/samples.hpp"

namespace nilcomplex {

namespace {

std::string strip_hat(const std::string& s) { return !s.empty() && s[0] == '^' ? s.substr(1) : s; }

std::string env_text(const Tile& T) { return T.env[0] + "," + T.env[1] + "," + T.env[2] + "," + T.env[3]; }

SampleVertex at(int index, std::string type, int level = -1) {
  SampleVertex v;
  v.index = index;
  v.type = std::move(type);
  v.level = level;
  return v;
}

SampleVertex in_chain(int index, std::string center, int level, bool boss = false, std::string type = "") {
  SampleVertex v;
  v.index = index;
  v.type = std::move(type);
  v.chain = std::move(center);
  v.chain_level = level;
  v.boss = boss;
  return v;
}

const std::string kP1 = "left,top,right,bottom";
const std::string kP2 = "left,top,1A,3A";

bool vertex_ok(const Labeling& L, const SquareRelation& r, const SampleVertex& cond) {
  const VertexId v = cond.index < 3 ? r.abc.at(cond.index) : r.adc.at(1);
  const PlaneId p = r.plane;
  if (!L.has_role(v, p)) return false;
  const Role& role = L.role(v, p);
  if (!cond.type.empty() && role.type != cond.type) return false;
  if (cond.level >= 0 && role.level != cond.level) return false;
  if (cond.chain.empty()) return true;
  VertexId h = v;
  if (cond.boss) {
    const TileId t = L.info_tile(v);
    if (t == kNone) return false;
    h = L.complex().tile(t).mid(Side::Top);
  }
  const Chain* ch = L.chain_of(h, p);
  if (!ch) return false;
  if (L.role(ch->center, ch->plane).type != cond.chain) return false;
  return cond.chain_level < 0 || ch->level == cond.chain_level;
}

}  // namespace

Skeleton path_skeleton(const Complex& c, const std::vector<VertexId>& path) {
  if (path.size() != 3) throw Error("skeleton needs a three-vertex path");
  const EdgeId e1 = c.find_edge(path[0], path[1]);
  const EdgeId e2 = c.find_edge(path[1], path[2]);
  if (e1 == kNone || e2 == kNone) throw Error("skeleton path is not connected");
  return {c.edge_letter(e1, path[0]), c.edge_letter(e1, path[1]), c.edge_letter(e2, path[1]),
          c.edge_letter(e2, path[2])};
}

bool skeleton_matches(const Skeleton& pattern, const Skeleton& got, bool exact_hats) {
  for (int i = 0; i < 4; ++i) {
    if (pattern[i] == "*") continue;
    if (exact_hats ? pattern[i] != got[i] : strip_hat(pattern[i]) != strip_hat(got[i])) return false;
  }
  return true;
}

// ==== Transcribed rows ====

const std::vector<CaseSample>& case_samples() {
  static const std::vector<CaseSample> rows = {
      {"flip-1", "flip", {"1", "2", "1", "u2"}, Skeleton{"2", "3", "1", "u1"},
       {at(0, "C"), at(1, "A"), at(3, "B")}, ""},
      {"flip-1 reversed", "flip", {"u2", "1", "2", "1"}, Skeleton{"u1", "1", "3", "2"},
       {at(1, "A"), at(2, "C"), at(3, "B")}, ""},
      {"C1 8 left, case 1", "C1", {"u1", "1", "2", "r"}, std::nullopt, {in_chain(0, "C", 1)}, ""},
      {"C1 8 left, case 1, reversed", "C1", {"r", "2", "1", "u1"}, std::nullopt, {in_chain(2, "C", 1)}, ""},
      {"C1 8 right, case 1", "C1", {"2", "1", "l", "1"}, std::nullopt, {in_chain(0, "C", 1)}, ""},
      {"C1 9 left, case 1", "C1", {"1", "u1", "2", "1"}, std::nullopt, {in_chain(0, "C", 1, true, "B")}, ""},
      {"C1 9 right, case 1", "C1", {"2", "r", "1", "l"}, std::nullopt, {in_chain(0, "C", 1, true, "B")}, ""},
      {"P1a 1", "P1", {"^u1", "1", "3", "2"}, Skeleton{"^u2", "1", "2", "1"}, {at(1, "B"), at(3, "A")}, kP1},
      {"P1b 1", "P1", {"^u2", "1", "2", "1"}, Skeleton{"^u1", "1", "3", "2"}, {at(1, "A"), at(3, "B")}, kP1},
      {"P1a 2", "P1", {"^d", "l", "r", "d"}, Skeleton{"^d2", "4", "3", "d2"}, {at(1, "D", 1), at(3, "C")}, kP1},
      {"P1b 7", "P1", {"^u2", "1", "3", "l"}, std::nullopt, {at(1, "A")}, kP1},
      {"P1b 9", "P1", {"^r", "2", "r", "2"}, Skeleton{"*", "*", "^u1", "1"}, {at(1, "R", 1)}, kP1},
      {"P2a 2", "P2", {"^l", "1", "2", "3"}, std::nullopt, {at(1, "DR", 1)}, kP2},
      {"P2b 1", "P2", {"^u2", "1", "2", "1"}, std::nullopt, {at(1, "A")}, kP2},
      {"P2b 4", "P2", {"^l", "3", "2", "1"}, Skeleton{"*", "*", "l2", "4"}, {at(1, "A")}, kP2},
      {"P2b 7", "P2", {"^u2", "1", "3", "l"}, std::nullopt, {at(1, "A")}, kP2},
      {"P2b 8", "P2", {"^u1", "1", "2", "r"}, Skeleton{"*", "*", "u2", "2"}, {at(1, "B")}, kP2},
      {"P2b 9", "P2", {"^u2", "2", "r", "2"}, Skeleton{"*", "*", "^u1", "1"}, {at(1, "RU", 1)}, kP2},
  };
  return rows;
}

// ==== Validation ====

std::vector<SampleMatch> validate_case_samples(const Pipeline& P, const std::vector<CaseSample>& samples) {
  std::vector<SampleMatch> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i].id = samples[i].id;
  for (const Labeling* L : P.labelings()) {
    const Complex& c = L->complex();
    for (const SquareRelation& r : square_relations(*L, P.rules())) {
      const SquareRelation* stored = P.relations().find(r.lhs);
      if (!stored || stored->rhs != r.rhs) continue;
      const Skeleton lhs = path_skeleton(c, r.abc);
      const Skeleton rhs = path_skeleton(c, r.adc);
      const Tile& face = c.tile(r.face);
      const std::string penv = face.parent == kNone ? "" : env_text(c.tile(face.parent));
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const CaseSample& s = samples[i];
        if (!skeleton_matches(s.lhs, lhs)) continue;
        SampleMatch& m = out[i];
        ++m.candidates;
        if (s.rhs && !skeleton_matches(*s.rhs, rhs)) continue;
        if (!s.parent_env.empty() && penv != s.parent_env) continue;
        bool ok = true;
        for (const SampleVertex& v : s.vertices) ok = ok && vertex_ok(*L, r, v);
        if (!ok) continue;
        const bool exact = skeleton_matches(s.lhs, lhs, true) && (!s.rhs || skeleton_matches(*s.rhs, rhs, true));
        if (!m.matched || (exact && !m.hats_exact)) m.witness = r;
        m.matched = true;
        m.hats_exact = m.hats_exact || exact;
        ++m.sites;
      }
    }
  }
  return out;
}

nlohmann::json samples_json(const std::vector<SampleMatch>& matches) {
  nlohmann::json a = nlohmann::json::array();
  for (const SampleMatch& m : matches) {
    nlohmann::json j = {{"id", m.id},
                        {"matched", m.matched},
                        {"hats_exact", m.hats_exact},
                        {"candidates", m.candidates},
                        {"sites", m.sites}};
    if (m.matched) j["witness"] = relation_json(m.witness);
    a.push_back(j);
  }
  return a;
}

}  // namespace nilcomplex
