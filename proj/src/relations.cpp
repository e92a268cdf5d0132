#include "nilcomplex/relations.hpp"

#include <algorithm>

namespace nilcomplex {

bool RelationSet::add(const SquareRelation& r, Conflict* conflict) {
  auto [it, fresh] = map_.emplace(r.lhs, r);
  if (fresh || it->second.rhs == r.rhs) return true;
  if (conflict) *conflict = {r.lhs, it->second.rhs, r.rhs, it->second, r};
  return false;
}

const SquareRelation* RelationSet::find(const Word& lhs) const {
  auto it = map_.find(lhs);
  return it == map_.end() ? nullptr : &it->second;
}

std::vector<const SquareRelation*> RelationSet::sorted() const {
  std::vector<const SquareRelation*> out;
  out.reserve(map_.size());
  for (const auto& [k, r] : map_) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->lhs < b->lhs; });
  return out;
}

Word restrict_ends(const Word& w, Alphabet& alpha) {
  Word r = w;
  if (r.empty()) return r;
  r.front().id = alpha.drop_in(r.front().id);
  r.back().id = alpha.drop_out(r.back().id);
  return r;
}

std::vector<SquareRelation> square_relations(const Labeling& L, const ZeroRules& rules) {
  // sequential: letters are interned on first use, so ids depend on visiting order
  const Complex& c = L.complex();
  Alphabet& alpha = L.alphabet();
  std::vector<SquareRelation> out;
  for (TileId f : c.faces()) {
    const Tile& T = c.tile(f);
    for (int s = 0; s < 4; ++s)
      for (int dir : {1, -1}) {
        SquareRelation r;
        r.face = f;
        r.plane = T.plane;
        r.start = s;
        r.cw = dir == 1;
        r.level = c.level();
        r.abc = {T.corners[s], T.corners[(s + dir + 4) % 4], T.corners[(s + 2) % 4]};
        r.adc = {T.corners[s], T.corners[(s - dir + 4) % 4], T.corners[(s + 2) % 4]};
        r.lhs = encode_path(L, r.abc);
        r.rhs = encode_path(L, r.adc);
        if (rules.dead.count(dead_projection(r.lhs.data(), alpha)) ||
            rules.dead.count(dead_projection(r.rhs.data(), alpha)))
          r.level = -1;  // excluded
        out.push_back(std::move(r));
      }
  }
  return out;
}

RelationReport add_relations(RelationSet& set, const Labeling& L, const ZeroRules& rules) {
  RelationReport rep;
  rep.squares = L.complex().num_faces();
  for (auto& r : square_relations(L, rules)) {
    if (r.level < 0) {
      ++rep.excluded_dead;
      continue;
    }
    r.level = L.complex().level();
    ++rep.relations;
    Conflict cf;
    if (!set.add(r, &cf)) rep.conflicts.push_back(std::move(cf));
  }
  return rep;
}

nlohmann::json relation_json(const SquareRelation& r) {
  auto ids = [](const Word& w) {
    nlohmann::json a = nlohmann::json::array();
    for (const Letter& l : w) a.push_back(word_ids({l}));
    return a;
  };
  return {{"lhs", ids(r.lhs)},
          {"rhs", ids(r.rhs)},
          {"witness", {{"face", r.face}, {"plane", r.plane}, {"level", r.level}, {"abc", r.abc}, {"adc", r.adc}}}};
}

}  // namespace nilcomplex
