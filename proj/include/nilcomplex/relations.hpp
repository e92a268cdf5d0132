#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "nilcomplex/codec.hpp"

namespace nilcomplex {

struct SquareRelation {
  Word lhs, rhs;  // codes of A-B-C and A-D-C with restricted ends
  TileId face = kNone;
  PlaneId plane = kNone;
  int start = 0;     // corner index of A
  bool cw = true;    // A-B-C runs clockwise
  int level = 0;     // complex level of the witness
  std::vector<VertexId> abc, adc;
};

struct Conflict {
  Word lhs, rhs1, rhs2;
  SquareRelation first, second;
};

class RelationSet {
 public:
  // returns false and fills `conflict` if lhs is already mapped to a different rhs
  bool add(const SquareRelation& r, Conflict* conflict = nullptr);
  const SquareRelation* find(const Word& lhs) const;
  std::size_t size() const { return map_.size(); }
  const std::unordered_map<Word, SquareRelation, WordHash>& entries() const { return map_; }
  std::vector<const SquareRelation*> sorted() const;

 private:
  std::unordered_map<Word, SquareRelation, WordHash> map_;
};

// restrict the outer ends of a vertex-aligned window
Word restrict_ends(const Word& w, Alphabet& alpha);

// all relations of the minimal squares of L, excluding dead lhs or rhs
std::vector<SquareRelation> square_relations(const Labeling& L, const ZeroRules& rules);

struct RelationReport {
  std::size_t squares = 0;
  std::size_t relations = 0;
  std::size_t excluded_dead = 0;
  std::vector<Conflict> conflicts;
};

RelationReport add_relations(RelationSet& set, const Labeling& L, const ZeroRules& rules);

nlohmann::json relation_json(const SquareRelation& r);

}  // namespace nilcomplex
