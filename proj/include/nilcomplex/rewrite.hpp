#pragma once

#include <optional>
#include <vector>

#include "nilcomplex/relations.hpp"

namespace nilcomplex {

enum class Verdict : std::uint8_t { Zero, Canonical, Unknown };
const char* to_string(Verdict v);

struct RewriteOutcome {
  Verdict verdict = Verdict::Unknown;
  Word word;               // canonical word, or the orbit member carrying the zero window
  Hit hit;                 // zero window in `word`
  std::vector<Word> trace;  // rewrite sequence from the input to `word` (Zero only)
  std::size_t visited = 0;
  std::size_t frontier = 0;
};

struct OrbitSummary {
  std::size_t size = 0;
  std::size_t zero_hits = 0;
  std::size_t frontier = 0;
  bool exhausted = false;
  std::vector<Word> members;  // in discovery order
};

// rewrite the 3-vertex window starting at the Y letter of vertex index `vpos`
std::optional<Word> apply_relation_at(const Word& w, std::size_t vpos, const RelationSet& rs, Alphabet& alpha);

RewriteOutcome reduce(const Word& w, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                      std::size_t budget = 1'000'000);

// full orbit without stopping at zero hits
OrbitSummary orbit_explore(const Word& w, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                           std::size_t budget = 1'000'000);

Word power(const Word& w, int k);
RewriteOutcome nil_check(const Word& w, int k, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                         std::size_t budget = 1'000'000);

nlohmann::json outcome_json(const RewriteOutcome& o, const Alphabet& alpha);

}  // namespace nilcomplex
