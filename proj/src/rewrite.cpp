#include "nilcomplex/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace nilcomplex {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::Canonical: return "Canonical";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::optional<Word> apply_relation_at(const Word& w, std::size_t vpos, const RelationSet& rs, Alphabet& alpha) {
  const std::size_t b = 3 * vpos;
  if (b + 7 > w.size()) throw Error("apply_relation_at: position " + std::to_string(vpos) + " out of range");
  if (w[b].fam != Family::Y) throw Error("apply_relation_at: position is not a vertex letter");
  const Word key = restrict_ends(Word(w.begin() + b, w.begin() + b + 7), alpha);
  const SquareRelation* r = rs.find(key);
  if (!r) return std::nullopt;
  Word out = w;
  std::copy(r->rhs.begin(), r->rhs.end(), out.begin() + b);
  out[b].id = alpha.merge_ends(r->rhs.front().id, &w[b].id, nullptr);
  out[b + 6].id = alpha.merge_ends(r->rhs.back().id, nullptr, &w[b + 6].id);
  return out;
}

namespace {

// breadth-first orbit with parent links; `stop_on_zero` ends at the first hit
struct Explorer {
  const RelationSet& rs;
  const ZeroRules& rules;
  Alphabet& alpha;
  std::vector<Word> words;
  std::vector<int> parent;
  std::unordered_map<Word, int, WordHash> index;

  int insert(Word w, int from) {
    auto [it, fresh] = index.emplace(w, static_cast<int>(words.size()));
    if (!fresh) return -1;
    words.push_back(std::move(w));
    parent.push_back(from);
    return it->second;
  }

  std::vector<Word> trace(int i) const {
    std::vector<Word> t;
    for (; i >= 0; i = parent[i]) t.push_back(words[i]);
    std::reverse(t.begin(), t.end());
    return t;
  }
};

bool starts_clean(const Word& w) {
  return w.empty() || (w.front().fam == Family::Y && is_code_form(w));
}

}  // namespace

RewriteOutcome reduce(const Word& w, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                      std::size_t budget) {
  RewriteOutcome out;
  Explorer ex{rs, rules, alpha, {}, {}, {}};
  ex.insert(w, -1);
  std::size_t head = 0;
  while (head < ex.words.size()) {
    const int cur = static_cast<int>(head++);
    const Word& x = ex.words[cur];
    if (Hit h = scan_forbidden(x, rules, alpha)) {
      out.verdict = Verdict::Zero;
      out.word = x;
      out.hit = h;
      out.trace = ex.trace(cur);
      out.visited = ex.words.size();
      out.frontier = ex.words.size() - head;
      return out;
    }
    if (!starts_clean(x)) continue;
    const std::size_t k = vertex_count(x);
    for (std::size_t v = 0; v + 2 < k; ++v) {
      auto y = apply_relation_at(ex.words[cur], v, rs, alpha);
      if (!y) continue;
      if (ex.words.size() >= budget) {
        out.verdict = Verdict::Unknown;
        out.visited = ex.words.size();
        out.frontier = ex.words.size() - head + 1;
        return out;
      }
      ex.insert(std::move(*y), cur);
    }
  }
  out.verdict = Verdict::Canonical;
  out.word = *std::min_element(ex.words.begin(), ex.words.end());
  out.visited = ex.words.size();
  return out;
}

OrbitSummary orbit_explore(const Word& w, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                           std::size_t budget) {
  OrbitSummary s;
  Explorer ex{rs, rules, alpha, {}, {}, {}};
  ex.insert(w, -1);
  std::size_t head = 0;
  bool cut = false;
  while (head < ex.words.size()) {
    const int cur = static_cast<int>(head++);
    if (scan_forbidden(ex.words[cur], rules, alpha)) {
      ++s.zero_hits;
      continue;
    }
    if (!starts_clean(ex.words[cur])) continue;
    const std::size_t k = vertex_count(ex.words[cur]);
    for (std::size_t v = 0; v + 2 < k; ++v) {
      auto y = apply_relation_at(ex.words[cur], v, rs, alpha);
      if (!y) continue;
      if (ex.words.size() >= budget) {
        cut = true;
        break;
      }
      ex.insert(std::move(*y), cur);
    }
    if (cut) break;
  }
  s.size = ex.words.size();
  s.frontier = ex.words.size() - head;
  s.exhausted = !cut;
  s.members = std::move(ex.words);
  return s;
}

Word power(const Word& w, int k) {
  Word out;
  out.reserve(w.size() * std::max(k, 0));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

RewriteOutcome nil_check(const Word& w, int k, const RelationSet& rs, const ZeroRules& rules, Alphabet& alpha,
                         std::size_t budget) {
  return reduce(power(w, k), rs, rules, alpha, budget);
}

nlohmann::json outcome_json(const RewriteOutcome& o, const Alphabet& alpha) {
  nlohmann::json j;
  j["verdict"] = to_string(o.verdict);
  j["visited"] = o.visited;
  j["frontier"] = o.frontier;
  if (o.verdict != Verdict::Unknown) {
    j["word"] = word_ids(o.word);
    j["word_text"] = word_text(o.word, alpha);
  }
  if (o.verdict == Verdict::Zero) {
    j["witness"] = {{"kind", to_string(o.hit.kind)}, {"pos", o.hit.pos}, {"len", o.hit.len}};
    nlohmann::json t = nlohmann::json::array();
    for (const Word& x : o.trace) t.push_back(word_ids(x));
    j["trace"] = t;
  }
  return j;
}

}  // namespace nilcomplex
