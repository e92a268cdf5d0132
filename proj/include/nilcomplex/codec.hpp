#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "nilcomplex/labeler.hpp"

namespace nilcomplex {

// X: incoming edge, Y: vertex, Z: outgoing edge
enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

struct Letter {
  Family fam = Family::Y;
  LetterId id = 0;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

std::uint64_t hash_letters(const Letter* begin, const Letter* end);

std::string word_ids(const Word& w);  // "Y3 Z0 X1 Y5"
Word parse_word_ids(const std::string& text);
std::string word_text(const Word& w, const Alphabet& alpha);

Word encode_path(const Labeling& L, const std::vector<VertexId>& path);
bool is_code_form(const Word& w);
// letter-level reversal: order reversed, X and Z swapped, in and out parts swapped
Word reverse_word(const Word& w, Alphabet& alpha);
// number of Y letters
std::size_t vertex_count(const Word& w);

// ==== Zero rules ====

enum class HitKind : std::uint8_t { None, Family, ZeroForm, Forbidden, Dead };
const char* to_string(HitKind k);

struct Hit {
  HitKind kind = HitKind::None;
  std::size_t pos = 0;  // first letter of the window
  std::size_t len = 0;  // letters in the window
  explicit operator bool() const { return kind != HitKind::None; }
};

struct ZeroRules {
  std::unordered_set<std::uint64_t> realized;  // hashes of realized 1..4 vertex windows
  std::unordered_set<std::string> dead;        // projections of dead 3-vertex windows
  int cap = 0;
  bool check_forbidden = true;

  void add_realized(const Labeling& L);
  void add_dead(const Labeling& L);
};

// the 3-vertex window (7 letters) projected onto base types and edge names
std::string dead_projection(const Letter* window, const Alphabet& alpha);
// hash of a window with its outer ends restricted
std::uint64_t window_key(const Letter* begin, const Letter* end, Alphabet& alpha);

ZeroRules build_zero_rules(const std::vector<const Labeling*>& labelings);
Hit scan_forbidden(const Word& w, const ZeroRules& rules, Alphabet& alpha);

// all paths of L whose code equals w
std::vector<std::vector<VertexId>> realize_word(const Labeling& L, const Word& w,
                                                std::size_t limit = 1'000'000);

// geometric dead windows of L: AUB, ACB, CXD in tiles with leaf children, plus reversals
std::vector<std::vector<VertexId>> dead_windows(const Complex& c);

}  // namespace nilcomplex
