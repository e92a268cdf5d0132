#include <set>

#include "doctest.h"
#include "nilcomplex/labeler.hpp"

using namespace nilcomplex;

namespace {

const std::set<std::string> kSidePairs = {"UL", "LU", "UR", "RU", "LD", "DL", "RD", "DR"};

std::size_t boss_parts(const std::string& info) {
  std::size_t n = 0;
  for (const char* key : {"F=", "DR=", "S=", "T="})
    if (info.find(key) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("side vertices have pair types from the four admissible combinations") {
  for (PastingMode mode : {PastingMode::Flat, PastingMode::Recursive})
    for (int level = 1; level <= 5; ++level) {
      const Complex c = Complex::grow(level, mode);
      Alphabet alpha;
      const Labeling L(c, alpha);
      std::size_t sides = 0;
      for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v)
        for (PlaneId p : c.planes_of(v)) {
          const std::string& t = L.role(v, p).type;
          if (!is_side_pair(t)) continue;
          ++sides;
          CHECK_MESSAGE(kSidePairs.count(t), t);
        }
      if (level >= 3) CHECK(sides > 0);
    }
}

TEST_CASE("the root tile corners are corner types") {
  const Complex c = Complex::grow(3, PastingMode::Flat);
  Alphabet alpha;
  const Labeling L(c, alpha);
  const Tile& root = c.tile(0);
  CHECK(L.base_role(root.corner(Corner::UL)).type == "CUL");
  CHECK(L.base_role(root.corner(Corner::UR)).type == "CUR");
  CHECK(L.base_role(root.corner(Corner::DR)).type == "CDR");
  CHECK(L.base_role(root.corner(Corner::DL)).type == "CDL");
  CHECK(L.base_role(root.a).type == "A");
  CHECK(L.base_role(root.b).type == "B");
  CHECK(L.base_role(root.c).type == "C");
}

TEST_CASE("pasted boundary vertices take roles from the pasted-root set") {
  const std::set<std::string> allowed = {"CUL", "U", "L", "CUR", "CDL"};
  for (int level = 4; level <= 5; ++level) {
    const Complex c = Complex::grow(level);
    Alphabet alpha;
    const Labeling L(c, alpha);
    for (const PastingRecord& rec : c.pastings()) {
      const Tile& root = c.tile(c.planes()[rec.plane].root);
      if (c.tile_level(c.planes()[rec.plane].root) != 2) continue;  // freshly pasted
      for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
        if (c.vertex(v).base == rec.plane) continue;
        const auto& ps = c.planes_of(v);
        if (std::find(ps.begin(), ps.end(), rec.plane) == ps.end()) continue;
        CHECK_MESSAGE(allowed.count(L.role(v, rec.plane).type), L.role(v, rec.plane).type);
      }
      CHECK(L.role(root.corner(Corner::UL), rec.plane).type == "CUL");
    }
  }
}

TEST_CASE("information has one boss per main line, two or three for inner vertices") {
  const Complex c = Complex::grow(4);
  Alphabet alpha;
  const Labeling L(c, alpha);
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    const Vertex& vx = c.vertex(v);
    const std::string& info = L.info(v);
    if (L.info_tile(v) == kNone) {
      // only the root DR corner records a boss without an information tile
      const bool root_dr = c.tile(c.planes()[vx.base].root).corner(Corner::DR) == v;
      CHECK(boss_parts(info) == (root_dr ? 1u : 0u));
      continue;
    }
    switch (vx.kind) {
      case VertexKind::A: CHECK(boss_parts(info) == 1); break;
      case VertexKind::B: CHECK(boss_parts(info) == 2); break;
      case VertexKind::C: CHECK(boss_parts(info) == 3); break;
      default: CHECK(boss_parts(info) >= 1); break;
    }
  }
}

TEST_CASE("vertices of one pasted plane share the pasting flag") {
  const Complex c = Complex::grow(5);
  Alphabet alpha;
  const Labeling L(c, alpha);
  std::map<PlaneId, std::set<std::string>> flags;
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) flags[c.vertex(v).base].insert(L.flag(v));
  for (const auto& [p, f] : flags) {
    CAPTURE(p);
    CHECK(f.size() == 1);
    if (p != 0) CHECK_FALSE(f.begin()->empty());
  }
}

TEST_CASE("labeling is deterministic across alphabets") {
  const Complex c = Complex::grow(4);
  Alphabet a1, a2;
  const Labeling L1(c, a1), L2(c, a2);
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    const PlaneId p = c.vertex(v).base;
    CHECK(L1.vertex_letter(v, p, p) == L2.vertex_letter(v, p, p));
  }
  CHECK(a1.num_vertex_letters() == a2.num_vertex_letters());
}

TEST_CASE("chain members are distinct and registered") {
  const Complex c = Complex::grow(4);
  Alphabet alpha;
  const Labeling L(c, alpha);
  REQUIRE_FALSE(L.chains().empty());
  for (const Chain& ch : L.chains()) {
    std::set<VertexId> seen;
    for (const ChainMember& m : ch.members) {
      CHECK(seen.insert(m.v).second);
      CHECK(L.chain_of(m.v, ch.plane) == &ch);
      CHECK(ch.index_of(m.v) >= 0);
      CHECK_FALSE(m.pointer.empty());
    }
    CHECK(ch.level >= 0);
  }
}

TEST_CASE("unknown roles throw") {
  const Complex c = Complex::grow(2);
  Alphabet alpha;
  const Labeling L(c, alpha);
  CHECK_FALSE(L.has_role(0, 7));
  CHECK_THROWS(L.role(0, 7));
}
