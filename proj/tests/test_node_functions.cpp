#include "doctest.h"
#include "nilcomplex/node_functions.hpp"

using namespace nilcomplex;

TEST_CASE("node functions are functional over levels 1 to 4") {
  for (PastingMode mode : {PastingMode::Recursive, PastingMode::Flat}) {
    std::vector<std::unique_ptr<Complex>> cs;
    Alphabet alpha;
    std::vector<std::unique_ptr<Labeling>> ls;
    for (int level = 1; level <= 4; ++level) {
      cs.push_back(std::make_unique<Complex>(Complex::grow(level, mode)));
      ls.push_back(std::make_unique<Labeling>(*cs.back(), alpha));
    }
    FunctionalityTable table;
    for (NodeFunction f : all_node_functions()) {
      for (const auto& L : ls) table.add(*L, f);
      const FunctionalityReport r = table.report(f);
      CAPTURE(to_string(f));
      CHECK(r.violations == 0);
      if (f != NodeFunction::LevelPlus) CHECK(r.sites > 0);
    }
  }
}

TEST_CASE("node function names round trip") {
  for (NodeFunction f : all_node_functions()) CHECK(parse_node_function(to_string(f)) == f);
  CHECK_THROWS(parse_node_function("NoSuchFunction"));
}

TEST_CASE("node_function_at returns the sites of one argument vertex") {
  const Complex c = Complex::grow(4);
  Alphabet alpha;
  const Labeling L(c, alpha);
  for (NodeFunction f : {NodeFunction::Next, NodeFunction::TopRightType}) {
    const auto sites = node_function_sites(L, f);
    REQUIRE_FALSE(sites.empty());
    const auto at = node_function_at(L, f, sites.front().arg);
    REQUIRE_FALSE(at.empty());
    bool found = false;
    for (const auto& a : at) found = found || (a.args == sites.front().args && a.value == sites.front().value);
    CHECK(found);
  }
}

TEST_CASE("corner edge codes of the root tile") {
  const Complex c = Complex::grow(3, PastingMode::Flat);
  CHECK(corner_edge_code(c, 0, CornerEdge::E7) == "d2");
  CHECK(corner_edge_code(c, 0, CornerEdge::E8) == "d2");
  // nothing continues beyond the root corners
  CHECK_THROWS_AS(corner_edge_code(c, 0, CornerEdge::E_ur), Error);
  CHECK_THROWS_AS(corner_edge_code(c, 0, CornerEdge::E_ld), Error);
}

TEST_CASE("core tables: neighbours inside a core line get the tabulated main edge") {
  for (int level = 4; level <= 6; ++level) {
    const Complex c = Complex::grow(level);
    Alphabet alpha;
    const Labeling L(c, alpha);
    std::size_t checked = 0;
    for (const PastingRecord& rec : c.pastings()) {
      const Vertex& vx = c.vertex(rec.core);
      const std::string key = vx.kind == VertexKind::A   ? "A"
                              : vx.kind == VertexKind::B ? "B"
                              : vx.kind == VertexKind::C ? "C"
                                                         : "side";
      for (EdgeId e : c.incident(rec.core)) {
        if (c.edge_plane(e) != vx.base) continue;
        const std::string name = c.edge_letter(e, rec.core);
        const auto it = core_exit_table().find({key, name});
        REQUIRE_MESSAGE(it != core_exit_table().end(), key << " " << name);
        const VertexId nb = c.other(e, rec.core);
        const Line& line = c.line(c.edge(e).line);
        if (nb == line.start || nb == line.end) continue;
        ++checked;
        CHECK(core_adjacent(L, rec.core, name, name).succ_entry == it->second);
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("core_adjacent rejects vertices that are not cores") {
  const Complex c = Complex::grow(4);
  Alphabet alpha;
  const Labeling L(c, alpha);
  CHECK_FALSE(is_pasting_core(c, c.tile(0).corner(Corner::UL)));
  CHECK_THROWS_AS(core_adjacent(L, c.tile(0).corner(Corner::UL), "1", "2"), Error);
}

TEST_CASE("information next to a core derived from the core agrees with the labels") {
  for (int level = 4; level <= 5; ++level) {
    const Complex c = Complex::grow(level);
    Alphabet alpha;
    const Labeling L(c, alpha);
    std::size_t derived = 0;
    for (const PastingRecord& rec : c.pastings())
      for (EdgeId e : {rec.e1_edge, rec.e2_edge}) {
        const VertexId x = c.other(e, rec.core);
        const NearCoreInfo ni = info_near_core(L, rec.core, x);
        CHECK(ni.info == L.info(x));
        derived += ni.derived;
      }
    CHECK(derived > 0);
  }
}
