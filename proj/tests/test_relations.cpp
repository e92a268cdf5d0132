#include <random>

#include "doctest.h"
#include "nilcomplex/pipeline.hpp"
#include "scenarios.hpp"

using namespace nilcomplex;

namespace {

std::vector<VertexId> random_walk(const Complex& c, std::mt19937& rng, std::size_t steps) {
  std::vector<VertexId> path{static_cast<VertexId>(rng() % c.num_vertices())};
  while (path.size() <= steps) {
    const auto& inc = c.incident(path.back());
    const VertexId next = c.other(inc[rng() % inc.size()], path.back());
    if (path.size() >= 2 && next == path[path.size() - 2]) continue;
    path.push_back(next);
  }
  return path;
}

}  // namespace

// ==== Codec ====

TEST_CASE("letter ids print and parse") {
  const Word w = parse_word_ids("Y3 Z0 X1 Y5");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Letter{Family::Y, 3});
  CHECK(w[1] == Letter{Family::Z, 0});
  CHECK(word_ids(w) == "Y3 Z0 X1 Y5");
  CHECK_THROWS_AS(parse_word_ids("Q3"), Error);
  CHECK_THROWS_AS(parse_word_ids("Yx"), Error);
}

TEST_CASE("path codes realize back to their paths") {
  const Complex c = Complex::grow(3);
  Alphabet alpha;
  const Labeling L(c, alpha);
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const auto path = random_walk(c, rng, 1 + i % 5);
    const Word w = encode_path(L, path);
    CHECK(is_code_form(w));
    CHECK(vertex_count(w) == path.size());
    const auto found = realize_word(L, w);
    CHECK(std::find(found.begin(), found.end(), path) != found.end());
  }
}

TEST_CASE("encoding a broken path throws") {
  const Complex c = Complex::grow(2);
  Alphabet alpha;
  const Labeling L(c, alpha);
  const Tile& R = c.tile(0);
  CHECK_THROWS_AS(encode_path(L, {R.corner(Corner::UL), R.corner(Corner::DR)}), Error);
}

TEST_CASE("word reversal is an involution and matches the reversed path") {
  const Complex c = Complex::grow(3);
  Alphabet alpha;
  const Labeling L(c, alpha);
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto path = random_walk(c, rng, 3);
    const Word w = encode_path(L, path);
    CHECK(reverse_word(reverse_word(w, alpha), alpha) == w);
    std::reverse(path.begin(), path.end());
    CHECK(reverse_word(w, alpha) == encode_path(L, path));
  }
}

TEST_CASE("boundary geodesics carry no dead window") {
  Alphabet alpha;
  std::vector<std::unique_ptr<Complex>> cs;
  std::vector<std::unique_ptr<Labeling>> ls;
  for (int level = 1; level <= 4; ++level) {
    cs.push_back(std::make_unique<Complex>(Complex::grow(level, PastingMode::Flat)));
    ls.push_back(std::make_unique<Labeling>(*cs.back(), alpha));
  }
  std::vector<const Labeling*> lp;
  for (const auto& L : ls) lp.push_back(L.get());
  const ZeroRules rules = build_zero_rules(lp);
  CHECK_FALSE(rules.dead.empty());
  const Complex& c = *cs.back();
  const Tile& R = c.tile(0);
  // the two half perimeters of the level-4 tile are geodesics of length 16
  for (const Corner far : {Corner::DR}) {
    const auto d = c.bfs(R.corner(far));
    for (const Side first : {Side::Top, Side::Left}) {
      std::vector<VertexId> path{R.corner(Corner::UL)};
      const VertexId turn = first == Side::Top ? R.corner(Corner::UR) : R.corner(Corner::DL);
      const auto dt = c.bfs(turn);
      while (path.back() != turn)
        for (EdgeId e : c.incident(path.back()))
          if (c.line(c.edge(e).line).index == 0 && dt[c.other(e, path.back())] < dt[path.back()]) {
            path.push_back(c.other(e, path.back()));
            break;
          }
      while (path.back() != R.corner(far))
        for (EdgeId e : c.incident(path.back()))
          if (c.line(c.edge(e).line).index == 0 && d[c.other(e, path.back())] < d[path.back()]) {
            path.push_back(c.other(e, path.back()));
            break;
          }
      REQUIRE(path.size() == 17);
      CHECK(scan_forbidden(encode_path(*ls.back(), path), rules, alpha).kind != HitKind::Dead);
    }
  }
}

TEST_CASE("geometric dead windows are recognized as dead") {
  Alphabet alpha;
  const Complex c = Complex::grow(3, PastingMode::Flat);
  const Labeling L(c, alpha);
  const ZeroRules rules = build_zero_rules({&L});
  const auto windows = dead_windows(c);
  REQUIRE_FALSE(windows.empty());
  for (const auto& w : windows) CHECK(scan_forbidden(encode_path(L, w), rules, alpha).kind == HitKind::Dead);
}

// ==== Relations ====

TEST_CASE("a level-1 square gives eight functional relations") {
  const Complex c = Complex::grow(1);
  Alphabet alpha;
  const Labeling L(c, alpha);
  const ZeroRules rules = build_zero_rules({&L});
  RelationSet rs;
  const RelationReport rep = add_relations(rs, L, rules);
  CHECK(rep.squares == 1);
  CHECK(rep.relations == 8);
  CHECK(rep.conflicts.empty());
  CHECK(rs.size() == 8);
}

TEST_CASE("relations are closed under reversal and keep their ends") {
  Pipeline P(PipelineConfig{3, PastingMode::Recursive, 1'000'000, 1, ""});
  CHECK(P.conflicts() == 0);
  for (const auto& [lhs, r] : P.relations().entries()) {
    CHECK(r.lhs.size() == 7);
    CHECK(r.rhs.size() == 7);
    CHECK(r.lhs.front() == r.rhs.front());
    CHECK(r.lhs.back() == r.rhs.back());
    const SquareRelation* back = P.relations().find(reverse_word(r.lhs, P.alphabet()));
    REQUIRE(back);
    CHECK(back->rhs == reverse_word(r.rhs, P.alphabet()));
  }
}

TEST_CASE("the relation map stays functional across levels and grows with them") {
  Pipeline P(PipelineConfig{4, PastingMode::Recursive, 1'000'000, 0, ""});
  CHECK(P.conflicts() == 0);
  RelationSet partial;
  std::size_t last = 0;
  for (int level = 1; level <= 4; ++level) {
    add_relations(partial, P.labeling(level), P.rules());
    CHECK(partial.size() >= last);
    last = partial.size();
  }
  CHECK(last == P.relations().size());
}

TEST_CASE("a corrupted relation is reported as a conflict") {
  Pipeline P(PipelineConfig{2, PastingMode::Recursive, 1'000'000, 1, ""});
  const SquareRelation* r = P.relations().sorted().front();
  SquareRelation bad = *r;
  bad.rhs[3].id += 1;  // mutate the middle vertex letter
  RelationSet rs = P.relations();
  Conflict cf;
  CHECK_FALSE(rs.add(bad, &cf));
  CHECK(cf.lhs == r->lhs);
  CHECK(cf.rhs1 != cf.rhs2);
  CHECK(rs.add(*r));
}

TEST_CASE("path words parse against the pipeline") {
  Pipeline P(PipelineConfig{2, PastingMode::Recursive, 1'000'000, 1, ""});
  const Tile& R = P.complex(2).tile(0);
  const std::string spec = "# comment\npath 2 " + std::to_string(R.corner(Corner::UL)) + " " +
                           std::to_string(R.mid(Side::Top)) + "\n";
  CHECK(vertex_count(parse_word_spec(spec, P)) == 2);
  CHECK_THROWS_AS(parse_word_spec("path 3 0 1", P), Error);
  CHECK_THROWS_AS(parse_word_spec("path 2 0 99999", P), Error);
  CHECK_THROWS_AS(parse_word_spec("path 2 " + std::to_string(R.corner(Corner::UL)) + " " +
                                      std::to_string(R.corner(Corner::DR)),
                                  P),
                  Error);
  CHECK_THROWS_AS(parse_word_spec("# only a comment", P), Error);
  CHECK(parse_word_spec("Y1 Z0 X0 Y2", P).size() == 4);
}
