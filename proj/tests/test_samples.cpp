#include <filesystem>
#include <set>

#include "doctest.h"
#include "nilcomplex/samples.hpp"

using namespace nilcomplex;

TEST_CASE("skeleton comparison") {
  const Skeleton got{"^u1", "1", "3", "2"};
  CHECK(skeleton_matches({"u1", "1", "3", "2"}, got));
  CHECK(skeleton_matches({"^u1", "1", "*", "2"}, got, true));
  CHECK_FALSE(skeleton_matches({"u1", "1", "3", "2"}, got, true));
  CHECK_FALSE(skeleton_matches({"u2", "1", "3", "2"}, got));
}

TEST_CASE("every transcribed case row matches a generated relation") {
  Pipeline P(PipelineConfig{4, PastingMode::Recursive, 1'000'000, 0, ""});
  const auto& rows = case_samples();
  CHECK(rows.size() >= 10);
  std::set<std::string> tables;
  for (const CaseSample& s : rows) tables.insert(s.table);
  CHECK(tables == std::set<std::string>{"flip", "C1", "P1", "P2"});
  const auto m = validate_case_samples(P, rows);
  REQUIRE(m.size() == rows.size());
  for (const SampleMatch& x : m) {
    CAPTURE(x.id);
    CHECK(x.matched);
    CHECK(x.sites <= x.candidates);
  }
  CHECK(m[0].hats_exact);
}

TEST_CASE("a row with an impossible condition stays unmatched") {
  Pipeline P(PipelineConfig{3, PastingMode::Recursive, 1'000'000, 1, ""});
  CaseSample s = case_samples().front();
  s.vertices.push_back(SampleVertex{1, "D", -1, "", -1, false});
  const auto m = validate_case_samples(P, {s});
  CHECK(m[0].candidates > 0);
  CHECK_FALSE(m[0].matched);
}

TEST_CASE("the pipeline cache round trips") {
  const auto dir = std::filesystem::temp_directory_path() / "nilcomplex-cache-test";
  std::filesystem::remove_all(dir);
  const Complex a = load_or_grow(3, PastingMode::Recursive, 1'000'000, dir.string());
  const Complex b = load_or_grow(3, PastingMode::Recursive, 1'000'000, dir.string());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(Pipeline(PipelineConfig{0, PastingMode::Recursive, 1'000'000, 1, ""}), Error);
}
