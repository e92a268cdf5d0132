#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nilcomplex/pipeline.hpp"

namespace nilcomplex {

// out-edge at X1, in-edge at X2, out-edge at X2, in-edge at X3; "*" matches any name
using Skeleton = std::array<std::string, 4>;

// condition on one vertex of a relation site
struct SampleVertex {
  int index = 0;           // 0..2: X1..X3 of the lhs path; 3: middle vertex of the rhs path
  std::string type;        // role type in the face plane, empty for any
  int level = -1;          // role level, -1 for any
  std::string chain;       // center type of the chain holding the vertex, empty for none required
  int chain_level = -1;
  bool boss = false;       // apply the chain condition to the first boss instead
};

struct CaseSample {
  std::string id;
  std::string table;
  Skeleton lhs;
  std::optional<Skeleton> rhs;
  std::vector<SampleVertex> vertices;
  std::string parent_env;  // "left,top,right,bottom" form for the face's parent tile, empty for any
};

struct SampleMatch {
  std::string id;
  bool matched = false;
  bool hats_exact = false;     // some matching site also agrees on hat marks
  std::size_t candidates = 0;  // sites with an equal lhs skeleton
  std::size_t sites = 0;       // sites meeting every condition
  SquareRelation witness;
};

// edge names along a three-vertex path, with hat marks
Skeleton path_skeleton(const Complex& c, const std::vector<VertexId>& path);
// compares names with hat marks removed; "*" in the pattern matches anything
bool skeleton_matches(const Skeleton& pattern, const Skeleton& got, bool exact_hats = false);

// rows transcribed from the case tables
const std::vector<CaseSample>& case_samples();

std::vector<SampleMatch> validate_case_samples(const Pipeline& P, const std::vector<CaseSample>& samples);
nlohmann::json samples_json(const std::vector<SampleMatch>& matches);

}  // namespace nilcomplex
