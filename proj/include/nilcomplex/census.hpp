#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilcomplex/labeler.hpp"

namespace nilcomplex {

// ==== Reference tables ====

struct ChainTableRow {
  std::string row;                  // e.g. "UL/LU"
  std::vector<std::string> types;   // center types counted under this row
  std::array<std::optional<int>, 4> cells;  // chain levels 0..3, nullopt for "--"
  int total = 0;
};

struct NonChainTableRow {
  std::string row;
  std::vector<std::string> types;
  int envs = 0;
  int levels = 1;
  int total = 0;
};

const std::vector<ChainTableRow>& chain_table();
const std::vector<NonChainTableRow>& nonchain_table();
// cells whose disagreement is expected and reported only
bool flagged_cell(const std::string& row, int level);

// ==== Enumeration ====

// center type -> chain level (capped at 3) -> distinct member environments
using ChainCensus = std::map<std::string, std::map<int, std::size_t>>;
ChainCensus census_chains(const Labeling& L);

struct NonChainCensus {
  std::map<std::string, std::size_t> envs;           // type -> distinct base environments
  std::map<std::string, std::set<int>> levels;       // type -> levels seen
};
NonChainCensus census_nonchain(const Labeling& L);

struct TupleCount {
  std::size_t count = 0;
  int stabilized_at = -1;             // depth where the set stopped growing, -1 if not within cap
  std::vector<std::size_t> by_depth;  // cumulative set size after each depth
  std::vector<std::array<std::string, 4>> tuples;
};
// macrotile environments reachable from the root by flat subdivision
TupleCount count_edge_tuples(int max_depth = 12);

// ==== Comparison ====

struct CensusDiff {
  std::string table;  // "chains" or "nonchain"
  std::string row;
  std::string cell;
  std::optional<long long> expected;
  long long computed = 0;
  bool flagged = false;
};

struct CensusReport {
  int level = 0;
  ChainCensus chains;
  NonChainCensus nonchain;
  TupleCount tuples;
  std::vector<CensusDiff> diffs;
  std::size_t cells_checked = 0;
  std::size_t cells_matched = 0;
  // all unflagged cells of the tables agree
  bool tables_match() const;
};

CensusReport census_report(const Labeling& L, int tuple_depth = 12);
nlohmann::json census_json(const CensusReport& r);

// ==== Bound arithmetic ====

// m * 10^e
struct Scaled {
  std::uint64_t m = 0;
  int e = 0;
  std::string text() const;
};

struct BoundStep {
  std::string label;
  std::string formula;
  Scaled value;
  std::string relation;  // "=" or "<"
  Scaled stated;         // the printed value or bound
  bool holds = false;
};

std::vector<BoundStep> bound_report();
nlohmann::json bound_json(const std::vector<BoundStep>& steps);

}  // namespace nilcomplex
