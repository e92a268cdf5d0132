#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcomplex/labeler.hpp"

namespace nilcomplex {

enum class NodeFunction : std::uint8_t {
  TopFromCorner,
  RightCorner,
  TopRightType,
  BottomLeftType,
  LevelPlus,
  BottomRightTypeFromRight,
  TopFromRight,
  Next,
  Prev,
  BottomRightType,
  RightFromB,
};

const std::vector<NodeFunction>& all_node_functions();
const char* to_string(NodeFunction f);
NodeFunction parse_node_function(const std::string& s);

// one application of a node function at a concrete site
struct NodeApplication {
  VertexId arg = kNone;   // the argument vertex
  TileId tile = kNone;    // the macrotile T (kNone for Next/Prev)
  std::string args;       // letter-level argument key
  std::string value;      // letter-level value
};

// the applications of f whose argument vertex is v (every tile where v plays the argument role)
std::vector<NodeApplication> node_function_at(const Labeling& L, NodeFunction f, VertexId v);
// every application of f in the complex
std::vector<NodeApplication> node_function_sites(const Labeling& L, NodeFunction f);

struct FunctionalityReport {
  NodeFunction f{};
  std::size_t sites = 0;
  std::size_t distinct_args = 0;
  std::size_t violations = 0;  // argument keys with more than one value
  std::vector<std::pair<NodeApplication, NodeApplication>> witnesses;
};

// argument key -> value, accumulated across complexes
class FunctionalityTable {
 public:
  void add(const Labeling& L, NodeFunction f);
  FunctionalityReport report(NodeFunction f) const;

 private:
  struct Entry {
    std::map<std::string, NodeApplication> by_args;
    std::size_t sites = 0;
    std::vector<std::pair<NodeApplication, NodeApplication>> witnesses;
    std::size_t violations = 0;
  };
  std::map<NodeFunction, Entry> entries_;
};

// ==== Chains and pointers ====

const Chain* chain_of(const Labeling& L, VertexId v);  // in the base plane of v
std::string pointer_of(const Labeling& L, VertexId v);

// ==== Corner edges ====

enum class CornerEdge : std::uint8_t { E7, E8, E_ld, E_rd, E_ur, E_ddl, E_ddr };
const char* to_string(CornerEdge e);
// the edge letter of the named corner edge of tile t; throws if the corner has no such edge
std::string corner_edge_code(const Complex& c, TileId t, CornerEdge e);

// ==== Pasting cores ====

// rows of the exit tables: (core type, edge name at the core) -> main edge name at the neighbour
const std::map<std::pair<std::string, std::string>, std::string>& core_exit_table();

struct CoreAdjacent {
  std::string pred_exit;   // name at the predecessor of the edge entering the core
  std::string succ_entry;  // name at the successor of the edge leaving the core
};
// in_name / out_name: names at the core of the entering and leaving edges
CoreAdjacent core_adjacent(const Labeling& L, VertexId core, const std::string& in_name, const std::string& out_name);
bool is_pasting_core(const Complex& c, VertexId v);

struct NearCoreInfo {
  std::string info;
  bool derived = false;  // true: derived from the core's code; false: read from the geometry
};
// information of x, a neighbour of the core on a side of one of its pasted tiles
NearCoreInfo info_near_core(const Labeling& L, VertexId core, VertexId x);

}  // namespace nilcomplex
