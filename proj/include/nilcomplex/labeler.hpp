#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "nilcomplex/alphabet.hpp"
#include "nilcomplex/complex.hpp"

namespace nilcomplex {

// The color of a vertex relative to one plane.
struct Role {
  std::string type;  // CUL..CDL, U/L/R/D, A/B/C, or a side pair like "RU"
  int level = 0;     // 1..3 for edge and side types, 0 otherwise
  std::string env;
  std::string census_env;  // env with the center's own line abstracted
  int chain = kNone;       // chain index for chain members
};

std::string role_text(const Role& r);
bool is_side_pair(const std::string& type);
bool is_corner_type(const std::string& type);

struct ChainMember {
  VertexId v = kNone;
  EdgeId exit = kNone;
  std::string pointer;
};

struct Chain {
  VertexId center = kNone;
  PlaneId plane = kNone;
  int level = 0;
  int depth = 0;  // depth of the chain's tiles
  std::vector<TileId> tiles;
  std::vector<ChainMember> members;
  std::string env;         // ordered marks
  std::string census_env;  // marks with the center's line abstracted
  int index_of(VertexId v) const;
};

class Labeling {
 public:
  Labeling(const Complex& c, Alphabet& alphabet);

  const Complex& complex() const { return c_; }
  Alphabet& alphabet() const { return alpha_; }

  bool has_role(VertexId v, PlaneId p) const;
  const Role& role(VertexId v, PlaneId p) const;
  const Role& base_role(VertexId v) const { return role(v, c_.vertex(v).base); }
  const std::string& info(VertexId v) const { return info_.at(v); }
  const std::string& flag(VertexId v) const { return flag_.at(v); }
  std::string ext_env(VertexId v) const;
  std::string triple(VertexId w, PlaneId p) const;

  const std::vector<Chain>& chains() const { return chains_; }
  const Chain* chain_of(VertexId v, PlaneId p) const;
  // depth of the tiles on which v first appears in plane p (-1 for root corners)
  int birth_depth(VertexId v, PlaneId p) const;

  LetterId vertex_letter(VertexId v, PlaneId in_plane, PlaneId out_plane) const;
  LetterId edge_letter(EdgeId e, VertexId at) const;
  VertexLetterParts vertex_parts(VertexId v, PlaneId in_plane, PlaneId out_plane) const;

  // one-boss information tiles: owner tile of a line or birth tile, kNone if empty
  TileId info_tile(VertexId v) const;

 private:
  void build_chains();
  void build_roles();
  void build_info();
  void build_letters();
  std::string mark(VertexId m, PlaneId p, LineId abstract_line) const;

  const Complex& c_;
  Alphabet& alpha_;
  std::unordered_map<std::uint64_t, Role> roles_;
  std::vector<Chain> chains_;
  std::unordered_map<std::uint64_t, int> member_chain_;
  std::vector<std::string> info_;
  std::vector<std::string> flag_;
  std::vector<std::uint32_t> info_part_, flag_part_;
  std::unordered_map<std::uint64_t, std::uint32_t> role_part_;
  std::vector<LetterId> edge_letters_;  // 2 per edge: at a, at b
};

}  // namespace nilcomplex
