#include "nilcomplex/census.hpp"

#include <algorithm>
#include <numeric>

namespace nilcomplex {

// ==== Reference tables ====

const std::vector<ChainTableRow>& chain_table() {
  using C = std::array<std::optional<int>, 4>;
  static const std::vector<ChainTableRow> rows = {
      {"UL/LU", {"UL", "LU"}, C{std::nullopt, 7, 9, 9}, 50},
      {"UR/RU", {"UR", "RU"}, C{std::nullopt, 7, 9, 9}, 50},
      {"DL/LD", {"DL", "LD"}, C{std::nullopt, 4, 5, 5}, 28},
      {"DR/RD", {"DR", "RD"}, C{std::nullopt, 4, 5, 5}, 28},
      {"A", {"A"}, C{420, 5, 5, std::nullopt}, 430},
      {"B", {"B"}, C{std::nullopt, 6, 6, std::nullopt}, 12},
      {"C", {"C"}, C{std::nullopt, 7, 10, 10}, 27},
      {"D", {"D"}, C{std::nullopt, 2, 2, std::nullopt}, 4},
      {"L", {"L"}, C{std::nullopt, 4, 5, 5}, 14},
      {"R", {"R"}, C{std::nullopt, 4, 5, 5}, 14},
      {"U", {"U"}, C{std::nullopt, 5, 6, 6}, 17},
      {"CUL", {"CUL"}, C{std::nullopt, 2, 2, std::nullopt}, 4},
      {"CUR", {"CUR"}, C{std::nullopt, 2, 2, std::nullopt}, 4},
      {"CDL", {"CDL"}, C{std::nullopt, 2, 4, 4}, 10},
      {"CDR", {"CDR"}, C{std::nullopt, 3, 3, std::nullopt}, 6},
  };
  return rows;
}

const std::vector<NonChainTableRow>& nonchain_table() {
  static const std::vector<NonChainTableRow> rows = {
      {"DR/RD", {"DR", "RD"}, 4, 3, 12}, {"A", {"A"}, 210, 1, 210},  {"B", {"B"}, 210, 1, 210},
      {"C", {"C"}, 210, 1, 210},         {"D", {"D"}, 1, 3, 3},      {"R", {"R"}, 2, 3, 6},
      {"CUL", {"CUL"}, 1, 1, 1},         {"CUR", {"CUR"}, 1, 1, 1},  {"CDL", {"CDL"}, 1, 1, 1},
      {"CDR", {"CDR"}, 1, 1, 1},
  };
  return rows;
}

bool flagged_cell(const std::string& row, int level) {
  // the A 0-chain cell and the A/B/C base environment rows rest on the tuple count
  if (row == "A" && level == 0) return true;
  return level < 0 && (row == "A" || row == "B" || row == "C");
}

// ==== Enumeration ====

ChainCensus census_chains(const Labeling& L) {
  std::map<std::string, std::map<int, std::set<std::string>>> envs;
  for (const Chain& ch : L.chains()) {
    const std::string& type = L.role(ch.center, ch.plane).type;
    auto& cell = envs[type][std::min(ch.level, 3)];
    for (const auto& m : ch.members) cell.insert(L.role(m.v, ch.plane).census_env);
  }
  ChainCensus out;
  for (const auto& [type, by_level] : envs)
    for (const auto& [lv, s] : by_level) out[type][lv] = s.size();
  return out;
}

NonChainCensus census_nonchain(const Labeling& L) {
  std::map<std::string, std::set<std::string>> envs;
  NonChainCensus out;
  const Complex& c = L.complex();
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    const Role& r = L.base_role(v);
    if (r.chain != kNone) continue;
    envs[r.type].insert(r.census_env);
    out.levels[r.type].insert(r.level);
  }
  for (const auto& [type, s] : envs) out.envs[type] = s.size();
  return out;
}

TupleCount count_edge_tuples(int max_depth) {
  using Env = std::array<std::string, 4>;
  TupleCount out;
  std::set<Env> seen{{"left", "top", "right", "bottom"}};
  std::vector<Env> frontier(seen.begin(), seen.end());
  out.by_depth.push_back(seen.size());
  for (int d = 1; d <= max_depth && !frontier.empty(); ++d) {
    std::vector<Env> next;
    for (const Env& e : frontier)
      for (int p = 0; p < 6; ++p) {
        Env k = child_env(e, static_cast<Position>(p));
        if (seen.insert(k).second) next.push_back(k);
      }
    frontier = std::move(next);
    out.by_depth.push_back(seen.size());
    if (frontier.empty()) out.stabilized_at = d - 1;
  }
  out.count = seen.size();
  out.tuples.assign(seen.begin(), seen.end());
  return out;
}

// ==== Comparison ====

bool CensusReport::tables_match() const {
  return std::none_of(diffs.begin(), diffs.end(), [](const CensusDiff& d) { return d.expected && !d.flagged; });
}

CensusReport census_report(const Labeling& L, int tuple_depth) {
  CensusReport r;
  r.level = L.complex().level();
  r.chains = census_chains(L);
  r.nonchain = census_nonchain(L);
  r.tuples = count_edge_tuples(tuple_depth);
  auto lookup = [](const auto& m, const std::string& k) -> const auto* {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  };
  for (const auto& row : chain_table()) {
    for (const auto& type : row.types) {
      const auto* by_level = lookup(r.chains, type);
      for (int lv = 0; lv < 4; ++lv) {
        long long got = 0;
        if (by_level) {
          auto it = by_level->find(lv);
          if (it != by_level->end()) got = static_cast<long long>(it->second);
        }
        const auto& want = row.cells[lv];
        if (!want) {
          if (got) r.diffs.push_back({"chains", row.row, type + " " + std::to_string(lv), std::nullopt, got, false});
          continue;
        }
        ++r.cells_checked;
        if (got == *want) {
          ++r.cells_matched;
          continue;
        }
        r.diffs.push_back({"chains", row.row, type + " " + std::to_string(lv), *want, got, flagged_cell(row.row, lv)});
      }
    }
  }
  for (const auto& row : nonchain_table()) {
    // a combined row counts the environments of all its types together
    long long got = 0;
    for (const auto& type : row.types)
      if (const auto* n = lookup(r.nonchain.envs, type)) got += static_cast<long long>(*n);
    ++r.cells_checked;
    if (got == row.envs) {
      ++r.cells_matched;
      continue;
    }
    r.diffs.push_back({"nonchain", row.row, row.row, row.envs, got, flagged_cell(row.row, -1)});
  }
  return r;
}

nlohmann::json census_json(const CensusReport& r) {
  nlohmann::json j;
  j["level"] = r.level;
  for (const auto& [type, by_level] : r.chains)
    for (const auto& [lv, n] : by_level) j["chains"][type][std::to_string(lv)] = n;
  for (const auto& [type, n] : r.nonchain.envs) {
    j["nonchain"][type]["envs"] = n;
    j["nonchain"][type]["levels"] = r.nonchain.levels.at(type);
  }
  j["edge_tuples"] = {{"count", r.tuples.count},
                      {"stabilized_at", r.tuples.stabilized_at},
                      {"by_depth", r.tuples.by_depth}};
  j["cells_checked"] = r.cells_checked;
  j["cells_matched"] = r.cells_matched;
  j["tables_match"] = r.tables_match();
  j["diffs"] = nlohmann::json::array();
  for (const auto& d : r.diffs) {
    nlohmann::json x = {{"table", d.table}, {"row", d.row}, {"cell", d.cell}, {"computed", d.computed},
                        {"flagged", d.flagged}};
    x["expected"] = d.expected ? nlohmann::json(*d.expected) : nlohmann::json(nullptr);
    j["diffs"].push_back(x);
  }
  return j;
}

// ==== Bound arithmetic ====

namespace {

using u128 = unsigned __int128;

u128 pow10(int e) {
  u128 x = 1;
  for (int i = 0; i < e; ++i) x *= 10;
  return x;
}

Scaled mul(Scaled a, Scaled b) {
  const u128 m = static_cast<u128>(a.m) * b.m;
  if (m >> 64) throw Error("bound arithmetic overflow");
  return {static_cast<std::uint64_t>(m), a.e + b.e};
}

// compares a and b; -1, 0, 1
int cmp(Scaled a, Scaled b) {
  const int e = std::min(a.e, b.e);
  const u128 x = a.m * pow10(a.e - e), y = b.m * pow10(b.e - e);
  return x < y ? -1 : x > y ? 1 : 0;
}

Scaled num(std::uint64_t m, int e = 0) { return {m, e}; }

}  // namespace

std::string Scaled::text() const {
  if (e == 0) return std::to_string(m);
  return std::to_string(m) + "e" + std::to_string(e);
}

std::vector<BoundStep> bound_report() {
  std::vector<BoundStep> out;
  auto step = [&](std::string label, std::string formula, Scaled value, std::string rel, Scaled stated) {
    const int c = cmp(value, stated);
    out.push_back({std::move(label), std::move(formula), value, rel, stated, rel == "=" ? c == 0 : c < 0});
    return value;
  };

  std::uint64_t chain_total = 0, nonchain_total = 0;
  for (const auto& row : chain_table()) chain_total += row.total;
  for (const auto& row : nonchain_table()) nonchain_total += row.total;
  const auto chains = step("chain environments", "sum of chain table totals", num(chain_total), "=", num(698));
  const auto nonchain = step("non-chain environments", "sum of non-chain table totals", num(nonchain_total), "=", num(655));
  const std::uint64_t flat_roles = chains.m * 3;
  step("flat chain roles", "698*3", num(flat_roles), "=", num(2094));
  const auto base = step("type-level-base env", "698*3+655", num(flat_roles + nonchain.m), "=", num(2749));
  const auto pasted = step("pasted env variants", "3+6*3+6*3", num(3 + 6 * 3 + 6 * 3), "=", num(39));
  const auto edge_base = step("bases under pasted env", "698*3+12+3+6", num(flat_roles + 12 + 3 + 6), "=", num(2115));
  const auto ext = step("extended environments", "2115*39", mul(edge_base, pasted), "=", num(82485));

  const auto second = step("second boss variants", "2094+12+210+1", num(flat_roles + 12 + 210 + 1), "=", num(2317));
  const auto two = step("first boss and right corner type", "2092+19+19", num(flat_roles - 2 + 19 + 19), "=", num(2130));
  step("flat information", "2094+2317+2130", num(flat_roles + second.m + two.m), "=", num(6541));

  const std::uint64_t info = ext.m * edge_base.m + edge_base.m * base.m + ext.m;
  step("information", "82485*2115+2115*2749+82485", num(info), "=", num(180352395));

  const Scaled info_r{181, 6};
  step("information rounded", "180352395 < 181e6", num(info), "<", info_r);
  const auto combos = step("type-level-env-info", "181e6*(82485+2749)", mul(info_r, num(ext.m + base.m)), "<", num(16, 12));
  const Scaled combos_r{16, 12};
  const auto flags = step("pasting flags", "2749*11*10*16e12", mul(mul(num(base.m), num(110)), combos_r), "<", num(5, 18));
  (void)combos;
  (void)flags;
  const Scaled flags_r{5, 18};
  step("letters", "82485*16e12*5e18", mul(mul(ext, combos_r), flags_r), "<", num(7, 36));

  step("relations of local moves 1-6", "72*181e6*5e18*39*16e12",
       mul(mul(mul(mul(num(72), info_r), flags_r), pasted), combos_r), "<", num(41, 42));
  const Scaled f_big{16, 18};
  const Scaled n_all = mul(num(base.m), info_r);
  const Scaled fpn = mul(mul(f_big, num(39 * 39)), n_all);
  step("relations of local moves 7-10 as printed", "8*F*P^2*N, F=16e18, P=39, N=2749*181e6",
       mul(num(8), fpn), "<", num(13, 33));
  step("relations of local moves 7-10 without the factor 8", "F*P^2*N", fpn, "<", num(13, 33));
  return out;
}

nlohmann::json bound_json(const std::vector<BoundStep>& steps) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : steps)
    j.push_back({{"label", s.label},
                 {"formula", s.formula},
                 {"value", s.value.text()},
                 {"relation", s.relation},
                 {"stated", s.stated.text()},
                 {"holds", s.holds}});
  return j;
}

}  // namespace nilcomplex
