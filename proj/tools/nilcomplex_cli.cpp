#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilcomplex/census.hpp"
#include "nilcomplex/node_functions.hpp"
#include "nilcomplex/pipeline.hpp"
#include "nilcomplex/rewrite.hpp"
#include "nilcomplex/samples.hpp"

namespace fs = std::filesystem;
using namespace nilcomplex;

namespace {

struct Options {
  int level = 4;
  std::size_t budget = 1'000'000;
  std::size_t face_cap = 1'000'000;
  int workers = 0;
  std::string out = ".";
  std::string mode = "recursive";
  std::string word;
  int power = 9;
  int plane = 0;
  std::string function;
  long long vertex = -1;
};

// verification failures exit with 1
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PipelineConfig pipeline_config(const Options& o) {
  PipelineConfig cfg;
  cfg.cap = o.level;
  cfg.mode = parse_pasting_mode(o.mode);
  cfg.face_cap = o.face_cap;
  cfg.workers = o.workers;
  cfg.cache_dir = cache_dir_from_env();
  return cfg;
}

void write_json(const Options& o, const std::string& name, const nlohmann::json& j) {
  fs::create_directories(o.out);
  const fs::path file = fs::path(o.out) / name;
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << j.dump(1) << "\n";
  std::cout << "wrote " << file.string() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex grow_one(const Options& o) {
  return load_or_grow(o.level, parse_pasting_mode(o.mode), o.face_cap, cache_dir_from_env());
}

// ==== Commands ====

void cmd_build(const Options& o) {
  const Complex c = grow_one(o);
  std::cout << "level " << c.level() << " " << to_string(c.mode()) << ": V=" << c.num_vertices()
            << " E=" << c.num_edges() << " F=" << c.num_faces() << " planes=" << c.planes().size() << "\n";
  write_json(o, "complex.json", c.to_json());
}

void cmd_label(const Options& o) {
  const Complex c = grow_one(o);
  Alphabet alpha;
  const Labeling L(c, alpha);
  nlohmann::json vs = nlohmann::json::array();
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    nlohmann::json x;
    x["id"] = v;
    x["base_plane"] = c.vertex(v).base;
    x["role"] = role_text(L.base_role(v));
    x["letter_id"] = L.vertex_letter(v, c.vertex(v).base, c.vertex(v).base);
    x["info"] = L.info(v);
    x["flag"] = L.flag(v);
    for (PlaneId p : c.planes_of(v)) x["planes"][std::to_string(p)] = role_text(L.role(v, p));
    vs.push_back(std::move(x));
  }
  nlohmann::json j;
  j["level"] = c.level();
  j["mode"] = to_string(c.mode());
  j["vertices"] = std::move(vs);
  j["chains"] = L.chains().size();
  std::cout << "labeled " << c.num_vertices() << " vertices, " << L.chains().size() << " chains\n";
  write_json(o, "labels.json", j);
}

nlohmann::json conflicts_json(const Pipeline& P) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& rep : P.reports())
    for (const auto& cf : rep.conflicts)
      j.push_back({{"lhs", word_ids(cf.lhs)},
                   {"rhs1", word_ids(cf.rhs1)},
                   {"rhs2", word_ids(cf.rhs2)},
                   {"first", relation_json(cf.first)},
                   {"second", relation_json(cf.second)}});
  return j;
}

nlohmann::json levels_json(const Pipeline& P) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < P.reports().size(); ++i) {
    const auto& r = P.reports()[i];
    j.push_back({{"level", i + 1},
                 {"squares", r.squares},
                 {"relations", r.relations},
                 {"excluded_dead", r.excluded_dead},
                 {"conflicts", r.conflicts.size()}});
  }
  return j;
}

void cmd_relations(const Options& o) {
  Pipeline P(pipeline_config(o));
  nlohmann::json rels = nlohmann::json::array();
  for (const SquareRelation* r : P.relations().sorted()) rels.push_back(relation_json(*r));
  nlohmann::json j;
  j["cap"] = o.level;
  j["levels"] = levels_json(P);
  j["relations"] = std::move(rels);
  j["dead_projections"] = P.rules().dead.size();
  j["realized_windows"] = P.rules().realized.size();
  std::cout << P.relations().size() << " relations, " << P.conflicts() << " conflicts\n";
  write_json(o, "relations.json", j);
}

void cmd_verify(const Options& o) {
  Pipeline P(pipeline_config(o));
  nlohmann::json j;
  j["cap"] = o.level;
  j["levels"] = levels_json(P);
  j["relations"] = P.relations().size();
  j["conflicts"] = conflicts_json(P);
  write_json(o, "determinism.json", j);
  std::cout << P.conflicts() << " conflicts\n";
  if (P.conflicts()) throw VerificationFailure("determinism violated");
}

void cmd_census(const Options& o) {
  Options flat = o;
  flat.mode = "flat";
  const Complex c = grow_one(flat);
  Alphabet alpha;
  const Labeling L(c, alpha);
  const CensusReport r = census_report(L);
  nlohmann::json j = census_json(r);
  j["bounds"] = bound_json(bound_report());
  for (const auto& row : chain_table()) {
    std::cout << row.row << ":";
    for (const auto& type : row.types) {
      std::cout << " " << type;
      for (int lv = 0; lv < 4; ++lv) {
        auto it = r.chains.find(type);
        if (it != r.chains.end() && it->second.count(lv)) std::cout << " " << lv << "=" << it->second.at(lv);
      }
    }
    std::cout << "\n";
  }
  std::cout << "edge tuples " << r.tuples.count << " stabilized at depth " << r.tuples.stabilized_at << "\n";
  std::cout << "cells matched " << r.cells_matched << "/" << r.cells_checked << ", " << r.diffs.size() << " diffs\n";
  write_json(o, "census.json", j);
}

Word load_word(const Options& o, const Pipeline& P) {
  if (o.word.empty()) throw CLI::ValidationError("--word", "a word file is required");
  return parse_word_spec(read_file(o.word), P);
}

void cmd_reduce(const Options& o) {
  Pipeline P(pipeline_config(o));
  const Word w = load_word(o, P);
  const RewriteOutcome r = reduce(w, P.relations(), P.rules(), P.alphabet(), o.budget);
  nlohmann::json j = outcome_json(r, P.alphabet());
  j["input"] = word_ids(w);
  std::cout << to_string(r.verdict) << " (visited " << r.visited << ")\n";
  write_json(o, "reduce.json", j);
}

void cmd_nil_check(const Options& o) {
  Pipeline P(pipeline_config(o));
  const Word w = load_word(o, P);
  const RewriteOutcome r = nil_check(w, o.power, P.relations(), P.rules(), P.alphabet(), o.budget);
  nlohmann::json j = outcome_json(r, P.alphabet());
  j["input"] = word_ids(w);
  j["power"] = o.power;
  std::cout << "power " << o.power << ": " << to_string(r.verdict) << " (visited " << r.visited << ")\n";
  write_json(o, "nil_check.json", j);
}

void cmd_export_dot(const Options& o) {
  const Complex c = grow_one(o);
  if (o.plane < 0 || o.plane >= static_cast<int>(c.planes().size()))
    throw CLI::ValidationError("--plane", "no such plane");
  fs::create_directories(o.out);
  const fs::path file = fs::path(o.out) / ("plane" + std::to_string(o.plane) + ".dot");
  std::ofstream(file) << c.to_dot(o.plane);
  std::cout << "wrote " << file.string() << "\n";
}

// evaluates one function at one vertex
void node_fn_probe(const Options& o) {
  if (o.function.empty()) throw CLI::ValidationError("--vertex", "--vertex needs --function");
  const NodeFunction f = parse_node_function(o.function);
  const Complex c = grow_one(o);
  if (o.vertex >= static_cast<long long>(c.num_vertices())) throw CLI::ValidationError("--vertex", "no such vertex");
  Alphabet alpha;
  const Labeling L(c, alpha);
  nlohmann::json j = {{"function", to_string(f)}, {"vertex", o.vertex}, {"applications", nlohmann::json::array()}};
  for (const NodeApplication& a : node_function_at(L, f, static_cast<VertexId>(o.vertex))) {
    nlohmann::json x = {{"args", a.args}, {"value", a.value}};
    if (a.tile != kNone) x["tile"] = a.tile;
    j["applications"].push_back(std::move(x));
  }
  std::cout << j.dump(1) << "\n";
}

void cmd_node_fn(const Options& o) {
  if (o.vertex >= 0) return node_fn_probe(o);
  std::vector<NodeFunction> fs_list = all_node_functions();
  if (!o.function.empty()) fs_list = {parse_node_function(o.function)};
  Pipeline P(pipeline_config(o));
  FunctionalityTable table;
  nlohmann::json j = nlohmann::json::array();
  std::size_t violations = 0;
  for (NodeFunction f : fs_list) {
    for (const Labeling* L : P.labelings()) table.add(*L, f);
    const FunctionalityReport r = table.report(f);
    violations += r.violations;
    std::cout << to_string(f) << ": " << r.sites << " sites, " << r.distinct_args << " argument letters, "
              << r.violations << " violations\n";
    nlohmann::json x = {{"function", to_string(f)},
                        {"sites", r.sites},
                        {"distinct_args", r.distinct_args},
                        {"violations", r.violations}};
    for (const auto& [a, b] : r.witnesses)
      x["witnesses"].push_back({{"args", a.args}, {"value1", a.value}, {"value2", b.value}});
    j.push_back(std::move(x));
  }
  write_json(o, "node_functions.json", j);
  if (violations) throw VerificationFailure("node functions are not functional");
}

void cmd_samples(const Options& o) {
  Pipeline P(pipeline_config(o));
  const std::vector<SampleMatch> m = validate_case_samples(P, case_samples());
  std::size_t matched = 0;
  for (const SampleMatch& x : m) {
    matched += x.matched;
    std::cout << (x.matched ? "matched   " : "unmatched ") << x.id << " (" << x.sites << " sites)\n";
  }
  std::cout << matched << "/" << m.size() << " samples matched\n";
  write_json(o, "samples.json", samples_json(m));
  if (matched != m.size()) throw VerificationFailure("case samples unmatched");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilcomplex: complexes, vertex coloring, path relations and rewriting"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, int default_level) {
    o.level = default_level;
    sub->add_option("--level", o.level, "complex level (level cap for the relation pipeline)")
        ->check(CLI::Range(1, 12));
    sub->add_option("--out", o.out, "output directory");
    sub->add_option("--pasting-mode", o.mode, "pasting mode")
        ->check(CLI::IsMember({"flat", "base-only", "recursive"}));
    sub->add_option("--workers", o.workers, "worker threads (0: available parallelism)")->check(CLI::NonNegativeNumber);
    sub->add_option("--face-cap", o.face_cap, "maximum number of faces")->check(CLI::PositiveNumber);
  };
  auto rewriting = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "maximum number of words visited")->check(CLI::PositiveNumber);
    sub->add_option("--word", o.word, "word file: letter ids or 'path LEVEL v0 v1 ...'")->check(CLI::ExistingFile);
  };

  struct Cmd {
    const char* name;
    const char* help;
    int level;
    void (*run)(const Options&);
  };
  const Cmd cmds[] = {
      {"build", "grow a complex and write it as JSON", 4, cmd_build},
      {"label", "label the vertices of a complex", 4, cmd_label},
      {"relations", "generate the relations of levels 1..level", 4, cmd_relations},
      {"verify-determinism", "check that the relations are functional", 4, cmd_verify},
      {"census", "count environments on a flat complex and recompute the bounds", 8, cmd_census},
      {"reduce", "reduce a word under the relations", 4, cmd_reduce},
      {"nil-check", "reduce a power of a word", 4, cmd_nil_check},
      {"export-dot", "write one plane as Graphviz", 3, cmd_export_dot},
      {"node-fn", "check that the node functions are functional", 4, cmd_node_fn},
      {"validate-samples", "match transcribed case-table rows against generated relations", 4, cmd_samples},
  };
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    common(sub, c.level);
    subs.emplace_back(sub, &c);
  }
  rewriting(app.get_subcommand("reduce"));
  rewriting(app.get_subcommand("nil-check"));
  app.get_subcommand("nil-check")->add_option("--power", o.power, "exponent")->check(CLI::Range(1, 64));
  app.get_subcommand("export-dot")->add_option("--plane", o.plane, "plane id");
  app.get_subcommand("node-fn")->add_option("--function", o.function, "one node function by name");
  app.get_subcommand("node-fn")->add_option("--vertex", o.vertex, "evaluate --function at this vertex of the --level complex")
      ->check(CLI::NonNegativeNumber);

  try {
    // each subcommand resets the level to its own default before parsing its flags
    for (auto& [sub, c] : subs) {
      const int lv = c->level;
      sub->preparse_callback([&o, lv](std::size_t) { o.level = lv; });
    }
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    for (auto& [sub, c] : subs)
      if (sub->parsed()) c->run(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
