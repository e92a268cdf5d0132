#include "nilcomplex/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace nilcomplex {

std::string cache_dir_from_env() {
  const char* s = std::getenv("NILCOMPLEX_CACHE");
  return s ? std::string(s) : std::string();
}

Complex load_or_grow(int level, PastingMode mode, std::size_t face_cap, const std::string& cache_dir) {
  if (cache_dir.empty()) return Complex::grow(level, mode, face_cap);
  namespace fs = std::filesystem;
  const fs::path file = fs::path(cache_dir) / ("complex-" + std::string(to_string(mode)) + "-L" +
                                               std::to_string(level) + "-cap" + std::to_string(face_cap) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    return Complex::from_cache(nlohmann::json::parse(in));
  }
  Complex c = Complex::grow(level, mode, face_cap);
  fs::create_directories(cache_dir);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << c.to_cache().dump();
  }
  fs::rename(tmp, file);
  return c;
}

Pipeline::Pipeline(const PipelineConfig& cfg) : cfg_(cfg) {
  if (cfg.cap < 1) throw Error("level cap must be positive");
  const int n = cfg.cap;
  complexes_.resize(n);
  // complexes are independent; labeling stays sequential so letter ids are deterministic
  const int workers = std::max(1, cfg.workers > 0 ? cfg.workers : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<std::exception_ptr> errors(n);
  auto grow = [&](int i) {
    try {
      complexes_[i] = std::make_unique<Complex>(load_or_grow(i + 1, cfg.mode, cfg.face_cap, cfg.cache_dir));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  for (int base = 0; base < n; base += workers) {
    std::vector<std::thread> pool;
    for (int i = base; i < std::min(n, base + workers); ++i) pool.emplace_back(grow, i);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& c : complexes_) labelings_.push_back(std::make_unique<Labeling>(*c, alpha_));
  rules_ = build_zero_rules(labelings());
  rules_.cap = n;
  for (const auto& L : labelings_) reports_.push_back(add_relations(relations_, *L, rules_));
}

std::vector<const Labeling*> Pipeline::labelings() const {
  std::vector<const Labeling*> out;
  for (const auto& L : labelings_) out.push_back(L.get());
  return out;
}

std::size_t Pipeline::conflicts() const {
  std::size_t n = 0;
  for (const auto& r : reports_) n += r.conflicts.size();
  return n;
}

Word parse_word_spec(const std::string& text, const Pipeline& P) {
  std::istringstream in(text);
  std::string line, body;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] != '#')
      body += line + " ";
  std::istringstream toks(body);
  std::string head;
  if (!(toks >> head)) throw Error("empty word");
  if (head != "path") return parse_word_ids(body);
  int level = 0;
  if (!(toks >> level) || level < 1 || level > P.config().cap)
    throw Error("path level must be in 1.." + std::to_string(P.config().cap));
  std::vector<VertexId> path;
  for (long long v; toks >> v;) {
    if (v < 0 || v >= static_cast<long long>(P.complex(level).num_vertices()))
      throw Error("vertex " + std::to_string(v) + " out of range");
    path.push_back(static_cast<VertexId>(v));
  }
  if (!toks.eof()) throw Error("bad vertex id in path");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (P.complex(level).find_edge(path[i], path[i + 1]) == kNone)
      throw Error("no edge between " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]));
  return encode_path(P.labeling(level), path);
}

}  // namespace nilcomplex
