#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nilcomplex/relations.hpp"

namespace nilcomplex {

struct PipelineConfig {
  int cap = 4;  // complexes of levels 1..cap
  PastingMode mode = PastingMode::Recursive;
  std::size_t face_cap = 1'000'000;
  int workers = 0;          // 0: available parallelism
  std::string cache_dir;    // empty: no memoized builds
};

// grows a complex, reading and writing the cache directory when one is given
Complex load_or_grow(int level, PastingMode mode, std::size_t face_cap, const std::string& cache_dir);
// NILCOMPLEX_CACHE, or empty
std::string cache_dir_from_env();

// complexes of levels 1..cap labeled over one alphabet, their zero rules and relations
class Pipeline {
 public:
  explicit Pipeline(const PipelineConfig& cfg);

  const PipelineConfig& config() const { return cfg_; }
  Alphabet& alphabet() { return alpha_; }
  const Complex& complex(int level) const { return *complexes_.at(level - 1); }
  const Labeling& labeling(int level) const { return *labelings_.at(level - 1); }
  std::vector<const Labeling*> labelings() const;

  const ZeroRules& rules() const { return rules_; }
  const RelationSet& relations() const { return relations_; }
  // relation reports per level, in level order
  const std::vector<RelationReport>& reports() const { return reports_; }
  std::size_t conflicts() const;

 private:
  PipelineConfig cfg_;
  Alphabet alpha_;
  std::vector<std::unique_ptr<Complex>> complexes_;
  std::vector<std::unique_ptr<Labeling>> labelings_;
  ZeroRules rules_;
  RelationSet relations_;
  std::vector<RelationReport> reports_;
};

// a word given as letter ids ("Y3 Z0 X1 Y5") or as "path LEVEL v0 v1 ..." in the
// complex of that level; lines starting with '#' are ignored
Word parse_word_spec(const std::string& text, const Pipeline& P);

}  // namespace nilcomplex
