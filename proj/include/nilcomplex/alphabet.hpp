#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace nilcomplex {

using LetterId = std::uint32_t;

// Component ids of a vertex letter. Part 0 is the empty component.
struct VertexLetterParts {
  std::uint32_t in = 0, base = 0, out = 0, info = 0, flag = 0;
  bool operator==(const VertexLetterParts&) const = default;
  auto operator<=>(const VertexLetterParts&) const = default;
};

// Global letter dictionary shared by all complexes, so ids compare across levels.
class Alphabet {
 public:
  Alphabet();

  std::uint32_t part(const std::string& text);
  std::string part_text(std::uint32_t id) const;

  LetterId vertex_letter(const VertexLetterParts& parts);
  VertexLetterParts vertex_parts(LetterId id) const;
  std::string vertex_type(LetterId id) const;  // type of the base component

  LetterId edge_letter(const std::string& name);
  std::string edge_text(LetterId id) const;

  std::size_t num_vertex_letters() const;
  std::size_t num_edge_letters() const;
  std::size_t num_parts() const;

  std::string describe_vertex(LetterId id) const;

  // the same letter with the in-part (resp. out-part) removed
  LetterId drop_in(LetterId id);
  LetterId drop_out(LetterId id);
  // the letter with parts of `inner` and the in-part of `in_src`, out-part of `out_src`
  LetterId merge_ends(LetterId inner, const LetterId* in_src, const LetterId* out_src);

 private:
  mutable std::mutex mu_;
  std::vector<std::string> parts_;
  std::unordered_map<std::string, std::uint32_t> part_ids_;
  std::vector<VertexLetterParts> vletters_;
  std::vector<std::string> vtypes_;
  std::map<VertexLetterParts, LetterId> vletter_ids_;
  std::vector<LetterId> drop_in_, drop_out_;
  LetterId intern_locked(const VertexLetterParts& p);
  std::vector<std::string> eletters_;
  std::unordered_map<std::string, LetterId> eletter_ids_;
};

}  // namespace nilcomplex
