#include "nilcomplex/alphabet.hpp"

#include <stdexcept>

namespace nilcomplex {

Alphabet::Alphabet() {
  parts_.push_back("");
  part_ids_[""] = 0;
}

std::uint32_t Alphabet::part(const std::string& text) {
  std::lock_guard lock(mu_);
  auto it = part_ids_.find(text);
  if (it != part_ids_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(parts_.size());
  parts_.push_back(text);
  part_ids_.emplace(text, id);
  return id;
}

std::string Alphabet::part_text(std::uint32_t id) const {
  std::lock_guard lock(mu_);
  return parts_.at(id);
}

LetterId Alphabet::vertex_letter(const VertexLetterParts& p) {
  std::lock_guard lock(mu_);
  return intern_locked(p);
}

LetterId Alphabet::intern_locked(const VertexLetterParts& p) {
  auto it = vletter_ids_.find(p);
  if (it != vletter_ids_.end()) return it->second;
  auto id = static_cast<LetterId>(vletters_.size());
  vletters_.push_back(p);
  const std::string& base = parts_.at(p.base);
  vtypes_.push_back(base.substr(0, base.find('|')));
  vletter_ids_.emplace(p, id);
  drop_in_.push_back(static_cast<LetterId>(-1));
  drop_out_.push_back(static_cast<LetterId>(-1));
  return id;
}

LetterId Alphabet::drop_in(LetterId id) {
  std::lock_guard lock(mu_);
  if (drop_in_.at(id) != static_cast<LetterId>(-1)) return drop_in_[id];
  VertexLetterParts p = vletters_[id];
  p.in = 0;
  const LetterId r = intern_locked(p);
  drop_in_[id] = r;
  return r;
}

LetterId Alphabet::drop_out(LetterId id) {
  std::lock_guard lock(mu_);
  if (drop_out_.at(id) != static_cast<LetterId>(-1)) return drop_out_[id];
  VertexLetterParts p = vletters_[id];
  p.out = 0;
  const LetterId r = intern_locked(p);
  drop_out_[id] = r;
  return r;
}

LetterId Alphabet::merge_ends(LetterId inner, const LetterId* in_src, const LetterId* out_src) {
  std::lock_guard lock(mu_);
  VertexLetterParts p = vletters_.at(inner);
  if (in_src) p.in = vletters_.at(*in_src).in;
  if (out_src) p.out = vletters_.at(*out_src).out;
  return intern_locked(p);
}

VertexLetterParts Alphabet::vertex_parts(LetterId id) const {
  std::lock_guard lock(mu_);
  return vletters_.at(id);
}

std::string Alphabet::vertex_type(LetterId id) const {
  std::lock_guard lock(mu_);
  return vtypes_.at(id);
}

LetterId Alphabet::edge_letter(const std::string& name) {
  std::lock_guard lock(mu_);
  auto it = eletter_ids_.find(name);
  if (it != eletter_ids_.end()) return it->second;
  auto id = static_cast<LetterId>(eletters_.size());
  eletters_.push_back(name);
  eletter_ids_.emplace(name, id);
  return id;
}

std::string Alphabet::edge_text(LetterId id) const {
  std::lock_guard lock(mu_);
  return eletters_.at(id);
}

std::size_t Alphabet::num_vertex_letters() const {
  std::lock_guard lock(mu_);
  return vletters_.size();
}

std::size_t Alphabet::num_edge_letters() const {
  std::lock_guard lock(mu_);
  return eletters_.size();
}

std::size_t Alphabet::num_parts() const {
  std::lock_guard lock(mu_);
  return parts_.size();
}

std::string Alphabet::describe_vertex(LetterId id) const {
  std::lock_guard lock(mu_);
  const auto& p = vletters_.at(id);
  std::string s = "<";
  if (p.in) s += parts_[p.in] + " >> ";
  s += parts_[p.base];
  if (p.out) s += " >> " + parts_[p.out];
  s += ", info#" + std::to_string(p.info) + ", flag#" + std::to_string(p.flag) + ">";
  return s;
}

}  // namespace nilcomplex
