#include "nilcomplex/codec.hpp"

#include <algorithm>
#include <sstream>

namespace nilcomplex {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

char family_char(Family f) {
  switch (f) {
    case Family::X: return 'X';
    case Family::Y: return 'Y';
    case Family::Z: return 'Z';
  }
  return '?';
}

Family next_family(Family f) {
  switch (f) {
    case Family::Y: return Family::Z;
    case Family::Z: return Family::X;
    case Family::X: return Family::Y;
  }
  return Family::Y;
}

}  // namespace

std::uint64_t hash_letters(const Letter* begin, const Letter* end) {
  std::uint64_t h = mix(static_cast<std::uint64_t>(end - begin));
  for (const Letter* p = begin; p != end; ++p)
    h = mix(h ^ ((static_cast<std::uint64_t>(p->fam) << 32) | p->id));
  return h;
}

std::size_t WordHash::operator()(const Word& w) const {
  return static_cast<std::size_t>(hash_letters(w.data(), w.data() + w.size()));
}

std::string word_ids(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += family_char(w[i].fam);
    s += std::to_string(w[i].id);
  }
  return s;
}

Word parse_word_ids(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok.size() < 2) throw Error("bad letter token: " + tok);
    Letter l;
    switch (tok[0]) {
      case 'X': l.fam = Family::X; break;
      case 'Y': l.fam = Family::Y; break;
      case 'Z': l.fam = Family::Z; break;
      default: throw Error("bad letter family: " + tok);
    }
    try {
      l.id = static_cast<LetterId>(std::stoul(tok.substr(1)));
    } catch (const std::exception&) {
      throw Error("bad letter id: " + tok);
    }
    w.push_back(l);
  }
  return w;
}

std::string word_text(const Word& w, const Alphabet& alpha) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += family_char(w[i].fam);
    s += ':';
    if (w[i].fam == Family::Y) {
      const auto p = alpha.vertex_parts(w[i].id);
      const std::string base = alpha.part_text(p.base);
      const auto bar = base.find('|');
      const auto bar2 = base.find('|', bar + 1);
      s += "<" + base.substr(0, bar2) + ",env#" + std::to_string(p.base) + ",info#" +
           std::to_string(p.info) + ">";
    } else {
      s += alpha.edge_text(w[i].id);
    }
  }
  return s;
}

Word encode_path(const Labeling& L, const std::vector<VertexId>& path) {
  const Complex& c = L.complex();
  Word w;
  if (path.empty()) return w;
  std::vector<EdgeId> es;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const EdgeId e = c.find_edge(path[i], path[i + 1]);
    if (e == kNone)
      throw Error("encode_path: vertices " + std::to_string(path[i]) + " and " +
                  std::to_string(path[i + 1]) + " are not adjacent");
    es.push_back(e);
  }
  w.reserve(3 * path.size() - 2);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const PlaneId in = i ? c.edge_plane(es[i - 1]) : kNone;
    const PlaneId out = i < es.size() ? c.edge_plane(es[i]) : kNone;
    w.push_back({Family::Y, L.vertex_letter(path[i], in, out)});
    if (i < es.size()) {
      w.push_back({Family::Z, L.edge_letter(es[i], path[i])});
      w.push_back({Family::X, L.edge_letter(es[i], path[i + 1])});
    }
  }
  return w;
}

bool is_code_form(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1].fam != next_family(w[i].fam)) return false;
  return true;
}

Word reverse_word(const Word& w, Alphabet& alpha) {
  Word r(w.rbegin(), w.rend());
  for (Letter& l : r) {
    if (l.fam == Family::X) l.fam = Family::Z;
    else if (l.fam == Family::Z) l.fam = Family::X;
    else {
      auto p = alpha.vertex_parts(l.id);
      std::swap(p.in, p.out);
      l.id = alpha.vertex_letter(p);
    }
  }
  return r;
}

std::size_t vertex_count(const Word& w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.fam == Family::Y; }));
}

// ==== Zero rules ====

const char* to_string(HitKind k) {
  switch (k) {
    case HitKind::None: return "none";
    case HitKind::Family: return "family";
    case HitKind::ZeroForm: return "zero-form";
    case HitKind::Forbidden: return "forbidden";
    case HitKind::Dead: return "dead";
  }
  return "?";
}

std::string dead_projection(const Letter* w, const Alphabet& alpha) {
  std::string s = alpha.vertex_type(w[0].id);
  for (int i = 1; i < 7; ++i) {
    s += ' ';
    s += (w[i].fam == Family::Y) ? alpha.vertex_type(w[i].id) : alpha.edge_text(w[i].id);
  }
  return s;
}

std::uint64_t window_key(const Letter* begin, const Letter* end, Alphabet& alpha) {
  Word tmp(begin, end);
  tmp.front().id = alpha.drop_in(tmp.front().id);
  tmp.back().id = alpha.drop_out(tmp.back().id);
  return hash_letters(tmp.data(), tmp.data() + tmp.size());
}

void ZeroRules::add_realized(const Labeling& L) {
  const Complex& c = L.complex();
  std::vector<VertexId> path;
  auto record = [&]() { auto w = encode_path(L, path); realized.insert(hash_letters(w.data(), w.data() + w.size())); };
  auto rec = [&](auto&& self, int depth) -> void {
    record();
    if (depth == 3) return;
    for (EdgeId e : c.incident(path.back())) {
      path.push_back(c.other(e, path.back()));
      self(self, depth + 1);
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    path.assign(1, v);
    rec(rec, 0);
  }
  cap = std::max(cap, c.level());
}

std::vector<std::vector<VertexId>> dead_windows(const Complex& c) {
  std::vector<std::vector<VertexId>> out;
  auto push = [&](std::vector<VertexId> p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (c.find_edge(p[i], p[i + 1]) == kNone) return;
    out.push_back(p);
    std::reverse(p.begin(), p.end());
    out.push_back(std::move(p));
  };
  for (const Tile& T : c.tiles()) {
    if (!T.subdivided() || c.tile(T.children[0]).subdivided()) continue;
    push({T.a, T.mid(Side::Top), T.b});
    push({T.a, T.c, T.b});
    push({T.c, T.corner(Corner::DL), T.mid(Side::Bottom)});
    push({T.c, T.corner(Corner::DR), T.mid(Side::Bottom)});
  }
  return out;
}

void ZeroRules::add_dead(const Labeling& L) {
  const Alphabet& alpha = L.alphabet();
  for (const auto& p : dead_windows(L.complex())) {
    const Word w = encode_path(L, p);
    dead.insert(dead_projection(w.data(), alpha));
  }
}

ZeroRules build_zero_rules(const std::vector<const Labeling*>& labelings) {
  ZeroRules z;
  for (const Labeling* L : labelings) {
    z.add_realized(*L);
    z.add_dead(*L);
  }
  return z;
}

Hit scan_forbidden(const Word& w, const ZeroRules& rules, Alphabet& alpha) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1].fam != next_family(w[i].fam)) return {HitKind::Family, i, 2};
  std::vector<std::size_t> ys;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].fam == Family::Y) ys.push_back(i);
  for (std::size_t y : ys)
    if (y >= 1 && y + 1 < w.size() && w[y - 1].id == w[y + 1].id) return {HitKind::ZeroForm, y - 1, 3};
  for (std::size_t j = 0; j + 2 < ys.size(); ++j) {
    const std::string proj = dead_projection(&w[ys[j]], alpha);
    if (rules.dead.count(proj)) return {HitKind::Dead, ys[j], 7};
  }
  if (rules.check_forbidden && !rules.realized.empty()) {
    for (std::size_t j = 0; j < ys.size(); ++j)
      for (std::size_t m = 1; m <= 4 && j + m <= ys.size(); ++m) {
        const std::size_t b = ys[j], e = ys[j + m - 1] + 1;
        if (!rules.realized.count(window_key(&w[b], &w[e], alpha))) return {HitKind::Forbidden, b, e - b};
      }
  }
  return {};
}

std::vector<std::vector<VertexId>> realize_word(const Labeling& L, const Word& w, std::size_t limit) {
  std::vector<std::vector<VertexId>> out;
  if (w.empty() || !is_code_form(w) || w.front().fam != Family::Y || w.back().fam != Family::Y) return out;
  const Complex& c = L.complex();
  const Alphabet& alpha = L.alphabet();
  const std::size_t k = vertex_count(w);
  std::vector<VertexLetterParts> want(k);
  for (std::size_t i = 0; i < k; ++i) want[i] = alpha.vertex_parts(w[3 * i].id);
  std::vector<VertexId> path;
  auto rec = [&](auto&& self, std::size_t i, PlaneId in) -> void {
    if (out.size() >= limit) return;
    const VertexId v = path.back();
    if (i + 1 == k) {
      if (L.vertex_parts(v, in, kNone) == want[i]) out.push_back(path);
      return;
    }
    for (EdgeId e : c.incident(v)) {
      if (L.edge_letter(e, v) != w[3 * i + 1].id) continue;
      const VertexId u = c.other(e, v);
      if (L.edge_letter(e, u) != w[3 * i + 2].id) continue;
      const PlaneId p = c.edge_plane(e);
      if (!(L.vertex_parts(v, in, p) == want[i])) continue;
      path.push_back(u);
      self(self, i + 1, p);
      path.pop_back();
    }
  };
  for (VertexId v = 0; v < static_cast<VertexId>(c.num_vertices()); ++v) {
    const auto& bp = want[0];
    const auto vp = L.vertex_parts(v, kNone, kNone);
    if (vp.base != bp.base || vp.info != bp.info || vp.flag != bp.flag) continue;
    path.assign(1, v);
    rec(rec, 0, kNone);
  }
  return out;
}

}  // namespace nilcomplex
