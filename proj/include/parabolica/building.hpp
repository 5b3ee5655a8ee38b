#pragma once

// Combinatorial layer: incidence systems, flag complexes, chamber systems,
// thin models and W-distances.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/errors.hpp"

namespace parabolica {

using Flag = std::vector<std::size_t>;  // element indices, ordered by type

class IncidenceSystem {
 public:
  IncidenceSystem() = default;
  explicit IncidenceSystem(std::vector<int> type_set) : type_set_(std::move(type_set)) {
    std::sort(type_set_.begin(), type_set_.end());
  }

  std::size_t add(std::string name, int type) {
    if (!std::binary_search(type_set_.begin(), type_set_.end(), type))
      throw DomainError("bad_type", "element type " + std::to_string(type) + " is not in the type set");
    names_.push_back(std::move(name));
    types_.push_back(type);
    adj_.emplace_back();
    return names_.size() - 1;
  }

  void connect(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (types_.at(a) == types_.at(b))
      throw DomainError("not_multipartite", "incident elements '" + names_[a] + "' and '" + names_[b] + "' share a type");
    adj_[a].insert(b);
    adj_[b].insert(a);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<int>& type_set() const noexcept { return type_set_; }
  int type(std::size_t v) const { return types_.at(v); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  // Reflexive incidence.
  bool incident(std::size_t a, std::size_t b) const { return a == b || adj_.at(a).count(b) > 0; }
  const std::set<std::size_t>& neighbours(std::size_t v) const { return adj_.at(v); }
  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& s : adj_) e += s.size();
    return e / 2;
  }
  std::vector<std::size_t> elements_of_type(int t) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v)
      if (types_[v] == t) out.push_back(v);
    return out;
  }

 private:
  std::vector<int> type_set_;
  std::vector<std::string> names_;
  std::vector<int> types_;
  std::vector<std::set<std::size_t>> adj_;
};

// J-flags: one element per type of J, pairwise incident.
inline std::vector<Flag> flags(const IncidenceSystem& g, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  std::vector<Flag> out;
  Flag cur;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == J.size()) {
      out.push_back(cur);
      return;
    }
    for (auto v : g.elements_of_type(J[k])) {
      bool ok = true;
      for (auto u : cur)
        if (!g.incident(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Flag> full_flags(const IncidenceSystem& g) { return flags(g, g.type_set()); }

// Face map F(J2) -> F(J1) for J1 ⊆ J2.
inline Flag face(const IncidenceSystem& g, const Flag& f, const std::vector<int>& J1) {
  Flag out;
  for (auto v : f)
    if (std::find(J1.begin(), J1.end(), g.type(v)) != J1.end()) out.push_back(v);
  if (out.size() != J1.size()) throw DomainError("bad_face", "face type is not a subset of the flag type");
  return out;
}

// Every type subset with its flags.
inline std::map<std::vector<int>, std::vector<Flag>> flag_complex(const IncidenceSystem& g) {
  std::map<std::vector<int>, std::vector<Flag>> out;
  const auto& I = g.type_set();
  for (std::size_t mask = 0; mask < (std::size_t{1} << I.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t i = 0; i < I.size(); ++i)
      if (mask & (std::size_t{1} << i)) J.push_back(I[i]);
    out[J] = flags(g, J);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chamber systems

class ChamberSystem {
 public:
  ChamberSystem() = default;
  ChamberSystem(std::vector<int> labels, std::vector<std::string> names)
      : labels_(std::move(labels)), names_(std::move(names)) {
    for (auto l : labels_) {
      panel_of_[l].assign(names_.size(), 0);
      panels_[l].clear();
      for (std::size_t c = 0; c < names_.size(); ++c) {
        panel_of_[l][c] = c;
        panels_[l].push_back({c});
      }
    }
  }

  // Partition of the chambers into i-panels; every chamber must appear once.
  void set_panels(int label, const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<std::size_t> owner(names_.size(), names_.size());
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (auto c : parts[p]) {
        if (owner.at(c) != names_.size()) throw DomainError("bad_panels", "chamber in two panels");
        owner[c] = p;
      }
    for (auto o : owner)
      if (o == names_.size()) throw DomainError("bad_panels", "chamber in no panel");
    panels_[label] = parts;
    panel_of_[label] = owner;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::string& name(std::size_t c) const { return names_.at(c); }
  const std::vector<std::vector<std::size_t>>& panels(int label) const { return panels_.at(label); }
  const std::vector<std::size_t>& panel(int label, std::size_t c) const {
    return panels_.at(label).at(panel_of_.at(label).at(c));
  }
  bool adjacent(int label, std::size_t b, std::size_t c) const {
    return panel_of_.at(label).at(b) == panel_of_.at(label).at(c);
  }
  bool is_thin() const {
    for (auto l : labels_)
      for (const auto& p : panels_.at(l))
        if (p.size() != 2) return false;
    return true;
  }
  bool is_connected() const {
    if (names_.empty()) return true;
    std::vector<bool> seen(size(), false);
    std::deque<std::size_t> q{0};
    seen[0] = true;
    while (!q.empty()) {
      auto c = q.front();
      q.pop_front();
      for (auto l : labels_)
        for (auto d : panel(l, c))
          if (!seen[d]) {
            seen[d] = true;
            q.push_back(d);
          }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

 private:
  std::vector<int> labels_;
  std::vector<std::string> names_;
  std::map<int, std::vector<std::vector<std::size_t>>> panels_;
  std::map<int, std::vector<std::size_t>> panel_of_;
};

struct FlagChambers {
  ChamberSystem system;
  std::vector<Flag> chambers;
};

// Full flags, i-adjacent when their subflags of type I \ {i} agree.
inline FlagChambers chambers_from_incidence(const IncidenceSystem& g) {
  auto ff = full_flags(g);
  if (ff.empty()) throw DomainError("no_full_flags", "incidence system has no full flag");
  std::vector<std::string> names;
  for (const auto& f : ff) {
    std::string s = "{";
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + g.name(f[k]);
    names.push_back(s + "}");
  }
  FlagChambers out{ChamberSystem(g.type_set(), names), ff};
  for (std::size_t li = 0; li < g.type_set().size(); ++li) {
    std::map<Flag, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < ff.size(); ++c) {
      Flag key = ff[c];
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(li));
      groups[key].push_back(c);
    }
    std::vector<std::vector<std::size_t>> parts;
    for (auto& [k, v] : groups) parts.push_back(std::move(v));
    std::sort(parts.begin(), parts.end());
    out.system.set_panels(g.type_set()[li], parts);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Thin chamber systems

using GroupWord = std::vector<int>;  // labels, applied left to right

class ThinChamberSystem {
 public:
  ThinChamberSystem() = default;
  // involution[k][c] = c·labels[k]
  ThinChamberSystem(std::vector<int> labels, std::vector<std::string> names,
                    std::vector<std::vector<std::size_t>> involutions)
      : system_(labels, names), involutions_(std::move(involutions)) {
    if (involutions_.size() != labels.size()) throw DomainError("bad_thin", "one involution per label");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& s = involutions_[k];
      std::vector<std::vector<std::size_t>> parts;
      for (std::size_t c = 0; c < s.size(); ++c) {
        if (s.at(s[c]) != c || s[c] == c) throw DomainError("bad_thin", "panel swap is not a free involution");
        if (c < s[c]) parts.push_back({c, s[c]});
      }
      system_.set_panels(labels[k], parts);
    }
  }

  const ChamberSystem& system() const noexcept { return system_; }
  std::size_t size() const { return system_.size(); }
  const std::vector<int>& labels() const { return system_.labels(); }
  std::size_t label_index(int label) const {
    auto it = std::find(labels().begin(), labels().end(), label);
    if (it == labels().end()) throw DomainError("bad_label", "unknown label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels().begin());
  }
  std::size_t step(std::size_t c, int label) const { return involutions_[label_index(label)].at(c); }
  std::size_t apply(std::size_t c, const GroupWord& w) const {
    for (auto l : w) c = step(c, l);
    return c;
  }
  const std::vector<std::vector<std::size_t>>& involutions() const { return involutions_; }

  // Shortlex words from c to every chamber (BFS with labels in increasing order).
  std::vector<GroupWord> words_from(std::size_t c) const {
    std::vector<std::optional<GroupWord>> w(size());
    w[c] = GroupWord{};
    std::deque<std::size_t> q{c};
    while (!q.empty()) {
      auto b = q.front();
      q.pop_front();
      for (auto l : labels()) {
        auto d = step(b, l);
        if (w[d]) continue;
        GroupWord next = *w[b];
        next.push_back(l);
        w[d] = std::move(next);
        q.push_back(d);
      }
    }
    std::vector<GroupWord> out;
    for (auto& x : w) {
      if (!x) throw DomainError("not_connected", "thin chamber system is not connected");
      out.push_back(std::move(*x));
    }
    return out;
  }

  // Order of the group generated by the panel swaps (closure over permutations).
  std::size_t structure_group_order() const {
    using Perm = std::vector<std::size_t>;
    Perm id(size());
    for (std::size_t c = 0; c < size(); ++c) id[c] = c;
    std::set<Perm> seen{id};
    std::deque<Perm> q{id};
    while (!q.empty()) {
      Perm p = q.front();
      q.pop_front();
      for (const auto& s : involutions_) {
        Perm n(size());
        for (std::size_t c = 0; c < size(); ++c) n[c] = s[p[c]];
        if (seen.insert(n).second) q.push_back(std::move(n));
      }
    }
    return seen.size();
  }

 private:
  ChamberSystem system_;
  std::vector<std::vector<std::size_t>> involutions_;
};

// Model A(n): orderings of {1..n+1}; label j swaps positions j and j+1.
inline ThinChamberSystem apartment_model_A(int n) {
  if (n < 1) throw DomainError("precondition", "apartment_model_A needs n >= 1");
  std::vector<int> perm(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> all;
  do all.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < all.size(); ++c) {
    index[all[c]] = c;
    std::string s;
    for (auto x : all[c]) s += std::to_string(x) + (n >= 9 ? "," : "");
    names.push_back(s);
  }
  std::vector<int> labels;
  std::vector<std::vector<std::size_t>> inv;
  for (int j = 1; j <= n; ++j) {
    labels.push_back(j);
    std::vector<std::size_t> s(all.size());
    for (std::size_t c = 0; c < all.size(); ++c) {
      auto p = all[c];
      std::swap(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(j)]);
      s[c] = index.at(p);
    }
    inv.push_back(std::move(s));
  }
  return ThinChamberSystem(labels, names, inv);
}

// Model B(n): signed orderings; labels j < n swap positions, label n negates
// the last entry.
inline ThinChamberSystem apartment_model_B(int n) {
  if (n < 1) throw DomainError("precondition", "apartment_model_B needs n >= 1");
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> all;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto p = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) p[static_cast<std::size_t>(i)] = -p[static_cast<std::size_t>(i)];
      all.push_back(p);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    // identity first: compare absolute values, then signs with + before -
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i]) != std::abs(b[i])) return std::abs(a[i]) < std::abs(b[i]);
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  });
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < all.size(); ++c) {
    index[all[c]] = c;
    std::string s;
    for (std::size_t k = 0; k < all[c].size(); ++k) s += (k ? "," : "") + std::to_string(all[c][k]);
    names.push_back(s);
  }
  std::vector<int> labels;
  std::vector<std::vector<std::size_t>> inv;
  for (int j = 1; j <= n; ++j) {
    labels.push_back(j);
    std::vector<std::size_t> s(all.size());
    for (std::size_t c = 0; c < all.size(); ++c) {
      auto p = all[c];
      if (j < n)
        std::swap(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(j)]);
      else
        p.back() = -p.back();
      s[c] = index.at(p);
    }
    inv.push_back(std::move(s));
  }
  return ThinChamberSystem(labels, names, inv);
}

// ---------------------------------------------------------------------------
// W-distance

class WDistance {
 public:
  WDistance() = default;
  explicit WDistance(const ThinChamberSystem& thin) : thin_(&thin) {
    const std::size_t n = thin.size();
    if (!thin.system().is_connected()) throw DomainError("not_connected", "w_distance needs a connected system");
    if (thin.structure_group_order() != n)
      throw DomainError("not_homogeneous", "structure group does not act freely");
    table_.reserve(n);
    for (std::size_t b = 0; b < n; ++b) table_.push_back(thin.words_from(b));
  }

  const GroupWord& operator()(std::size_t b, std::size_t c) const { return table_.at(b).at(c); }

  // Shortlex representative of the group element named by an arbitrary word.
  GroupWord canonical(const GroupWord& w) const { return table_.at(0).at(thin_->apply(0, w)); }

  static GroupWord inverse(GroupWord w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  // δ(b,c) = δ(c,b)^{-1}, and c' ~_i c implies δ(b,c') ~_i δ(b,c).
  std::vector<std::string> axiom_violations() const {
    std::vector<std::string> out;
    const std::size_t n = table_.size();
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (canonical(inverse((*this)(c, b))) != (*this)(b, c))
          out.push_back("inverse law fails at (" + std::to_string(b) + "," + std::to_string(c) + ")");
        for (auto l : thin_->labels()) {
          std::size_t c2 = thin_->step(c, l);
          GroupWord moved = (*this)(b, c);
          moved.push_back(l);
          if (canonical(moved) != (*this)(b, c2))
            out.push_back("adjacency law fails at (" + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    return out;
  }

  std::size_t size() const { return table_.size(); }

 private:
  const ThinChamberSystem* thin_ = nullptr;
  std::vector<std::vector<GroupWord>> table_;
};

inline WDistance w_distance(const ThinChamberSystem& thin) { return WDistance(thin); }

// Label-preserving isomorphism a -> b sending a0 to b0, by parallel BFS.
inline std::optional<std::vector<std::size_t>> label_isomorphism(const ThinChamberSystem& a, std::size_t a0,
                                                                 const ThinChamberSystem& b, std::size_t b0) {
  if (a.size() != b.size() || a.labels() != b.labels()) return std::nullopt;
  const std::size_t none = a.size();
  std::vector<std::size_t> map(a.size(), none), back(b.size(), none);
  map[a0] = b0;
  back[b0] = a0;
  std::deque<std::size_t> q{a0};
  while (!q.empty()) {
    auto c = q.front();
    q.pop_front();
    for (auto l : a.labels()) {
      auto ca = a.step(c, l), cb = b.step(map[c], l);
      if (map[ca] == none && back[cb] == none) {
        map[ca] = cb;
        back[cb] = ca;
        q.push_back(ca);
      } else if (map[ca] != cb || back[cb] != ca) {
        return std::nullopt;
      }
    }
  }
  if (std::find(map.begin(), map.end(), none) != map.end()) return std::nullopt;
  return map;
}

// ---------------------------------------------------------------------------
// Coresidues and the E C reconstruction

struct Coresidues {
  IncidenceSystem incidence;
  std::vector<std::vector<std::size_t>> members;  // chambers of each coresidue
};

// i-coresidues: components after deleting the i-labelled edges.
inline Coresidues coresidues(const ChamberSystem& d) {
  Coresidues out{IncidenceSystem(d.labels()), {}};
  std::vector<std::map<int, std::size_t>> owner(d.size());
  for (auto i : d.labels()) {
    std::vector<bool> seen(d.size(), false);
    for (std::size_t s = 0; s < d.size(); ++s) {
      if (seen[s]) continue;
      std::vector<std::size_t> comp;
      std::deque<std::size_t> q{s};
      seen[s] = true;
      while (!q.empty()) {
        auto c = q.front();
        q.pop_front();
        comp.push_back(c);
        for (auto l : d.labels()) {
          if (l == i) continue;
          for (auto e : d.panel(l, c))
            if (!seen[e]) {
              seen[e] = true;
              q.push_back(e);
            }
        }
      }
      std::sort(comp.begin(), comp.end());
      std::size_t v = out.incidence.add("R" + std::to_string(i) + "." + std::to_string(out.members.size()), i);
      for (auto c : comp) owner[c][i] = v;
      out.members.push_back(std::move(comp));
    }
  }
  for (std::size_t c = 0; c < d.size(); ++c)
    for (auto [i, v] : owner[c])
      for (auto [j, w] : owner[c])
        if (i < j) out.incidence.connect(v, w);
  return out;
}

inline bool is_flag_regular(const IncidenceSystem& g) {
  auto ff = full_flags(g);
  std::vector<bool> covered(g.size(), false);
  for (const auto& f : ff)
    for (auto v : f) covered[v] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

inline bool is_residually_connected(const IncidenceSystem& g) {
  auto fc = chambers_from_incidence(g);
  auto cr = coresidues(fc.system);
  const auto& I = g.type_set();
  // full flags through a common element of type i share the i-coresidue
  for (std::size_t li = 0; li < I.size(); ++li) {
    std::map<std::size_t, std::set<std::size_t>> residue_of_element;
    for (std::size_t r = 0; r < cr.members.size(); ++r) {
      if (cr.incidence.type(r) != I[li]) continue;
      for (auto c : cr.members[r]) residue_of_element[fc.chambers[c][li]].insert(r);
    }
    for (const auto& [v, rs] : residue_of_element)
      if (rs.size() != 1) return false;
  }
  return true;
}

struct Reconstruction {
  bool flag_regular = false;
  bool residually_connected = false;
  bool isomorphism = false;
  std::vector<std::size_t> counit;  // coresidue -> element of Γ
};

// The counit E C Γ -> Γ and whether it is an incidence isomorphism.
inline Reconstruction reconstruct(const IncidenceSystem& g) {
  Reconstruction r;
  r.flag_regular = is_flag_regular(g);
  auto fc = chambers_from_incidence(g);
  auto cr = coresidues(fc.system);
  const auto& I = g.type_set();
  bool well_defined = true;
  for (std::size_t v = 0; v < cr.members.size(); ++v) {
    int t = cr.incidence.type(v);
    std::size_t li = static_cast<std::size_t>(std::find(I.begin(), I.end(), t) - I.begin());
    std::set<std::size_t> elems;
    for (auto c : cr.members[v]) elems.insert(fc.chambers[c][li]);
    if (elems.size() != 1) well_defined = false;
    r.counit.push_back(*elems.begin());
  }
  r.residually_connected = is_residually_connected(g);
  if (!well_defined) return r;
  std::set<std::size_t> image(r.counit.begin(), r.counit.end());
  bool bijective = image.size() == r.counit.size() && image.size() == g.size();
  bool incidence = bijective;
  for (std::size_t a = 0; incidence && a < r.counit.size(); ++a)
    for (std::size_t b = 0; b < r.counit.size(); ++b)
      if (cr.incidence.incident(a, b) != g.incident(r.counit[a], r.counit[b])) {
        incidence = false;
        break;
      }
  r.isomorphism = incidence;
  return r;
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const IncidenceSystem& g, const std::string& name = "incidence") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  n" << v << " [label=" << dot_quote(g.name(v)) << ", type=" << g.type(v) << "];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (auto w : g.neighbours(v))
      if (v < w) os << "  n" << v << " -- n" << w << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const ChamberSystem& d, const std::string& name = "chambers") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t c = 0; c < d.size(); ++c) os << "  c" << c << " [label=" << dot_quote(d.name(c)) << "];\n";
  for (auto l : d.labels())
    for (const auto& p : d.panels(l))
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
          os << "  c" << p[a] << " -- c" << p[b] << " [label=" << l << "];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Discrete incidence models

// Proper nonempty subsets of {1..n+1}, smallest first, each listed in
// increasing order.
inline std::vector<std::vector<int>> subset_model_elements(int n) {
  if (n < 1) throw DomainError("precondition", "subset model needs n >= 1");
  const int m = n + 1;
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::vector<int>> out;
  for (auto mask : masks) {
    std::vector<int> e;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) e.push_back(i + 1);
    out.push_back(std::move(e));
  }
  return out;
}

// Nonempty admissible subsets of {±1..±n} (never both i and -i), smallest
// first, each listed by increasing absolute value.
inline std::vector<std::vector<int>> admissible_model_elements(int n) {
  if (n < 1) throw DomainError("precondition", "admissible model needs n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    self(self, k + 1);
    for (int s : {k, -k}) {
      cur.push_back(s);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// Elements typed by cardinality, incident when one contains the other.
inline IncidenceSystem containment_incidence(int n, const std::vector<std::vector<int>>& elements) {
  std::vector<int> I;
  for (int i = 1; i <= n; ++i) I.push_back(i);
  IncidenceSystem g(I);
  for (const auto& e : elements) {
    std::string s = "{";
    for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
    g.add(s + "}", static_cast<int>(e.size()));
  }
  auto subset = [](std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (elements[a].size() != elements[b].size() &&
          (subset(elements[a], elements[b]) || subset(elements[b], elements[a])))
        g.connect(a, b);
  return g;
}

inline IncidenceSystem incidence_model_subsets(int n) { return containment_incidence(n, subset_model_elements(n)); }

inline IncidenceSystem incidence_model_admissible(int n) {
  return containment_incidence(n, admissible_model_elements(n));
}

}  // namespace parabolica
