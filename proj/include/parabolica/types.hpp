#pragma once

// Types of parabolic subalgebras, the duality involution, the maps ι_q and
// ν_q for a Levi quotient, Lie apartments and the Weyl distance between
// minimal parabolics.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/building.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/root_data.hpp"

namespace parabolica {

using TypeSet = std::set<int>;
using TypeMap = std::map<int, int>;

inline TypeSet preimage(const TypeMap& f, const TypeSet& J) {
  TypeSet out;
  for (auto [k, v] : f)
    if (J.count(v)) out.insert(k);
  return out;
}

inline TypeSet apply(const TypeMap& f, const TypeSet& J) {
  TypeSet out;
  for (auto j : J) out.insert(f.at(j));
  return out;
}

inline TypeMap compose(const TypeMap& outer, const TypeMap& inner) {
  TypeMap out;
  for (auto [k, v] : inner) out[k] = outer.at(v);
  return out;
}

inline bool is_involution(const TypeMap& f) {
  for (auto [k, v] : f)
    if (!f.count(v) || f.at(v) != k) return false;
  return true;
}

inline std::string to_string(const TypeSet& J) {
  std::string s = "{";
  bool first = true;
  for (auto j : J) {
    s += (first ? "" : ",") + std::to_string(j);
    first = false;
  }
  return s + "}";
}

// A simple system whose generators are named by type labels, in increasing
// label order.
struct LabelledSimpleSystem {
  SimpleSystem ss;
  std::vector<int> labels;  // labels[i] names generator position i

  std::size_t position(int label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw DomainError("bad_label", "unknown type label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels.begin());
  }
  GroupWord to_labels(const Word& w) const {
    GroupWord out;
    for (auto i : w) out.push_back(labels.at(i));
    return out;
  }
  Word to_positions(const GroupWord& w) const {
    Word out;
    for (auto l : w) out.push_back(position(l));
    return out;
  }
};

// The center of a subalgebra l.
inline Subspace center_of(const LieAlgebra& g, const Subspace& l) { return intersect(l, g.centralizer(l)); }

// Split part a of a toral subalgebra z = a ⊕ t, t anisotropic. A generic
// x ∈ z has rational ad-eigenvalues exactly on the sum V of weight spaces
// where t acts trivially, so t = z ∩ [g,g] ∩ c(V), and a = z ∩ t^⊥ since the
// trace form pairs a and t trivially.
inline Subspace split_part(const LieAlgebra& g, const Subspace& z) {
  if (z.is_zero()) return z;
  const auto basis = z.basis_vectors();
  std::optional<Subspace> best;
  for (unsigned long s = 0; s < 4; ++s) {
    Element x0 = zero_vector(g.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) x0 = x0 + Rational(1 + (i + 1) * (2 * s + 3) + i * i * (s + 1)) * basis[i];
    Matrix ad = g.ad(x0);
    Subspace rat = g.zero();
    for (const auto& r : rational_roots(minimal_polynomial(ad)))
      rat = sum(rat, kernel(ad - r * Matrix::identity(g.dim())));
    if (!best || rat.dim() < best->dim()) best = rat;
    if (best->is_whole()) return z;
  }
  Subspace t = intersect(intersect(z, g.derived_algebra()), g.centralizer(*best));
  Subspace a = intersect(z, g.perp(t));
  for (const auto& x : a.basis_vectors())
    if (!g.is_ad_split(x)) throw DomainError("not_split", "split part of the torus is not ad-split");
  return a;
}

inline Subspace split_center_of(const LieAlgebra& g, const Subspace& l) { return split_part(g, center_of(g, l)); }

class TypeSystem {
 public:
  using Labeler = std::function<int(const ParabolicData&)>;

  // `reference` is a minimal parabolic containing c(cartan). The labeler names
  // each maximal parabolic containing it; colliding names fall back to
  // 1..rank in root order.
  TypeSystem(ParabolicData reference, const Subspace& cartan, const Labeler& labeler) : reference_(std::move(reference)) {
    auto rd = std::make_shared<const RootDatum>(root_decomposition(reference_.ambient, cartan));
    SimpleSystem ss = parabolica::simple_system(rd, reference_);
    std::vector<int> raw;
    for (std::size_t i = 0; i < ss.rank(); ++i) raw.push_back(labeler(parabolic_from_subset(ss, {i})));
    if (std::set<int>(raw.begin(), raw.end()).size() != raw.size()) {
      fallback_ = true;
      for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<int>(i + 1);
    }
    set_standard(std::move(ss), raw);
  }

  AlgebraPtr algebra() const { return reference_.ambient; }
  const ParabolicData& reference() const { return reference_; }
  const LabelledSimpleSystem& standard() const { return standard_; }
  const std::vector<int>& labels() const { return standard_.labels; }
  TypeSet all_labels() const { return TypeSet(labels().begin(), labels().end()); }
  std::size_t rank() const { return labels().size(); }
  bool fallback_labels() const { return fallback_; }
  const ParabolicData& maximal(int label) const { return maximals_.at(standard_.position(label)); }

  // The parabolic of the given type containing the reference chamber.
  ParabolicData standard_parabolic(const TypeSet& type) const {
    std::set<std::size_t> J;
    for (auto t : type) J.insert(standard_.position(t));
    return parabolic_from_subset(standard_.ss, J);
  }

  // Rename labels (old -> new), keeping generator order increasing.
  TypeSystem relabelled(const TypeMap& rename) const {
    TypeSystem t = *this;
    std::vector<int> raw;
    for (auto l : labels()) raw.push_back(rename.at(l));
    t.set_standard(t.standard_.ss, raw);
    return t;
  }

  // Simple system of the chamber pb through the split Cartan a, with
  // generators named by type.
  LabelledSimpleSystem labelled_simple_system(const ParabolicData& pb, const Subspace& a) const {
    auto rd = std::make_shared<const RootDatum>(root_decomposition(algebra(), a));
    SimpleSystem ss = parabolica::simple_system(rd, pb);
    std::vector<int> raw;
    const bool at_reference = pb.space == reference_.space;
    for (std::size_t i = 0; i < ss.rank(); ++i) {
      if (at_reference) {
        Subspace qi = nonpositive_part(*rd, ss.coweights[i]);
        auto it = std::find_if(maximals_.begin(), maximals_.end(), [&](const ParabolicData& m) { return m.space == qi; });
        if (it == maximals_.end()) throw TheoremContradiction("maximal parabolic over the reference chamber is not standard");
        raw.push_back(standard_.labels[static_cast<std::size_t>(it - maximals_.begin())]);
      } else {
        TypeSet t = type_of(parabolic_from_subset(ss, {i}));
        if (t.size() != 1) throw TheoremContradiction("parabolic of one simple root has type " + to_string(t));
        raw.push_back(*t.begin());
      }
    }
    return sorted_by_label(std::move(ss), raw);
  }

  // Type of an arbitrary parabolic: conjugate its lift into the dominant
  // chamber of a Cartan shared with the reference chamber.
  TypeSet type_of(const ParabolicData& p) const {
    same_ambient(p, reference_);
    const LieAlgebra& g = *algebra();
    Subspace ml = common_levi(reference_, p);
    Subspace a = split_center_of(g, ml);
    LabelledSimpleSystem lss = labelled_simple_system(reference_, a);
    const SimpleSystem& ss = lss.ss;
    Element xi = grading_lift(p, a).xi;
    std::size_t guard = 0;
    for (;;) {
      std::optional<std::size_t> neg;
      for (std::size_t i = 0; i < ss.rank(); ++i)
        if (sgn(ss.rd->eval(ss.simples[i], xi)) < 0) {
          neg = i;
          break;
        }
      if (!neg) break;
      xi = ss.rd->reflect_element(ss.simples[*neg], xi);
      if (++guard > 4 * ss.rd->roots.size() + 4) throw TheoremContradiction("dominance loop did not terminate");
    }
    TypeSet t;
    for (std::size_t i = 0; i < ss.rank(); ++i)
      if (sgn(ss.rd->eval(ss.simples[i], xi)) > 0) t.insert(lss.labels[i]);
    if (nonpositive_part(*ss.rd, xi).dim() != p.dim())
      throw TheoremContradiction("dominant conjugate has the wrong dimension");
    return t;
  }

  // op: type of the opposite of each maximal standard parabolic.
  TypeMap duality() const {
    TypeMap op;
    for (std::size_t i = 0; i < rank(); ++i) {
      ParabolicData q = parabolic_from_subset(standard_.ss, {i});
      ParabolicData opp = opposite(q, standard_.ss.coweights[i]);
      TypeSet t = type_of(opp);
      if (t.size() != 1) throw TheoremContradiction("opposite of a maximal parabolic is not maximal");
      op[standard_.labels[i]] = *t.begin();
    }
    if (!is_involution(op)) throw TheoremContradiction("duality map is not an involution");
    return op;
  }

 private:
  static LabelledSimpleSystem sorted_by_label(SimpleSystem ss, const std::vector<int>& raw) {
    std::vector<std::size_t> order(raw.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return raw[x] < raw[y]; });
    LabelledSimpleSystem out;
    for (auto i : order) out.labels.push_back(raw[i]);
    out.ss = reorder(std::move(ss), order);
    return out;
  }

  void set_standard(SimpleSystem ss, const std::vector<int>& raw) {
    standard_ = sorted_by_label(std::move(ss), raw);
    maximals_.clear();
    for (std::size_t i = 0; i < standard_.ss.rank(); ++i) maximals_.push_back(parabolic_from_subset(standard_.ss, {i}));
  }

  ParabolicData reference_;
  LabelledSimpleSystem standard_;
  std::vector<ParabolicData> maximals_;
  bool fallback_ = false;
};

// Label of a maximal parabolic of a catalog algebra: dimension of the
// (isotropic) subspace it stabilizes.
inline int catalog_label(const CatalogAlgebra& cat, const ParabolicData& q) {
  FlagSpec f = flag_from_parabolic(cat, q);
  if (f.chain.size() != 1) throw TheoremContradiction("maximal parabolic stabilizes a flag of length " + std::to_string(f.chain.size()));
  return static_cast<int>(f.chain[0].dim());
}

inline TypeSystem catalog_type_system(const CatalogAlgebra& cat) {
  return TypeSystem(standard_borel(cat), standard_cartan(cat),
                    [&cat](const ParabolicData& q) { return catalog_label(cat, q); });
}

// ---------------------------------------------------------------------------
// Levi quotients

struct QuotientTypes {
  ParabolicData q;
  TypeSet type_q;
  LeviQuotient levi;
  std::shared_ptr<const TypeSystem> q0;
  TypeMap iota;   // I_{q0} -> I_g
  TypeMap op_g;
  TypeMap op_q0;
  TypeMap nu;     // op_g ∘ ι_q ∘ op_{q0}

  TypeSet iota_inverse(const TypeSet& J) const { return preimage(iota, J); }
  TypeSet nu_inverse(const TypeSet& J) const { return preimage(nu, J); }
};

// Minimal parabolic inside q sharing a minimal Levi with the reference.
inline ParabolicData minimal_parabolic_inside(const TypeSystem& ts, const ParabolicData& q, Subspace* cartan = nullptr) {
  const LieAlgebra& g = *ts.algebra();
  Subspace a = split_center_of(g, common_levi(ts.reference(), q));
  RootDatum rd = root_decomposition(ts.algebra(), a);
  Element xq = grading_lift(q, a).xi;
  Element x0 = grading_lift(ts.reference(), a).xi;
  Rational bound = 0;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) bound = std::max(bound, Rational(abs(rd.eval(i, x0))));
  Element xi = (bound + 1) * xq + x0;
  ParabolicData pb = make_parabolic(ts.algebra(), nonpositive_part(rd, xi));
  if (!q.space.contains(pb.space) || pb.space.dim() != rd.levi.dim() + rd.roots.size() / 2)
    throw TheoremContradiction("constructed chamber is not a minimal parabolic inside q");
  if (cartan) *cartan = a;
  return pb;
}

inline QuotientTypes quotient_types(const TypeSystem& ts, const ParabolicData& q) {
  QuotientTypes out;
  out.q = q;
  out.type_q = ts.type_of(q);
  out.levi = levi_quotient(q);
  Subspace a;
  ParabolicData pb = minimal_parabolic_inside(ts, q, &a);
  const LeviQuotient& lq = out.levi;
  ParabolicData ref0 = make_parabolic(lq.algebra, lq.image(pb.space));
  Subspace a0 = lq.image(a);
  auto labeler = [&](const ParabolicData& r0) {
    ParabolicData r = make_parabolic(ts.algebra(), lq.preimage(q.nilradical, r0.space));
    TypeSet t = ts.type_of(r);
    TypeSet extra;
    for (auto j : t)
      if (!out.type_q.count(j)) extra.insert(j);
    if (extra.size() != 1 || !std::includes(t.begin(), t.end(), out.type_q.begin(), out.type_q.end()))
      throw TheoremContradiction("preimage of a maximal parabolic of q0 has type " + to_string(t));
    return *extra.begin();
  };
  TypeSystem raw(ref0, a0, labeler);
  if (raw.fallback_labels()) throw TheoremContradiction("maximal parabolics of q0 share a preimage type");
  TypeMap rename;
  int k = 1;
  for (auto l : raw.labels()) {
    rename[l] = k;
    out.iota[k] = l;
    ++k;
  }
  out.q0 = std::make_shared<const TypeSystem>(raw.relabelled(rename));
  out.op_g = ts.duality();
  out.op_q0 = out.q0->duality();
  out.nu = compose(out.op_g, compose(out.iota, out.op_q0));
  return out;
}

// ---------------------------------------------------------------------------
// Lie apartments and the Weyl distance

struct LieApartment {
  ThinChamberSystem thin;
  std::vector<Subspace> chambers;  // chambers[c] = w_c · pb
  std::vector<GroupWord> words;    // w_c as label words
  LabelledSimpleSystem lss;
  std::optional<std::size_t> index_of(const Subspace& s) const {
    auto it = std::find(chambers.begin(), chambers.end(), s);
    if (it == chambers.end()) return std::nullopt;
    return static_cast<std::size_t>(it - chambers.begin());
  }
};

// Minimal parabolics containing c(a): chambers from Weyl words applied to pb,
// i-adjacency by a shared parabolic of cotype {i}.
inline LieApartment lie_apartment(const TypeSystem& ts, const ParabolicData& pb, const Subspace& a) {
  LieApartment ap;
  ap.lss = ts.labelled_simple_system(pb, a);
  const SimpleSystem& ss = ap.lss.ss;
  const RootDatum& rd = *ss.rd;
  // enumerate Weyl elements by root permutation
  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<Word> words{Word{}};
  seen[detail::word_permutation(ss, {})] = 0;
  for (std::size_t head = 0; head < words.size(); ++head)
    for (std::size_t i = 0; i < ss.rank(); ++i) {
      Word w = words[head];
      w.push_back(i);
      auto perm = detail::word_permutation(ss, w);
      if (seen.count(perm)) continue;
      seen[perm] = words.size();
      words.push_back(w);
    }
  for (const auto& w : words) {
    ap.chambers.push_back(chamber_of_word(ss, w));
    ap.words.push_back(ap.lss.to_labels(w));
    if (!is_parabolic(*rd.ambient, ap.chambers.back()).parabolic)
      throw TheoremContradiction("Weyl image of a chamber is not parabolic");
  }
  std::vector<std::vector<std::size_t>> involutions;
  for (std::size_t i = 0; i < ss.rank(); ++i) {
    Element xi = zero_vector(rd.ambient->dim());
    for (std::size_t j = 0; j < ss.rank(); ++j)
      if (j != i) xi = xi + ss.coweights[j];
    std::map<Subspace, std::vector<std::size_t>, bool (*)(const Subspace&, const Subspace&)> panels(
        [](const Subspace& x, const Subspace& y) { return x.basis().data() < y.basis().data(); });
    for (std::size_t c = 0; c < words.size(); ++c) {
      Subspace cot = nonpositive_part(rd, act_on_cartan(ss, words[c], xi));
      if (!cot.contains(ap.chambers[c])) throw TheoremContradiction("chamber outside its cotype parabolic");
      panels[cot].push_back(c);
    }
    std::vector<std::size_t> inv(words.size());
    for (const auto& [cot, members] : panels) {
      if (members.size() != 2) throw TheoremContradiction("Lie apartment panel does not have two chambers");
      inv[members[0]] = members[1];
      inv[members[1]] = members[0];
    }
    involutions.push_back(std::move(inv));
  }
  std::vector<std::string> names;
  for (const auto& w : ap.words) {
    std::string s = "w";
    for (auto l : w) s += "." + std::to_string(l);
    names.push_back(s);
  }
  ap.thin = ThinChamberSystem(ap.lss.labels, names, involutions);
  return ap;
}

inline LieApartment lie_apartment(const TypeSystem& ts, const Subspace& a) { return lie_apartment(ts, ts.reference(), a); }

// δ(pb, pc) for minimal parabolics, through a common minimal Levi.
inline GroupWord delta_parabolic(const TypeSystem& ts, const ParabolicData& pb, const ParabolicData& pc) {
  const LieAlgebra& g = *ts.algebra();
  Subspace ml = common_levi(pb, pc, true);
  LabelledSimpleSystem lss = ts.labelled_simple_system(pb, split_center_of(g, ml));
  return lss.to_labels(weyl_word(lss.ss, pc));
}

// Thin model of matching type for a catalog algebra.
inline ThinChamberSystem matching_model(const CatalogAlgebra& cat) {
  if (cat.family == "so") {
    if (cat.definite() == 0) throw DomainError("unsupported", "no thin model for split even orthogonal algebras");
    return apartment_model_B(cat.planes());
  }
  return apartment_model_A(cat.p - 1);
}

// ---------------------------------------------------------------------------
// Sampled building checks

struct BuildingReport {
  std::size_t chambers = 0;
  std::size_t pairs = 0;
  std::size_t overlap = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Apartments through c(a) and through φ(c(a)) for each automorphism φ fixing
// the reference chamber. Checks common apartments, agreement of δ on
// overlaps, and the W-distance axioms on the union.
inline BuildingReport verify_building(const TypeSystem& ts, const Subspace& a, const std::vector<Matrix>& automorphisms) {
  BuildingReport rep;
  const LieAlgebra& g = *ts.algebra();
  std::vector<LieApartment> aps{lie_apartment(ts, a)};
  for (const auto& phi : automorphisms) {
    if (!g.is_automorphism(phi)) {
      rep.violations.push_back("sampled map is not an automorphism");
      continue;
    }
    ParabolicData pb = transform(ts.reference(), phi);
    aps.push_back(lie_apartment(ts, pb, image(phi, a)));
  }
  WDistance group(aps.front().thin);
  std::vector<Subspace> chambers;
  for (const auto& ap : aps)
    for (const auto& c : ap.chambers)
      if (std::find(chambers.begin(), chambers.end(), c) == chambers.end()) chambers.push_back(c);
  rep.chambers = chambers.size();
  std::vector<ParabolicData> cd;
  for (const auto& c : chambers) cd.push_back(make_parabolic(ts.algebra(), c));
  const std::size_t n = chambers.size();
  std::vector<std::vector<GroupWord>> delta(n, std::vector<GroupWord>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      delta[b][c] = delta_parabolic(ts, cd[b], cd[c]);
      ++rep.pairs;
    }
  // agreement with each apartment's own W-distance
  for (const auto& ap : aps) {
    WDistance wd(ap.thin);
    for (std::size_t x = 0; x < ap.chambers.size(); ++x)
      for (std::size_t y = 0; y < ap.chambers.size(); ++y) {
        auto bx = std::find(chambers.begin(), chambers.end(), ap.chambers[x]) - chambers.begin();
        auto by = std::find(chambers.begin(), chambers.end(), ap.chambers[y]) - chambers.begin();
        if (wd(x, y) != delta[static_cast<std::size_t>(bx)][static_cast<std::size_t>(by)])
          rep.violations.push_back("apartment distance disagrees with δ");
      }
  }
  for (std::size_t i = 0; i < aps.size(); ++i)
    for (std::size_t j = i + 1; j < aps.size(); ++j)
      for (const auto& c : aps[i].chambers)
        if (aps[j].index_of(c)) ++rep.overlap;
  // inverse law on the whole sample; adjacency law inside each apartment
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      if (group.canonical(WDistance::inverse(delta[c][b])) != delta[b][c])
        rep.violations.push_back("δ(b,c) is not δ(c,b)^-1");
  for (const auto& ap : aps)
    for (std::size_t x = 0; x < ap.chambers.size(); ++x)
      for (auto l : ap.thin.labels()) {
        std::size_t y = ap.thin.step(x, l);
        auto cx = static_cast<std::size_t>(std::find(chambers.begin(), chambers.end(), ap.chambers[x]) - chambers.begin());
        auto cy = static_cast<std::size_t>(std::find(chambers.begin(), chambers.end(), ap.chambers[y]) - chambers.begin());
        for (std::size_t b = 0; b < n; ++b) {
          GroupWord moved = delta[b][cx];
          moved.push_back(l);
          if (delta[b][cy] != delta[b][cx] && group.canonical(moved) != delta[b][cy])
            rep.violations.push_back("adjacency law fails");
        }
      }
  return rep;
}

}  // namespace parabolica
