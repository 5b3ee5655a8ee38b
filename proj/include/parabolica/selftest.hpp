#pragma once

// The acceptance suite: nine exact checks, each against an oracle that does
// not route through the code path under test where one is available.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/building.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/commands.hpp"
#include "parabolica/config.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/root_data.hpp"
#include "parabolica/types.hpp"

namespace parabolica::selftest {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20160314;
  std::string golden_dir;  // holds tetrahedron.{json,dot} and octahedron.{json,dot}
};

namespace detail {

// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string failures() const {
    std::string s = std::to_string(failures_) + " failed:";
    for (const auto& m : messages_) s += " [" + m + "]";
    return s;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_;
};

struct Entry {
  CatalogAlgebra cat;
  std::shared_ptr<const TypeSystem> ts;
  std::shared_ptr<const RootDatum> rd;  // of the standard Cartan
};

class Context {
 public:
  explicit Context(std::uint64_t seed) : rng(seed) {}

  const Entry& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    Entry e;
    if (name.rfind("gl", 0) == 0)
      e.cat = gl(std::stoi(name.substr(2)));
    else if (name == "so32")
      e.cat = so(3, 2);
    else if (name == "so43")
      e.cat = so(4, 3);
    else
      throw DomainError("precondition", "unknown selftest algebra " + name);
    e.ts = std::make_shared<const TypeSystem>(catalog_type_system(e.cat));
    e.rd = e.ts->standard().ss.rd;
    return cache_.emplace(name, std::move(e)).first->second;
  }

  std::mt19937_64 rng;

 private:
  std::map<std::string, Entry> cache_;
};

inline std::vector<TypeSet> all_subsets(const TypeSet& s) {
  std::vector<int> v(s.begin(), s.end());
  std::vector<TypeSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
    TypeSet t;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask & (std::size_t{1} << i)) t.insert(v[i]);
    out.push_back(std::move(t));
  }
  return out;
}

inline TypeSet random_subset(const TypeSet& s, std::mt19937_64& rng) {
  auto all = all_subsets(s);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

// Duality by formula: j <-> m - j on gl(m), identity on so(p,q) with p > q.
inline int expected_op(const CatalogAlgebra& cat, int j) { return cat.family == "so" ? j : cat.p - j; }

inline TypeSet expected_op(const CatalogAlgebra& cat, const TypeSet& J) {
  TypeSet out;
  for (auto j : J) out.insert(expected_op(cat, j));
  return out;
}

inline std::string str(const TypeSet& t) { return to_string(t); }

inline bool is_subset_name(const std::string& a, const std::string& b) {
  auto parse = [](std::string s) {
    std::set<int> out;
    for (char& c : s)
      if (c == '{' || c == '}' || c == ',') c = ' ';
    std::istringstream is(s);
    int x;
    while (is >> x) out.insert(x);
    return out;
  };
  auto sa = parse(a), sb = parse(b);
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Random small-integer vector.
inline Vector random_vector(std::size_t n, std::mt19937_64& rng, int bound = 2) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Span of a few random basis vectors, sometimes mixed with a random vector.
inline Subspace random_subspace(const LieAlgebra& g, std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim), idx(0, g.dim() - 1);
  std::vector<Vector> rows;
  const std::size_t d = dim(rng);
  for (std::size_t i = 0; i < d; ++i) rows.push_back(g.basis_element(idx(rng)));
  if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) rows.push_back(random_vector(g.dim(), rng));
  return Subspace::span(g.dim(), rows);
}

inline Matrix matrix_exp_nilpotent(const Matrix& a) {
  Matrix result = Matrix::identity(a.rows()), term = Matrix::identity(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    term = term * a;
    term *= Rational(1, static_cast<unsigned long>(k));
    result += term;
  }
  return result;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Recognizer equivalence

inline Outcome recognizer(detail::Context& ctx) {
  detail::Tally t;
  std::size_t standard = 0, conjugates = 0, negatives = 0;
  for (const std::string name : {"gl3", "gl4", "so32"}) {
    const auto& e = ctx.get(name);
    const LieAlgebra& g = *e.cat.algebra;
    FlagSpec full = standard_full_flag(e.cat);
    std::vector<Subspace> pars;
    for (std::size_t mask = 0; mask < (std::size_t{1} << full.chain.size()); ++mask) {
      FlagSpec f = full;
      f.chain.clear();
      for (std::size_t i = 0; i < full.chain.size(); ++i)
        if (mask & (std::size_t{1} << i)) f.chain.push_back(full.chain[i]);
      pars.push_back(stabilizer_in_realization(g, f.chain));
    }
    t.expect(pars.size() == (std::size_t{1} << e.ts->rank()), name + ": standard parabolic count");
    for (const auto& p : pars) {
      t.expect(parabolic_conditions(g, p).all(), name + ": standard parabolic fails a condition");
      ++standard;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pars.size() - 1);
    for (int k = 0; k < 50; ++k) {
      Matrix phi = random_inner_automorphism(*e.rd, ctx.rng);
      Subspace p = image(phi, pars[pick(ctx.rng)]);
      t.expect(parabolic_conditions(g, p).all(), name + ": conjugate fails a condition");
      ++conjugates;
    }
    for (const auto& neg : curated_negatives(e.cat)) {
      t.expect(parabolic_conditions(g, neg.space).none(), name + ": " + neg.name + " passes a condition");
      ++negatives;
    }
  }
  std::string d = std::to_string(standard) + " standard + " + std::to_string(conjugates) + " conjugates all hold; " +
                  std::to_string(negatives) + " negatives all fail";
  return {1, "recognizer equivalence", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------
// 2. Projection law

inline Outcome projection_law(detail::Context& ctx) {
  detail::Tally t;
  std::size_t pairs = 0;
  for (int k = 0; k < 100; ++k) {
    const auto& e = ctx.get(k % 2 == 0 ? "gl4" : "so32");
    const LieAlgebra& g = *e.cat.algebra;
    auto sample = [&] {
      return transform(e.ts->standard_parabolic(detail::random_subset(e.ts->all_labels(), ctx.rng)),
                       random_inner_automorphism(*e.rd, ctx.rng));
    };
    ParabolicData p = sample(), q = sample();
    Subspace r = sum(intersect(p.space, q.space), q.nilradical);
    bool par = g.is_subalgebra(r) && is_parabolic(g, r).parabolic;
    t.expect(par, e.cat.name() + ": r is not parabolic");
    if (par) {
      Subspace expected = sum(intersect(p.nilradical, q.space), q.nilradical);
      t.expect(relative_nilradical(g, r) == expected, e.cat.name() + ": nil(r) != nil(p)∩q + nil(q)");
      t.expect(g.perp(r) == expected, e.cat.name() + ": perp(r) != nil(p)∩q + nil(q)");
    }
    ++pairs;
  }
  return {2, "projection law", t.ok(), t.ok() ? std::to_string(pairs) + " pairs exact" : t.failures()};
}

// ---------------------------------------------------------------------------
// 3. Type laws

inline Outcome type_laws(detail::Context& ctx) {
  detail::Tally t;
  std::size_t wop = 0, costd = 0, skipped = 0;
  for (const std::string name : {"gl4", "so32"}) {
    const auto& e = ctx.get(name);
    const TypeSystem& ts = *e.ts;
    for (int k = 0; k < 10; ++k) {
      TypeSet jq = detail::random_subset(ts.all_labels(), ctx.rng);
      Matrix phi = random_inner_automorphism(*e.rd, ctx.rng);
      ParabolicData q = transform(ts.standard_parabolic(jq), phi);
      QuotientTypes qt = quotient_types(ts, q);
      t.expect(qt.type_q == jq, name + ": type of q");
      // costandard: both contain φ(reference)
      for (int c = 0; c < 2; ++c) {
        TypeSet jp = detail::random_subset(ts.all_labels(), ctx.rng);
        ParabolicData p = transform(ts.standard_parabolic(jp), phi);
        if (!is_costandard(p, q)) {
          t.expect(false, name + ": pair over a common chamber is not costandard");
          continue;
        }
        Projection pr = project(q, p, qt.levi);
        TypeSet got = qt.q0->type_of(pr.in_q0);
        t.expect(got == qt.iota_inverse(jp), name + ": costandard " + detail::str(jp) + " over " + detail::str(jq) +
                                                 " gives " + detail::str(got));
        ++costd;
      }
      // weakly opposite: conjugates of standard or opposite-standard parabolics
      for (int w = 0; w < 3; ++w) {
        TypeSet jp = detail::random_subset(ts.all_labels(), ctx.rng);
        ParabolicData base = ts.standard_parabolic(jp);
        TypeSet type_p = jp;
        if (w != 2) {
          base = opposite(base);
          type_p = detail::expected_op(e.cat, jp);
        }
        ParabolicData p = transform(base, random_inner_automorphism(*e.rd, ctx.rng));
        if (!is_weakly_opposite(p, q)) {
          ++skipped;
          continue;
        }
        Projection pr = project(q, p, qt.levi);
        TypeSet got = qt.q0->type_of(pr.in_q0);
        t.expect(got == qt.nu_inverse(type_p), name + ": weakly opposite " + detail::str(type_p) + " against " +
                                                   detail::str(jq) + " gives " + detail::str(got));
        ++wop;
      }
    }
  }
  t.expect(wop >= 20, "too few weakly opposite samples: " + std::to_string(wop));
  std::string d = std::to_string(wop) + " weakly opposite (ν⁻¹) and " + std::to_string(costd) +
                  " costandard (ι⁻¹) pairs exact, " + std::to_string(skipped) + " draws not weakly opposite";
  return {3, "type laws", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------
// 4. Root data

inline Outcome root_data(detail::Context& ctx) {
  detail::Tally t;
  auto common = [&](const detail::Entry& e, const std::string& name) {
    const RootDatum& rd = *e.rd;
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      t.expect(rd.pairing(a, a) == 2, name + ": α(h_α) != 2");
      for (std::size_t b = 0; b < rd.roots.size(); ++b)
        t.expect(rd.pairing(b, a).get_den() == 1, name + ": non-integral β(h_α)");
    }
  };
  // gl(n+1): roots e_i - e_j on the diagonal Cartan
  for (int n = 1; n <= 3; ++n) {
    const std::string name = "gl" + std::to_string(n + 1);
    const auto& e = ctx.get(name);
    const RootDatum& rd = *e.rd;
    t.expect(rd.roots.size() == static_cast<std::size_t>(n * (n + 1)), name + ": root count");
    std::set<std::pair<int, int>> seen;
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      t.expect(rd.root_spaces[a].dim() == 1, name + ": root space dim");
      int plus = -1, minus = -1, other = 0;
      for (std::size_t i = 0; i < rd.roots[a].size(); ++i) {
        if (rd.roots[a][i] == 1) plus = static_cast<int>(i);
        else if (rd.roots[a][i] == -1) minus = static_cast<int>(i);
        else if (sgn(rd.roots[a][i]) != 0) ++other;
      }
      t.expect(plus >= 0 && minus >= 0 && other == 0, name + ": root is not e_i - e_j");
      seen.insert({plus, minus});
    }
    t.expect(seen.size() == rd.roots.size(), name + ": repeated roots");
    t.expect(e.ts->standard().ss.rank() == static_cast<std::size_t>(n), name + ": |Φ¹| != n");
    common(e, name);
  }
  // so(n+k,n): ±e_i±e_j (dim 1) and ±e_i (dim k) on the hyperbolic Cartan
  for (auto [name, n, k] : {std::tuple<std::string, int, int>{"so32", 2, 1}, {"so43", 3, 1}}) {
    const auto& e = ctx.get(name);
    const RootDatum& rd = *e.rd;
    std::map<Vector, std::size_t> expected;
    for (int i = 0; i < n; ++i) {
      for (int s : {1, -1}) {
        Vector v = zero_vector(static_cast<std::size_t>(n));
        v[static_cast<std::size_t>(i)] = s;
        if (k > 0) expected[v] = static_cast<std::size_t>(k);
        for (int j = i + 1; j < n; ++j)
          for (int s2 : {1, -1}) {
            Vector w = v;
            w[static_cast<std::size_t>(j)] = s2;
            expected[w] = 1;
          }
      }
    }
    std::map<Vector, std::size_t> got;
    std::size_t total = rd.levi.dim();
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      got[rd.roots[a]] = rd.root_spaces[a].dim();
      total += rd.root_spaces[a].dim();
    }
    t.expect(got == expected, name + ": roots differ from ±e_i±e_j, ±e_i");
    t.expect(total == e.cat.algebra->dim(), name + ": dim check");
    t.expect(rd.levi.dim() == static_cast<std::size_t>(n + (k * (k - 1)) / 2), name + ": minimal Levi dim");
    t.expect(e.ts->standard().ss.rank() == static_cast<std::size_t>(n), name + ": |Φ¹| != n");
    common(e, name);
  }
  const auto& s32 = ctx.get("so32");
  const auto& s43 = ctx.get("so43");
  std::string d = "gl2..gl4: 2, 6, 12 roots; so(3,2): " + std::to_string(s32.rd->roots.size()) + " roots, " +
                  std::to_string(s32.rd->levi.dim()) + "+" + std::to_string(s32.rd->roots.size()) + "=10; so(4,3): " +
                  std::to_string(s43.rd->roots.size()) + " roots, " + std::to_string(s43.rd->levi.dim()) + "+" +
                  std::to_string(s43.rd->roots.size()) + "=21; coroots integral";
  return {4, "root data", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------
// 5. Weyl/Bruhat combinatorics

inline Outcome weyl_bruhat(detail::Context& ctx) {
  detail::Tally t;
  std::size_t factorial = 1;
  for (int n = 1; n <= 3; ++n) {
    factorial *= static_cast<std::size_t>(n);
    auto a = apartment_model_A(n);
    auto b = apartment_model_B(n);
    t.expect(a.size() == factorial * static_cast<std::size_t>(n + 1), "A(" + std::to_string(n) + ") size");
    t.expect(b.size() == factorial * (std::size_t{1} << n), "B(" + std::to_string(n) + ") size");
    t.expect(WDistance(a).axiom_violations().empty(), "A(" + std::to_string(n) + ") W-distance axioms");
    t.expect(WDistance(b).axiom_violations().empty(), "B(" + std::to_string(n) + ") W-distance axioms");
  }
  // Lie apartments against the models
  for (const std::string name : {"gl2", "gl3", "gl4", "so32", "so43"}) {
    const auto& e = ctx.get(name);
    LieApartment ap = lie_apartment(*e.ts, standard_cartan(e.cat));
    ThinChamberSystem m = matching_model(e.cat);
    t.expect(label_isomorphism(ap.thin, 0, m, 0).has_value(), name + ": apartment is not label-isomorphic to its model");
  }
  // Subalgebras between the Borel and g are spanned by the Borel and a set of
  // negative root spaces; all of them must be parabolic, 2^|Φ¹| in number,
  // and exactly the standard parabolics.
  for (const std::string name : {"gl2", "gl3", "gl4", "so32", "so43"}) {
    const auto& e = ctx.get(name);
    const LieAlgebra& g = *e.cat.algebra;
    const RootDatum& rd = *e.rd;
    ParabolicData b = standard_borel(e.cat);
    std::vector<std::size_t> missing;
    for (std::size_t a = 0; a < rd.roots.size(); ++a)
      if (!b.space.contains(rd.root_spaces[a])) missing.push_back(a);
    std::set<std::vector<Rational>> found;
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << missing.size()); ++mask) {
      std::vector<Vector> rows = b.space.basis_vectors();
      for (std::size_t i = 0; i < missing.size(); ++i)
        if (mask & (std::size_t{1} << i))
          for (auto& v : rd.root_spaces[missing[i]].basis_vectors()) rows.push_back(std::move(v));
      Subspace s = Subspace::span(g.dim(), rows);
      if (!g.is_subalgebra(s)) continue;
      ++count;
      t.expect(is_parabolic(g, s).parabolic, name + ": subalgebra over the Borel is not parabolic");
      found.insert(s.basis().data());
    }
    const std::size_t phi1 = e.ts->standard().ss.rank();
    t.expect(count == (std::size_t{1} << phi1), name + ": " + std::to_string(count) + " parabolics over the Borel");
    std::set<std::vector<Rational>> standard;
    for (const auto& J : detail::all_subsets(e.ts->all_labels())) standard.insert(e.ts->standard_parabolic(J).space.basis().data());
    t.expect(found == standard, name + ": enumerated parabolics differ from the standard ones");
  }
  // δ(upper, lower Borel) = longest element, of length |Φ⁺|
  std::string lengths;
  for (auto [name, positive] : {std::pair<std::string, std::size_t>{"gl3", 3}, {"so32", 4}, {"gl4", 6}, {"so43", 9}}) {
    const auto& e = ctx.get(name);
    ParabolicData upper = e.ts->reference();
    ParabolicData lower = opposite(upper);
    GroupWord w = delta_parabolic(*e.ts, upper, lower);
    t.expect(w.size() == positive, name + ": δ(upper, lower) has length " + std::to_string(w.size()));
    lengths += (lengths.empty() ? "" : ", ") + name + " " + std::to_string(w.size());
  }
  // invariance under conjugation
  std::size_t invariance = 0;
  for (const std::string name : {"gl3", "so32"}) {
    const auto& e = ctx.get(name);
    LieApartment ap = lie_apartment(*e.ts, standard_cartan(e.cat));
    WDistance wd(ap.thin);
    std::uniform_int_distribution<std::size_t> pick(0, ap.chambers.size() - 1);
    for (int k = 0; k < 20; ++k) {
      std::size_t c = pick(ctx.rng);
      ParabolicData pc = make_parabolic(e.cat.algebra, ap.chambers[c]);
      GroupWord before = delta_parabolic(*e.ts, e.ts->reference(), pc);
      t.expect(before == wd(0, c), name + ": δ disagrees with the apartment");
      Matrix phi = random_inner_automorphism(*e.rd, ctx.rng);
      GroupWord after = delta_parabolic(*e.ts, transform(e.ts->reference(), phi), transform(pc, phi));
      t.expect(after == before, name + ": δ changed under conjugation");
      ++invariance;
    }
  }
  std::string d = "models A/B(1..3) sized (n+1)!, 2^n n!; 5 apartments label-isomorphic; 2^|Φ¹| parabolics over each "
                  "Borel; δ lengths " + lengths + "; " + std::to_string(invariance) + " conjugations invariant";
  return {5, "Weyl/Bruhat combinatorics", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------
// 6. Duality involution

inline Outcome duality(detail::Context& ctx) {
  detail::Tally t;
  std::string d;
  for (const std::string name : {"gl2", "gl3", "gl4", "so32", "so43"}) {
    const auto& e = ctx.get(name);
    TypeMap op = e.ts->duality();
    for (auto l : e.ts->labels()) t.expect(op.at(l) == detail::expected_op(e.cat, l), name + ": op(" + std::to_string(l) + ")");
    t.expect(compose(op, op) == [&] {
      TypeMap id;
      for (auto l : e.ts->labels()) id[l] = l;
      return id;
    }(), name + ": op² != id");
    d += (d.empty() ? "" : "; ") + e.cat.name() + " op =";
    for (auto [k, v] : op) d += " " + std::to_string(k) + "→" + std::to_string(v);
  }
  return {6, "duality involution", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------
// 7. Lowest-weight line

inline Outcome lowest_weight(detail::Context& ctx) {
  detail::Tally t;
  std::size_t count = 0;
  auto run = [&](const std::string& name, const ParabolicData& q) {
    LowestWeightLine l = lowest_weight_line(q);
    t.expect(l.stabilizer == q.space, name + ": stabilizer of Λ^d nil(q) differs from q");
    t.expect(mpz_class(static_cast<unsigned long>(l.module_dim)) == binomial(q.ambient->dim(), q.nilradical.dim()),
             name + ": exterior power dimension");
    ++count;
  };
  for (const std::string name : {"gl2", "gl3"}) {
    const auto& e = ctx.get(name);
    for (const auto& J : detail::all_subsets(e.ts->all_labels())) run(name, e.ts->standard_parabolic(J));
  }
  run("so32", ctx.get("so32").ts->reference());
  return {7, "lowest-weight line", t.ok(), t.ok() ? std::to_string(count) + " parabolics recovered exactly" : t.failures()};
}

// ---------------------------------------------------------------------------
// 8. Configuration goldens

inline Outcome configuration_goldens(const Options& opt) {
  detail::Tally t;
  struct Case {
    std::string name;
    commands::json witness;
    std::size_t points, lines, row_sum, column_sum;
  };
  std::vector<Case> cases{{"tetrahedron", commands::tetrahedron_witness(), 4, 6, 3, 2},
                          {"octahedron", commands::octahedron_witness(), 12, 8, 2, 3}};
  std::string d;
  for (const auto& c : cases) {
    commands::ConfigResult r = commands::config_project(c.witness);
    const auto& inc = r.report.at("incidence");
    t.expect(inc.size() == 1, c.name + ": expected one incidence matrix");
    if (inc.size() != 1) continue;
    const auto& m = inc[0];
    auto rows = m.at("matrix").get<std::vector<std::vector<int>>>();
    t.expect(rows.size() == c.points, c.name + ": point count " + std::to_string(rows.size()));
    for (const auto& row : rows) t.expect(row.size() == c.lines, c.name + ": line count");
    for (auto s : m.at("row_sums").get<std::vector<std::size_t>>()) t.expect(s == c.row_sum, c.name + ": row sum");
    for (auto s : m.at("column_sums").get<std::vector<std::size_t>>()) t.expect(s == c.column_sum, c.name + ": column sum");
    // the projected incidence is containment of the source faces
    auto pts = r.report.at("types")[0].at("elements").get<std::vector<std::string>>();
    auto lns = r.report.at("types")[1].at("elements").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < pts.size() && i < rows.size(); ++i)
      for (std::size_t j = 0; j < lns.size() && j < rows[i].size(); ++j)
        t.expect((rows[i][j] == 1) == detail::is_subset_name(pts[i], lns[j]),
                 c.name + ": incidence of " + pts[i] + " and " + lns[j]);
    if (c.name == "tetrahedron") {
      // complete quadrilateral: two points share exactly one line
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
          int shared = 0;
          for (std::size_t j = 0; j < c.lines; ++j) shared += rows[a][j] * rows[b][j];
          t.expect(shared == 1, "tetrahedron: points share " + std::to_string(shared) + " lines");
        }
    }
    const std::string json_text = r.report.dump(2) + "\n";
    if (opt.golden_dir.empty()) {
      t.expect(false, "no golden directory configured");
    } else {
      t.expect(json_text == detail::read_file(opt.golden_dir + "/" + c.name + ".json"), c.name + ".json differs from the golden file");
      t.expect(r.dot == detail::read_file(opt.golden_dir + "/" + c.name + ".dot"), c.name + ".dot differs from the golden file");
    }
    d += (d.empty() ? "" : "; ") + c.name + " " + std::to_string(c.points) + "x" + std::to_string(c.lines) +
         " rows " + std::to_string(c.row_sum) + " cols " + std::to_string(c.column_sum);
  }
  return {8, "configuration goldens", t.ok(), t.ok() ? d + "; byte-identical" : t.failures()};
}

// ---------------------------------------------------------------------------
// 9. Algebraic property suites

inline Outcome property_suites(detail::Context& ctx) {
  detail::Tally t;
  // Jacobi and antisymmetry, recomputed by brute force
  std::vector<CatalogAlgebra> all;
  for (int n = 1; n <= 4; ++n) all.push_back(gl(n));
  for (int n = 2; n <= 4; ++n) all.push_back(sl(n));
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 3}}) all.push_back(so(p, q));
  for (const auto& cat : all) {
    const LieAlgebra& g = *cat.algebra;
    bool ok = true;
    for (std::size_t i = 0; i < g.dim() && ok; ++i)
      for (std::size_t j = 0; j < g.dim() && ok; ++j) {
        auto bi = g.basis_element(i), bj = g.basis_element(j);
        if (!(g.bracket(bi, bj) == -g.bracket(bj, bi))) ok = false;
        if (!(g.realize(g.bracket(bi, bj)) == commutator(g.realize(bi), g.realize(bj)))) ok = false;
        for (std::size_t k = j + 1; k < g.dim() && i < j; ++k) {
          auto bk = g.basis_element(k);
          auto jac = g.bracket(bi, g.bracket(bj, bk)) + g.bracket(bj, g.bracket(bk, bi)) + g.bracket(bk, g.bracket(bi, bj));
          if (!is_zero(jac)) ok = false;
        }
      }
    t.expect(ok, cat.name() + ": Jacobi or antisymmetry fails");
  }
  {
    auto c = gl(2).algebra->structure();
    c[1][2][1] += 1;  // [E12, E21] gains an E12 component, breaking Jacobi
    c[2][1][1] -= 1;
    bool thrown = false;
    try {
      LieAlgebra bad(c);
    } catch (const InvalidStructure&) {
      thrown = true;
    }
    t.expect(thrown, "corrupted structure constants accepted");
  }
  const std::vector<std::string> names{"gl3", "gl4", "so32"};
  // Cartan criterion on normalizers and nilpotency of u ∩ u^⊥ for u = c(a, b)
  std::size_t nontrivial_isotropic = 0;
  for (int s = 0; s < 100; ++s) {
    const auto& e = ctx.get(names[static_cast<std::size_t>(s) % names.size()]);
    const LieAlgebra& g = *e.cat.algebra;
    Subspace a = detail::random_subspace(g, ctx.rng, 3);
    std::vector<Vector> sub;
    for (const auto& v : a.basis_vectors())
      if (std::uniform_int_distribution<int>(0, 1)(ctx.rng)) sub.push_back(v);
    Subspace b = Subspace::span(g.dim(), sub);
    Subspace u = g.transporter(a, b);
    Subspace uu = intersect(u, g.perp(u));
    if (!uu.is_zero()) ++nontrivial_isotropic;
    for (const auto& x : uu.basis_vectors()) t.expect(g.in_nilpotent_cone(x), e.cat.name() + ": u ∩ u^⊥ leaves the nilpotent cone");
    if (uu.dim() > 1) {
      Vector x = zero_vector(g.dim());
      for (const auto& v : uu.basis_vectors()) x = x + Rational(std::uniform_int_distribution<int>(1, 3)(ctx.rng)) * v;
      t.expect(g.in_nilpotent_cone(x), e.cat.name() + ": combination in u ∩ u^⊥ is not nilpotent");
    }
    Subspace n = g.normalizer(a);
    Subspace radical = intersect(intersect(n, g.perp(n)), g.bracket_spaces(n, n));
    t.expect(nilpotency_radical(g, g.realization(), n).contains(radical),
             e.cat.name() + ": Cartan criterion fails on a normalizer");
  }
  t.expect(nontrivial_isotropic >= 20, "too few nontrivial u ∩ u^⊥ samples: " + std::to_string(nontrivial_isotropic));
  for (const auto& cat : all) {
    const LieAlgebra& g = *cat.algebra;
    t.expect(intersect(g.perp(g.whole()), g.derived_algebra()).is_zero(), cat.name() + ": g^⊥ ∩ [g,g] != 0");
  }
  // exp_ad of nilpotents: automorphism, form-preserving, matches conjugation by exp
  for (int s = 0; s < 100; ++s) {
    const auto& e = ctx.get(names[static_cast<std::size_t>(s) % names.size()]);
    const LieAlgebra& g = *e.cat.algebra;
    Subspace nil = image(random_inner_automorphism(*e.rd, ctx.rng), e.ts->reference().nilradical);
    Vector c = detail::random_vector(nil.dim(), ctx.rng);
    Element x = nil.combine(c);
    if (is_zero(x)) x = nil.basis_vector(0);
    t.expect(g.is_ad_nilpotent(x), e.cat.name() + ": sampled element is not ad-nilpotent");
    Matrix a = g.exp_ad(x);
    t.expect(g.is_automorphism(a), e.cat.name() + ": exp_ad is not an automorphism");
    const BilinearForm form = g.trace_form();
    const Matrix& gram = form.gram();
    t.expect(a.transpose() * gram * a == gram, e.cat.name() + ": exp_ad does not preserve the trace form");
    Matrix ex = detail::matrix_exp_nilpotent(g.realize(x));
    Matrix exinv = detail::matrix_exp_nilpotent(Rational(-1) * g.realize(x));
    bool conj = true;
    for (std::size_t j = 0; j < g.dim() && conj; ++j)
      conj = ex * g.realization()[j] * exinv == g.realize(a.col(j));
    t.expect(conj, e.cat.name() + ": exp_ad disagrees with conjugation by exp in the realization");
  }
  // invariant-form identities on subspace pairs
  for (int s = 0; s < 100; ++s) {
    const auto& e = ctx.get(names[static_cast<std::size_t>(s) % names.size()]);
    const LieAlgebra& g = *e.cat.algebra;
    Subspace a = detail::random_subspace(g, ctx.rng, 4), b = detail::random_subspace(g, ctx.rng, 4);
    Subspace lhs = g.transporter(a, g.perp(b));
    t.expect(lhs == g.perp(g.bracket_spaces(a, b)), e.cat.name() + ": c(s,t^⊥) != [s,t]^⊥");
    t.expect(lhs == g.transporter(b, g.perp(a)), e.cat.name() + ": c(s,t^⊥) != c(t,s^⊥)");
    Subspace sp = g.perp(a);
    t.expect(g.normalizer(a) == g.perp(g.bracket_spaces(a, sp)), e.cat.name() + ": n(s) != [s,s^⊥]^⊥");
    t.expect(g.normalizer(sp) == g.normalizer(a), e.cat.name() + ": n(s^⊥) != n(s)");
    t.expect(g.centralizer(a) == g.perp(g.bracket_spaces(a, g.whole())), e.cat.name() + ": c(s) != [s,g]^⊥");
    if (g.is_subalgebra(a)) t.expect(sp.contains(g.bracket_spaces(a, sp)), e.cat.name() + ": [s,s^⊥] ⊄ s^⊥");
  }
  for (const auto& cat : all) {
    const LieAlgebra& g = *cat.algebra;
    t.expect(g.center() == g.perp(g.derived_algebra()), cat.name() + ": z(g) != [g,g]^⊥");
  }
  // E C reconstruction of the discrete incidence models
  t.expect(reconstruct(incidence_model_subsets(2)).isomorphism, "Γ^S(2) is not reconstructed");
  t.expect(reconstruct(incidence_model_subsets(3)).isomorphism, "Γ^S(3) is not reconstructed");
  t.expect(reconstruct(incidence_model_admissible(2)).isomorphism, "Γ^R±(2) is not reconstructed");
  std::string d = std::to_string(all.size()) + " catalog algebras valid; 100 transporter samples (" +
                  std::to_string(nontrivial_isotropic) + " with u∩u^⊥ ≠ 0); 100 exp_ad; 100 form identities; 3 reconstructions";
  return {9, "algebraic property suites", t.ok(), t.ok() ? d : t.failures()};
}

// ---------------------------------------------------------------------------

// Runs every criterion, reporting each as it finishes. An exception inside
// a criterion fails that criterion only.
inline std::vector<Outcome> run(const Options& opt, const std::function<void(const Outcome&)>& report = {}) {
  detail::Context ctx(opt.seed);
  std::vector<std::pair<std::string, std::function<Outcome()>>> steps{
      {"recognizer equivalence", [&] { return recognizer(ctx); }},
      {"projection law", [&] { return projection_law(ctx); }},
      {"type laws", [&] { return type_laws(ctx); }},
      {"root data", [&] { return root_data(ctx); }},
      {"Weyl/Bruhat combinatorics", [&] { return weyl_bruhat(ctx); }},
      {"duality involution", [&] { return duality(ctx); }},
      {"lowest-weight line", [&] { return lowest_weight(ctx); }},
      {"configuration goldens", [&] { return configuration_goldens(opt); }},
      {"algebraic property suites", [&] { return property_suites(ctx); }},
  };
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = steps[i].second();
    } catch (const std::exception& ex) {
      o = {static_cast<int>(i + 1), steps[i].first, false, std::string("exception: ") + ex.what()};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report) report(o);
    out.push_back(std::move(o));
  }
  return out;
}

inline std::string format(const Outcome& o) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << (o.passed ? "PASS" : "FAIL") << "  criterion " << o.id << " (" << o.name << "): " << o.detail << " [" << o.seconds
     << "s]";
  return os.str();
}

}  // namespace parabolica::selftest
