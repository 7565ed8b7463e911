#pragma once

// Executable checks of the structural statements about c-ideals and weak
// c-ideals, run exhaustively over a corpus of algebras over GF(p).
//
// Hard checks hold over every field; a violation is a bug and comes with a
// claim payload that `recheck` can re-evaluate from scratch. Observational
// checks are statements that are only known in characteristic zero; over
// GF(p) their outcome is recorded but never counts as a failure.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lieideal/corpus.hpp"
#include "lieideal/dsl.hpp"
#include "lieideal/ideals.hpp"
#include "lieideal/json_io.hpp"
#include "lieideal/lattice.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/search.hpp"
#include "lieideal/structure.hpp"

namespace lieideal::verify {

using PF = PrimeField;

enum class Status { pass, fail, unsupported, observed_true, observed_false, error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unsupported: return "unsupported";
    case Status::observed_true: return "observed-true";
    case Status::observed_false: return "observed-false";
    case Status::error: return "error";
  }
  return "error";
}

struct CheckResult {
  std::string check_id;
  std::string algebra_id;
  Status status = Status::pass;
  std::size_t hypothesis_count = 0;
  std::string detail;
  Json witness;  // null when there is nothing to show
};

/// Everything the checks need about one algebra, computed lazily and memoized:
/// the subalgebra lattice, weak c / c-ideal status per lattice element, and
/// contexts for quotients by ideals and for subalgebras.
class Context {
 public:
  Context(LieAlgebra<PF> L, std::uint64_t budget) : L_(std::move(L)), budget_(budget) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  const LieAlgebra<PF>& algebra() const { return L_; }
  std::uint64_t budget() const { return budget_; }

  std::map<std::string, Subspace<PF>> named;
  std::map<std::string, Vec<PF>> vectors;

  const LatticeCache<PF>& lattice() {
    if (!lattice_) {
      if (lattice_error_) throw BudgetError(*lattice_error_);
      try {
        lattice_.emplace(LatticeCache<PF>::build(L_, budget_));
      } catch (const BudgetError& e) {
        lattice_error_ = e.what();
        throw;
      }
      const auto n = lattice_->size();
      weak_.assign(n, -1);
      cideal_.assign(n, -1);
      solvable_.assign(n, -1);
    }
    return *lattice_;
  }

  std::size_t index(const Subspace<PF>& s) {
    auto i = lattice().index_of(s);
    if (!i) throw PreconditionError("subspace is not a subalgebra");
    return *i;
  }
  const Subspace<PF>& operator[](std::size_t i) { return lattice()[i]; }

  bool weak_c(std::size_t i) {
    lattice();
    if (weak_[i] < 0) weak_[i] = is_weak_c_ideal(*lattice_, (*lattice_)[i]);
    return weak_[i];
  }
  bool c_ideal(std::size_t i) {
    lattice();
    if (cideal_[i] < 0) cideal_[i] = is_c_ideal(*lattice_, (*lattice_)[i]);
    return cideal_[i];
  }
  bool solvable(std::size_t i) {
    lattice();
    if (solvable_[i] < 0) solvable_[i] = is_solvable(L_, std::optional((*lattice_)[i]));
    return solvable_[i];
  }

  bool is_solvable_algebra() const { return is_solvable(L_); }
  bool is_nilpotent_algebra() const { return is_nilpotent(L_); }

  bool simple() {
    if (!simple_) {
      auto t = is_simple(L_, budget_);
      if (t == Tri::unsupported) throw UnsupportedError("simplicity undecided");
      simple_ = t == Tri::yes;
    }
    return *simple_;
  }
  bool supersolvable() {
    if (!supersolvable_) {
      auto t = is_supersolvable(L_, budget_).verdict;
      if (t == Tri::unsupported) throw UnsupportedError("supersolvability undecided within budget");
      supersolvable_ = t == Tri::yes;
    }
    return *supersolvable_;
  }

  /// No weak c-ideals besides 0 and L.
  bool weak_c_simple() {
    const auto& lat = lattice();
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (!lat[i].is_zero() && !lat[i].is_full() && weak_c(i)) return false;
    return true;
  }

  /// Every maximal subalgebra of each maximal nilpotent subalgebra is a weak c-ideal.
  bool hypothesis() {
    if (!hypothesis_) {
      const auto& lat = lattice();
      bool ok = true;
      for (auto u : lat.maximal_nilpotent()) {
        for (auto b : lat.maximal_below(u))
          if (!weak_c(b)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      hypothesis_ = ok;
    }
    return *hypothesis_;
  }

  /// Every maximal nilpotent subalgebra is a weak c-ideal.
  bool literal_hypothesis() {
    const auto& lat = lattice();
    return std::all_of(lat.maximal_nilpotent().begin(), lat.maximal_nilpotent().end(),
                       [&](std::size_t u) { return weak_c(u); });
  }

  /// Minimal nonzero ideals, read off the lattice.
  std::vector<std::size_t> minimal_ideals() {
    const auto& lat = lattice();
    std::vector<std::size_t> nonzero;
    for (auto i : lat.ideals())
      if (!lat[i].is_zero()) nonzero.push_back(i);
    std::vector<std::size_t> out;
    for (auto i : nonzero)
      if (std::none_of(nonzero.begin(), nonzero.end(), [&](std::size_t j) { return j != i && lat.leq(j, i); }))
        out.push_back(i);
    return out;
  }

  std::vector<std::size_t> minimal_abelian_ideals() {
    std::vector<std::size_t> out;
    for (auto i : minimal_ideals())
      if (product_space(L_, lattice()[i], lattice()[i]).is_zero()) out.push_back(i);
    return out;
  }

  /// Context of L / I for the ideal with lattice index i.
  Context& quotient(std::size_t i) { return *quotient_node(i).ctx; }
  const QuotientAlgebra<PF>& quotient_map(std::size_t i) { return quotient_node(i).map; }

  /// Context of the subalgebra with lattice index k, in its own coordinates.
  Context& sub(std::size_t k) { return *sub_node(k).ctx; }
  const SubalgebraView<PF>& sub_view(std::size_t k) { return sub_node(k).view; }

 private:
  struct QuotientNode {
    QuotientAlgebra<PF> map;
    std::unique_ptr<Context> ctx;
  };
  struct SubNode {
    SubalgebraView<PF> view;
    std::unique_ptr<Context> ctx;
  };

  QuotientNode& quotient_node(std::size_t i) {
    auto it = quotients_.find(i);
    if (it == quotients_.end()) {
      auto q = quotient_algebra(L_, lattice()[i]);
      auto ctx = std::make_unique<Context>(q.algebra, budget_);
      it = quotients_.emplace(i, QuotientNode{std::move(q), std::move(ctx)}).first;
    }
    return it->second;
  }
  SubNode& sub_node(std::size_t k) {
    auto it = subs_.find(k);
    if (it == subs_.end()) {
      auto v = restrict_to(L_, lattice()[k]);
      auto ctx = std::make_unique<Context>(v.algebra, budget_);
      it = subs_.emplace(k, SubNode{std::move(v), std::move(ctx)}).first;
    }
    return it->second;
  }

  LieAlgebra<PF> L_;
  std::uint64_t budget_;
  std::optional<LatticeCache<PF>> lattice_;
  std::optional<std::string> lattice_error_;
  std::vector<signed char> weak_, cideal_, solvable_;
  std::optional<bool> simple_, supersolvable_, hypothesis_;
  std::map<std::size_t, QuotientNode> quotients_;
  std::map<std::size_t, SubNode> subs_;
};

// ---------------------------------------------------------------------------
// Claims: a predicate on L with explicit arguments and the value a statement
// requires. A violation payload records the algebra, the claim and what was
// observed, so it can be re-evaluated without the harness.

inline Json claim(const std::string& predicate, Json args, bool expected) {
  return {{"predicate", predicate}, {"args", std::move(args)}, {"expected", expected}};
}

inline Json sub_json(const Subspace<PF>& s) { return subspace_to_json(s); }

namespace detail {

inline bool all_maximal(Context& c, const std::function<bool(std::size_t)>& pred) {
  const auto& m = c.lattice().maximal_subalgebras();
  return std::all_of(m.begin(), m.end(), pred);
}

inline bool weak_c_of(Context& c, const Subspace<PF>& b) {
  auto i = c.lattice().index_of(b);
  return i && c.weak_c(*i);
}

}  // namespace detail

/// Evaluates a claim's predicate on the algebra of `c`.
inline bool evaluate(Context& c, const Json& cl) {
  const auto& L = c.algebra();
  const auto& f = L.field();
  const std::size_t n = L.dim();
  const auto& args = cl.at("args");
  auto arg = [&](const char* name) { return subspace_from_json(f, n, args.at(name)); };
  const auto pred = cl.at("predicate").get<std::string>();

  if (pred == "weak-c-ideal") return detail::weak_c_of(c, arg("B"));
  if (pred == "c-ideal") {
    auto i = c.lattice().index_of(arg("B"));
    return i && c.c_ideal(*i);
  }
  if (pred == "c-ideal-witness") return bool(verify_c(L, arg("B"), arg("C")));
  if (pred == "ideal") return is_ideal(L, arg("B"));
  if (pred == "subalgebra") return is_subalgebra(L, arg("B"));
  if (pred == "contained") return subspace_leq(arg("U"), arg("V"));
  if (pred == "dim-equals") return arg("B").dim() == args.at("dim").get<std::size_t>();
  if (pred == "core-zero") return core(L, arg("B")).is_zero();
  if (pred == "product-with-whole-is-self") {
    auto a = arg("B");
    return product_space(L, L.whole(), a) == a;
  }
  if (pred == "jacobi") return !L.first_jacobi_failure().has_value();
  if (pred == "weak-c-ideal-in-subalgebra") {
    auto b = arg("B"), k = arg("K");
    auto& sub = c.sub(c.index(k));
    return detail::weak_c_of(sub, c.sub_view(c.index(k)).to_sub(b));
  }
  if (pred == "weak-c-ideal-in-quotient") {
    auto b = arg("B"), i = arg("I");
    auto idx = c.index(i);
    return detail::weak_c_of(c.quotient(idx), c.quotient_map(idx).project(b));
  }
  if (pred == "weak-c-simple") return c.weak_c_simple();
  if (pred == "simple") return c.simple();
  if (pred == "supersolvable") return c.supersolvable();
  if (pred == "nilpotent") return c.is_nilpotent_algebra();
  if (pred == "dim-one") return arg("A").dim() == 1;
  if (pred == "contained-or-central") {
    auto a = arg("A"), k = arg("K");
    return subspace_leq(a, k) || product_space(L, L.whole(), a).is_zero();
  }
  if (pred == "derived-power-in") return min_power_in(L, arg("K"), SeriesKind::derived).has_value();
  if (pred == "lower-power-in") return min_power_in(L, arg("K"), SeriesKind::lower_central).has_value();
  if (pred == "maximal-nilpotent-plus") {
    auto u = arg("U"), a = arg("A");
    const auto& lat = c.lattice();
    for (auto m : lat.maximal_nilpotent())
      if (subspace_sum(lat[m], a) == u) return true;
    return false;
  }
  if (pred == "hypothesis-in-quotient") return c.quotient(c.index(arg("I"))).hypothesis();
  if (pred == "complement-mod-core") {
    auto b = arg("B");
    auto idx = c.index(core(L, b));
    return subideal_complement_mod_core(L, b, c.quotient_map(idx), c.quotient(idx).lattice()).has_value();
  }
  if (pred == "complement-mod-core-certificate") return is_subideal_complement_mod_core(L, arg("B"), arg("K"));
  if (pred == "all-one-dim-weak-c") return classify_one_dim_weak_c(c.lattice()).all_one_dim_weak_c == Tri::yes;
  throw PreconditionError("unknown predicate '" + pred + "'");
}

/// Re-evaluates a violation payload from scratch. True when the violation
/// reproduces (the predicate still disagrees with the expected value).
inline bool recheck(const Json& payload, std::uint64_t budget = kDefaultBudget) {
  auto field_name = payload.at("algebra").at("field").get<std::string>();
  lieideal::detail::LineLexer lx(field_name, 1);
  auto fd = lieideal::detail::parse_field_name(lx);
  if (!fd.is_finite()) throw UnsupportedError("recheck needs a finite field");
  PF f(fd.modulus());
  Context c(algebra_from_json(f, payload.at("algebra")), budget);
  const auto& cl = payload.at("claim");
  return evaluate(c, cl) != cl.at("expected").get<bool>();
}

// ---------------------------------------------------------------------------
// Checks

/// Accumulates hypothesis instances and the first violation.
struct Tally {
  std::size_t count = 0;
  std::optional<Json> violation;  // a claim
  std::string detail;
  Json info;  // extra data shown on pass rows

  void violate(Json cl, std::string why) {
    if (violation) return;
    violation = std::move(cl);
    detail = std::move(why);
  }
  bool holds() const { return !violation; }
};

struct CheckDef {
  std::string id;
  bool observational = false;
  bool example_only = false;  // runs only on algebras carrying the example subspaces
  std::function<Tally(Context&)> run;
};

namespace checks {

inline Tally c_ideal_is_weak_c(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!c.c_ideal(i)) continue;
    ++t.count;
    if (!c.weak_c(i)) t.violate(claim("weak-c-ideal", {{"B", sub_json(lat[i])}}, true), "c-ideal that is not weak c");
  }
  return t;
}

inline Tally simple_iff_weak_c_simple(Context& c) {
  Tally t;
  if (c.algebra().dim() < 2) return t;
  t.count = 1;
  bool s = c.simple();
  if (c.weak_c_simple() != s) t.violate(claim("weak-c-simple", Json::object(), s), "simple and weak c-simple disagree");
  t.info = {{"simple", s}};
  return t;
}

inline Tally weak_c_inherited_by_subalgebras(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!c.weak_c(i)) continue;
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == lat.whole_index() || !lat.leq(i, k)) continue;
      ++t.count;
      auto& sub = c.sub(k);
      if (!detail::weak_c_of(sub, c.sub_view(k).to_sub(lat[i])))
        t.violate(claim("weak-c-ideal-in-subalgebra", {{"B", sub_json(lat[i])}, {"K", sub_json(lat[k])}}, true),
                  "weak c-ideal of L that is not weak c in an intermediate subalgebra");
    }
  }
  return t;
}

inline Tally weak_c_passes_to_quotients(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  for (auto i : lat.ideals()) {
    if (lat[i].is_zero() || lat[i].is_full()) continue;
    auto& q = c.quotient(i);
    const auto& map = c.quotient_map(i);
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (!lat.leq(i, b)) continue;
      ++t.count;
      bool here = c.weak_c(b);
      if (detail::weak_c_of(q, map.project(lat[b])) != here)
        t.violate(claim("weak-c-ideal-in-quotient", {{"B", sub_json(lat[b])}, {"I", sub_json(lat[i])}}, here),
                  "weak c status of B and B/I disagree");
    }
  }
  return t;
}

inline Tally frattini_weak_c_is_ideal(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  auto phi = frattini(lat).ideal;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    auto fc = frattini_subalgebra(lat, k);
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (!subspace_leq(lat[b], fc) || !c.weak_c(b)) continue;
      ++t.count;
      if (!is_ideal(c.algebra(), lat[b]))
        t.violate(claim("ideal", {{"B", sub_json(lat[b])}}, true), "weak c-ideal inside F(C) that is not an ideal");
      else if (!subspace_leq(lat[b], phi))
        t.violate(claim("contained", {{"U", sub_json(lat[b])}, {"V", sub_json(phi)}}, true),
                  "weak c-ideal inside F(C) that is not inside phi(L)");
    }
  }
  return t;
}

inline Tally weak_c_iff_complement_mod_core(Context& c) {
  Tally t;
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  for (std::size_t b = 0; b < lat.size(); ++b) {
    ++t.count;
    auto ci = c.index(core(L, lat[b]));
    auto k = subideal_complement_mod_core(L, lat[b], c.quotient_map(ci), c.quotient(ci).lattice());
    bool w = c.weak_c(b);
    if (k.has_value() != w)
      t.violate(claim("complement-mod-core", {{"B", sub_json(lat[b])}}, w),
                "weak c status disagrees with existence of a subideal complement mod core");
    else if (k && !is_subideal_complement_mod_core(L, lat[b], *k))
      t.violate(claim("complement-mod-core-certificate", {{"B", sub_json(lat[b])}, {"K", sub_json(*k)}}, true),
                "complement found by search does not validate");
  }
  return t;
}

inline Tally solvable_complement_contains_derived_power(Context& c) {
  Tally t;
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  auto subideals = lat.subideals();
  std::map<std::size_t, bool> power_in;
  for (std::size_t u = 0; u < lat.size(); ++u) {
    if (!c.solvable(u)) continue;
    for (auto k : subideals) {
      if (lat[u].dim() + lat[k].dim() < L.dim() || !subspace_sum(lat[u], lat[k]).is_full()) continue;
      ++t.count;
      auto it = power_in.find(k);
      if (it == power_in.end())
        it = power_in.emplace(k, min_power_in(L, lat[k], SeriesKind::derived).has_value()).first;
      if (!it->second)
        t.violate(claim("derived-power-in", {{"K", sub_json(lat[k])}}, true),
                  "no derived power inside a subideal supplementing a solvable subalgebra");
    }
  }
  return t;
}

inline Tally maximal_avoiding_solvable_ideal_is_c_ideal(Context& c) {
  Tally t;
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  for (auto b : lat.ideals()) {
    if (!c.solvable(b)) continue;
    auto derived = series(L, SeriesKind::derived, std::optional(lat[b])).terms;
    for (auto m : lat.maximal_subalgebras()) {
      if (lat.leq(b, m)) continue;
      ++t.count;
      if (!c.c_ideal(m)) {
        t.violate(claim("c-ideal", {{"B", sub_json(lat[m])}}, true),
                  "maximal subalgebra missing a solvable ideal is not a c-ideal");
        continue;
      }
      // the explicit witness: the last derived term of B not inside M
      std::optional<Subspace<PF>> last;
      for (const auto& d : derived)
        if (!subspace_leq(d, lat[m])) last = d;
      if (!last || !verify_c(L, lat[m], *last))
        t.violate(claim("c-ideal-witness", {{"B", sub_json(lat[m])}, {"C", sub_json(last ? *last : L.zero())}}, true),
                  "derived term of B does not witness the c-ideal property");
    }
  }
  return t;
}

inline Tally solvable_maximal_are_weak_c(Context& c) {
  Tally t;
  if (!c.is_solvable_algebra()) return t;
  const auto& lat = c.lattice();
  for (auto m : lat.maximal_subalgebras()) {
    ++t.count;
    if (!c.weak_c(m))
      t.violate(claim("weak-c-ideal", {{"B", sub_json(lat[m])}}, true),
                "maximal subalgebra of a solvable algebra that is not weak c");
  }
  return t;
}

inline Tally solvable_ideal_iff_maximal_weak_c(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  for (auto b : lat.ideals()) {
    ++t.count;
    bool rhs = detail::all_maximal(c, [&](std::size_t m) { return lat.leq(b, m) || c.weak_c(m); });
    if (c.solvable(b) != rhs)
      t.violate(claim("weak-c-ideal", {{"B", sub_json(lat[b])}}, rhs), "ideal whose solvability disagrees");
  }
  return t;
}

inline Tally solvable_iff_maximal_weak_c(Context& c) {
  Tally t;
  t.count = 1;
  bool rhs = detail::all_maximal(c, [&](std::size_t m) { return c.weak_c(m); });
  if (c.is_solvable_algebra() != rhs) t.violate(Json::object(), "solvability disagrees with maximal subalgebras");
  return t;
}

inline Tally solvable_weak_c_maximal_iff_solvable(Context& c) {
  Tally t;
  t.count = 1;
  const auto& m = c.lattice().maximal_subalgebras();
  bool lhs = std::any_of(m.begin(), m.end(), [&](std::size_t i) { return c.solvable(i) && c.weak_c(i); });
  if (lhs != c.is_solvable_algebra()) t.violate(Json::object(), "solvable weak c maximal subalgebra vs solvability");
  return t;
}

inline Tally maximal_nilpotent_weak_c_implies_solvable(Context& c) {
  Tally t;
  if (!c.literal_hypothesis()) return t;
  t.count = 1;
  if (!c.is_solvable_algebra()) t.violate(Json::object(), "all maximal nilpotent weak c but not solvable");
  return t;
}

inline Tally cartan_weak_c_implies_solvable(Context& c) {
  Tally t;
  const auto& cart = c.lattice().cartan();
  if (!std::all_of(cart.begin(), cart.end(), [&](std::size_t i) { return c.weak_c(i); })) return t;
  t.count = 1;
  if (!c.is_solvable_algebra()) t.violate(Json::object(), "all Cartan subalgebras weak c but not solvable");
  return t;
}

inline Tally maximal_nilpotent_lift(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  for (auto a : lat.ideals()) {
    if (lat[a].is_zero() || lat[a].is_full()) continue;
    auto& q = c.quotient(a);
    const auto& map = c.quotient_map(a);
    for (auto ubar : q.lattice().maximal_nilpotent()) {
      ++t.count;
      auto u = map.preimage(q.lattice()[ubar]);
      const auto& mn = lat.maximal_nilpotent();
      if (std::none_of(mn.begin(), mn.end(), [&](std::size_t m) { return subspace_sum(lat[m], lat[a]) == u; }))
        t.violate(claim("maximal-nilpotent-plus", {{"U", sub_json(u)}, {"A", sub_json(lat[a])}}, true),
                  "preimage of a maximal nilpotent subalgebra of L/A is not C + A");
    }
  }
  return t;
}

// Pairs (B, K) with B nilpotent, K a subideal and B + K = L.
inline std::vector<std::pair<std::size_t, std::size_t>> nilpotent_supplements(Context& c) {
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  auto subideals = lat.subideals();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto b : lat.nilpotent())
    for (auto k : subideals)
      if (lat[b].dim() + lat[k].dim() >= L.dim() && subspace_sum(lat[b], lat[k]).is_full()) out.emplace_back(b, k);
  return out;
}

inline Tally nilpotent_supplement_power(Context& c) {
  Tally t;
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  std::map<std::size_t, bool> power_in;
  for (auto [b, k] : nilpotent_supplements(c)) {
    ++t.count;
    auto it = power_in.find(k);
    if (it == power_in.end())
      it = power_in.emplace(k, min_power_in(L, lat[k], SeriesKind::lower_central).has_value()).first;
    if (!it->second && t.holds()) {
      t.info = {{"B", sub_json(lat[b])}, {"K", sub_json(lat[k])}};
      t.violate(claim("lower-power-in", {{"K", sub_json(lat[k])}}, true),
                "no lower central term inside a subideal supplementing a nilpotent subalgebra");
    }
  }
  return t;
}

inline Tally nilpotent_supplement_minimal_ideal(Context& c) {
  Tally t;
  const auto& L = c.algebra();
  const auto& lat = c.lattice();
  auto minimal = c.minimal_ideals();
  for (auto [b, k] : nilpotent_supplements(c)) {
    for (auto a : minimal) {
      ++t.count;
      if (t.holds() && !lat.leq(a, k) && !product_space(L, L.whole(), lat[a]).is_zero()) {
        t.info = {{"B", sub_json(lat[b])}, {"K", sub_json(lat[k])}, {"A", sub_json(lat[a])}};
        t.violate(claim("contained-or-central", {{"A", sub_json(lat[a])}, {"K", sub_json(lat[k])}}, true),
                  "minimal ideal neither inside K nor central");
      }
    }
  }
  return t;
}

inline Tally hypothesis_passes_to_quotient(Context& c) {
  Tally t;
  if (!c.hypothesis()) return t;
  const auto& lat = c.lattice();
  for (auto a : c.minimal_abelian_ideals()) {
    ++t.count;
    if (!c.quotient(a).hypothesis())
      t.violate(claim("hypothesis-in-quotient", {{"I", sub_json(lat[a])}}, true),
                "hypothesis fails in L/A for a minimal abelian ideal A");
  }
  return t;
}

namespace impl {
inline bool has_core_free_maximal(Context& c) {
  const auto& lat = c.lattice();
  const auto& m = lat.maximal_subalgebras();
  return std::any_of(m.begin(), m.end(), [&](std::size_t i) { return core(c.algebra(), lat[i]).is_zero(); });
}

inline Tally minimal_abelian_is_line(Context& c) {
  Tally t;
  if (!has_core_free_maximal(c)) return t;
  const auto& lat = c.lattice();
  for (auto a : c.minimal_abelian_ideals()) {
    ++t.count;
    if (lat[a].dim() != 1)
      t.violate(claim("dim-one", {{"A", sub_json(lat[a])}}, true),
                "minimal abelian ideal of dimension > 1 beside a core-free maximal subalgebra");
  }
  return t;
}
}  // namespace impl

inline Tally minimal_abelian_is_line(Context& c) {
  if (!c.is_solvable_algebra() || !c.hypothesis()) return {};
  return impl::minimal_abelian_is_line(c);
}

inline Tally minimal_abelian_is_line_literal(Context& c) {
  if (!c.literal_hypothesis()) return {};
  return impl::minimal_abelian_is_line(c);
}

inline Tally hypothesis_implies_supersolvable(Context& c) {
  Tally t;
  if (!c.is_solvable_algebra() || !c.hypothesis()) return t;
  t.count = 1;
  if (!c.supersolvable())
    t.violate(claim("supersolvable", Json::object(), true), "solvable, hypothesis holds, but not supersolvable");
  return t;
}

inline Tally hypothesis_big_nilpotent_implies_supersolvable(Context& c) {
  Tally t;
  if (!c.hypothesis()) return t;
  const auto& lat = c.lattice();
  const auto& mn = lat.maximal_nilpotent();
  if (!std::all_of(mn.begin(), mn.end(), [&](std::size_t u) { return lat[u].dim() >= 2; })) return t;
  t.count = 1;
  if (!c.supersolvable()) t.violate(Json::object(), "hypothesis holds but not supersolvable");
  return t;
}

inline Tally hypothesis_implies_supersolvable_or_3d_simple(Context& c) {
  Tally t;
  if (!c.hypothesis()) return t;
  t.count = 1;
  if (!c.supersolvable() && !(c.algebra().dim() == 3 && c.simple()))
    t.violate(Json::object(), "hypothesis holds but neither supersolvable nor 3-dim simple");
  return t;
}

inline Tally one_dim_weak_c_iff_c(Context& c) {
  Tally t;
  const auto& lat = c.lattice();
  Json table = Json::array();
  for (std::size_t b = 0; b < lat.size(); ++b) {
    if (lat[b].dim() != 1) continue;
    ++t.count;
    bool w = c.weak_c(b), ci = c.c_ideal(b);
    table.push_back({{"B", sub_json(lat[b])}, {"weak_c", w}, {"c", ci}});
    if (w != ci)
      t.violate(claim("c-ideal", {{"B", sub_json(lat[b])}}, w), "1-dim subalgebra with weak c and c status differing");
  }
  t.info = {{"lines", table}};
  return t;
}

inline Tally one_dim_classification(Context& c) {
  Tally t;
  t.count = 1;
  auto cls = classify_one_dim_weak_c(c.lattice());
  t.info = {{"verdict", to_string(cls.verdict)}};
  if (cls.abelian_part) t.info["A"] = sub_json(*cls.abelian_part);
  if (cls.almost_part) t.info["B"] = sub_json(*cls.almost_part);
  if (cls.non_witness) t.info["non_witness"] = sub_json(*cls.non_witness);
  if (cls.equivalence != Tri::yes)
    t.violate(claim("all-one-dim-weak-c", Json::object(), cls.verdict != OneDimCase::neither),
              "structural verdict " + to_string(cls.verdict) + " disagrees with the 1-dim scan");
  return t;
}

inline Tally nilpotent_iff_maximal_ideals(Context& c) {
  Tally t;
  t.count = 1;
  bool all = detail::all_maximal(c, [&](std::size_t m) { return c.lattice().is_ideal(m); });
  if (c.is_nilpotent_algebra() != all)
    t.violate(claim("nilpotent", Json::object(), all), "nilpotency disagrees with maximal subalgebras being ideals");
  return t;
}

inline Tally supersolvable_iff_maximal_codim_one(Context& c) {
  Tally t;
  if (!c.is_solvable_algebra()) return t;
  t.count = 1;
  const auto n = c.algebra().dim();
  bool all = detail::all_maximal(c, [&](std::size_t m) { return c.lattice()[m].dim() + 1 == n; });
  if (c.supersolvable() != all)
    t.violate(claim("supersolvable", Json::object(), all),
              "supersolvability disagrees with maximal subalgebras having codimension 1");
  return t;
}

inline Tally example_facts(Context& c) {
  Tally t;
  t.count = 1;
  const auto& L = c.algebra();
  const auto p = L.field().characteristic();
  const auto& a = c.named.at("A");
  const auto& m = c.named.at("M");
  const auto& so = c.named.at("SO1plus");
  const auto u = span(L.field(), L.dim(), {c.vectors.at("um_0")});
  auto check = [&](bool ok, Json cl, const std::string& why) {
    if (!ok) t.violate(std::move(cl), why);
  };
  auto B = [](const Subspace<PF>& s) { return Json{{"B", sub_json(s)}}; };
  check(!L.first_jacobi_failure(), claim("jacobi", Json::object(), true), "Jacobi identity fails");
  check(is_ideal(L, a), claim("ideal", B(a), true), "A is not an ideal");
  check(a.dim() == 3 * p, claim("dim-equals", {{"B", sub_json(a)}, {"dim", 3 * p}}, true), "dim A != 3p");
  check(product_space(L, L.whole(), a) == a, claim("product-with-whole-is-self", B(a), true), "[L, A] != A");
  check(is_subalgebra(L, m), claim("subalgebra", B(m), true), "M is not a subalgebra");
  check(m.dim() == 2 * p + 1, claim("dim-equals", {{"B", sub_json(m)}, {"dim", 2 * p + 1}}, true), "dim M != 2p+1");
  if (is_subalgebra(L, m)) check(core(L, m).is_zero(), claim("core-zero", B(m), true), "core(M) != 0");
  check(!subspace_leq(a, m), claim("contained", {{"U", sub_json(a)}, {"V", sub_json(m)}}, false), "A inside M");
  check(so.dim() == 3 * (p - 1), claim("dim-equals", {{"B", sub_json(so)}, {"dim", 3 * (p - 1)}}, true),
        "dim S⊗O1+ != 3(p-1)");
  auto sm = subspace_sum(so, m);
  check(!subspace_leq(u, sm), claim("contained", {{"U", sub_json(u)}, {"V", sub_json(sm)}}, false),
        "u_{-1}⊗1 lies in S⊗O1+ + M");
  return t;
}

/// M is maximal: M + Fw generates L for every w outside M.
inline Tally example_maximal(Context& c) {
  Tally t;
  t.count = 1;
  const auto& L = c.algebra();
  const auto& m = c.named.at("M");
  QuotientCoordinates<PF> qc(m);
  for (const auto& w : projective_points(L.field(), qc.quotient_dim(), c.budget())) {
    auto rows = m.basis();
    rows.push_back(qc.lift(w));
    if (!subalgebra_closure(L, span(L.field(), L.dim(), std::move(rows))).is_full()) {
      t.violate(Json::object(), "M + Fw generates a proper subalgebra");
      break;
    }
  }
  return t;
}

inline Tally example_unique_minimal_ideal(Context& c) {
  Tally t;
  t.count = 1;
  auto mins = minimal_ideals(c.algebra(), c.budget());
  t.info = {{"minimal_ideal_dims", Json::array()}};
  for (const auto& s : mins) t.info["minimal_ideal_dims"].push_back(s.dim());
  if (!(mins.size() == 1 && mins.front() == c.named.at("A"))) t.violate(Json::object(), "A is not the unique minimal ideal");
  return t;
}

}  // namespace checks

/// Registry in report order.
inline const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs{
      {"lemma-2.4-1", false, false, checks::c_ideal_is_weak_c},
      {"lemma-2.4-2", false, false, checks::simple_iff_weak_c_simple},
      {"lemma-2.4-3", false, false, checks::weak_c_inherited_by_subalgebras},
      {"lemma-2.4-4", false, false, checks::weak_c_passes_to_quotients},
      {"proposition-2.5", false, false, checks::frattini_weak_c_is_ideal},
      {"lemma-2.7", false, false, checks::weak_c_iff_complement_mod_core},
      {"lemma-3.5", false, false, checks::solvable_complement_contains_derived_power},
      {"theorem-3.2-solvable-direction", false, false, checks::maximal_avoiding_solvable_ideal_is_c_ideal},
      {"corollary-3.3-forward", false, false, checks::solvable_maximal_are_weak_c},
      {"theorem-3.2", true, false, checks::solvable_ideal_iff_maximal_weak_c},
      {"corollary-3.3", true, false, checks::solvable_iff_maximal_weak_c},
      {"theorem-3.6", true, false, checks::solvable_weak_c_maximal_iff_solvable},
      {"theorem-3.7", true, false, checks::maximal_nilpotent_weak_c_implies_solvable},
      {"theorem-3.8", true, false, checks::cartan_weak_c_implies_solvable},
      {"lemma-4.1", false, false, checks::maximal_nilpotent_lift},
      {"lemma-4.2-power", false, false, checks::nilpotent_supplement_power},
      {"lemma-4.2-minimal-ideal", false, false, checks::nilpotent_supplement_minimal_ideal},
      {"lemma-4.3", false, false, checks::hypothesis_passes_to_quotient},
      {"lemma-4.4", false, false, checks::minimal_abelian_is_line},
      {"lemma-4.4-literal", true, false, checks::minimal_abelian_is_line_literal},
      {"theorem-4.5", false, false, checks::hypothesis_implies_supersolvable},
      {"corollary-4.6", true, false, checks::hypothesis_big_nilpotent_implies_supersolvable},
      {"corollary-4.7", true, false, checks::hypothesis_implies_supersolvable_or_3d_simple},
      {"lemma-5.1", false, false, checks::one_dim_weak_c_iff_c},
      {"theorem-5.2", false, false, checks::one_dim_classification},
      {"maximal-ideals-iff-nilpotent", false, false, checks::nilpotent_iff_maximal_ideals},
      {"codim-one-iff-supersolvable", false, false, checks::supersolvable_iff_maximal_codim_one},
      {"example-3.4", false, true, checks::example_facts},
      {"example-3.4-maximal", true, true, checks::example_maximal},
      {"example-3.4-unique-minimal-ideal", true, true, checks::example_unique_minimal_ideal},
  };
  return defs;
}

inline const CheckDef* find_check(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

inline bool has_example_data(const Context& c) {
  return c.named.count("A") && c.named.count("M") && c.named.count("SO1plus") && c.vectors.count("um_0");
}

/// Runs one check on one algebra; never throws for budget or field limits.
inline CheckResult run_check(const CheckDef& def, Context& c, const std::string& algebra_id) {
  CheckResult r{def.id, algebra_id, Status::pass, 0, {}, nullptr};
  try {
    auto t = def.run(c);
    r.hypothesis_count = t.count;
    r.detail = t.detail;
    if (!t.info.is_null()) r.witness = t.info;
    if (def.observational) {
      r.status = t.holds() ? Status::observed_true : Status::observed_false;
      if (t.violation && !t.violation->empty()) r.witness = Json{{"claim", *t.violation}};
    } else if (!t.holds()) {
      r.status = Status::fail;
      Json payload{{"algebra", algebra_to_json(c.algebra())}, {"claim", *t.violation}};
      payload["observed"] = evaluate(c, *t.violation);
      if (!t.info.is_null()) payload["context"] = t.info;
      r.witness = std::move(payload);
    }
  } catch (const BudgetError& e) {
    r.status = Status::unsupported;
    r.detail = e.what();
  } catch (const UnsupportedError& e) {
    r.status = Status::unsupported;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.detail = e.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// Corpus and suite

/// An algebra for the harness, given as a definition document.
struct CorpusEntry {
  std::string id;
  std::string source;
};

inline CorpusEntry preset_entry(const std::string& preset, const std::string& field) {
  std::string src = field.empty() ? "" : "field " + field + "\n";
  std::string shown = field;
  if (shown.empty()) {
    auto implied = preset_field(parse_preset(preset));
    shown = implied ? implied->name() : "?";
  }
  return {preset + " over " + shown, src + "preset " + preset + "\n"};
}

/// Default corpus over GF(2), GF(3), GF(5), plus the characteristic-p example at p = 3.
inline std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& field, std::initializer_list<const char*> presets) {
    for (auto p : presets) out.push_back(preset_entry(p, field));
  };
  // F^2 extended by x acting irreducibly: solvable, not supersolvable
  auto irreducible = [](const std::string& field, const std::string& action) {
    return CorpusEntry{"irreducible_extension over " + field,
                       "field " + field + "\ndim 3\nbasis x a b\n" + action};
  };
  const auto filiform = [](const std::string& field) {
    return CorpusEntry{"filiform4 over " + field, "field " + field + "\ndim 4\nbasis e1 e2 e3 e4\n[e1, e2] = e3\n[e1, e3] = e4\n"};
  };
  add("GF(2)", {"abelian(1)", "abelian(2)", "abelian(3)", "heisenberg", "two_dim_nonabelian", "almost_abelian(3)",
                "almost_abelian(4)", "direct_sum(abelian(1), two_dim_nonabelian)",
                "direct_sum(abelian(1), almost_abelian(3))", "direct_sum(two_dim_nonabelian, two_dim_nonabelian)",
                "direct_sum(heisenberg, abelian(1))"});
  out.push_back(filiform("GF(2)"));
  out.push_back(irreducible("GF(2)", "[x, a] = b\n[x, b] = a + b\n"));
  add("GF(3)", {"abelian(2)", "abelian(3)", "heisenberg", "two_dim_nonabelian", "almost_abelian(3)", "sl2",
                "direct_sum(abelian(1), two_dim_nonabelian)", "direct_sum(two_dim_nonabelian, two_dim_nonabelian)"});
  out.push_back(filiform("GF(3)"));
  out.push_back(irreducible("GF(3)", "[x, a] = b\n[x, b] = 2*a\n"));
  add("GF(5)", {"sl2", "heisenberg", "two_dim_nonabelian", "direct_sum(abelian(1), two_dim_nonabelian)"});
  out.push_back(preset_entry("example34(3)", ""));
  return out;
}

inline std::vector<std::string> preset_set_names() { return {"default", "small", "example"}; }

/// Named corpus selections: "default", "small" (GF(2) only), "example".
inline std::vector<CorpusEntry> preset_set(const std::string& name) {
  if (name == "default") return default_corpus();
  auto all = default_corpus();
  std::vector<CorpusEntry> out;
  for (auto& e : all) {
    bool gf2 = e.id.find("GF(2)") != std::string::npos;
    bool example = e.id.rfind("example34", 0) == 0;
    if ((name == "small" && gf2) || (name == "example" && example)) out.push_back(std::move(e));
  }
  if (out.empty()) throw PreconditionError("unknown preset set '" + name + "'");
  return out;
}

struct Report {
  std::vector<CheckResult> rows;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return r.status == s; }));
  }
  bool ok() const { return count(Status::fail) == 0 && count(Status::error) == 0; }
};

/// Runs the checks (all by default) over every entry in corpus order.
inline Report run_suite(const std::vector<CorpusEntry>& corpus, std::uint64_t budget = kDefaultBudget,
                        const std::vector<std::string>& only = {}) {
  Report rep;
  for (const auto& entry : corpus) {
    std::optional<LoadedAlgebra> loaded;
    try {
      loaded = load_algebra(entry.source);
    } catch (const std::exception& e) {
      rep.rows.push_back({"construction", entry.id, Status::error, 0, e.what(), nullptr});
      continue;
    }
    auto selected = [&](const CheckDef& def) {
      return only.empty() || std::find(only.begin(), only.end(), def.id) != only.end();
    };
    auto* built = std::get_if<BuiltAlgebra<PF>>(&loaded->built);
    if (!built) {
      for (const auto& def : registry())
        if (selected(def) && !def.example_only)
          rep.rows.push_back({def.id, entry.id, Status::unsupported, 0, "exhaustive checks need a finite field", nullptr});
      continue;
    }
    // one context per algebra, shared by all checks
    Context ctx(built->algebra, budget);
    ctx.named = built->subspaces;
    ctx.vectors = built->vectors;
    for (const auto& def : registry()) {
      if (!selected(def) || (def.example_only && !has_example_data(ctx))) continue;
      rep.rows.push_back(run_check(def, ctx, entry.id));
    }
  }
  return rep;
}

inline Json to_json(const CheckResult& r) {
  Json j{{"check_id", r.check_id},
         {"algebra_id", r.algebra_id},
         {"status", to_string(r.status)},
         {"hypothesis_count", r.hypothesis_count}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

inline Json to_json(const Report& rep) {
  Json out = Json::array();
  for (const auto& r : rep.rows) out.push_back(to_json(r));
  return out;
}

inline std::string to_text(const Report& rep) {
  std::size_t wc = 5, wa = 7;
  for (const auto& r : rep.rows) {
    wc = std::max(wc, r.check_id.size());
    wa = std::max(wa, r.algebra_id.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  std::ostringstream os;
  os << pad("check", wc) << "  " << pad("algebra", wa) << "  " << pad("status", 14) << "  hypotheses  detail\n";
  for (const auto& r : rep.rows)
    os << pad(r.check_id, wc) << "  " << pad(r.algebra_id, wa) << "  " << pad(to_string(r.status), 14) << "  "
       << pad(std::to_string(r.hypothesis_count), 10) << "  " << r.detail << "\n";
  os << "pass " << rep.count(Status::pass) << ", fail " << rep.count(Status::fail) << ", unsupported "
     << rep.count(Status::unsupported) << ", observed-true " << rep.count(Status::observed_true)
     << ", observed-false " << rep.count(Status::observed_false) << ", error " << rep.count(Status::error) << "\n";
  return os.str();
}

}  // namespace lieideal::verify
