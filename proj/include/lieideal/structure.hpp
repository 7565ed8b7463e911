#pragma once

// Structure-theoretic predicates: nilpotency, solvability,
// supersolvability, simplicity, minimal ideals, Frattini subalgebra and
// ideal, maximal nilpotent and Cartan subalgebras, almost abelian algebras,
// and the classification of algebras whose one-dimensional subalgebras are
// all weak c-ideals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieideal/error.hpp"
#include "lieideal/ideals.hpp"
#include "lieideal/lattice.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"
#include "lieideal/search.hpp"

namespace lieideal {

/// Truth value that keeps "cannot decide here" apart from "false".
enum class Tri { no, yes, unsupported };

inline Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

inline std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "false";
    case Tri::yes: return "true";
    case Tri::unsupported: return "unsupported";
  }
  return "unsupported";
}

// ---------------------------------------------------------------------------
// Eigenvalue machinery for one-dimensional ideals over Q

namespace detail {

template <Field F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> c{b.cols, std::vector<Vec<F>>(a.rows.size(), Vec<F>(b.cols, f.zero()))};
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (!f.is_zero(a.rows[i][k])) axpy(f, c.rows[i], a.rows[i][k], b.rows[k]);
  return c;
}

/// Coefficients c_0..c_n of det(tI - A) (Faddeev-LeVerrier; characteristic 0 only).
inline std::vector<Rational> characteristic_polynomial(const Matrix<RationalField>& a) {
  const RationalField f;
  const std::size_t n = a.cols;
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  Matrix<RationalField> m{n, std::vector<Vec<RationalField>>(n, Vec<RationalField>(n, 0))};
  for (std::size_t k = 1; k <= n; ++k) {
    auto am = mat_mul(f, a, m);
    for (std::size_t i = 0; i < n; ++i) am.rows[i][i] += c[n - k + 1];
    m = std::move(am);
    auto prod = mat_mul(f, a, m);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod.rows[i][i];
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Distinct rational roots of a polynomial with rational coefficients c_0..c_n.
inline std::vector<Rational> rational_roots(std::vector<Rational> c) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  if (c.front() == 0) {
    roots.push_back(0);
    std::size_t shift = 0;
    while (c[shift] == 0) ++shift;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    if (c.size() <= 1) return roots;
  }
  BigInt scale = 1;
  for (const auto& x : c) scale = boost::multiprecision::lcm(scale, denominator(x));
  std::vector<BigInt> a;
  for (const auto& x : c) a.push_back(numerator(x) * (scale / denominator(x)));
  auto eval = [&](const Rational& t) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  for (const auto& p : positive_divisors(a.front()))
    for (const auto& q : positive_divisors(a.back()))
      for (int sign : {1, -1}) {
        Rational t(BigInt(sign * p), q);
        if (eval(t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end()) roots.push_back(t);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

template <Field F>
std::vector<typename F::value_type> eigenvalue_candidates(const F& f, const Matrix<F>& a) {
  if constexpr (std::same_as<F, RationalField>) {
    return rational_roots(characteristic_polynomial(a));
  } else {
    (void)a;
    return f.elements();
  }
}

}  // namespace detail

/// Maximal common eigenspaces of ad(e_1), ..., ad(e_n): every nonzero vector
/// of every returned subspace spans a one-dimensional ideal, and every
/// one-dimensional ideal lies in one of them. Eigenvalues are the field
/// elements (finite fields) or the rational roots of the characteristic
/// polynomial (Q).
template <Field F>
std::vector<Subspace<F>> common_eigenspaces(const LieAlgebra<F>& L) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  std::vector<Subspace<F>> spaces{L.whole()};
  for (std::size_t m = 0; m < n && !spaces.empty(); ++m) {
    auto ad = L.ad(unit_vector(f, n, m));
    std::vector<Subspace<F>> next;
    for (const auto& lambda : detail::eigenvalue_candidates(f, ad)) {
      auto shifted = ad;
      for (std::size_t i = 0; i < n; ++i) shifted.rows[i][i] = f.sub(shifted.rows[i][i], lambda);
      auto eig = span(f, n, nullspace(f, shifted));
      if (eig.is_zero()) continue;
      for (const auto& w : spaces) {
        auto meet = subspace_intersect(w, eig);
        if (!meet.is_zero()) next.push_back(std::move(meet));
      }
    }
    spaces = std::move(next);
  }
  return spaces;
}

/// Some x != 0 with [L, x] ⊆ Fx. Finite fields enumerate projective points
/// (subject to the budget); Q uses common_eigenspaces.
template <Field F>
std::optional<Vec<F>> find_one_dim_ideal(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
  if (L.dim() == 0) return std::nullopt;
  if constexpr (FiniteField<F>) {
    for (auto& v : projective_points(L.field(), L.dim(), budget))
      if (is_ideal(L, span(L.field(), L.dim(), {v}))) return v;
    return std::nullopt;
  } else {
    (void)budget;
    auto spaces = common_eigenspaces(L);
    if (spaces.empty()) return std::nullopt;
    return spaces.front().basis().front();
  }
}

template <Field F>
struct SupersolvableResult {
  Tri verdict = Tri::unsupported;
  std::vector<Subspace<F>> flag;  // 0 = I_0 < I_1 < ... < I_n = L, dim I_k = k, all ideals of L
};

namespace detail {

template <Field F>
std::vector<Subspace<F>> central_flag(const LieAlgebra<F>& L) {
  auto rep = series(L, SeriesKind::lower_central);
  std::vector<Subspace<F>> flag{L.zero()};
  Subspace<F> cur = L.zero();
  for (auto t = rep.terms.rbegin(); t != rep.terms.rend(); ++t)
    for (const auto& v : t->basis())
      if (!cur.contains(v)) {
        auto rows = cur.basis();
        rows.push_back(v);
        cur = span(L.field(), L.dim(), std::move(rows));
        flag.push_back(cur);
      }
  return flag;
}

template <Field F>
std::optional<std::vector<Subspace<F>>> ideal_flag(const LieAlgebra<F>& L, std::uint64_t budget) {
  if (L.dim() == 0) return std::vector<Subspace<F>>{L.zero()};
  auto x = find_one_dim_ideal(L, budget);
  if (!x) return std::nullopt;
  auto line = span(L.field(), L.dim(), {*x});
  auto q = quotient_algebra(L, line);
  auto rest = ideal_flag(q.algebra, budget);
  if (!rest) return std::nullopt;
  std::vector<Subspace<F>> flag{L.zero()};
  for (const auto& t : *rest) flag.push_back(q.preimage(t));
  return flag;
}

}  // namespace detail

/// Supersolvable: a flag of ideals with one-dimensional steps. A 1-dim ideal
/// Fx is split off and the quotient handled recursively (quotients of
/// supersolvable algebras are supersolvable, so no backtracking is needed).
template <Field F>
SupersolvableResult<F> is_supersolvable(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
  if (is_nilpotent(L)) return {Tri::yes, detail::central_flag(L)};
  if (!is_solvable(L)) return {Tri::no, {}};
  try {
    auto flag = detail::ideal_flag(L, budget);
    if (!flag) return {Tri::no, {}};
    return {Tri::yes, std::move(*flag)};
  } catch (const BudgetError&) {
    return {Tri::unsupported, {}};
  }
}

/// Minimal subspace closed under ad(L) containing v.
template <Field F>
Subspace<F> spin(const LieAlgebra<F>& L, const Vec<F>& v) {
  return ideal_closure(L, span(L.field(), L.dim(), {v}), L.whole());
}

/// Minimal ideals of L: the minimal elements of {spin(v) : v != 0}.
/// Finite fields only.
template <Field F>
std::vector<Subspace<F>> minimal_ideals(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
  if constexpr (!FiniteField<F>) {
    (void)L;
    (void)budget;
    throw UnsupportedError("minimal_ideals: spinning needs a finite field");
  } else {
    std::vector<Subspace<F>> spins;
    for (const auto& v : projective_points(L.field(), L.dim(), budget)) {
      bool covered = false;
      for (const auto& s : spins)
        if (s.dim() == 1 && s.contains(v)) covered = true;
      if (covered) continue;
      auto s = spin(L, v);
      if (std::find(spins.begin(), spins.end(), s) == spins.end()) spins.push_back(std::move(s));
    }
    std::vector<Subspace<F>> out;
    for (const auto& s : spins) {
      bool minimal = std::none_of(spins.begin(), spins.end(), [&](const Subspace<F>& t) {
        return t.dim() < s.dim() && subspace_leq(t, s);
      });
      if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}

/// Simple: dim > 1 and spin(v) = L for every v != 0.
template <Field F>
Tri is_simple(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
  if (L.dim() <= 1) return Tri::no;
  if (!(product_space(L, L.whole(), L.whole()).is_full())) return Tri::no;
  if constexpr (!FiniteField<F>) {
    (void)budget;
    return Tri::unsupported;
  } else {
    try {
      for (const auto& v : projective_points(L.field(), L.dim(), budget))
        if (!spin(L, v).is_full()) return Tri::no;
      return Tri::yes;
    } catch (const BudgetError&) {
      return Tri::unsupported;
    }
  }
}

template <FiniteField F>
std::vector<Subspace<F>> collect(const LatticeCache<F>& lattice, const std::vector<std::size_t>& idx) {
  std::vector<Subspace<F>> out;
  for (auto i : idx) out.push_back(lattice[i]);
  return out;
}

template <FiniteField F>
std::vector<Subspace<F>> maximal_subalgebras(const LatticeCache<F>& lattice) {
  return collect(lattice, lattice.maximal_subalgebras());
}

template <FiniteField F>
std::vector<Subspace<F>> maximal_nilpotent_subalgebras(const LatticeCache<F>& lattice) {
  return collect(lattice, lattice.maximal_nilpotent());
}

template <FiniteField F>
std::vector<Subspace<F>> cartan_subalgebras(const LatticeCache<F>& lattice) {
  return collect(lattice, lattice.cartan());
}

/// Frattini subalgebra F(C) of the lattice element C: the intersection of
/// its maximal subalgebras (C itself when it has none).
template <FiniteField F>
Subspace<F> frattini_subalgebra(const LatticeCache<F>& lattice, std::size_t c) {
  auto out = lattice[c];
  for (auto m : lattice.maximal_below(c)) out = subspace_intersect(out, lattice[m]);
  return out;
}

template <FiniteField F>
struct FrattiniResult {
  Subspace<F> subalgebra;  // F(L)
  Subspace<F> ideal;       // phi(L) = core(F(L))
};

template <FiniteField F>
FrattiniResult<F> frattini(const LatticeCache<F>& lattice) {
  auto fl = frattini_subalgebra(lattice, lattice.whole_index());
  auto phi = core(lattice.algebra(), fl);
  return {std::move(fl), std::move(phi)};
}

// ---------------------------------------------------------------------------
// Almost abelian algebras and one-dimensional weak c-ideals

namespace detail {
// Solves [x, y] = y for every basis vector y of `target`; returns a solution
// and the homogeneous solution space.
template <Field F>
std::optional<std::pair<Vec<F>, Subspace<F>>> acts_as_identity_on(const LieAlgebra<F>& L, const Subspace<F>& target) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  Matrix<F> eqs{n, {}};
  Vec<F> rhs;
  for (const auto& y : target.basis()) {
    std::vector<Vec<F>> cols;
    for (std::size_t m = 0; m < n; ++m) cols.push_back(L.bracket(unit_vector(f, n, m), y));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> row(n, f.zero());
      for (std::size_t m = 0; m < n; ++m) row[m] = cols[m][k];
      eqs.rows.push_back(std::move(row));
      rhs.push_back(y[k]);
    }
  }
  auto x = solve(f, eqs, rhs);
  if (!x) return std::nullopt;
  return std::pair(std::move(*x), span(f, n, nullspace(f, eqs)));
}
}  // namespace detail

/// L = L^2 ⊕ Fx with L^2 abelian and [x, y] = y for all y in L^2.
template <Field F>
bool is_almost_abelian(const LieAlgebra<F>& L) {
  if (L.dim() == 0) return false;
  auto d = product_space(L, L.whole(), L.whole());
  if (d.dim() + 1 != L.dim()) return false;
  if (!product_space(L, d, d).is_zero()) return false;
  return detail::acts_as_identity_on(L, d).has_value();
}

enum class OneDimCase { case_i, case_ii, neither };

inline std::string to_string(OneDimCase c) {
  switch (c) {
    case OneDimCase::case_i: return "case-i";
    case OneDimCase::case_ii: return "case-ii";
    case OneDimCase::neither: return "neither";
  }
  return "neither";
}

template <Field F>
struct OneDimClassification {
  OneDimCase verdict = OneDimCase::neither;
  std::optional<Subspace<F>> abelian_part;   // A, case ii
  std::optional<Subspace<F>> almost_part;    // B, case ii
  Tri all_one_dim_weak_c = Tri::unsupported;
  std::optional<Subspace<F>> non_witness;    // a 1-dim subalgebra that is not a weak c-ideal
  Tri equivalence = Tri::unsupported;        // verdict != neither  <=>  all_one_dim_weak_c
};

/// Structural half of the classification; works over any field.
/// case ii: L = A ⊕ B with A an abelian and B an almost abelian ideal. Then
/// A is central, B = L^2 + Fx with [x, y] = y on L^2, and such a split
/// exists iff L^2 is abelian, x exists, and Z(L) + L^2 + Fx = L.
template <Field F>
OneDimClassification<F> structural_one_dim_case(const LieAlgebra<F>& L) {
  OneDimClassification<F> out;
  const auto& f = L.field();
  const std::size_t n = L.dim();
  auto whole = L.whole();
  auto l2 = product_space(L, whole, whole);
  if (product_space(L, whole, l2).is_zero()) {
    out.verdict = OneDimCase::case_i;
    return out;
  }
  if (!product_space(L, l2, l2).is_zero()) return out;
  auto sol = detail::acts_as_identity_on(L, l2);
  if (!sol) return out;
  auto center = centralizer(L, whole);
  auto base = subspace_sum(center, l2);
  std::optional<Vec<F>> x;
  if (!base.contains(sol->first)) {
    x = sol->first;
  } else {
    for (const auto& w : sol->second.basis())
      if (!base.contains(w)) {
        x = vec_add(f, sol->first, w);
        break;
      }
  }
  if (!x) return out;
  auto brows = l2.basis();
  brows.push_back(*x);
  auto b = span(f, n, std::move(brows));
  if (!subspace_sum(center, b).is_full()) return out;
  Subspace<F> a = L.zero();
  for (const auto& z : center.basis()) {
    if (subspace_sum(a, b).contains(z)) continue;
    auto rows = a.basis();
    rows.push_back(z);
    a = span(f, n, std::move(rows));
  }
  out.verdict = OneDimCase::case_ii;
  out.abelian_part = std::move(a);
  out.almost_part = std::move(b);
  return out;
}

/// Structural verdict plus, when a lattice is given, the exhaustive check of
/// every one-dimensional subalgebra and the resulting equivalence.
template <Field F>
OneDimClassification<F> classify_one_dim_weak_c(const LieAlgebra<F>& L) {
  return structural_one_dim_case(L);
}

template <FiniteField F>
OneDimClassification<F> classify_one_dim_weak_c(const LatticeCache<F>& lattice) {
  auto out = structural_one_dim_case(lattice.algebra());
  bool all = true;
  for (std::size_t i = 0; i < lattice.size() && all; ++i) {
    if (lattice[i].dim() != 1) continue;
    if (!is_weak_c_ideal(lattice, lattice[i])) {
      all = false;
      out.non_witness = lattice[i];
    }
  }
  out.all_one_dim_weak_c = tri(all);
  out.equivalence = tri((out.verdict != OneDimCase::neither) == all);
  return out;
}

// ---------------------------------------------------------------------------

struct StructureFlags {
  Tri nilpotent = Tri::unsupported;
  Tri solvable = Tri::unsupported;
  Tri supersolvable = Tri::unsupported;
  Tri simple = Tri::unsupported;
  Tri almost_abelian = Tri::unsupported;
};

template <Field F>
StructureFlags flags(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
  StructureFlags s;
  s.nilpotent = tri(is_nilpotent(L));
  s.solvable = tri(is_solvable(L));
  s.supersolvable = is_supersolvable(L, budget).verdict;
  s.simple = is_simple(L, budget);
  s.almost_abelian = tri(is_almost_abelian(L));
  return s;
}

}  // namespace lieideal
