#pragma once

// Exhaustive witness searches over a subalgebra lattice (finite fields only).
// Candidates are tried in canonical lattice order and the first hit wins, so
// results are deterministic.

#include <cstddef>
#include <optional>

#include "lieideal/ideals.hpp"
#include "lieideal/lattice.hpp"
#include "lieideal/liecore.hpp"

namespace lieideal {

namespace detail {
template <FiniteField F>
std::optional<std::size_t> first_complement(const LatticeCache<F>& lattice, const Subspace<F>& b,
                                            const Subspace<F>& core_b, bool ideals_only) {
  const std::size_t n = lattice.algebra().dim();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (ideals_only ? !lattice.is_ideal(i) : !lattice.is_subideal(i)) continue;
    const auto& c = lattice[i];
    if (b.dim() + c.dim() < n) continue;
    if (!sum_and_meet(b, c, core_b)) return i;
  }
  return std::nullopt;
}
}  // namespace detail

/// First subideal C (canonical order) showing B is a weak c-ideal of L.
template <FiniteField F>
std::optional<WeakCIdealCertificate<F>> find_weak_c_witness(const LatticeCache<F>& lattice, const Subspace<F>& b) {
  const auto& L = lattice.algebra();
  if (!is_subalgebra(L, b)) throw PreconditionError("find_weak_c_witness: B is not a subalgebra");
  auto core_b = core(L, b);
  auto hit = detail::first_complement(lattice, b, core_b, false);
  if (!hit) return std::nullopt;
  auto chain = subideal_chain(L, lattice[*hit]);
  return WeakCIdealCertificate<F>{b, lattice[*hit], std::move(*chain), std::move(core_b)};
}

/// First ideal C (canonical order) showing B is a c-ideal of L.
template <FiniteField F>
std::optional<CIdealCertificate<F>> find_c_witness(const LatticeCache<F>& lattice, const Subspace<F>& b) {
  const auto& L = lattice.algebra();
  if (!is_subalgebra(L, b)) throw PreconditionError("find_c_witness: B is not a subalgebra");
  auto core_b = core(L, b);
  auto hit = detail::first_complement(lattice, b, core_b, true);
  if (!hit) return std::nullopt;
  return CIdealCertificate<F>{b, lattice[*hit], std::move(core_b)};
}

template <FiniteField F>
bool is_weak_c_ideal(const LatticeCache<F>& lattice, const Subspace<F>& b) {
  return find_weak_c_witness(lattice, b).has_value();
}

template <FiniteField F>
bool is_c_ideal(const LatticeCache<F>& lattice, const Subspace<F>& b) {
  return find_c_witness(lattice, b).has_value();
}

/// K with K/B_L a subideal complement of B/B_L in L/B_L, found by searching
/// the lattice of the quotient. `quotient_lattice` must be the lattice of
/// `quotient.algebra`, and `quotient` must be L / core(B).
template <FiniteField F>
std::optional<Subspace<F>> subideal_complement_mod_core(const LieAlgebra<F>& L, const Subspace<F>& b,
                                                        const QuotientAlgebra<F>& quotient,
                                                        const LatticeCache<F>& quotient_lattice) {
  if (!is_subalgebra(L, b)) throw PreconditionError("subideal_complement_mod_core: B is not a subalgebra");
  if (!(quotient.coords.kernel() == core(L, b)))
    throw PreconditionError("subideal_complement_mod_core: quotient is not taken by core(B)");
  auto bq = quotient.project(b);
  auto zero = quotient.algebra.zero();
  auto hit = detail::first_complement(quotient_lattice, bq, zero, false);
  if (!hit) return std::nullopt;
  return quotient.preimage(quotient_lattice[*hit]);
}

template <FiniteField F>
std::optional<Subspace<F>> subideal_complement_mod_core(const LieAlgebra<F>& L, const Subspace<F>& b,
                                                        std::uint64_t budget = kDefaultBudget) {
  auto q = quotient_algebra(L, core(L, b));
  auto lattice = LatticeCache<F>::build(q.algebra, budget);
  return subideal_complement_mod_core(L, b, q, lattice);
}

/// Certificate mode: is K/B_L a subideal complement of B/B_L in L/B_L?
/// Works over any field.
template <Field F>
bool is_subideal_complement_mod_core(const LieAlgebra<F>& L, const Subspace<F>& b, const Subspace<F>& k) {
  if (!is_subalgebra(L, b) || !is_subalgebra(L, k)) return false;
  auto core_b = core(L, b);
  if (!subspace_leq(core_b, k)) return false;
  auto q = quotient_algebra(L, core_b);
  auto bq = q.project(b), kq = q.project(k);
  if (!subideal_chain(q.algebra, kq)) return false;
  return !detail::sum_and_meet(bq, kq, q.algebra.zero());
}

}  // namespace lieideal
