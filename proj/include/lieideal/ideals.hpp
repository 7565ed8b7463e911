#pragma once

// Core of a subalgebra, ideal closures, subideal chains, and certificates
// for c-ideals and weak c-ideals.
//
// B is a weak c-ideal of L when some subideal C of L has L = B + C and
// B ∩ C contained in the core B_L (the largest ideal of L inside B). With C
// required to be an ideal this is a c-ideal. Certificates carry everything
// needed to re-check the claim without any search.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieideal/error.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"

namespace lieideal {

/// B_L: the descending fixed point B_0 = B, B_{i+1} = {x in B_i : [L, x] ⊆ B_i}.
template <Field F>
Subspace<F> core(const LieAlgebra<F>& L, const Subspace<F>& b) {
  if (!is_subalgebra(L, b)) throw PreconditionError("core: subspace is not a subalgebra");
  const auto& f = L.field();
  const std::size_t n = L.dim();
  Subspace<F> cur = b;
  while (!cur.is_zero()) {
    QuotientCoordinates<F> q(cur);
    const auto& basis = cur.basis();
    Matrix<F> eqs{basis.size(), {}};
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<Vec<F>> images;
      for (const auto& y : basis) images.push_back(q.project(L.bracket(unit_vector(f, n, m), y)));
      for (std::size_t k = 0; k < q.quotient_dim(); ++k) {
        Vec<F> row(basis.size(), f.zero());
        for (std::size_t r = 0; r < basis.size(); ++r) row[r] = images[r][k];
        eqs.rows.push_back(std::move(row));
      }
    }
    std::vector<Vec<F>> kept;
    for (const auto& a : nullspace(f, std::move(eqs))) kept.push_back(cur.combine(a));
    auto next = span(f, n, std::move(kept));
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return cur;
}

/// Smallest ideal of the subalgebra K containing B: fixed point of U -> U + [K, U].
template <Field F>
Subspace<F> ideal_closure(const LieAlgebra<F>& L, const Subspace<F>& b, const Subspace<F>& k) {
  if (!subspace_leq(b, k)) throw PreconditionError("ideal_closure: B is not contained in K");
  // spin: bracket each newly added vector with K's basis
  std::vector<Vec<F>> pending = b.basis();
  Subspace<F> u = b;
  while (!pending.empty()) {
    auto w = std::move(pending.back());
    pending.pop_back();
    for (const auto& x : k.basis()) {
      auto z = u.reduce(L.bracket(x, w));
      if (is_zero_vector(L.field(), z)) continue;
      std::vector<Vec<F>> rows = u.basis();
      rows.push_back(z);
      u = span(L.field(), L.dim(), std::move(rows));
      pending.push_back(std::move(z));
    }
  }
  return u;
}

/// I_0 < I_1 < ... < I_n = L with each I_j an ideal of I_{j+1}.
template <Field F>
struct SubidealChain {
  std::vector<Subspace<F>> terms;

  const Subspace<F>& bottom() const { return terms.front(); }
  std::size_t length() const { return terms.size() - 1; }
};

/// Term-by-term check of a chain: strictly increasing subalgebras, each an
/// ideal of the next, ending at L. Returns the reason on failure.
template <Field F>
std::optional<std::string> chain_defect(const LieAlgebra<F>& L, const SubidealChain<F>& chain) {
  if (chain.terms.empty()) return "empty chain";
  if (!chain.terms.back().is_full() || chain.terms.back().ambient_dim() != L.dim())
    return "last term is not L";
  for (std::size_t j = 0; j < chain.terms.size(); ++j) {
    if (!is_subalgebra(L, chain.terms[j])) return "term " + std::to_string(j) + " is not a subalgebra";
    if (j + 1 == chain.terms.size()) break;
    const auto& lo = chain.terms[j];
    const auto& hi = chain.terms[j + 1];
    if (lo.dim() >= hi.dim() || !subspace_leq(lo, hi))
      return "term " + std::to_string(j) + " is not strictly below term " + std::to_string(j + 1);
    if (!is_ideal_in(L, lo, hi))
      return "term " + std::to_string(j) + " is not an ideal of term " + std::to_string(j + 1);
  }
  return std::nullopt;
}

/// Decides subideality with the standard series K_0 = L,
/// K_{i+1} = ideal_closure(B, K_i). Returns the (validated) chain when the
/// series stabilises at B, nothing otherwise. The zero subalgebra and L
/// itself are always subideals.
template <Field F>
std::optional<SubidealChain<F>> subideal_chain(const LieAlgebra<F>& L, const Subspace<F>& b) {
  if (!is_subalgebra(L, b)) throw PreconditionError("subideal_chain: subspace is not a subalgebra");
  std::vector<Subspace<F>> desc{L.whole()};
  while (true) {
    auto next = ideal_closure(L, b, desc.back());
    if (next.dim() == desc.back().dim()) break;
    desc.push_back(std::move(next));
  }
  if (!(desc.back() == b)) return std::nullopt;
  SubidealChain<F> chain{{desc.rbegin(), desc.rend()}};
  if (auto bad = chain_defect(L, chain)) throw Error("internal: standard series produced a bad chain: " + *bad);
  return chain;
}

template <Field F>
bool is_subideal(const LieAlgebra<F>& L, const Subspace<F>& b) {
  return subideal_chain(L, b).has_value();
}

enum class CertificateFailure {
  b_not_subalgebra,
  c_not_subalgebra,
  c_not_subideal,
  c_not_ideal,
  sum_not_whole,
  intersection_outside_core,
  bad_chain,
  wrong_core,
};

inline std::string to_string(CertificateFailure f) {
  switch (f) {
    case CertificateFailure::b_not_subalgebra: return "B is not a subalgebra";
    case CertificateFailure::c_not_subalgebra: return "C is not a subalgebra";
    case CertificateFailure::c_not_subideal: return "C is not a subideal";
    case CertificateFailure::c_not_ideal: return "C is not an ideal";
    case CertificateFailure::sum_not_whole: return "B + C != L";
    case CertificateFailure::intersection_outside_core: return "B ∩ C is not contained in core(B)";
    case CertificateFailure::bad_chain: return "subideal chain does not validate";
    case CertificateFailure::wrong_core: return "stated core differs from core(B)";
  }
  return "unknown";
}

template <Field F>
struct WeakCIdealCertificate {
  Subspace<F> b;
  Subspace<F> c;
  SubidealChain<F> chain;  // chain.bottom() == c
  Subspace<F> core_b;
};

template <Field F>
struct CIdealCertificate {
  Subspace<F> b;
  Subspace<F> c;
  Subspace<F> core_b;
};

/// Either a certificate or the first condition that failed.
template <class Cert>
struct CheckOutcome {
  std::optional<Cert> certificate;
  std::optional<CertificateFailure> failure;

  explicit operator bool() const { return certificate.has_value(); }
};

namespace detail {
// L = B + C and B ∩ C ⊆ core.
template <Field F>
std::optional<CertificateFailure> sum_and_meet(const Subspace<F>& b, const Subspace<F>& c,
                                               const Subspace<F>& core_b) {
  if (b.dim() + c.dim() < b.ambient_dim() || !subspace_sum(b, c).is_full())
    return CertificateFailure::sum_not_whole;
  if (!subspace_leq(subspace_intersect(b, c), core_b)) return CertificateFailure::intersection_outside_core;
  return std::nullopt;
}
}  // namespace detail

/// Checks whether C witnesses that B is a weak c-ideal of L.
template <Field F>
CheckOutcome<WeakCIdealCertificate<F>> verify_weak_c(const LieAlgebra<F>& L, const Subspace<F>& b,
                                                     const Subspace<F>& c) {
  if (!is_subalgebra(L, b)) return {std::nullopt, CertificateFailure::b_not_subalgebra};
  if (!is_subalgebra(L, c)) return {std::nullopt, CertificateFailure::c_not_subalgebra};
  auto chain = subideal_chain(L, c);
  if (!chain) return {std::nullopt, CertificateFailure::c_not_subideal};
  auto core_b = core(L, b);
  if (auto bad = detail::sum_and_meet(b, c, core_b)) return {std::nullopt, bad};
  return {WeakCIdealCertificate<F>{b, c, std::move(*chain), std::move(core_b)}, std::nullopt};
}

/// Checks whether the ideal C witnesses that B is a c-ideal of L.
template <Field F>
CheckOutcome<CIdealCertificate<F>> verify_c(const LieAlgebra<F>& L, const Subspace<F>& b, const Subspace<F>& c) {
  if (!is_subalgebra(L, b)) return {std::nullopt, CertificateFailure::b_not_subalgebra};
  if (!is_ideal(L, c)) return {std::nullopt, CertificateFailure::c_not_ideal};
  auto core_b = core(L, b);
  if (auto bad = detail::sum_and_meet(b, c, core_b)) return {std::nullopt, bad};
  return {CIdealCertificate<F>{b, c, std::move(core_b)}, std::nullopt};
}

/// Re-validates a weak c-ideal certificate as given, trusting none of its parts.
template <Field F>
std::optional<CertificateFailure> certificate_defect(const LieAlgebra<F>& L, const WeakCIdealCertificate<F>& cert) {
  if (!is_subalgebra(L, cert.b)) return CertificateFailure::b_not_subalgebra;
  if (cert.chain.terms.empty() || !(cert.chain.bottom() == cert.c) || chain_defect(L, cert.chain))
    return CertificateFailure::bad_chain;
  if (!(core(L, cert.b) == cert.core_b)) return CertificateFailure::wrong_core;
  return detail::sum_and_meet(cert.b, cert.c, cert.core_b);
}

template <Field F>
std::optional<CertificateFailure> certificate_defect(const LieAlgebra<F>& L, const CIdealCertificate<F>& cert) {
  if (!is_subalgebra(L, cert.b)) return CertificateFailure::b_not_subalgebra;
  if (!is_ideal(L, cert.c)) return CertificateFailure::c_not_ideal;
  if (!(core(L, cert.b) == cert.core_b)) return CertificateFailure::wrong_core;
  return detail::sum_and_meet(cert.b, cert.c, cert.core_b);
}

/// Every ideal is a subideal: C < L (or just L) is a chain.
template <Field F>
WeakCIdealCertificate<F> as_weak_c(const CIdealCertificate<F>& cert) {
  SubidealChain<F> chain{{cert.c}};
  if (!cert.c.is_full()) chain.terms.push_back(Subspace<F>::full(cert.c.field(), cert.c.ambient_dim()));
  return {cert.b, cert.c, std::move(chain), cert.core_b};
}

/// Smallest k >= 1 with the k-th series term inside K, or nothing when the
/// series never enters K.
template <Field F>
std::optional<std::size_t> min_power_in(const LieAlgebra<F>& L, const Subspace<F>& k, SeriesKind kind) {
  auto rep = series(L, kind);
  for (std::size_t t = 0; t < rep.terms.size(); ++t)
    if (subspace_leq(rep.terms[t], k)) return t + 1;
  return std::nullopt;
}

}  // namespace lieideal
