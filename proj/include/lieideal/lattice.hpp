#pragma once

// The lattice of all subalgebras of an algebra over a finite field, with the
// derived lists the rest of the library needs (ideals, subideals, maximal,
// nilpotent, maximal nilpotent and Cartan subalgebras). Built once, then
// read-only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lieideal/ideals.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"

namespace lieideal {

template <FiniteField F>
class LatticeCache {
 public:
  static LatticeCache build(const LieAlgebra<F>& L, std::uint64_t budget = kDefaultBudget) {
    LatticeCache lc(L);
    for (auto& s : enumerate_subspaces(L.field(), L.dim(), std::nullopt, budget))
      if (is_subalgebra(L, s)) lc.subalgebras_.push_back(std::move(s));
    const std::size_t n = lc.subalgebras_.size();
    lc.ideal_.assign(n, 0);
    lc.subideal_.assign(n, 0);
    lc.nilpotent_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = lc.subalgebras_[i];
      lc.index_.emplace(s, i);
      lc.ideal_[i] = lieideal::is_ideal(L, s);
      lc.subideal_[i] = lc.ideal_[i] || subideal_chain(L, s).has_value();
      lc.nilpotent_[i] = lieideal::is_nilpotent(L, std::optional(s));
    }
    lc.full_ = n - 1;
    lc.maximal_ = lc.maximal_below(lc.full_);
    for (std::size_t i = 0; i < n; ++i) {
      if (!lc.nilpotent_[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < n && maximal; ++j)
        if (j != i && lc.nilpotent_[j] && lc.leq(i, j)) maximal = false;
      if (maximal) lc.maximal_nilpotent_.push_back(i);
      if (normalizer(L, lc.subalgebras_[i]) == lc.subalgebras_[i]) lc.cartan_.push_back(i);
    }
    return lc;
  }

  const LieAlgebra<F>& algebra() const { return algebra_; }
  std::size_t size() const { return subalgebras_.size(); }
  const Subspace<F>& operator[](std::size_t i) const { return subalgebras_[i]; }
  const std::vector<Subspace<F>>& subalgebras() const { return subalgebras_; }

  std::optional<std::size_t> index_of(const Subspace<F>& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t whole_index() const { return full_; }
  bool is_ideal(std::size_t i) const { return ideal_[i]; }
  bool is_subideal(std::size_t i) const { return subideal_[i]; }
  bool is_nilpotent(std::size_t i) const { return nilpotent_[i]; }

  bool leq(std::size_t i, std::size_t j) const {
    return subalgebras_[i].dim() <= subalgebras_[j].dim() && subspace_leq(subalgebras_[i], subalgebras_[j]);
  }

  std::vector<std::size_t> ideals() const { return filter(ideal_); }
  std::vector<std::size_t> subideals() const { return filter(subideal_); }
  std::vector<std::size_t> nilpotent() const { return filter(nilpotent_); }
  const std::vector<std::size_t>& maximal_subalgebras() const { return maximal_; }
  const std::vector<std::size_t>& maximal_nilpotent() const { return maximal_nilpotent_; }
  const std::vector<std::size_t>& cartan() const { return cartan_; }

  /// Maximal subalgebras of the subalgebra with index k: maximal elements
  /// among the proper subalgebras of L contained in it.
  std::vector<std::size_t> maximal_below(std::size_t k) const {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != k && leq(i, k)) below.push_back(i);
    std::vector<std::size_t> out;
    for (auto i : below) {
      bool maximal = true;
      for (auto j : below)
        if (j != i && subalgebras_[j].dim() > subalgebras_[i].dim() && leq(i, j)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(i);
    }
    return out;
  }

  /// Number of subalgebras of each dimension 0..dim L.
  std::vector<std::size_t> counts_by_dim() const {
    std::vector<std::size_t> out(algebra_.dim() + 1, 0);
    for (const auto& s : subalgebras_) ++out[s.dim()];
    return out;
  }

 private:
  explicit LatticeCache(const LieAlgebra<F>& L) : algebra_(L) {}

  std::vector<std::size_t> filter(const std::vector<char>& flag) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < flag.size(); ++i)
      if (flag[i]) out.push_back(i);
    return out;
  }

  LieAlgebra<F> algebra_;
  std::vector<Subspace<F>> subalgebras_;
  std::map<Subspace<F>, std::size_t> index_;
  std::vector<char> ideal_, subideal_, nilpotent_;
  std::size_t full_ = 0;
  std::vector<std::size_t> maximal_, maximal_nilpotent_, cartan_;
};

}  // namespace lieideal
