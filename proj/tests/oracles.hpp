#pragma once

// Brute-force reference implementations for small algebras over GF(p).
// A subspace is the sorted set of codes of all its vectors (base-p digits),
// so nothing here goes through row reduction. Only the structure constants
// are shared with the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "lieideal/lieideal.hpp"

namespace oracle {

using lieideal::LieAlgebra;
using lieideal::PrimeField;
using lieideal::Subspace;
using lieideal::Vec;

using Set = std::vector<std::uint32_t>;  // sorted codes

class Brute {
 public:
  explicit Brute(const LieAlgebra<PrimeField>& L) : L_(L), p_(L.field().modulus()), n_(L.dim()) {
    size_ = 1;
    for (std::size_t i = 0; i < n_; ++i) size_ *= p_;
    bracket_.assign(static_cast<std::size_t>(size_) * size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b) bracket_[a * size_ + b] = encode(L.bracket(decode(a), decode(b)));
  }

  std::uint32_t size() const { return size_; }
  std::size_t dim() const { return n_; }

  Vec<PrimeField> decode(std::uint32_t c) const {
    Vec<PrimeField> v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = c % p_;
      c /= p_;
    }
    return v;
  }
  std::uint32_t encode(const Vec<PrimeField>& v) const {
    std::uint32_t c = 0;
    for (std::size_t i = n_; i-- > 0;) c = c * p_ + v[i];
    return c;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t c = 0, m = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      c += ((a % p_ + b % p_) % p_) * m;
      a /= p_;
      b /= p_;
      m *= p_;
    }
    return c;
  }
  std::uint32_t bracket(std::uint32_t a, std::uint32_t b) const { return bracket_[a * size_ + b]; }

  Set to_set(const Subspace<PrimeField>& s) const {
    Set out{0};
    for (const auto& v : s.basis()) out = closure_add(out, encode(v));
    return out;
  }
  Subspace<PrimeField> to_subspace(const Set& s) const {
    std::vector<Vec<PrimeField>> rows;
    for (auto c : s) rows.push_back(decode(c));
    return lieideal::span(L_.field(), n_, std::move(rows));
  }

  /// Linear span of s and v, by repeated addition.
  Set closure_add(const Set& s, std::uint32_t v) const {
    std::set<std::uint32_t> out(s.begin(), s.end());
    std::uint32_t m = v;
    for (std::uint32_t k = 1; k < p_; ++k) {
      for (auto x : s) out.insert(add(x, m));
      m = add(m, v);
    }
    return {out.begin(), out.end()};
  }

  /// Every subspace, found by closing {0} under adding vectors.
  std::vector<Set> all_subspaces() const {
    std::set<Set> seen{Set{0}};
    std::vector<Set> frontier{Set{0}};
    while (!frontier.empty()) {
      std::vector<Set> next;
      for (const auto& s : frontier)
        for (std::uint32_t v = 1; v < size_; ++v) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          auto t = closure_add(s, v);
          if (seen.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  static bool contains(const Set& s, std::uint32_t v) { return std::binary_search(s.begin(), s.end(), v); }
  static bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
  static Set meet(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  Set join(const Set& a, const Set& b) const {
    std::set<std::uint32_t> out;
    for (auto x : a)
      for (auto y : b) out.insert(add(x, y));
    return {out.begin(), out.end()};
  }
  Set whole() const {
    Set out(size_);
    for (std::uint32_t i = 0; i < size_; ++i) out[i] = i;
    return out;
  }

  /// [a, b] ⊆ c for all elements.
  bool brackets_into(const Set& a, const Set& b, const Set& c) const {
    for (auto x : a)
      for (auto y : b)
        if (!contains(c, bracket(x, y))) return false;
    return true;
  }
  bool is_subalgebra(const Set& s) const { return brackets_into(s, s, s); }
  bool is_ideal_in(const Set& i, const Set& k) const { return subset(i, k) && brackets_into(k, i, i); }
  bool is_ideal(const Set& i) const { return brackets_into(whole(), i, i); }

  std::vector<Set> subalgebras() const {
    std::vector<Set> out;
    for (auto& s : all_subspaces())
      if (is_subalgebra(s)) out.push_back(std::move(s));
    return out;
  }

  /// Largest ideal inside b: the union-closure of all ideals inside b.
  Set core(const Set& b, const std::vector<Set>& subs) const {
    Set best{0};
    for (const auto& s : subs)
      if (subset(s, b) && is_ideal(s) && s.size() > best.size()) best = s;
    return best;
  }

  /// Depth-first search for a chain b = C_0 < C_1 < ... < L of subalgebras,
  /// each an ideal of the next.
  bool is_subideal(const Set& b, const std::vector<Set>& subs) const {
    if (b.size() == size_) return true;
    std::set<Set> dead;
    std::function<bool(const Set&)> dfs = [&](const Set& c) {
      if (c.size() == size_) return true;
      if (dead.count(c)) return false;
      for (const auto& d : subs)
        if (d.size() > c.size() && is_ideal_in(c, d) && dfs(d)) return true;
      dead.insert(c);
      return false;
    };
    return dfs(b);
  }

  bool is_weak_c(const Set& b, const std::vector<Set>& subs, bool ideals_only) const {
    auto cb = core(b, subs);
    for (const auto& c : subs) {
      if (ideals_only ? !is_ideal(c) : !is_subideal(c, subs)) continue;
      if (join(b, c).size() == size_ && subset(meet(b, c), cb)) return true;
    }
    return false;
  }

  /// A chain of ideals of L with one dimension per step.
  bool has_ideal_flag(const std::vector<Set>& subs) const {
    std::vector<Set> ideals;
    for (const auto& s : subs)
      if (is_ideal(s)) ideals.push_back(s);
    std::function<bool(const Set&)> dfs = [&](const Set& c) {
      if (c.size() == size_) return true;
      for (const auto& d : ideals)
        if (d.size() == c.size() * p_ && subset(c, d) && dfs(d)) return true;
      return false;
    };
    return dfs(Set{0});
  }

  /// Nilpotent: the lower central series, computed on element sets.
  bool nilpotent(const Set& s) const {
    auto cur = s;
    while (true) {
      Set next{0};
      for (auto x : s)
        for (auto y : cur) next = contains(next, bracket(x, y)) ? next : closure_add(next, bracket(x, y));
      if (next.size() == 1) return true;
      if (next.size() == cur.size()) return false;
      cur = std::move(next);
    }
  }

 private:
  const LieAlgebra<PrimeField>& L_;
  std::uint32_t p_;
  std::size_t n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> bracket_;
};

/// Number of subspaces of GF(q)^n, counted by a recurrence independent of
/// the library: G(n,k) = G(n-1,k-1) + q^k G(n-1,k).
inline std::uint64_t subspace_total(unsigned n, unsigned q) {
  std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (unsigned m = 0; m <= n; ++m) {
    g[m][0] = 1;
    std::uint64_t qk = 1;
    for (unsigned k = 1; k <= m; ++k) {
      qk *= q;
      g[m][k] = g[m - 1][k - 1] + (k <= m - 1 ? qk * g[m - 1][k] : 0);
    }
  }
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= n; ++k) total += g[n][k];
  return total;
}

}  // namespace oracle
