#pragma once

// Exact dense linear algebra and canonical subspaces.
//
// A Subspace is stored as the reduced row echelon form of a basis with no
// zero rows. RREF is unique, so subspace equality is plain value equality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"

namespace lieideal {

template <Field F>
using Vec = std::vector<typename F::value_type>;

/// Default cap on the number of subspaces an exhaustive enumeration may emit.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

template <Field F>
Vec<F> zero_vector(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <Field F>
Vec<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <Field F>
bool is_zero_vector(const F& f, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& a) { return f.is_zero(a); });
}

/// y += a * x
template <Field F>
void axpy(const F& f, Vec<F>& y, const typename F::value_type& a, const Vec<F>& x) {
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

template <Field F>
Vec<F> scaled(const F& f, const typename F::value_type& a, Vec<F> v) {
  for (auto& x : v) x = f.mul(a, x);
  return v;
}

template <Field F>
Vec<F> vec_add(const F& f, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

template <Field F>
Vec<F> vec_sub(const F& f, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return a;
}

/// Dense row-major matrix; rows are stored as vectors of length cols.
template <Field F>
struct Matrix {
  std::size_t cols = 0;
  std::vector<Vec<F>> rows;

  std::size_t row_count() const { return rows.size(); }
};

namespace detail {

// In-place RREF of `rows` (each of length cols). Zero rows are dropped.
// Returns the pivot column of each remaining row.
template <Field F>
std::vector<std::size_t> rref_rows(const F& f, std::vector<Vec<F>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && f.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (rows[r][c] != f.one()) {
      auto inv = f.div(f.one(), rows[r][c]);
      for (std::size_t j = c; j < cols; ++j) rows[r][j] = f.mul(inv, rows[r][j]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      auto factor = f.neg(rows[i][c]);
      for (std::size_t j = c; j < cols; ++j)
        if (!f.is_zero(rows[r][j])) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

/// Unique reduced row echelon form; zero rows are removed.
template <Field F>
Matrix<F> rref(const F& f, Matrix<F> m) {
  detail::rref_rows(f, m.rows, m.cols);
  return m;
}

/// Basis of {x : A x = 0}, one vector per free column of rref(A).
template <Field F>
std::vector<Vec<F>> nullspace(const F& f, Matrix<F> a) {
  auto pivots = detail::rref_rows(f, a.rows, a.cols);
  std::vector<char> is_pivot(a.cols, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> x(a.cols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(a.rows[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Some x with A x = b, or nothing when the system is inconsistent.
template <Field F>
std::optional<Vec<F>> solve(const F& f, const Matrix<F>& a, const Vec<F>& b) {
  if (b.size() != a.rows.size()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix<F> aug{a.cols + 1, {}};
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    auto row = a.rows[i];
    row.push_back(b[i]);
    aug.rows.push_back(std::move(row));
  }
  auto pivots = detail::rref_rows(f, aug.rows, aug.cols);
  if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
  Vec<F> x(a.cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.rows[r][a.cols];
  return x;
}

/// A subspace of F^n in canonical (RREF) form.
template <Field F>
class Subspace {
 public:
  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace zero(const F& f, std::size_t n) { return Subspace(f, n); }
  static Subspace full(const F& f, std::size_t n) {
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(f, n, i));
    return span(f, n, std::move(rows));
  }

  static Subspace span(const F& f, std::size_t n, std::vector<Vec<F>> vectors) {
    for (const auto& v : vectors)
      if (v.size() != n)
        throw DimensionError("span: vector of length " + std::to_string(v.size()) +
                             " in ambient dimension " + std::to_string(n));
    Subspace s(f, n);
    s.pivots_ = detail::rref_rows(f, vectors, n);
    s.rows_ = std::move(vectors);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the basis; zero at every pivot column.
  Vec<F> reduce(Vec<F> v) const {
    check_length(v.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto c = v[pivots_[r]];
      if (!field_.is_zero(c)) axpy(field_, v, field_.neg(c), rows_[r]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vector(field_, reduce(v)); }

  /// Coordinates of v (assumed in the subspace) with respect to the basis.
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c;
    c.reserve(rows_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// Sum over r of coords[r] * basis[r].
  Vec<F> combine(const Vec<F>& coords) const {
    Vec<F> v(ambient_, field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy(field_, v, coords[r], rows_[r]);
    return v;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

  /// Canonical order: by dimension, then lexicographically on the RREF rows.
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    return a.rows_ < b.rows_;
  }

  void check_length(std::size_t n) const {
    if (n != ambient_)
      throw DimensionError("vector of length " + std::to_string(n) + " in ambient dimension " +
                           std::to_string(ambient_));
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
Subspace<F> span(const F& f, std::size_t n, std::vector<Vec<F>> vectors) {
  return Subspace<F>::span(f, n, std::move(vectors));
}

namespace detail {
template <Field F>
void check_same_ambient(const Subspace<F>& u, const Subspace<F>& v, const char* what) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionError(std::string(what) + ": ambient dimensions " +
                         std::to_string(u.ambient_dim()) + " and " + std::to_string(v.ambient_dim()));
}
}  // namespace detail

template <Field F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "subspace_sum");
  if (v.is_zero()) return u;
  if (u.is_zero()) return v;
  auto rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return span(u.field(), u.ambient_dim(), std::move(rows));
}

template <Field F>
bool subspace_leq(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "subspace_leq");
  if (u.dim() > v.dim()) return false;
  return std::all_of(u.basis().begin(), u.basis().end(),
                     [&](const Vec<F>& r) { return v.contains(r); });
}

template <Field F>
bool subspace_contains(const Subspace<F>& u, const Vec<F>& v) {
  return u.contains(v);
}

/// U ∩ V from the kernel of the stacked basis: (a, b) with aU + bV = 0
/// gives the common vector aU.
template <Field F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v) {
  detail::check_same_ambient(u, v, "subspace_intersect");
  const auto& f = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace<F>::zero(f, n);
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  const std::size_t du = u.dim(), dv = v.dim();
  // columns index the stacked rows; equations are the n coordinates
  Matrix<F> stacked{du + dv, std::vector<Vec<F>>(n, Vec<F>(du + dv, f.zero()))};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < du; ++r) stacked.rows[k][r] = u.basis()[r][k];
    for (std::size_t r = 0; r < dv; ++r) stacked.rows[k][du + r] = v.basis()[r][k];
  }
  std::vector<Vec<F>> common;
  for (const auto& kv : nullspace(f, std::move(stacked))) {
    Vec<F> a(kv.begin(), kv.begin() + static_cast<std::ptrdiff_t>(du));
    common.push_back(u.combine(a));
  }
  return span(f, n, std::move(common));
}

/// Quotient coordinates for F^n / U: the complement is spanned by the unit
/// vectors at the non-pivot columns of U.
template <Field F>
class QuotientCoordinates {
 public:
  explicit QuotientCoordinates(Subspace<F> kernel) : kernel_(std::move(kernel)) {
    std::vector<char> is_pivot(kernel_.ambient_dim(), 0);
    for (auto p : kernel_.pivots()) is_pivot[p] = 1;
    for (std::size_t c = 0; c < kernel_.ambient_dim(); ++c)
      if (!is_pivot[c]) free_.push_back(c);
  }

  const Subspace<F>& kernel() const { return kernel_; }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  std::size_t quotient_dim() const { return free_.size(); }
  const std::vector<std::size_t>& complement_columns() const { return free_; }

  Vec<F> project(const Vec<F>& v) const {
    auto r = kernel_.reduce(v);
    Vec<F> w;
    w.reserve(free_.size());
    for (auto c : free_) w.push_back(r[c]);
    return w;
  }

  Vec<F> lift(const Vec<F>& w) const {
    if (w.size() != free_.size()) throw DimensionError("lift: quotient vector length mismatch");
    Vec<F> v(ambient_dim(), kernel_.field().zero());
    for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = w[i];
    return v;
  }

  /// Image of a subspace of F^n in the quotient.
  Subspace<F> project(const Subspace<F>& s) const {
    std::vector<Vec<F>> rows;
    for (const auto& b : s.basis()) rows.push_back(project(b));
    return span(kernel_.field(), quotient_dim(), std::move(rows));
  }

  /// Full preimage of a quotient subspace: lift(S) + U.
  Subspace<F> preimage(const Subspace<F>& s) const {
    std::vector<Vec<F>> rows = kernel_.basis();
    for (const auto& b : s.basis()) rows.push_back(lift(b));
    return span(kernel_.field(), ambient_dim(), std::move(rows));
  }

  std::vector<Vec<F>> complement_basis() const {
    std::vector<Vec<F>> out;
    for (auto c : free_) out.push_back(unit_vector(kernel_.field(), ambient_dim(), c));
    return out;
  }

  /// (n - dim U) x n matrix; column j is project(e_j).
  Matrix<F> projection_matrix() const {
    const auto& f = kernel_.field();
    Matrix<F> m{ambient_dim(), std::vector<Vec<F>>(free_.size(), Vec<F>(ambient_dim(), f.zero()))};
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      auto col = project(unit_vector(f, ambient_dim(), j));
      for (std::size_t i = 0; i < col.size(); ++i) m.rows[i][j] = col[i];
    }
    return m;
  }

  /// n x (n - dim U) matrix; column i is lift(e_i).
  Matrix<F> lift_matrix() const {
    const auto& f = kernel_.field();
    Matrix<F> m{free_.size(), std::vector<Vec<F>>(ambient_dim(), Vec<F>(free_.size(), f.zero()))};
    for (std::size_t i = 0; i < free_.size(); ++i) m.rows[free_[i]][i] = f.one();
    return m;
  }

 private:
  Subspace<F> kernel_;
  std::vector<std::size_t> free_;
};

template <Field F>
QuotientCoordinates<F> quotient_coordinates(const Subspace<F>& u) {
  return QuotientCoordinates<F>(u);
}

// ---------------------------------------------------------------------------
// Enumeration over finite fields

/// Gaussian binomial coefficient [n choose k]_q.
inline BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= BigInt(boost::multiprecision::pow(BigInt(q), n - i)) - 1;
    den *= BigInt(boost::multiprecision::pow(BigInt(q), i + 1)) - 1;
  }
  return num / den;
}

/// Number of subspaces of GF(q)^n, optionally of one dimension only.
inline BigInt subspace_count(unsigned n, unsigned q, std::optional<unsigned> dim = std::nullopt) {
  if (dim) return gaussian_binomial(n, *dim, q);
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

inline void check_budget(const BigInt& count, std::uint64_t budget, const std::string& what) {
  if (count > budget)
    throw BudgetError(what + " needs " + count.str() + " items, over the enumeration budget of " +
                      std::to_string(budget));
}

namespace detail {

// Visits every RREF k x n matrix with the given pivot columns.
template <Field F>
void for_each_rref_with_pivots(const F& f, std::size_t n, const std::vector<std::size_t>& pivots,
                               const std::function<void(std::vector<Vec<F>>&&)>& emit) {
  const std::size_t k = pivots.size();
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.emplace_back(r, c);
  const auto elems = f.elements();
  std::vector<std::size_t> digit(free_slots.size(), 0);
  while (true) {
    std::vector<Vec<F>> rows(k, Vec<F>(n, f.zero()));
    for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = f.one();
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      rows[free_slots[s].first][free_slots[s].second] = elems[digit[s]];
    emit(std::move(rows));
    std::size_t s = 0;
    while (s < digit.size() && ++digit[s] == elems.size()) digit[s++] = 0;
    if (s == digit.size()) break;
  }
}

}  // namespace detail

/// Every subspace of GF(q)^n (or only those of dimension *dim), each once,
/// in canonical order. Generated per pivot pattern, so no duplicates arise.
template <FiniteField F>
std::vector<Subspace<F>> enumerate_subspaces(const F& f, std::size_t n,
                                             std::optional<std::size_t> dim = std::nullopt,
                                             std::uint64_t budget = kDefaultBudget) {
  const unsigned q = f.modulus();
  check_budget(subspace_count(static_cast<unsigned>(n), q,
                              dim ? std::optional<unsigned>(static_cast<unsigned>(*dim)) : std::nullopt),
               budget, "subspace enumeration of GF(" + std::to_string(q) + ")^" + std::to_string(n));
  std::vector<Subspace<F>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (dim && *dim != k) continue;
    std::vector<Subspace<F>> layer;
    // pivot column sets of size k, lexicographic
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
      detail::for_each_rref_with_pivots<F>(f, n, pivots, [&](std::vector<Vec<F>>&& rows) {
        layer.push_back(Subspace<F>::span(f, n, std::move(rows)));
      });
      if (k == 0) break;
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

/// Representatives of the one-dimensional subspaces of GF(q)^n: nonzero
/// vectors whose first nonzero entry is 1, in lexicographic order.
template <FiniteField F>
std::vector<Vec<F>> projective_points(const F& f, std::size_t n, std::uint64_t budget = kDefaultBudget) {
  check_budget(gaussian_binomial(static_cast<unsigned>(n), 1, f.modulus()), budget,
               "projective point enumeration");
  std::vector<Vec<F>> out;
  for (auto& s : enumerate_subspaces(f, n, std::size_t{1}, budget)) out.push_back(s.basis().front());
  return out;
}

}  // namespace lieideal
