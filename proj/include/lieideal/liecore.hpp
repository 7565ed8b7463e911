#pragma once

// Lie algebras given by structure constants, and the basic constructions on
// them: brackets of subspaces, closures, derived and lower central series,
// centralizers, normalizers, quotients and restriction to a subalgebra.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"
#include "lieideal/linspace.hpp"

namespace lieideal {

/// Jacobi identity fails for the basis triple (i, j, k) (zero-based).
class JacobiError : public Error {
 public:
  JacobiError(std::size_t i, std::size_t j, std::size_t k, std::vector<std::string> residual)
      : Error(make_message(i, j, k, residual)), i_(i), j_(j), k_(k), residual_(std::move(residual)) {}

  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  const std::vector<std::string>& residual() const { return residual_; }

 private:
  static std::string make_message(std::size_t i, std::size_t j, std::size_t k,
                                  const std::vector<std::string>& residual) {
    std::string msg = "Jacobi identity fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "," + std::to_string(k + 1) + "): residual (";
    for (std::size_t t = 0; t < residual.size(); ++t) msg += (t ? ", " : "") + residual[t];
    return msg + ")";
  }
  std::size_t i_, j_, k_;
  std::vector<std::string> residual_;
};

/// A finite-dimensional Lie algebra on F^n. Only [e_i, e_j] for i < j is
/// stored; the other entries follow from antisymmetry.
template <Field F>
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i, j;
    Vec<F> value;
  };

  /// Builds and validates an algebra. `brackets` may name (i, j) in either
  /// order, at most once per unordered pair; [e_i, e_i] must be zero.
  static LieAlgebra create(const F& f, std::size_t dim, const std::vector<Bracket>& brackets,
                           std::vector<std::string> labels = {}) {
    LieAlgebra alg = unchecked(f, dim, brackets, std::move(labels));
    if (auto bad = alg.first_jacobi_failure()) {
      auto [i, j, k] = *bad;
      std::vector<std::string> res;
      for (const auto& a : alg.jacobi_residual(i, j, k)) res.push_back(f.to_string(a));
      throw JacobiError(i, j, k, std::move(res));
    }
    return alg;
  }

  /// Builds without the Jacobi check (antisymmetry and shapes are still enforced).
  static LieAlgebra unchecked(const F& f, std::size_t dim, const std::vector<Bracket>& brackets,
                              std::vector<std::string> labels = {}) {
    LieAlgebra alg(f, dim);
    if (labels.empty())
      for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    if (labels.size() != dim) throw DimensionError("label count does not match dimension");
    alg.labels_ = std::move(labels);
    std::vector<char> seen(alg.table_.size(), 0);
    for (const auto& b : brackets) {
      if (b.i >= dim || b.j >= dim) throw DimensionError("bracket index out of range");
      if (b.value.size() != dim) throw DimensionError("bracket value has wrong length");
      if (b.i == b.j) {
        if (!is_zero_vector(f, b.value))
          throw PreconditionError("[" + alg.labels_[b.i] + "," + alg.labels_[b.i] +
                                  "] must be zero (antisymmetry)");
        continue;
      }
      auto lo = std::min(b.i, b.j), hi = std::max(b.i, b.j);
      auto idx = alg.index(lo, hi);
      if (seen[idx])
        throw PreconditionError("duplicate bracket [" + alg.labels_[lo] + "," + alg.labels_[hi] + "]");
      seen[idx] = 1;
      alg.table_[idx] = b.i < b.j ? b.value : scaled(f, f.neg(f.one()), b.value);
    }
    alg.refresh_support();
    return alg;
  }

  static LieAlgebra abelian(const F& f, std::size_t dim) { return create(f, dim, {}); }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] for i < j.
  const Vec<F>& structure(std::size_t i, std::size_t j) const { return table_[index(i, j)]; }

  Vec<F> basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(field_, dim_);
    if (i < j) return structure(i, j);
    return scaled(field_, field_.neg(field_.one()), structure(j, i));
  }

  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket: vector length mismatch");
    Vec<F> out(dim_, field_.zero());
    for (auto [i, j] : support_) {
      auto c = field_.sub(field_.mul(x[i], y[j]), field_.mul(x[j], y[i]));
      if (!field_.is_zero(c)) axpy(field_, out, c, table_[index(i, j)]);
    }
    return out;
  }

  /// Matrix of ad(x): column j is [x, e_j].
  Matrix<F> ad(const Vec<F>& x) const {
    Matrix<F> m{dim_, std::vector<Vec<F>>(dim_, Vec<F>(dim_, field_.zero()))};
    for (std::size_t j = 0; j < dim_; ++j) {
      auto col = bracket(x, unit_vector(field_, dim_, j));
      for (std::size_t i = 0; i < dim_; ++i) m.rows[i][j] = col[i];
    }
    return m;
  }

  /// Nonzero structure constants as (i, j, [e_i, e_j]) with i < j.
  std::vector<Bracket> brackets() const {
    std::vector<Bracket> out;
    for (auto [i, j] : support_) out.push_back({i, j, structure(i, j)});
    return out;
  }

  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
  Vec<F> jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const {
    auto e = [&](std::size_t t) { return unit_vector(field_, dim_, t); };
    auto r = bracket(basis_bracket(i, j), e(k));
    r = vec_add(field_, std::move(r), bracket(basis_bracket(j, k), e(i)));
    return vec_add(field_, std::move(r), bracket(basis_bracket(k, i), e(j)));
  }

  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> first_jacobi_failure() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          if (!is_zero_vector(field_, jacobi_residual(i, j, k))) return std::tuple(i, j, k);
    return std::nullopt;
  }

  Subspace<F> whole() const { return Subspace<F>::full(field_, dim_); }
  Subspace<F> zero() const { return Subspace<F>::zero(field_, dim_); }

  /// Same structure constants (labels are ignored).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  LieAlgebra(F f, std::size_t dim)
      : field_(std::move(f)), dim_(dim), table_(dim * (dim > 0 ? dim - 1 : 0) / 2, zero_vector(field_, dim)) {}

  std::size_t index(std::size_t i, std::size_t j) const { return i * (2 * dim_ - i - 1) / 2 + (j - i - 1); }

  void refresh_support() {
    support_.clear();
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!is_zero_vector(field_, structure(i, j))) support_.emplace_back(i, j);
  }

  F field_;
  std::size_t dim_;
  std::vector<Vec<F>> table_;
  std::vector<std::pair<std::size_t, std::size_t>> support_;
  std::vector<std::string> labels_;
};

/// Direct sum L1 ⊕ L2 with block-diagonal structure constants.
template <Field F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  if (!(a.field() == b.field())) throw FieldError("direct_sum: summands over different fields");
  const auto& f = a.field();
  const std::size_t n = a.dim() + b.dim();
  std::vector<typename LieAlgebra<F>::Bracket> table;
  auto embed = [&](const Vec<F>& v, std::size_t offset) {
    Vec<F> out(n, f.zero());
    for (std::size_t t = 0; t < v.size(); ++t) out[offset + t] = v[t];
    return out;
  };
  for (const auto& br : a.brackets()) table.push_back({br.i, br.j, embed(br.value, 0)});
  for (const auto& br : b.brackets())
    table.push_back({br.i + a.dim(), br.j + a.dim(), embed(br.value, a.dim())});
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::map<std::string, int> counts;
  for (const auto& l : labels) ++counts[l];
  bool clash = std::any_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second > 1; });
  if (clash) {
    for (std::size_t t = 0; t < labels.size(); ++t) labels[t] += t < a.dim() ? "_1" : "_2";
  }
  return LieAlgebra<F>::create(f, n, table, std::move(labels));
}

// ---------------------------------------------------------------------------
// Subspace constructions

/// [A, B]: span of brackets of basis pairs.
template <Field F>
Subspace<F> product_space(const LieAlgebra<F>& L, const Subspace<F>& a, const Subspace<F>& b) {
  std::vector<Vec<F>> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto z = L.bracket(x, y);
      if (!is_zero_vector(L.field(), z)) rows.push_back(std::move(z));
    }
  return span(L.field(), L.dim(), std::move(rows));
}

/// True when [A, B] ⊆ C, without materialising [A, B].
template <Field F>
bool product_within(const LieAlgebra<F>& L, const Subspace<F>& a, const Subspace<F>& b,
                    const Subspace<F>& c) {
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      if (!c.contains(L.bracket(x, y))) return false;
  return true;
}

template <Field F>
bool is_subalgebra(const LieAlgebra<F>& L, const Subspace<F>& s) {
  const auto& b = s.basis();
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t t = r + 1; t < b.size(); ++t)
      if (!s.contains(L.bracket(b[r], b[t]))) return false;
  return true;
}

/// I is an ideal of K: [K, I] ⊆ I.
template <Field F>
bool is_ideal_in(const LieAlgebra<F>& L, const Subspace<F>& i, const Subspace<F>& k) {
  return product_within(L, k, i, i);
}

template <Field F>
bool is_ideal(const LieAlgebra<F>& L, const Subspace<F>& i) {
  for (std::size_t m = 0; m < L.dim(); ++m)
    for (const auto& y : i.basis())
      if (!i.contains(L.bracket(unit_vector(L.field(), L.dim(), m), y))) return false;
  return true;
}

/// Smallest subalgebra containing S: fixed point of U -> U + [U, U].
template <Field F>
Subspace<F> subalgebra_closure(const LieAlgebra<F>& L, Subspace<F> s) {
  while (true) {
    auto next = subspace_sum(s, product_space(L, s, s));
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

enum class SeriesKind { derived, lower_central };

inline std::string to_string(SeriesKind k) { return k == SeriesKind::derived ? "derived" : "lower-central"; }

/// Terms K^(1) = K, K^(2), ... of the derived or lower central series of a
/// subalgebra K. Computation stops after the first term that is zero or
/// repeats its predecessor; later terms all equal the last one.
template <Field F>
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace<F>> terms;

  /// Term of index k >= 1.
  const Subspace<F>& term(std::size_t k) const { return terms[std::min(k, terms.size()) - 1]; }
  const Subspace<F>& stable_term() const { return terms.back(); }
  bool reaches_zero() const { return terms.back().is_zero(); }
};

template <Field F>
SeriesReport<F> series(const LieAlgebra<F>& L, SeriesKind kind, std::optional<Subspace<F>> of = std::nullopt) {
  SeriesReport<F> rep{kind, {of ? *of : L.whole()}};
  const auto base = rep.terms.front();
  while (!rep.terms.back().is_zero()) {
    const auto& last = rep.terms.back();
    auto next = kind == SeriesKind::derived ? product_space(L, last, last) : product_space(L, base, last);
    bool repeated = next == last;
    rep.terms.push_back(std::move(next));
    if (repeated) break;
  }
  return rep;
}

template <Field F>
bool is_nilpotent(const LieAlgebra<F>& L, std::optional<Subspace<F>> of = std::nullopt) {
  return series(L, SeriesKind::lower_central, std::move(of)).reaches_zero();
}

template <Field F>
bool is_solvable(const LieAlgebra<F>& L, std::optional<Subspace<F>> of = std::nullopt) {
  return series(L, SeriesKind::derived, std::move(of)).reaches_zero();
}

/// C_L(A) = {x : [x, A] = 0}.
template <Field F>
Subspace<F> centralizer(const LieAlgebra<F>& L, const Subspace<F>& a) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  // one equation per (basis vector of A, output coordinate); unknowns are x's coordinates
  Matrix<F> eqs{n, {}};
  for (const auto& y : a.basis()) {
    std::vector<Vec<F>> cols;
    for (std::size_t m = 0; m < n; ++m) cols.push_back(L.bracket(unit_vector(f, n, m), y));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> row(n, f.zero());
      for (std::size_t m = 0; m < n; ++m) row[m] = cols[m][k];
      eqs.rows.push_back(std::move(row));
    }
  }
  return span(f, n, nullspace(f, std::move(eqs)));
}

/// N_L(B) = {x : [x, B] ⊆ B}.
template <Field F>
Subspace<F> normalizer(const LieAlgebra<F>& L, const Subspace<F>& b) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  QuotientCoordinates<F> q(b);
  Matrix<F> eqs{n, {}};
  for (const auto& y : b.basis()) {
    std::vector<Vec<F>> cols;
    for (std::size_t m = 0; m < n; ++m) cols.push_back(q.project(L.bracket(unit_vector(f, n, m), y)));
    for (std::size_t k = 0; k < q.quotient_dim(); ++k) {
      Vec<F> row(n, f.zero());
      for (std::size_t m = 0; m < n; ++m) row[m] = cols[m][k];
      eqs.rows.push_back(std::move(row));
    }
  }
  return span(f, n, nullspace(f, std::move(eqs)));
}

/// L/I on the quotient coordinates of I, with the projection and a fixed lift.
template <Field F>
struct QuotientAlgebra {
  LieAlgebra<F> algebra;
  QuotientCoordinates<F> coords;

  Vec<F> project(const Vec<F>& v) const { return coords.project(v); }
  Vec<F> lift(const Vec<F>& w) const { return coords.lift(w); }
  Subspace<F> project(const Subspace<F>& s) const { return coords.project(s); }
  Subspace<F> preimage(const Subspace<F>& s) const { return coords.preimage(s); }
};

template <Field F>
QuotientAlgebra<F> quotient_algebra(const LieAlgebra<F>& L, const Subspace<F>& ideal) {
  if (!is_ideal(L, ideal)) throw PreconditionError("quotient_algebra: subspace is not an ideal");
  QuotientCoordinates<F> q(ideal);
  const auto& cols = q.complement_columns();
  std::vector<typename LieAlgebra<F>::Bracket> table;
  std::vector<std::string> labels;
  for (auto c : cols) labels.push_back(L.labels()[c]);
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      auto v = q.project(L.basis_bracket(cols[a], cols[b]));
      if (!is_zero_vector(L.field(), v)) table.push_back({a, b, std::move(v)});
    }
  QuotientAlgebra<F> out{LieAlgebra<F>::create(L.field(), cols.size(), table, std::move(labels)), q};
  // projection must be a homomorphism on basis pairs
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const auto& f = L.field();
      auto lhs = q.project(L.structure(i, j));
      auto rhs = out.algebra.bracket(q.project(unit_vector(f, L.dim(), i)), q.project(unit_vector(f, L.dim(), j)));
      if (lhs != rhs) throw Error("quotient_algebra: projection is not a homomorphism");
    }
  return out;
}

/// A subalgebra K viewed as a Lie algebra in its own right, in the
/// coordinates of K's RREF basis.
template <Field F>
struct SubalgebraView {
  LieAlgebra<F> algebra;
  Subspace<F> space;

  Vec<F> to_sub(const Vec<F>& v) const { return space.coordinates(v); }
  Vec<F> from_sub(const Vec<F>& w) const { return space.combine(w); }

  /// S ⊆ K expressed in K's coordinates.
  Subspace<F> to_sub(const Subspace<F>& s) const {
    std::vector<Vec<F>> rows;
    for (const auto& b : s.basis()) rows.push_back(to_sub(b));
    return span(algebra.field(), algebra.dim(), std::move(rows));
  }
  Subspace<F> from_sub(const Subspace<F>& s) const {
    std::vector<Vec<F>> rows;
    for (const auto& b : s.basis()) rows.push_back(from_sub(b));
    return span(space.field(), space.ambient_dim(), std::move(rows));
  }
};

template <Field F>
SubalgebraView<F> restrict_to(const LieAlgebra<F>& L, const Subspace<F>& k) {
  if (!is_subalgebra(L, k)) throw PreconditionError("restrict_to: subspace is not a subalgebra");
  std::vector<typename LieAlgebra<F>::Bracket> table;
  const auto& b = k.basis();
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t t = r + 1; t < b.size(); ++t) {
      auto v = k.coordinates(L.bracket(b[r], b[t]));
      if (!is_zero_vector(L.field(), v)) table.push_back({r, t, std::move(v)});
    }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < b.size(); ++r) labels.push_back("k" + std::to_string(r + 1));
  return {LieAlgebra<F>::create(L.field(), b.size(), table, std::move(labels)), k};
}

}  // namespace lieideal
