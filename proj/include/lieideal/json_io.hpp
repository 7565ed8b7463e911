#pragma once

// JSON encoding of scalars, subspaces, algebras, certificates and structure
// reports. GF(p) scalars are JSON integers, rationals are strings "n" or "n/d".
// Bracket indices are 1-based with i < j.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"
#include "lieideal/ideals.hpp"
#include "lieideal/lattice.hpp"
#include "lieideal/liecore.hpp"
#include "lieideal/linspace.hpp"
#include "lieideal/structure.hpp"

namespace lieideal {

using Json = nlohmann::ordered_json;

template <Field F>
Json scalar_to_json(const F& f, const typename F::value_type& a) {
  if constexpr (F::is_finite())
    return a;
  else
    return f.to_string(a);
}

template <Field F>
typename F::value_type scalar_from_json(const F& f, const Json& j) {
  if constexpr (F::is_finite()) {
    if (j.is_number_integer()) return f.from_integer(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
  } else {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_integer(j.get<long long>());
  }
  throw FieldError("expected a scalar over " + f.descriptor().name() + ", got " + j.dump());
}

template <Field F>
Json vector_to_json(const F& f, const Vec<F>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(scalar_to_json(f, a));
  return out;
}

template <Field F>
Vec<F> vector_from_json(const F& f, std::size_t n, const Json& j) {
  if (!j.is_array() || j.size() != n)
    throw DimensionError("expected a vector of length " + std::to_string(n) + ", got " + j.dump());
  Vec<F> v;
  for (const auto& a : j) v.push_back(scalar_from_json(f, a));
  return v;
}

/// Canonical basis rows.
template <Field F>
Json subspace_to_json(const Subspace<F>& s) {
  Json out = Json::array();
  for (const auto& row : s.basis()) out.push_back(vector_to_json(s.field(), row));
  return out;
}

template <Field F>
Subspace<F> subspace_from_json(const F& f, std::size_t n, const Json& j) {
  if (!j.is_array()) throw DimensionError("expected an array of basis rows");
  std::vector<Vec<F>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, n, r));
  return span(f, n, std::move(rows));
}

template <Field F>
Json algebra_to_json(const LieAlgebra<F>& L) {
  Json br = Json::array();
  for (const auto& b : L.brackets())
    br.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", vector_to_json(L.field(), b.value)}});
  return {{"field", L.field().descriptor().name()}, {"dim", L.dim()}, {"labels", L.labels()}, {"brackets", br}};
}

template <Field F>
LieAlgebra<F> algebra_from_json(const F& f, const Json& j) {
  if (!j.contains("dim") || !j.contains("brackets")) throw PreconditionError("algebra JSON needs dim and brackets");
  if (j.contains("field") && j["field"].get<std::string>() != f.descriptor().name())
    throw FieldError("algebra JSON is over " + j["field"].get<std::string>() + ", expected " + f.descriptor().name());
  const auto n = j["dim"].get<std::size_t>();
  std::vector<typename LieAlgebra<F>::Bracket> table;
  for (const auto& b : j["brackets"]) {
    auto i = b.at("i").get<std::size_t>(), k = b.at("j").get<std::size_t>();
    if (i < 1 || k < 1 || i > n || k > n) throw DimensionError("bracket index out of range");
    table.push_back({i - 1, k - 1, vector_from_json(f, n, b.at("coeffs"))});
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return LieAlgebra<F>::create(f, n, std::move(table), std::move(labels));
}

template <Field F>
Json chain_to_json(const SubidealChain<F>& chain) {
  Json out = Json::array();
  for (const auto& t : chain.terms) out.push_back(subspace_to_json(t));
  return out;
}

template <Field F>
Json certificate_to_json(const WeakCIdealCertificate<F>& c) {
  return {{"kind", "weak-c-ideal"},
          {"B", subspace_to_json(c.b)},
          {"C", subspace_to_json(c.c)},
          {"core", subspace_to_json(c.core_b)},
          {"chain", chain_to_json(c.chain)}};
}

template <Field F>
Json certificate_to_json(const CIdealCertificate<F>& c) {
  return {{"kind", "c-ideal"},
          {"B", subspace_to_json(c.b)},
          {"C", subspace_to_json(c.c)},
          {"core", subspace_to_json(c.core_b)}};
}

template <Field F>
Json series_to_json(const SeriesReport<F>& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"dim", t.dim()}, {"basis", subspace_to_json(t)}});
  return {{"kind", to_string(r.kind)}, {"reaches_zero", r.reaches_zero()}, {"terms", terms}};
}

inline Json flags_to_json(const StructureFlags& s) {
  return {{"nilpotent", to_string(s.nilpotent)},
          {"solvable", to_string(s.solvable)},
          {"supersolvable", to_string(s.supersolvable)},
          {"simple", to_string(s.simple)},
          {"almost_abelian", to_string(s.almost_abelian)}};
}

/// Flags, subalgebra counts by dimension and the distinguished subalgebras.
template <FiniteField F>
Json structure_report(const LatticeCache<F>& lattice, std::uint64_t budget = kDefaultBudget) {
  const auto& L = lattice.algebra();
  auto list = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(subspace_to_json(lattice[i]));
    return out;
  };
  auto fr = frattini(lattice);
  return {{"field", L.field().descriptor().name()},
          {"dim", L.dim()},
          {"flags", flags_to_json(flags(L, budget))},
          {"subalgebra_counts_by_dim", lattice.counts_by_dim()},
          {"subalgebra_count", lattice.size()},
          {"ideal_count", lattice.ideals().size()},
          {"subideal_count", lattice.subideals().size()},
          {"maximal_subalgebras", list(lattice.maximal_subalgebras())},
          {"maximal_nilpotent_subalgebras", list(lattice.maximal_nilpotent())},
          {"cartan_subalgebras", list(lattice.cartan())},
          {"frattini_subalgebra", subspace_to_json(fr.subalgebra)},
          {"frattini_ideal", subspace_to_json(fr.ideal)}};
}

}  // namespace lieideal
