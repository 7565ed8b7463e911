#pragma once

// Named algebras for tests, the CLI and the verification harness.
//
// example34(p) is sl(2) ⊗ O_1 + F·D over GF(p), p > 2, where O_1 = F[x]/(x^p)
// and D = ∂/∂x + x ∂/∂x acts on the O_1 factor. The sl(2) basis is
// u_{-1}, u_0, u_1 with [u_{-1},u_0] = u_{-1}, [u_{-1},u_1] = u_0,
// [u_0,u_1] = u_1. Basis order: u_i ⊗ x^j for i = -1, 0, 1 and j = 0..p-1,
// then D.

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieideal/error.hpp"
#include "lieideal/exactfield.hpp"
#include "lieideal/liecore.hpp"

namespace lieideal {

/// preset name with integer arguments or nested presets (direct_sum).
struct PresetSpec {
  std::string name;
  std::vector<long long> args;
  std::vector<PresetSpec> summands;

  std::string to_string() const {
    std::string s = name + "(";
    bool first = true;
    for (auto a : args) {
      s += (first ? "" : ", ") + std::to_string(a);
      first = false;
    }
    for (const auto& sub : summands) {
      s += (first ? "" : ", ") + sub.to_string();
      first = false;
    }
    return s + ")";
  }
};

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"abelian", "heisenberg", "two_dim_nonabelian", "almost_abelian",
                                              "sl2",     "example34",  "direct_sum"};
  return names;
}

namespace detail {

class PresetParser {
 public:
  explicit PresetParser(std::string_view s) : s_(s) {}

  PresetSpec parse_all() {
    auto spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw PreconditionError("preset '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  PresetSpec parse_spec() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a preset name");
    PresetSpec spec{std::string(s_.substr(start, pos_ - start)), {}, {}};
    skip_ws();
    if (pos_ == s_.size() || s_[pos_] != '(') return spec;
    ++pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ')') {
      ++pos_;
      return spec;
    }
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
        std::size_t b = pos_++;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        try {
          spec.args.push_back(std::stoll(std::string(s_.substr(b, pos_ - b))));
        } catch (const std::exception&) {
          fail("bad integer argument");
        }
      } else {
        spec.summands.push_back(parse_spec());
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return spec;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PresetSpec parse_preset(std::string_view text) { return detail::PresetParser(text).parse_all(); }

/// An algebra plus named subspaces and vectors that come with its construction.
template <Field F>
struct BuiltAlgebra {
  LieAlgebra<F> algebra;
  std::map<std::string, Subspace<F>> subspaces;
  std::map<std::string, Vec<F>> vectors;
};

namespace corpus {

template <Field F>
using Table = std::vector<typename LieAlgebra<F>::Bracket>;

template <Field F>
Vec<F> combo(const F& f, std::size_t n, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  Vec<F> v(n, f.zero());
  for (auto [i, c] : terms) v[i] = f.add(v[i], f.from_integer(c));
  return v;
}

template <Field F>
LieAlgebra<F> abelian(const F& f, std::size_t n) {
  return LieAlgebra<F>::create(f, n, {});
}

/// [e1, e2] = e3
template <Field F>
LieAlgebra<F> heisenberg(const F& f) {
  return LieAlgebra<F>::create(f, 3, {{0, 1, combo(f, 3, {{2, 1}})}});
}

/// [x, y] = y
template <Field F>
LieAlgebra<F> two_dim_nonabelian(const F& f) {
  return LieAlgebra<F>::create(f, 2, {{0, 1, combo(f, 2, {{1, 1}})}}, {"x", "y"});
}

/// Basis x, y_1, ..., y_{n-1} with [x, y_i] = y_i and the y_i commuting.
template <Field F>
LieAlgebra<F> almost_abelian(const F& f, std::size_t n) {
  if (n < 1) throw PreconditionError("almost_abelian(n) needs n >= 1");
  Table<F> t;
  std::vector<std::string> labels{"x"};
  for (std::size_t i = 1; i < n; ++i) {
    t.push_back({0, i, unit_vector(f, n, i)});
    labels.push_back("y" + std::to_string(i));
  }
  return LieAlgebra<F>::create(f, n, t, labels);
}

/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
template <Field F>
LieAlgebra<F> sl2(const F& f) {
  return LieAlgebra<F>::create(f, 3,
                               {{0, 1, combo(f, 3, {{1, 2}})}, {0, 2, combo(f, 3, {{2, -2}})}, {1, 2, combo(f, 3, {{0, 1}})}},
                               {"h", "e", "f"});
}

inline std::size_t example34_index(unsigned p, int u, unsigned j) {
  return static_cast<std::size_t>(u + 1) * p + j;
}

template <Field F>
BuiltAlgebra<F> example34(const F& f) {
  const unsigned p = f.characteristic();
  if (p <= 2) throw PreconditionError("example34 needs GF(p) with p > 2 prime");
  const std::size_t n = 3 * p + 1;
  const std::size_t d = 3 * p;
  // [u_a, u_b] in the sl(2) basis, as (coefficient, index) or none
  auto sl2_bracket = [](int a, int b) -> std::pair<long long, int> {
    if (a == -1 && b == 0) return {1, -1};
    if (a == -1 && b == 1) return {1, 0};
    if (a == 0 && b == 1) return {1, 1};
    if (a == 0 && b == -1) return {-1, -1};
    if (a == 1 && b == -1) return {-1, 0};
    if (a == 1 && b == 0) return {-1, 1};
    return {0, 0};
  };
  Table<F> t;
  for (int a = -1; a <= 1; ++a)
    for (unsigned j = 0; j < p; ++j)
      for (int b = a + 1; b <= 1; ++b)
        for (unsigned k = 0; k < p; ++k) {
          if (j + k >= p) continue;  // x^p = 0
          auto [c, w] = sl2_bracket(a, b);
          if (c == 0) continue;
          Vec<F> v(n, f.zero());
          v[example34_index(p, w, j + k)] = f.from_integer(c);
          t.push_back({example34_index(p, a, j), example34_index(p, b, k), std::move(v)});
        }
  // [u_a ⊗ x^j, u_a ⊗ x^k] = 0 since [u_a, u_a] = 0
  for (int a = -1; a <= 1; ++a)
    for (unsigned j = 0; j < p; ++j) {
      // [D, u_a ⊗ x^j] = u_a ⊗ (j x^{j-1} + j x^j)
      Vec<F> v(n, f.zero());
      if (j == 0) continue;
      v[example34_index(p, a, j - 1)] = f.from_integer(static_cast<long long>(j));
      v[example34_index(p, a, j)] = f.from_integer(static_cast<long long>(j));
      t.push_back({d, example34_index(p, a, j), std::move(v)});
    }
  std::vector<std::string> labels(n);
  const char* names[] = {"um", "u0", "up"};
  for (int a = -1; a <= 1; ++a)
    for (unsigned j = 0; j < p; ++j) labels[example34_index(p, a, j)] = std::string(names[a + 1]) + "_" + std::to_string(j);
  labels[d] = "D";

  BuiltAlgebra<F> out{LieAlgebra<F>::create(f, n, t, labels), {}, {}};
  auto span_of = [&](auto pred) {
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) rows.push_back(unit_vector(f, n, i));
    return span(f, n, std::move(rows));
  };
  out.subspaces.emplace("A", span_of([&](std::size_t i) { return i < d; }));
  out.subspaces.emplace("M", span_of([&](std::size_t i) { return i >= example34_index(p, 0, 0); }));
  out.subspaces.emplace("SO1plus", span_of([&](std::size_t i) { return i < d && i % p != 0; }));
  out.subspaces.emplace("S", span_of([&](std::size_t i) { return i < d && i % p == 0; }));
  out.vectors.emplace("um_0", unit_vector(f, n, example34_index(p, -1, 0)));
  return out;
}

}  // namespace corpus

namespace detail {
inline void expect_args(const PresetSpec& s, std::size_t ints, std::size_t subs) {
  if (s.args.size() != ints || s.summands.size() != subs)
    throw PreconditionError("preset " + s.name + " expects " + std::to_string(ints) + " integer argument(s) and " +
                            std::to_string(subs) + " nested preset(s)");
}
inline std::size_t positive_arg(const PresetSpec& s) {
  if (s.args[0] < 1) throw PreconditionError("preset " + s.name + " needs a positive dimension");
  return static_cast<std::size_t>(s.args[0]);
}
}  // namespace detail

/// The field a preset forces on its own (example34(p) -> GF(p)), if any.
inline std::optional<FieldDescriptor> preset_field(const PresetSpec& s) {
  if (s.name == "example34") {
    detail::expect_args(s, 1, 0);
    if (s.args[0] <= 2 || s.args[0] > kMaxPrime || !is_prime(static_cast<unsigned>(s.args[0])))
      throw PreconditionError("example34(p) needs a prime p > 2");
    return FieldDescriptor::prime(static_cast<unsigned>(s.args[0]));
  }
  for (const auto& sub : s.summands)
    if (auto f = preset_field(sub)) return f;
  return std::nullopt;
}

template <Field F>
BuiltAlgebra<F> build(const PresetSpec& s, const F& f) {
  using namespace corpus;
  if (s.name == "abelian") {
    detail::expect_args(s, 1, 0);
    return {abelian(f, detail::positive_arg(s)), {}, {}};
  }
  if (s.name == "heisenberg") {
    detail::expect_args(s, 0, 0);
    return {heisenberg(f), {}, {}};
  }
  if (s.name == "two_dim_nonabelian") {
    detail::expect_args(s, 0, 0);
    return {two_dim_nonabelian(f), {}, {}};
  }
  if (s.name == "almost_abelian") {
    detail::expect_args(s, 1, 0);
    return {almost_abelian(f, detail::positive_arg(s)), {}, {}};
  }
  if (s.name == "sl2") {
    detail::expect_args(s, 0, 0);
    return {sl2(f), {}, {}};
  }
  if (s.name == "example34") {
    auto want = preset_field(s);
    if (!(f.descriptor() == *want))
      throw PreconditionError("example34(" + std::to_string(s.args[0]) + ") must be built over " + want->name());
    return example34(f);
  }
  if (s.name == "direct_sum") {
    if (!s.args.empty() || s.summands.size() < 2)
      throw PreconditionError("direct_sum expects at least two nested presets");
    auto acc = build(s.summands[0], f).algebra;
    for (std::size_t i = 1; i < s.summands.size(); ++i) acc = direct_sum(acc, build(s.summands[i], f).algebra);
    return {std::move(acc), {}, {}};
  }
  throw PreconditionError("unknown preset '" + s.name + "'");
}

}  // namespace lieideal
