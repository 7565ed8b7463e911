#include <gtest/gtest.h>

#include "lieideal/lieideal.hpp"
#include "oracles.hpp"

using namespace lieideal;
using Alg = LieAlgebra<PrimeField>;

namespace {

Subspace<PrimeField> sp(const PrimeField& f, std::size_t n, std::vector<Vec<PrimeField>> rows) {
  return span(f, n, std::move(rows));
}

std::vector<Alg> sample(const PrimeField& f) {
  std::vector<Alg> out{corpus::abelian(f, 3),
                       corpus::heisenberg(f),
                       corpus::two_dim_nonabelian(f),
                       corpus::almost_abelian(f, 3),
                       corpus::sl2(f),
                       direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f))};
  // x acting irreducibly on span(a, b)
  Alg::Bracket xa{0, 1, {0, 0, 1}}, xb{0, 2, {0, f.modulus() == 2 ? 1u : f.neg(1), f.modulus() == 2 ? 1u : 0u}};
  out.push_back(Alg::create(f, 3, {xa, xb}, {"x", "a", "b"}));
  return out;
}

OneDimClassification<PrimeField> classify(const Alg& L) {
  return classify_one_dim_weak_c(LatticeCache<PrimeField>::build(L));
}

}  // namespace

TEST(Heisenberg, FlagsAndFrattini) {
  PrimeField f(2);
  auto L = corpus::heisenberg(f);
  auto fl = flags(L);
  EXPECT_EQ(fl.nilpotent, Tri::yes);
  EXPECT_EQ(fl.solvable, Tri::yes);
  EXPECT_EQ(fl.supersolvable, Tri::yes);
  EXPECT_EQ(fl.simple, Tri::no);
  auto ss = is_supersolvable(L);
  ASSERT_EQ(ss.flag.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(ss.flag[i].dim(), i);
    EXPECT_TRUE(is_ideal(L, ss.flag[i]));
  }
  auto lat = LatticeCache<PrimeField>::build(L);
  EXPECT_EQ(maximal_subalgebras(lat).size(), 3u);
  auto fr = frattini(lat);
  auto z = sp(f, 3, {{0, 0, 1}});
  EXPECT_EQ(fr.subalgebra, z);
  EXPECT_EQ(fr.ideal, z);
  EXPECT_EQ(maximal_nilpotent_subalgebras(lat).size(), 1u);
  EXPECT_TRUE(cartan_subalgebras(lat).front().is_full());
}

TEST(Abelian, PlaneOverGF2) {
  PrimeField f(2);
  auto lat = LatticeCache<PrimeField>::build(corpus::abelian(f, 2));
  EXPECT_EQ(lat.size(), 5u);
  EXPECT_EQ(maximal_subalgebras(lat).size(), 3u);
  EXPECT_TRUE(frattini(lat).subalgebra.is_zero());
}

TEST(Sl2, SimpleOverGF5) {
  PrimeField f(5);
  auto L = corpus::sl2(f);
  EXPECT_EQ(is_simple(L), Tri::yes);
  EXPECT_EQ(is_supersolvable(L).verdict, Tri::no);
  auto lat = LatticeCache<PrimeField>::build(L);
  EXPECT_TRUE(frattini(lat).subalgebra.is_zero());
  auto mins = minimal_ideals(L);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_TRUE(mins[0].is_full());
  EXPECT_TRUE(lat.maximal_nilpotent().size() > 0);
  for (auto i : lat.cartan()) EXPECT_EQ(lat[i].dim(), 1u);
}

TEST(TwoDim, CartanAndMaximalNilpotent) {
  PrimeField f(2);
  auto L = corpus::two_dim_nonabelian(f);
  auto lat = LatticeCache<PrimeField>::build(L);
  auto cartan = cartan_subalgebras(lat);
  std::vector<Subspace<PrimeField>> expect{sp(f, 2, {{1, 0}}), sp(f, 2, {{1, 1}})};
  std::sort(cartan.begin(), cartan.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(cartan, expect);
  auto mn = maximal_nilpotent_subalgebras(lat);
  EXPECT_EQ(mn.size(), 3u);
  for (const auto& s : mn) EXPECT_EQ(s.dim(), 1u);
}

TEST(Supersolvable, MatchesIdealFlagOracle) {
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (const auto& L : sample(f)) {
      oracle::Brute brute(L);
      auto subs = brute.subalgebras();
      auto r = is_supersolvable(L);
      ASSERT_NE(r.verdict, Tri::unsupported);
      EXPECT_EQ(r.verdict == Tri::yes, brute.has_ideal_flag(subs)) << p;
      if (r.verdict == Tri::yes) {
        ASSERT_EQ(r.flag.size(), L.dim() + 1);
        for (const auto& s : r.flag) EXPECT_TRUE(is_ideal(L, s));
      }
    }
  }
}

TEST(MinimalIdeals, MatchOracle) {
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& L : sample(f)) {
      oracle::Brute brute(L);
      std::vector<oracle::Set> ideals;
      for (const auto& s : brute.subalgebras())
        if (s.size() > 1 && brute.is_ideal(s)) ideals.push_back(s);
      std::set<oracle::Set> expect;
      for (const auto& s : ideals) {
        bool minimal = true;
        for (const auto& t : ideals)
          if (t.size() < s.size() && oracle::Brute::subset(t, s)) minimal = false;
        if (minimal) expect.insert(s);
      }
      std::set<oracle::Set> got;
      for (const auto& m : minimal_ideals(L)) got.insert(brute.to_set(m));
      EXPECT_EQ(got, expect);
      bool simple = L.dim() > 1 && expect.size() == 1 && expect.begin()->size() == brute.size() &&
                    !brute.brackets_into(brute.whole(), brute.whole(), {0});
      EXPECT_EQ(is_simple(L) == Tri::yes, simple);
    }
  }
}

TEST(Classification, OneDimensionalSubalgebras) {
  PrimeField f(2);
  auto h = classify(corpus::heisenberg(f));
  EXPECT_EQ(h.verdict, OneDimCase::case_i);
  EXPECT_EQ(h.all_one_dim_weak_c, Tri::yes);
  EXPECT_EQ(h.equivalence, Tri::yes);

  auto t = classify(corpus::two_dim_nonabelian(f));
  EXPECT_EQ(t.verdict, OneDimCase::case_ii);
  ASSERT_TRUE(t.abelian_part.has_value());
  EXPECT_TRUE(t.abelian_part->is_zero());
  EXPECT_EQ(t.all_one_dim_weak_c, Tri::yes);

  PrimeField f5(5);
  auto s = classify(corpus::sl2(f5));
  EXPECT_EQ(s.verdict, OneDimCase::neither);
  EXPECT_EQ(s.all_one_dim_weak_c, Tri::no);
  ASSERT_TRUE(s.non_witness.has_value());
  EXPECT_EQ(s.non_witness->dim(), 1u);
  EXPECT_EQ(s.equivalence, Tri::yes);
}

TEST(Classification, EquivalenceAcrossSample) {
  for (unsigned p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (const auto& L : sample(f)) {
      auto c = classify(L);
      EXPECT_EQ(c.equivalence, Tri::yes) << p;
      oracle::Brute brute(L);
      auto subs = brute.subalgebras();
      bool all = true;
      for (const auto& s : subs)
        if (s.size() == p) all = all && brute.is_weak_c(s, subs, false);
      EXPECT_EQ(c.all_one_dim_weak_c, tri(all));
      EXPECT_EQ(classify_one_dim_weak_c(L).verdict, c.verdict);
    }
  }
}

TEST(Rational, SupersolvableAndSimple) {
  RationalField q;
  EXPECT_EQ(is_supersolvable(corpus::almost_abelian(q, 3)).verdict, Tri::yes);
  EXPECT_EQ(is_supersolvable(corpus::heisenberg(q)).verdict, Tri::yes);
  EXPECT_EQ(is_supersolvable(corpus::sl2(q)).verdict, Tri::no);
  using QAlg = LieAlgebra<RationalField>;
  auto rot = QAlg::create(q, 3, {{0, 1, {q.zero(), q.zero(), q.one()}}, {0, 2, {q.zero(), q.neg(q.one()), q.zero()}}},
                          {"x", "a", "b"});
  EXPECT_EQ(is_supersolvable(rot).verdict, Tri::no);
  EXPECT_EQ(is_simple(corpus::sl2(q)), Tri::unsupported);
  EXPECT_EQ(is_simple(corpus::heisenberg(q)), Tri::no);
  EXPECT_EQ(structural_one_dim_case(corpus::two_dim_nonabelian(q)).verdict, OneDimCase::case_ii);
  EXPECT_EQ(structural_one_dim_case(corpus::sl2(q)).verdict, OneDimCase::neither);
}

TEST(Barnes, MaximalSubalgebrasAndNilpotency) {
  // nilpotent iff every maximal subalgebra is an ideal;
  // for solvable L, supersolvable iff every maximal subalgebra has codimension one
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& L : sample(f)) {
      auto lat = LatticeCache<PrimeField>::build(L);
      bool all_ideal = true, all_codim1 = true;
      for (auto i : lat.maximal_subalgebras()) {
        all_ideal = all_ideal && lat.is_ideal(i);
        all_codim1 = all_codim1 && lat[i].dim() + 1 == L.dim();
      }
      EXPECT_EQ(all_ideal, is_nilpotent(L));
      if (is_solvable(L)) {
        EXPECT_EQ(all_codim1, is_supersolvable(L).verdict == Tri::yes);
      }
    }
  }
}
