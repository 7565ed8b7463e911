#include <gtest/gtest.h>

#include "lieideal/lieideal.hpp"
#include "oracles.hpp"

using namespace lieideal;
using Alg = LieAlgebra<PrimeField>;

namespace {

std::vector<Alg> corpus_gf(const PrimeField& f) {
  std::vector<Alg> out{corpus::abelian(f, 2),
                       corpus::heisenberg(f),
                       corpus::two_dim_nonabelian(f),
                       corpus::almost_abelian(f, 3),
                       corpus::sl2(f),
                       direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f))};
  if (f.modulus() == 2) {
    out.push_back(direct_sum(corpus::two_dim_nonabelian(f), corpus::two_dim_nonabelian(f)));
    out.push_back(corpus::almost_abelian(f, 4));
  }
  return out;
}

}  // namespace

TEST(Core, MatchesLargestIdealInside) {
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& L : corpus_gf(f)) {
      oracle::Brute brute(L);
      auto subs = brute.subalgebras();
      for (const auto& s : subs) {
        auto b = brute.to_subspace(s);
        auto c = core(L, b);
        EXPECT_TRUE(is_ideal(L, c));
        EXPECT_EQ(brute.to_set(c), brute.core(s, subs));
      }
    }
  }
}

TEST(Subideal, MatchesChainSearch) {
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& L : corpus_gf(f)) {
      oracle::Brute brute(L);
      auto subs = brute.subalgebras();
      for (const auto& s : subs) {
        auto b = brute.to_subspace(s);
        auto chain = subideal_chain(L, b);
        EXPECT_EQ(chain.has_value(), brute.is_subideal(s, subs));
        if (chain) {
          EXPECT_EQ(chain->bottom(), b);
          EXPECT_FALSE(chain_defect(L, *chain).has_value());
        }
      }
    }
  }
}

TEST(Subideal, ChainDefects) {
  PrimeField f(2);
  auto L = direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f));
  auto k = span(f, 3, {{1, 0, 1}});
  auto mid = span(f, 3, {{1, 0, 0}, {0, 0, 1}});
  SubidealChain<PrimeField> good{{k, mid, L.whole()}};
  EXPECT_FALSE(chain_defect(L, good).has_value());
  EXPECT_FALSE(is_ideal(L, k));
  EXPECT_TRUE(is_subideal(L, k));
  SubidealChain<PrimeField> skip{{k, L.whole()}};
  EXPECT_TRUE(chain_defect(L, skip).has_value());
  SubidealChain<PrimeField> short_chain{{k, mid}};
  EXPECT_TRUE(chain_defect(L, short_chain).has_value());
  PrimeField f5(5);
  EXPECT_THROW(subideal_chain(corpus::sl2(f5), span(f5, 3, {{0, 1, 0}, {0, 0, 1}})), PreconditionError);
}

TEST(Search, WeakCAndCMatchBruteForce) {
  for (unsigned p : {2u, 3u}) {
    PrimeField f(p);
    for (const auto& L : corpus_gf(f)) {
      oracle::Brute brute(L);
      auto subs = brute.subalgebras();
      auto lattice = LatticeCache<PrimeField>::build(L);
      ASSERT_EQ(lattice.size(), subs.size());
      for (const auto& s : subs) {
        auto b = brute.to_subspace(s);
        auto w = find_weak_c_witness(lattice, b);
        auto c = find_c_witness(lattice, b);
        EXPECT_EQ(w.has_value(), brute.is_weak_c(s, subs, false));
        EXPECT_EQ(c.has_value(), brute.is_weak_c(s, subs, true));
        if (w) {
          EXPECT_FALSE(certificate_defect(L, *w).has_value());
        }
        if (c) {
          EXPECT_FALSE(certificate_defect(L, *c).has_value());
          EXPECT_TRUE(w.has_value()) << "c-ideal without weak c witness";
          EXPECT_FALSE(certificate_defect(L, as_weak_c(*c)).has_value());
        }
      }
    }
  }
}

TEST(Certificates, EachFailureIsReported) {
  PrimeField f(2);
  auto L = direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f));  // e1 | x y, [x,y]=y
  auto x = span(f, 3, {{0, 1, 0}});
  auto e1y = span(f, 3, {{1, 0, 0}, {0, 0, 1}});
  auto good = verify_c(L, x, e1y);
  ASSERT_TRUE(good);
  EXPECT_FALSE(certificate_defect(L, *good.certificate).has_value());

  EXPECT_EQ(verify_c(L, x, span(f, 3, {{0, 1, 0}})).failure, CertificateFailure::c_not_ideal);
  EXPECT_EQ(verify_c(L, x, span(f, 3, {{0, 0, 1}})).failure, CertificateFailure::sum_not_whole);
  EXPECT_EQ(verify_c(L, x, L.whole()).failure, CertificateFailure::intersection_outside_core);
  EXPECT_EQ(verify_weak_c(L, x, span(f, 3, {{1, 0, 0}, {0, 1, 0}})).failure, CertificateFailure::c_not_subideal);

  // sl2 over GF(5): span(e, f) is not closed
  PrimeField f5(5);
  auto s = corpus::sl2(f5);
  auto ef = span(f5, 3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(verify_c(s, ef, s.whole()).failure, CertificateFailure::b_not_subalgebra);
  EXPECT_EQ(verify_weak_c(s, ef, s.whole()).failure, CertificateFailure::b_not_subalgebra);

  auto tampered = *good.certificate;
  tampered.core_b = e1y;
  EXPECT_EQ(certificate_defect(L, tampered), CertificateFailure::wrong_core);
  tampered = *good.certificate;
  tampered.c = span(f, 3, {{0, 1, 0}});
  EXPECT_EQ(certificate_defect(L, tampered), CertificateFailure::c_not_ideal);

  auto weak = as_weak_c(*good.certificate);
  EXPECT_FALSE(certificate_defect(L, weak).has_value());
  weak.chain.terms.pop_back();
  EXPECT_EQ(certificate_defect(L, weak), CertificateFailure::bad_chain);
  weak = as_weak_c(*good.certificate);
  weak.core_b = L.whole();
  EXPECT_EQ(certificate_defect(L, weak), CertificateFailure::wrong_core);
}

TEST(Certificates, WeakButNotC) {
  // span(e1+y) is a subideal complement for span(x) that is not an ideal
  PrimeField f(2);
  auto L = direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f));
  auto k = span(f, 3, {{1, 0, 1}});
  auto b = span(f, 3, {{0, 1, 0}, {1, 0, 0}});
  auto r = verify_weak_c(L, b, k);
  ASSERT_TRUE(r) << to_string(*r.failure);
  EXPECT_EQ(r.certificate->chain.length(), 2u);
  EXPECT_EQ(verify_c(L, b, k).failure, CertificateFailure::c_not_ideal);
}

TEST(Certificates, RationalWitnesses) {
  RationalField q;
  auto L = corpus::two_dim_nonabelian(q);
  auto x = span(q, 2, {{q.one(), q.zero()}});
  auto y = span(q, 2, {{q.zero(), q.one()}});
  EXPECT_TRUE(verify_c(L, x, y));
  EXPECT_EQ(verify_c(L, y, x).failure, CertificateFailure::c_not_ideal);
  EXPECT_TRUE(verify_c(L, y, L.whole()));  // y is an ideal: core(y) = y
}
