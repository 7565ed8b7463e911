#include <gtest/gtest.h>

#include <set>

#include "lieideal/lieideal.hpp"
#include "oracles.hpp"

using namespace lieideal;
using namespace lieideal::verify;

namespace {

const std::set<std::string> kKnownFalse{"lemma-4.2-power", "lemma-4.2-minimal-ideal"};

const Report& small_report() {
  static const Report rep = run_suite(preset_set("small"));
  return rep;
}

}  // namespace

TEST(Suite, SmallSetHasNoErrorsAndOnlyKnownFailures) {
  const auto& rep = small_report();
  ASSERT_FALSE(rep.rows.empty());
  EXPECT_EQ(rep.count(Status::error), 0u);
  for (const auto& r : rep.rows) {
    if (r.status == Status::fail) {
      EXPECT_TRUE(kKnownFalse.count(r.check_id)) << r.check_id << " on " << r.algebra_id;
    }
  }
}

TEST(Suite, EveryFailReproducesFromItsPayload) {
  std::size_t fails = 0;
  for (const auto& r : small_report().rows) {
    if (r.status != Status::fail) continue;
    ++fails;
    ASSERT_TRUE(r.witness.contains("algebra"));
    ASSERT_TRUE(r.witness.contains("claim"));
    EXPECT_TRUE(recheck(r.witness)) << r.check_id << " on " << r.algebra_id;
    // flipping the expectation makes the claim hold
    auto flipped = r.witness;
    flipped["claim"]["expected"] = !flipped["claim"]["expected"].get<bool>();
    EXPECT_FALSE(recheck(flipped));
  }
  EXPECT_GT(fails, 0u);
}

TEST(Suite, HardChecksHaveInstances) {
  std::map<std::string, std::size_t> instances;
  for (const auto& r : small_report().rows)
    if (r.status == Status::pass) instances[r.check_id] += r.hypothesis_count;
  for (const char* id : {"lemma-2.4-1", "lemma-2.4-2", "lemma-2.4-3", "lemma-2.4-4", "proposition-2.5", "lemma-2.7",
                         "lemma-3.5", "theorem-4.5", "lemma-5.1", "corollary-3.3-forward"})
    EXPECT_GT(instances[id], 0u) << id;
}

TEST(Suite, Deterministic) {
  auto a = to_json(run_suite(preset_set("small"))).dump();
  auto b = to_json(run_suite(preset_set("small"))).dump();
  EXPECT_EQ(a, b);
}

TEST(Suite, EmptyCorpusAndBrokenEntry) {
  EXPECT_TRUE(run_suite({}).rows.empty());
  EXPECT_TRUE(run_suite({}).ok());
  auto rep = run_suite({{"broken", "field GF(3)\ndim 3\n[e1,e2] = e2\n[e2,e3] = e1\n"}});
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].check_id, "construction");
  EXPECT_EQ(rep.rows[0].status, Status::error);
  EXPECT_NE(rep.rows[0].detail.find("Jacobi"), std::string::npos);
  EXPECT_FALSE(rep.ok());
}

TEST(Suite, RationalEntriesAreUnsupported) {
  auto rep = run_suite({{"tdn over Q", "field Q\npreset two_dim_nonabelian\n"}});
  ASSERT_FALSE(rep.rows.empty());
  for (const auto& r : rep.rows) EXPECT_EQ(r.status, Status::unsupported);
}

TEST(Suite, BudgetExhaustionIsUnsupported) {
  auto rep = run_suite({preset_entry("abelian(3)", "GF(2)")}, 5, {"lemma-2.4-1"});
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].status, Status::unsupported);
}

TEST(Suite, OnlyFilter) {
  auto rep = run_suite({preset_entry("heisenberg", "GF(2)")}, kDefaultBudget, {"lemma-5.1"});
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].status, Status::pass);
  EXPECT_FALSE(rep.rows[0].witness.is_null());
  EXPECT_NE(find_check("lemma-4.4"), nullptr);
  EXPECT_EQ(find_check("nope"), nullptr);
}

TEST(Suite, ExampleRows) {
  auto rep = run_suite(preset_set("example"));
  std::map<std::string, Status> by_id;
  for (const auto& r : rep.rows) by_id[r.check_id] = r.status;
  EXPECT_EQ(by_id.at("example-3.4"), Status::pass);
  EXPECT_EQ(rep.count(Status::error), 0u);
}

TEST(Recheck, SyntheticPayload) {
  PrimeField f(2);
  auto L = corpus::heisenberg(f);
  Json payload{{"algebra", algebra_to_json(L)},
               {"claim", claim("ideal", {{"B", sub_json(span(f, 3, {{1, 0, 0}}))}}, true)},
               {"observed", false}};
  EXPECT_TRUE(recheck(payload));
  payload["claim"]["args"]["B"] = sub_json(span(f, 3, {{0, 0, 1}}));
  EXPECT_FALSE(recheck(payload));
  payload["claim"]["predicate"] = "no-such-predicate";
  EXPECT_THROW(recheck(payload), PreconditionError);
}

// The nilpotent-supplement statement fails on F ⊕ <x, y | [x,y] = y>.
// Everything below is recomputed by brute force on element sets.
TEST(KnownFalse, NilpotentSupplementCounterexample) {
  PrimeField f(2);
  auto L = direct_sum(corpus::abelian(f, 1), corpus::two_dim_nonabelian(f));  // e1, x, y
  oracle::Brute brute(L);
  auto subs = brute.subalgebras();
  auto K = brute.to_set(span(f, 3, {{1, 0, 1}}));  // e1 + y
  auto B = brute.to_set(span(f, 3, {{1, 0, 0}, {0, 1, 0}}));  // e1, x
  auto Y = brute.to_set(span(f, 3, {{0, 0, 1}}));

  ASSERT_TRUE(brute.is_subideal(K, subs));
  ASSERT_FALSE(brute.is_ideal(K));
  ASSERT_TRUE(brute.is_subalgebra(B) && brute.nilpotent(B));
  ASSERT_EQ(brute.join(B, K), brute.whole());

  // L^2 = L^3 = ... = span(y), never inside K
  auto power = brute.whole();
  for (int s = 2; s <= 6; ++s) {
    oracle::Set next{0};
    for (auto a : brute.whole())
      for (auto b : power)
        if (!oracle::Brute::contains(next, brute.bracket(a, b))) next = brute.closure_add(next, brute.bracket(a, b));
    power = next;
    EXPECT_EQ(power, Y) << s;
    EXPECT_FALSE(oracle::Brute::subset(power, K));
  }
  // span(y) is a minimal ideal, not in K and not central
  EXPECT_TRUE(brute.is_ideal(Y));
  EXPECT_FALSE(oracle::Brute::subset(Y, K));
  EXPECT_FALSE(brute.brackets_into(brute.whole(), Y, {0}));

  // and the harness flags exactly this algebra
  auto rep = run_suite({preset_entry("direct_sum(abelian(1), two_dim_nonabelian)", "GF(2)")}, kDefaultBudget,
                       {"lemma-4.2-power", "lemma-4.2-minimal-ideal"});
  ASSERT_EQ(rep.rows.size(), 2u);
  for (const auto& r : rep.rows) {
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_TRUE(recheck(r.witness));
  }
}

TEST(Text, SummaryLine) {
  auto text = to_text(small_report());
  EXPECT_NE(text.find("pass "), std::string::npos);
  EXPECT_NE(text.find("error 0"), std::string::npos);
}
