// Acceptance run: one line per criterion with its time limit.
//
// Criterion 7 cannot be met as stated: the nilpotent-supplement statement
// (ids lemma-4.2-*) is false on several corpus algebras. That part prints
// NOT MET, and the run only accepts it after every reported violation has
// been re-derived by an independent brute-force search.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "lieideal/lieideal.hpp"
#include "oracles.hpp"

#ifndef LIEIDEAL_CLI
#error "LIEIDEAL_CLI must name the built binary"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must name tests/golden"
#endif

using namespace lieideal;
using verify::Status;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  bool not_met = false;  // shortfall that is genuine and documented
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

struct Shell {
  int code;
  std::string out;
};

Shell sh(const std::string& args) {
  std::string cmd = std::string(LIEIDEAL_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Failure("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

bool over(const verify::CorpusEntry& e, std::initializer_list<const char*> fields) {
  for (auto f : fields)
    if (e.id.find(std::string("over ") + f) != std::string::npos) return true;
  return false;
}

std::vector<verify::CorpusEntry> corpus_over(std::initializer_list<const char*> fields) {
  std::vector<verify::CorpusEntry> out;
  for (auto& e : verify::default_corpus())
    if (over(e, fields)) out.push_back(e);
  return out;
}

// GF(p) corpus algebras with at most max_dim, built once.
std::vector<std::pair<std::string, LieAlgebra<PrimeField>>> small_gf(unsigned p, std::size_t max_dim) {
  std::vector<std::pair<std::string, LieAlgebra<PrimeField>>> out;
  for (const auto& e : verify::default_corpus()) {
    auto a = load_algebra(e.source);
    auto* b = std::get_if<BuiltAlgebra<PrimeField>>(&a.built);
    if (b && b->algebra.field().modulus() == p && b->algebra.dim() <= max_dim) out.emplace_back(e.id, b->algebra);
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome lattice_counts() {
  std::ostringstream note;
  for (unsigned q : {2u, 3u}) {
    PrimeField f(q);
    for (unsigned n = 0; n <= (q == 2 ? 5u : 4u); ++n) {
      auto all = enumerate_subspaces(f, n);
      std::set<Subspace<PrimeField>> uniq(all.begin(), all.end());
      require(uniq.size() == all.size(), "duplicate subspaces");
      require(all.size() == oracle::subspace_total(n, q), "count differs from recurrence");
      require(BigInt(all.size()) == subspace_count(n, q), "count differs from Gaussian binomials");
    }
  }
  require(enumerate_subspaces(PrimeField(2), 3).size() == 16, "GF(2)^3 should have 16 subspaces");
  require(enumerate_subspaces(PrimeField(2), 4).size() == 67, "GF(2)^4 should have 67 subspaces");
  note << "GF(2) n<=5, GF(3) n<=4; n=3: 16, n=4: 67";
  return {true, note.str()};
}

Outcome core_is_largest_ideal() {
  std::size_t checked = 0, algebras = 0;
  for (const auto& [id, L] : small_gf(2, 4)) {
    ++algebras;
    oracle::Brute brute(L);
    auto subs = brute.subalgebras();
    std::vector<oracle::Set> ideals;
    for (const auto& s : subs)
      if (brute.is_ideal(s)) ideals.push_back(s);
    for (const auto& s : subs) {
      auto c = brute.to_set(core(L, brute.to_subspace(s)));
      require(brute.is_ideal(c) && oracle::Brute::subset(c, s), id + ": core is not an ideal inside B");
      for (const auto& i : ideals)
        if (oracle::Brute::subset(i, s)) require(oracle::Brute::subset(i, c), id + ": an ideal inside B escapes core(B)");
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " subalgebras in " + std::to_string(algebras) + " algebras"};
}

Outcome subideal_vs_chains() {
  std::size_t checked = 0, yes = 0;
  for (const auto& [id, L] : small_gf(2, 3)) {
    oracle::Brute brute(L);
    auto subs = brute.subalgebras();
    for (const auto& s : subs) {
      bool lib = subideal_chain(L, brute.to_subspace(s)).has_value();
      require(lib == brute.is_subideal(s, subs), id + ": subideal decision differs from chain search");
      ++checked;
      yes += lib;
    }
  }
  return {true, std::to_string(checked) + " subalgebras, " + std::to_string(yes) + " subideals"};
}

Outcome section_two() {
  const std::vector<std::string> ids{"lemma-2.4-1", "lemma-2.4-2", "lemma-2.4-3", "lemma-2.4-4", "proposition-2.5",
                                     "lemma-2.7"};
  auto rep = verify::run_suite(corpus_over({"GF(2)", "GF(3)"}), kDefaultBudget, ids);
  std::map<std::string, std::size_t> passes, counts;
  std::size_t over_budget = 0;
  for (const auto& r : rep.rows) {
    require(r.status == Status::pass || r.status == Status::unsupported,
            r.check_id + " on " + r.algebra_id + ": " + verify::to_string(r.status));
    if (r.status == Status::unsupported) {
      ++over_budget;
      continue;
    }
    ++passes[r.check_id];
    counts[r.check_id] += r.hypothesis_count;
  }
  for (const auto& id : ids) require(counts[id] > 0, id + " has no hypothesis instances");
  std::ostringstream note;
  note << rep.count(Status::pass) << " pass rows, 0 fail";
  if (over_budget) note << ", " << over_budget << " over budget (example34)";
  return {true, note.str()};
}

Outcome section_five() {
  auto rep = verify::run_suite(verify::default_corpus(), kDefaultBudget, {"lemma-5.1", "theorem-5.2"});
  std::map<std::string, std::string> verdict;
  std::size_t pass = 0;
  for (const auto& r : rep.rows) {
    require(r.status == Status::pass || r.status == Status::unsupported,
            r.check_id + " on " + r.algebra_id + ": " + verify::to_string(r.status));
    pass += r.status == Status::pass;
    if (r.check_id == "theorem-5.2" && r.status == Status::pass) {
      verdict[r.algebra_id] = r.witness.at("verdict").get<std::string>();
      if (verdict[r.algebra_id] == "neither")
        require(r.witness.contains("non_witness"), r.algebra_id + ": no explicit non-witness");
    }
  }
  require(verdict.at("heisenberg over GF(2)") == "case-i", "heisenberg should be case i");
  require(verdict.at("direct_sum(abelian(1), almost_abelian(3)) over GF(2)") == "case-ii",
          "abelian + almost abelian should be case ii");
  require(verdict.at("sl2 over GF(5)") == "neither", "sl2 over GF(5) should be neither");
  // case i is nilpotent: the third lower central term of Heisenberg vanishes
  require(series(corpus::heisenberg(PrimeField(2)), SeriesKind::lower_central).term(3).is_zero(), "L^3 != 0");
  return {true, std::to_string(pass) + " pass rows; heisenberg case-i, abelian+almost-abelian case-ii, sl2/GF(5) neither"};
}

Outcome example_facts() {
  PrimeField f(3);
  auto b = corpus::example34(f);
  const auto& L = b.algebra;
  require(L.dim() == 10, "dimension");
  require(!L.first_jacobi_failure(), "Jacobi");
  const auto &A = b.subspaces.at("A"), &M = b.subspaces.at("M"), &S = b.subspaces.at("SO1plus");
  require(A.dim() == 9 && is_ideal(L, A), "A is a 9-dim ideal");
  require(M.dim() == 7 && is_subalgebra(L, M), "M is a 7-dim subalgebra");
  require(core(L, M).is_zero(), "core(M) = 0");
  require(!subspace_sum(S, M).contains(b.vectors.at("um_0")), "u_-1 (x) 1 not in S(x)O1+ + M");
  auto rep = verify::run_suite(verify::preset_set("example"), kDefaultBudget, {"example-3.4"});
  require(rep.rows.size() == 1 && rep.rows[0].status == Status::pass, "example-3.4 harness row");
  return {true, "dim 10, A ideal (9), M subalgebra (7), core(M)=0, u_-1(x)1 outside S(x)O1+ + M"};
}

// Independent search for a nilpotent subalgebra B and subideal K with
// B + K = L violating one clause; `power` picks the clause.
bool brute_violation(const LieAlgebra<PrimeField>& L, bool power) {
  oracle::Brute brute(L);
  auto subs = brute.subalgebras();
  auto whole = brute.whole();
  // lower central terms L^2, L^3, ... until they repeat
  std::vector<oracle::Set> terms;
  auto cur = whole;
  while (true) {
    oracle::Set next{0};
    for (auto a : whole)
      for (auto c : cur)
        if (!oracle::Brute::contains(next, brute.bracket(a, c))) next = brute.closure_add(next, brute.bracket(a, c));
    terms.push_back(next);
    if (next == cur) break;
    cur = next;
  }
  std::vector<oracle::Set> ideals, minimal;
  for (const auto& s : subs)
    if (s.size() > 1 && brute.is_ideal(s)) ideals.push_back(s);
  for (const auto& s : ideals) {
    bool m = true;
    for (const auto& t : ideals) m = m && !(t.size() < s.size() && oracle::Brute::subset(t, s));
    if (m) minimal.push_back(s);
  }
  for (const auto& k : subs) {
    if (!brute.is_subideal(k, subs)) continue;
    for (const auto& b : subs) {
      if (!brute.nilpotent(b) || brute.join(b, k) != whole) continue;
      if (power) {
        bool inside = oracle::Brute::subset(whole, k);
        for (const auto& t : terms) inside = inside || oracle::Brute::subset(t, k);
        if (!inside) return true;
      } else {
        for (const auto& a : minimal)
          if (!oracle::Brute::subset(a, k) && !brute.brackets_into(whole, a, {0})) return true;
      }
    }
  }
  return false;
}

Outcome implications() {
  auto corpus = corpus_over({"GF(2)", "GF(3)"});
  auto rep = verify::run_suite(corpus, kDefaultBudget,
                               {"theorem-4.5", "corollary-3.3-forward", "lemma-4.2-power", "lemma-4.2-minimal-ideal"});
  std::size_t t45 = 0, c33 = 0, l42_pass = 0, l42_fail = 0;
  std::set<std::string> failing;
  for (const auto& r : rep.rows) {
    require(r.status != Status::error, r.check_id + " on " + r.algebra_id + ": error");
    if (r.check_id == "theorem-4.5") {
      require(r.status != Status::fail, "theorem-4.5 violated on " + r.algebra_id);
      t45 += r.status == Status::pass;
    } else if (r.check_id == "corollary-3.3-forward") {
      require(r.status != Status::fail, "corollary-3.3-forward violated on " + r.algebra_id);
      c33 += r.status == Status::pass && r.hypothesis_count > 0;
    } else if (r.status == Status::fail) {
      ++l42_fail;
      failing.insert(r.algebra_id);
      require(verify::recheck(r.witness), r.check_id + " on " + r.algebra_id + ": payload does not reproduce");
      auto L = algebra_from_json(PrimeField(r.witness["algebra"]["field"] == "GF(2)" ? 2 : 3), r.witness["algebra"]);
      require(brute_violation(L, r.check_id == "lemma-4.2-power"),
              r.check_id + " on " + r.algebra_id + ": brute force finds no violation");
    } else {
      l42_pass += r.status == Status::pass;
    }
  }
  // every solvable corpus algebra within budget gets a corollary-3.3-forward pass
  std::size_t solvable = 0;
  for (const auto& e : corpus) {
    auto a = load_algebra(e.source);
    const auto& L = std::get<BuiltAlgebra<PrimeField>>(a.built).algebra;
    if (is_solvable(L) && subspace_count(unsigned(L.dim()), L.field().modulus()) <= kDefaultBudget) ++solvable;
  }
  require(c33 == solvable, "corollary-3.3-forward passed on " + std::to_string(c33) + " of " +
                               std::to_string(solvable) + " solvable algebras");
  std::ostringstream note;
  note << "theorem-4.5 pass on " << t45 << ", corollary-3.3-forward pass on " << c33 << "/" << solvable
       << " solvable; nilpotent-supplement clauses violated in " << l42_fail << " rows on " << failing.size()
       << " algebras (pass on " << l42_pass << "), each confirmed by brute force";
  Outcome o{true, note.str()};
  o.not_met = l42_fail > 0;
  return o;
}

Outcome determinism() {
  auto a = sh("verify --json");
  auto b = sh("verify --json");
  require(!a.out.empty() && a.out == b.out, "reports differ");
  require(a.code == b.code, "exit codes differ");
  return {true, std::to_string(a.out.size()) + " bytes, identical"};
}

Outcome cli_contract() {
  for (const char* g : {"heisenberg.alg", "sl2_q.alg", "tdn_q.alg"}) {
    auto first = sh("print " + golden(g));
    require(first.code == 0, std::string("print ") + g);
    auto doc = load_algebra(first.out);
    auto again = doc.visit([](const auto& b) { return print_document(b.algebra, b.subspaces); });
    require(again == first.out, std::string("round trip ") + g);
  }
  for (const auto& e : verify::default_corpus()) {
    auto a = load_algebra(e.source);
    a.visit([&](const auto& b) {
      auto text = print_document(b.algebra, b.subspaces);
      auto c = load_algebra(text);
      using B = std::decay_t<decltype(b)>;
      require(std::get<B>(c.built).algebra == b.algebra, "round trip " + e.id);
    });
  }
  require(sh("check " + golden("heisenberg.alg") + " --predicate ideal --subspace Z").code == 0, "exit 0");
  auto jac = sh("check " + golden("jacobi_bad.alg") + " --predicate solvable");
  require(jac.code == 2 && jac.out.find("(1,2,3)") != std::string::npos, "Jacobi file: exit 2 with (1,2,3)");
  require(sh("check " + golden("syntax_bad.alg") + " --predicate solvable").code == 2, "syntax error exit 2");
  require(sh("check " + golden("sl2_q.alg") + " --predicate simple").code == 3, "unsupported exit 3");
  require(sh("verify --preset-set small").code == 1, "verify with failures exits 1");
  require(sh("verify --preset-set example").code == 0, "clean verify exits 0");
  return {true, "round trips on golden files and corpus; exits 0/1/2/3; Jacobi (1,2,3) diagnostic"};
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    const char* what;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "lattice counts match Gaussian binomials", 5, lattice_counts},
      {2, "core(B) is the largest ideal inside B (GF(2), dim<=4)", 30, core_is_largest_ideal},
      {3, "subideal decision matches chain search (GF(2), dim<=3)", 60, subideal_vs_chains},
      {4, "ideal/subalgebra checks pass on GF(2)/GF(3) corpus", 300, section_two},
      {5, "one-dimensional classification reproduced", 120, section_five},
      {6, "characteristic-p example facts at p=3", 10, example_facts},
      {7, "supersolvability and nilpotent-supplement implications", 300, implications},
      {8, "verify --json is deterministic", 60, determinism},
      {9, "CLI contract on golden files", 60, cli_contract},
  };
  int failed = 0, not_met = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) {
      o.ok = false;
      o.note += "; too slow";
    }
    const char* tag = !o.ok ? "FAIL" : o.not_met ? "NOT MET" : "PASS";
    failed += !o.ok;
    not_met += o.ok && o.not_met;
    std::printf("[%s] %d %s (%.2f s, limit %.0f s): %s\n", tag, c.n, c.what, secs, c.limit, o.note.c_str());
  }
  std::printf("%zu criteria: %zu pass, %d not met (documented counterexample), %d fail\n", all.size(),
              all.size() - failed - not_met, not_met, failed);
  return failed == 0 ? 0 : 1;
}
