// Command-line front end.
//
// Exit codes: 0 verdict (including "no"), 1 verify found failures,
// 2 usage or input error, 3 unsupported (field or budget limit).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lieideal/lieideal.hpp"

using namespace lieideal;

namespace {

constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct Source {
  std::string file;
  std::string preset;
  std::string field;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedAlgebra load(const Source& src) {
  if (!src.preset.empty()) {
    if (!src.file.empty()) throw PreconditionError("give either a file or --preset, not both");
    std::string text = src.field.empty() ? "" : "field " + src.field + "\n";
    return load_algebra(text + "preset " + src.preset + "\n");
  }
  if (src.file.empty()) throw PreconditionError("missing algebra file (or --preset)");
  return load_algebra(read_file(src.file));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// Verdict payload; unsupported verdicts map to exit 3.
int verdict(Json out, Tri t) {
  if (t == Tri::unsupported) {
    out["verdict"] = "unsupported";
    emit(out);
    return kUnsupported;
  }
  out["verdict"] = t == Tri::yes;
  emit(out);
  return 0;
}

struct CheckOptions {
  std::string predicate;
  std::string subspace;
  std::string witness;
};

template <Field F>
int run_check(const BuiltAlgebra<F>& built, const CheckOptions& opt, std::uint64_t budget) {
  const auto& L = built.algebra;
  const auto& f = L.field();
  Json out{{"predicate", opt.predicate}, {"field", f.descriptor().name()}};

  static const std::vector<std::string> needs_subspace{"ideal", "subideal", "c-ideal", "weak-c-ideal", "core"};
  std::optional<Subspace<F>> b;
  if (std::find(needs_subspace.begin(), needs_subspace.end(), opt.predicate) != needs_subspace.end()) {
    if (opt.subspace.empty()) throw PreconditionError("--predicate " + opt.predicate + " needs --subspace");
    auto it = built.subspaces.find(opt.subspace);
    if (it == built.subspaces.end()) throw PreconditionError("no subspace named '" + opt.subspace + "'");
    b = it->second;
    out["subspace"] = opt.subspace;
    out["B"] = subspace_to_json(*b);
  }
  std::optional<Subspace<F>> witness;
  if (!opt.witness.empty()) {
    auto j = Json::parse(read_file(opt.witness));
    if (!j.contains("C")) throw PreconditionError("witness file needs a \"C\" entry");
    witness = subspace_from_json(f, L.dim(), j["C"]);
  }

  const auto& p = opt.predicate;
  if (p == "ideal") return verdict(out, tri(is_ideal(L, *b)));
  if (p == "subideal") {
    if (!is_subalgebra(L, *b)) {
      out["reason"] = "B is not a subalgebra";
      return verdict(out, Tri::no);
    }
    auto chain = subideal_chain(L, *b);
    if (chain) out["chain"] = chain_to_json(*chain);
    return verdict(out, tri(chain.has_value()));
  }
  if (p == "core") {
    auto c = core(L, *b);
    out["core"] = subspace_to_json(c);
    out["dim"] = c.dim();
    emit(out);
    return 0;
  }
  if (p == "c-ideal" || p == "weak-c-ideal") {
    const bool weak = p == "weak-c-ideal";
    if (witness) {
      out["mode"] = "certificate";
      if (weak) {
        auto r = verify_weak_c(L, *b, *witness);
        if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
        if (r.failure) out["reason"] = to_string(*r.failure);
        return verdict(out, tri(bool(r)));
      }
      auto r = verify_c(L, *b, *witness);
      if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
      if (r.failure) out["reason"] = to_string(*r.failure);
      return verdict(out, tri(bool(r)));
    }
    out["mode"] = "search";
    if constexpr (!F::is_finite()) {
      out["reason"] = "witness search needs a finite field; pass --witness";
      return verdict(out, Tri::unsupported);
    } else {
      if (!is_subalgebra(L, *b)) {
        out["reason"] = "B is not a subalgebra";
        return verdict(out, Tri::no);
      }
      auto lattice = LatticeCache<F>::build(L, budget);
      if (weak) {
        auto cert = find_weak_c_witness(lattice, *b);
        if (cert) out["certificate"] = certificate_to_json(*cert);
        return verdict(out, tri(cert.has_value()));
      }
      auto cert = find_c_witness(lattice, *b);
      if (cert) out["certificate"] = certificate_to_json(*cert);
      return verdict(out, tri(cert.has_value()));
    }
  }
  if (p == "nilpotent" || p == "solvable") {
    auto kind = p == "nilpotent" ? SeriesKind::lower_central : SeriesKind::derived;
    auto rep = series(L, kind);
    out["series"] = series_to_json(rep);
    return verdict(out, tri(rep.reaches_zero()));
  }
  if (p == "supersolvable") {
    auto r = is_supersolvable(L, budget);
    if (!r.flag.empty()) {
      Json flag = Json::array();
      for (const auto& s : r.flag) flag.push_back(subspace_to_json(s));
      out["flag"] = flag;
    }
    return verdict(out, r.verdict);
  }
  if (p == "simple") {
    auto t = is_simple(L, budget);
    if (t == Tri::unsupported) out["reason"] = "simplicity over Q is not decided";
    return verdict(out, t);
  }
  throw PreconditionError("unknown predicate '" + p + "'");
}

template <Field F>
int run_lattice(const BuiltAlgebra<F>& built, std::uint64_t budget) {
  if constexpr (!F::is_finite()) {
    emit(Json{{"verdict", "unsupported"}, {"reason", "subalgebra lattices need a finite field"}});
    return kUnsupported;
  } else {
    emit(structure_report(LatticeCache<F>::build(built.algebra, budget), budget));
    return 0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra ideal and subalgebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget = kDefaultBudget;
  app.add_option("--budget", budget, "maximum number of subspaces an enumeration may visit")->check(CLI::PositiveNumber);

  Source src;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("file", src.file, "algebra definition file");
    cmd->add_option("--preset", src.preset, "preset instead of a file, e.g. heisenberg or example34(3)");
    cmd->add_option("--field", src.field, "field for --preset, e.g. GF(2) or Q");
  };

  CheckOptions copt;
  auto* check = app.add_subcommand("check", "decide a predicate");
  add_source(check);
  check->add_option("--predicate", copt.predicate, "predicate")
      ->required()
      ->check(CLI::IsMember({"ideal", "subideal", "c-ideal", "weak-c-ideal", "core", "nilpotent", "solvable",
                             "supersolvable", "simple"}));
  check->add_option("--subspace", copt.subspace, "named subspace from the file");
  check->add_option("--witness", copt.witness, "JSON file with the complement C; verifies instead of searching");

  auto* lattice = app.add_subcommand("lattice", "subalgebra lattice report");
  add_source(lattice);

  std::string kind;
  auto* ser = app.add_subcommand("series", "derived or lower central series");
  add_source(ser);
  ser->add_option("--kind", kind, "series kind")->required()->check(CLI::IsMember({"derived", "lower-central"}));

  bool print_json = false;
  auto* print = app.add_subcommand("print", "re-emit the algebra (definition text or JSON)");
  add_source(print);
  print->add_flag("--json", print_json, "JSON instead of definition text");

  std::string set = "default";
  bool json = false;
  std::vector<std::string> only;
  auto* ver = app.add_subcommand("verify", "run the check suite over a corpus");
  ver->add_option("--preset-set", set, "corpus selection")->check(CLI::IsMember(verify::preset_set_names()));
  ver->add_flag("--json", json, "JSON report instead of a table");
  ver->add_option("--check", only, "restrict to these check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ver) {
      for (const auto& id : only)
        if (!verify::find_check(id)) throw PreconditionError("unknown check id '" + id + "'");
      auto rep = verify::run_suite(verify::preset_set(set), budget, only);
      if (json)
        std::cout << verify::to_json(rep).dump(2) << "\n";
      else
        std::cout << verify::to_text(rep);
      return rep.ok() ? 0 : 1;
    }
    auto loaded = load(src);
    if (*check) return loaded.visit([&](const auto& b) { return run_check(b, copt, budget); });
    if (*lattice) return loaded.visit([&](const auto& b) { return run_lattice(b, budget); });
    if (*ser) {
      return loaded.visit([&](const auto& b) {
        emit(series_to_json(series(b.algebra, kind == "derived" ? SeriesKind::derived : SeriesKind::lower_central)));
        return 0;
      });
    }
    if (*print) {
      return loaded.visit([&](const auto& b) {
        if (print_json) {
          auto j = algebra_to_json(b.algebra);
          Json subs = Json::object();
          for (const auto& [name, s] : b.subspaces) subs[name] = subspace_to_json(s);
          j["subspaces"] = subs;
          emit(j);
        } else {
          std::cout << print_document(b.algebra, b.subspaces);
        }
        return 0;
      });
    }
  } catch (const BudgetError& e) {
    emit(Json{{"verdict", "unsupported"}, {"reason", e.what()}});
    return kUnsupported;
  } catch (const UnsupportedError& e) {
    emit(Json{{"verdict", "unsupported"}, {"reason", e.what()}});
    return kUnsupported;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
