// Batch front door for the finite-category workbench: load instance bundles,
// dispatch check suites and constructions, emit reports with witnesses.
//
// Exit codes: 0 all selected laws pass, 1 law failures or failed
// prerequisites, 2 malformed input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gmcat/mutate.hpp"
#include "gmcat/stock.hpp"
#include "gmcat/suite.hpp"

namespace {

using namespace gmcat;
using nlohmann::json;

std::size_t jobs_from_env() {
  const char* env = std::getenv("GMCAT_JOBS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return v > 1 ? static_cast<std::size_t>(v) : 1;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw MalformedInput("cannot write '" + out_path + "'");
  out << text;
}

std::string text_summary(const SuiteResult& result, const Bundle& bundle) {
  std::ostringstream out;
  out << "bundle " << bundle.name << ", suite " << result.suite << "\n";
  for (const auto& v : result.verdicts) {
    out << (v.report.pass() ? "  PASS " : "  FAIL ") << v.resource << " [" << v.check << "] "
        << v.report.laws.size() << " laws";
    if (!v.report.pass()) out << ", " << v.report.witnesses.size() << " witnesses";
    out << "\n";
    for (const auto& w : v.report.witnesses) {
      out << "    " << w.law_id;
      for (const auto& [k, val] : w.binding) out << " " << k << "=" << val;
      out << "  [" << w.lhs_result << " != " << w.rhs_result << "]\n";
    }
  }
  out << (result.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// Resources a graded monad needs to be checkable on its own.
std::vector<Resource> graded_closure(const Bundle& b, const std::string& graded_name) {
  const GradedEntry& entry = b.get<GradedEntry>(graded_name);
  std::vector<Resource> out;
  auto push_unique = [&](const Resource* r) {
    if (!r) throw MalformedInput("bundle is not closed over the references of '" + graded_name + "'");
    for (const auto& existing : out)
      if (existing.name == r->name) return;
    out.push_back(*r);
  };
  push_unique(b.find(entry.monad.base.name));
  for (const auto& r : b.resources) {
    bool is_grading = false;
    if (const auto* m = std::get_if<MonoidalStructure>(&r.payload)) is_grading = *m == entry.monad.grading;
    if (const auto* t = std::get_if<ThinMonoidalEntry>(&r.payload)) is_grading = t->value == entry.monad.grading;
    if (is_grading) {
      if (const Resource* base = b.find(r.name == entry.monad.base.name ? "" : entry.monad.grading.base.name))
        push_unique(base);
      push_unique(&r);
      break;
    }
  }
  if (entry.commutative) {
    for (const auto& r : b.resources) {
      bool is_bm = false;
      if (const auto* m = std::get_if<MonoidalStructure>(&r.payload))
        is_bm = *m == entry.commutative->base_monoidal;
      if (const auto* t = std::get_if<ThinMonoidalEntry>(&r.payload))
        is_bm = t->value == entry.commutative->base_monoidal;
      if (is_bm) {
        push_unique(&r);
        break;
      }
    }
  }
  push_unique(b.find(graded_name));
  return out;
}

std::string unique_resource_of_kind(const Bundle& b, const std::string& kind,
                                    const std::string& requested) {
  if (!requested.empty()) return requested;
  std::string found;
  for (const auto& r : b.resources) {
    if (r.kind != kind) continue;
    if (!found.empty())
      throw MalformedInput("bundle has several '" + kind + "' resources; pick one with --target");
    found = r.name;
  }
  if (found.empty()) throw MalformedInput("bundle has no '" + kind + "' resource");
  return found;
}

int cmd_check(const std::string& path, std::string suite, const std::string& format, bool canonical,
              const std::string& out_path) {
  Bundle bundle = load_bundle_file(path);
  if (suite.empty()) suite = bundle.suite;
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result = run_suite(bundle, suite, jobs_from_env());
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (format == "text")
    emit(text_summary(result, bundle), out_path);
  else
    emit(canonical_dump(suite_result_to_json(result, bundle, canonical, ms)), out_path);
  return result.pass() ? 0 : 1;
}

int prerequisite_failed(const std::string& what, const CheckReport& report) {
  json j;
  j["error"] = "prerequisite check failed";
  j["what"] = what;
  j["report"] = report_to_json(report);
  std::cout << canonical_dump(j);
  return 1;
}

int cmd_construct(const std::string& path, const std::string& what, const std::string& target,
                  const std::string& lhs, const std::string& rhs, std::size_t bound,
                  const std::string& out_path) try {
  Bundle bundle = load_bundle_file(path);
  const std::string graded_name = unique_resource_of_kind(bundle, "graded", target);
  const GradedEntry& entry = bundle.get<GradedEntry>(graded_name);

  Bundle artifact;
  artifact.name = bundle.name + "-" + what;
  artifact.suite = "all";

  if (what == "kleisli") {
    CheckReport pre = check_graded_monad(entry.monad);
    if (!pre.pass()) return prerequisite_failed(graded_name, pre);
    KleisliCategory k = build_kleisli(entry.monad);
    artifact.resources.push_back({"category", k.category.name, k.category});
  } else {
    if (!entry.commutative && (what == "em-tensor" || what == "unit-algebra"))
      throw VariantMismatch("'" + graded_name + "' carries no commutative block");
    CheckReport pre = entry.commutative ? check_commutative(*entry.commutative)
                                        : check_graded_monad(entry.monad);
    if (!pre.pass()) return prerequisite_failed(graded_name, pre);
    for (auto& r : graded_closure(bundle, graded_name)) artifact.resources.push_back(r);

    if (what == "em-enumerate") {
      auto algebras = enumerate_graded_algebras(entry.monad, bound);
      std::size_t i = 0;
      for (const auto& alg : algebras)
        artifact.resources.push_back(
            {"algebra", graded_name + "-algebra-" + std::to_string(i++), AlgebraEntry{alg, graded_name}});
    } else if (what == "em-tensor") {
      const AlgebraEntry& a = bundle.get<AlgebraEntry>(lhs);
      const AlgebraEntry& b = bundle.get<AlgebraEntry>(rhs);
      for (const auto& side : {std::make_pair(lhs, &a), std::make_pair(rhs, &b)}) {
        CheckReport r = check_graded_algebra(side.second->value, entry.monad);
        if (!r.pass()) return prerequisite_failed(side.first, r);
      }
      GradedAlgebra tensored = tensor_algebras(*entry.commutative, a.value, b.value);
      artifact.resources.push_back(
          {"algebra", lhs + "⊗" + rhs, AlgebraEntry{tensored, graded_name}});
    } else if (what == "unit-algebra") {
      artifact.resources.push_back(
          {"algebra", graded_name + "-unit-algebra", AlgebraEntry{unit_algebra(*entry.commutative), graded_name}});
    } else {
      throw MalformedInput("unknown construction '" + what + "'");
    }
  }
  emit(canonical_dump(bundle_to_json(artifact)), out_path);
  return 0;
} catch (const VariantMismatch& e) {
  // A guarded precondition (e.g. tensoring algebras over a lax instance), not
  // malformed input.
  json j;
  j["error"] = e.what();
  std::cout << canonical_dump(j);
  return 1;
} catch (const NonStrictGrading& e) {
  json j;
  j["error"] = e.what();
  std::cout << canonical_dump(j);
  return 1;
}

int cmd_translate(const std::string& path, const std::string& direction, const std::string& pairing_name,
                  const std::string& subject, const std::string& out_path) {
  Bundle bundle = load_bundle_file(path);
  const std::string pname = unique_resource_of_kind(bundle, "pairing", pairing_name);
  const LocalisablePairing& pairing = bundle.get<LocalisablePairing>(pname);

  Bundle artifact;
  artifact.name = bundle.name;
  artifact.suite = bundle.suite;

  try {
    // The translated resource takes the place of its source, so a round trip
    // reproduces the input file byte for byte.
    if (direction == "to-graded") {
      const std::string fname = unique_resource_of_kind(bundle, "family", subject);
      const MonadMorphismFamily& family = bundle.get<MonadMorphismFamily>(fname);
      GradedMorphism h = theta_to_graded(family, pairing);
      for (const auto& r : bundle.resources)
        if (r.name == fname)
          artifact.resources.push_back({"morphism", fname + "~graded", h});
        else
          artifact.resources.push_back(r);
    } else if (direction == "to-presheaf") {
      const std::string mname = unique_resource_of_kind(bundle, "morphism", subject);
      const GradedMorphism& h = bundle.get<GradedMorphism>(mname);
      MonadMorphismFamily family = theta_from_graded(h, pairing);
      const std::string fname = mname.size() > 7 && mname.substr(mname.size() - 7) == "~graded"
                                    ? mname.substr(0, mname.size() - 7)
                                    : mname + "~family";
      for (const auto& r : bundle.resources)
        if (r.name == mname)
          artifact.resources.push_back({"family", fname, family});
        else
          artifact.resources.push_back(r);
    } else {
      throw MalformedInput("unknown direction '" + direction + "'");
    }
  } catch (const PairingMismatch& e) {
    json j;
    j["error"] = e.what();
    std::cout << canonical_dump(j);
    return 1;
  } catch (const NotIdentityCarrier& e) {
    json j;
    j["error"] = e.what();
    std::cout << canonical_dump(j);
    return 1;
  }
  emit(canonical_dump(bundle_to_json(artifact)), out_path);
  return 0;
}

int cmd_explain(const std::string& path, const std::string& witness_id, std::string suite) {
  Bundle bundle = load_bundle_file(path);
  if (suite.empty()) suite = bundle.suite;
  SuiteResult result = run_suite(bundle, suite, jobs_from_env());
  for (const auto& v : result.verdicts)
    for (const auto& w : v.report.witnesses) {
      json wj = witness_to_json(w);
      if (wj.at("witness_id").get<std::string>() != witness_id) continue;
      std::cout << "witness " << witness_id << "\n";
      std::cout << "  resource: " << v.resource << " [" << v.check << "]\n";
      std::cout << "  law:      " << w.law_id << "\n";
      if (!w.binding.empty()) {
        std::cout << "  binding: ";
        for (const auto& [k, val] : w.binding) std::cout << " " << k << "=" << val;
        std::cout << "\n";
      }
      std::cout << "  category: " << w.category << "\n";
      auto show_path = [&](const char* label, const std::vector<std::string>& p,
                           const std::string& res) {
        std::cout << "  " << label << ":";
        if (p.empty()) std::cout << " (structural)";
        for (const auto& step : p) std::cout << " " << step;
        std::cout << "  => " << res << "\n";
      };
      show_path("lhs", w.lhs_path, w.lhs_result);
      show_path("rhs", w.rhs_path, w.rhs_result);
      std::cout << "  the two legs must evaluate to the same morphism; re-evaluate with the\n"
                   "  bundle's composition tables to reproduce the failure.\n";
      return 0;
    }
  std::cerr << "no witness with id " << witness_id << " in suite " << suite << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category workbench for graded monads"};
  app.require_subcommand(1);

  std::string path, suite, format = "json", out_path, what, target, lhs, rhs, direction, subject,
                    witness_id, pairing_name;
  bool canonical = false;
  std::size_t bound = 200000;

  auto* check = app.add_subcommand("check", "run a law suite over a bundle");
  check->add_option("path", path)->required();
  check->add_option("--suite", suite);
  check->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  check->add_flag("--canonical", canonical, "omit volatile fields from the report");
  check->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "build a derived artifact");
  construct->add_option("path", path)->required();
  construct->add_option("--what", what)
      ->required()
      ->check(CLI::IsMember({"kleisli", "em-enumerate", "em-tensor", "unit-algebra"}));
  construct->add_option("--target", target, "graded resource to construct from");
  construct->add_option("--lhs", lhs);
  construct->add_option("--rhs", rhs);
  construct->add_option("--bound", bound);
  construct->add_option("--out", out_path);

  auto* translate = app.add_subcommand("translate", "move morphisms through the localisable correspondence");
  translate->add_option("path", path)->required();
  translate->add_option("--direction", direction)
      ->required()
      ->check(CLI::IsMember({"to-graded", "to-presheaf"}));
  translate->add_option("--pairing", pairing_name);
  translate->add_option("--subject", subject, "family or morphism resource to translate");
  translate->add_option("--out", out_path);

  auto* explain = app.add_subcommand("explain", "print both legs of a failed diagram");
  explain->add_option("path", path)->required();
  explain->add_option("witness", witness_id)->required();
  explain->add_option("--suite", suite);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, suite, format, canonical, out_path);
    if (construct->parsed()) return cmd_construct(path, what, target, lhs, rhs, bound, out_path);
    if (translate->parsed()) return cmd_translate(path, direction, pairing_name, subject, out_path);
    if (explain->parsed()) return cmd_explain(path, witness_id, suite);
  } catch (const gmcat::Error& e) {
    nlohmann::json j;
    j["error"] = e.what();
    std::cerr << gmcat::canonical_dump(j);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
