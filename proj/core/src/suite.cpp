#include "gmcat/suite.hpp"

#include <functional>
#include <future>
#include <set>

namespace gmcat {

bool SuiteResult::pass() const {
  for (const auto& v : verdicts)
    if (!v.report.pass()) return false;
  return true;
}

bool is_valid_suite(const std::string& suite) {
  static const std::set<std::string> suites = {"all",        "category", "monoidal", "graded",
                                               "commutative", "morphism", "algebra",  "localisable"};
  return suites.count(suite) > 0;
}

namespace {

struct PlannedCheck {
  std::string resource;
  std::string kind;
  std::string check;
  std::function<CheckReport()> run;
};

}  // namespace

SuiteResult run_suite(const Bundle& bundle, const std::string& suite, std::size_t jobs) {
  if (!is_valid_suite(suite)) throw MalformedInput("unknown suite '" + suite + "'");
  auto selected = [&](const std::string& s) { return suite == "all" || suite == s; };

  std::vector<PlannedCheck> plan;
  for (const auto& r : bundle.resources) {
    if (const auto* c = std::get_if<FinCategory>(&r.payload)) {
      if (selected("category"))
        plan.push_back({r.name, r.kind, "category", [c] { return check_category(*c); }});
    } else if (const auto* f = std::get_if<Functor>(&r.payload)) {
      if (selected("category"))
        plan.push_back({r.name, r.kind, "functor", [f] { return check_functor(*f); }});
    } else if (const auto* t = std::get_if<NatTrans>(&r.payload)) {
      if (selected("category"))
        plan.push_back({r.name, r.kind, "naturality", [t] { return check_naturality(*t); }});
    } else if (const auto* m = std::get_if<MonoidalStructure>(&r.payload)) {
      if (selected("monoidal"))
        plan.push_back({r.name, r.kind, "monoidal", [m] { return check_monoidal(*m); }});
    } else if (const auto* tm = std::get_if<ThinMonoidalEntry>(&r.payload)) {
      if (selected("monoidal"))
        plan.push_back({r.name, r.kind, "monoidal", [tm] { return check_monoidal(tm->value); }});
    } else if (const auto* mf = std::get_if<MonoidalFunctor>(&r.payload)) {
      if (selected("monoidal"))
        plan.push_back({r.name, r.kind, "monoidal-functor", [mf] { return check_monoidal_functor(*mf); }});
    } else if (const auto* mt = std::get_if<MonoidalTransformation>(&r.payload)) {
      if (selected("monoidal"))
        plan.push_back({r.name, r.kind, "monoidal-transformation",
                        [mt] { return check_monoidal_transformation(*mt); }});
    } else if (const auto* g = std::get_if<GradedEntry>(&r.payload)) {
      if (selected("graded"))
        plan.push_back({r.name, r.kind, "graded-monad", [g] { return check_graded_monad(g->monad); }});
      if (g->commutative && selected("commutative"))
        plan.push_back({r.name, r.kind, "commutative",
                        [g] { return check_commutative(*g->commutative); }});
    } else if (const auto* h = std::get_if<GradedMorphism>(&r.payload)) {
      if (selected("morphism"))
        plan.push_back({r.name, r.kind, "graded-morphism", [h] { return check_graded_morphism(*h); }});
    } else if (const auto* a = std::get_if<AlgebraEntry>(&r.payload)) {
      if (selected("algebra")) {
        const GradedMonad* monad = &bundle.get<GradedEntry>(a->monad_ref).monad;
        plan.push_back({r.name, r.kind, "algebra",
                        [a, monad] { return check_graded_algebra(a->value, *monad); }});
      }
    } else if (const auto* p = std::get_if<PresheafOfCategories>(&r.payload)) {
      if (selected("localisable"))
        plan.push_back({r.name, r.kind, "presheaf", [p] { return check_presheaf(*p); }});
    } else if (const auto* fm = std::get_if<FormalMonad>(&r.payload)) {
      if (selected("localisable"))
        plan.push_back({r.name, r.kind, "formal-monad", [fm] { return check_formal_monad(*fm); }});
    } else if (const auto* fam = std::get_if<MonadMorphismFamily>(&r.payload)) {
      if (selected("localisable"))
        plan.push_back({r.name, r.kind, "family", [fam] { return check_family(*fam); }});
    } else if (const auto* pr = std::get_if<LocalisablePairing>(&r.payload)) {
      if (selected("localisable"))
        plan.push_back({r.name, r.kind, "pairing", [pr] { return verify_pairing(*pr); }});
    }
  }

  SuiteResult result;
  result.suite = suite;
  if (jobs > 1) {
    std::vector<std::future<CheckReport>> futures;
    futures.reserve(plan.size());
    for (const auto& pc : plan)
      futures.push_back(std::async(std::launch::async, pc.run));
    for (std::size_t i = 0; i < plan.size(); ++i)
      result.verdicts.push_back({plan[i].resource, plan[i].kind, plan[i].check, futures[i].get()});
  } else {
    for (const auto& pc : plan)
      result.verdicts.push_back({pc.resource, pc.kind, pc.check, pc.run()});
  }
  return result;
}

nlohmann::json suite_result_to_json(const SuiteResult& result, const Bundle& bundle, bool canonical,
                                    double elapsed_ms) {
  nlohmann::json doc;
  doc["schema"] = "report/v1";
  doc["bundle"] = bundle.name;
  doc["suite"] = result.suite;
  doc["pass"] = result.pass();
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : result.verdicts) {
    nlohmann::json vj;
    vj["resource"] = v.resource;
    vj["kind"] = v.kind;
    vj["check"] = v.check;
    vj["pass"] = v.report.pass();
    vj["laws"] = v.report.laws;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : v.report.witnesses) ws.push_back(witness_to_json(w));
    vj["witnesses"] = ws;
    verdicts.push_back(std::move(vj));
  }
  doc["verdicts"] = verdicts;
  nlohmann::json digests = nlohmann::json::object();
  nlohmann::json resources = bundle_to_json(bundle).at("resources");
  for (const auto& rj : resources)
    digests[rj.at("name").get<std::string>()] = fnv1a_hex(canonical_dump(rj));
  doc["digests"] = digests;
  if (!canonical) doc["timing_ms"] = elapsed_ms;
  return doc;
}

}  // namespace gmcat
