#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace gmcat;
using namespace testsupport;

namespace {

FinCategory terminal() { return terminal_category(); }

// Naive re-implementation of the category laws, used as an independent
// oracle: raw loops over the tables, no shared code with check_category.
bool naive_category_ok(const FinCategory& c) {
  for (const auto& [pair, gf] : c.comp) {
    const Morphism* g = c.find_morphism(pair.first);
    const Morphism* f = c.find_morphism(pair.second);
    const Morphism* h = c.find_morphism(gf);
    if (!g || !f || !h) return false;
    if (h->dom != f->dom || h->cod != g->cod) return false;
  }
  for (const auto& m : c.morphisms) {
    auto right = c.comp.find({m.id, c.identity.at(m.dom)});
    auto left = c.comp.find({c.identity.at(m.cod), m.id});
    if (right == c.comp.end() || right->second != m.id) return false;
    if (left == c.comp.end() || left->second != m.id) return false;
  }
  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms)
      for (const auto& f : c.morphisms) {
        if (h.dom != g.cod || g.dom != f.cod) continue;
        auto gf = c.comp.find({g.id, f.id});
        auto hg = c.comp.find({h.id, g.id});
        if (gf == c.comp.end() || hg == c.comp.end()) return false;
        auto l = c.comp.find({h.id, gf->second});
        auto r = c.comp.find({hg->second, f.id});
        if (l == c.comp.end() || r == c.comp.end() || l->second != r->second) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("terminal category passes") {
  CHECK(check_category(terminal()).pass());
}

TEST_CASE("walking arrow passes") {
  CHECK(check_category(stock::walking_arrow()).pass());
}

TEST_CASE("redirected identity composite is caught with a witness") {
  FinCategory c = stock::walking_arrow();
  c.comp[{"id_b", "f"}] = "id_b";
  CheckReport r = check_category(c);
  CHECK_FALSE(r.pass());
  CHECK(r.law_failed("identity-law"));
  bool bound_to_f = false;
  for (const auto& w : r.witnesses)
    if (w.law_id == "identity-law" && w.binding.count("f") && w.binding.at("f") == "f") {
      bound_to_f = true;
      CHECK(w.lhs_result != w.rhs_result);
      CHECK(replay_witness(c, w));
    }
  CHECK(bound_to_f);
}

TEST_CASE("malformed tables are rejected, not reported") {
  FinCategory partial = stock::walking_arrow();
  partial.comp.erase({"id_b", "f"});
  CHECK_THROWS_AS(check_category(partial), MalformedInput);

  FinCategory dangling = stock::walking_arrow();
  dangling.comp[{"id_b", "f"}] = "nope";
  CHECK_THROWS_AS(check_category(dangling), MalformedInput);

  FinCategory extra = stock::walking_arrow();
  extra.comp[{"f", "id_b"}] = "f";  // not a composable pair
  CHECK_THROWS_AS(check_category(extra), MalformedInput);
}

TEST_CASE("identity and constant functors pass") {
  FinCategory w = stock::walking_arrow();
  CHECK(check_functor(id_functor(w)).pass());
  CHECK(check_functor(const_functor(w, w, "b")).pass());
}

TEST_CASE("boundary-breaking functor fails with a witness") {
  FinCategory w = stock::walking_arrow();
  Functor f = id_functor(w);
  f.mor_map["f"] = "id_a";
  CheckReport r = check_functor(f);
  CHECK_FALSE(r.pass());
  CHECK(r.law_failed("functor-boundary"));
}

TEST_CASE("identity transformation is natural") {
  Functor idw = id_functor(stock::walking_arrow());
  CHECK(check_naturality(id_nattrans(idw)).pass());
}

TEST_CASE("boundary-correct components into a thin category are natural") {
  // Functors into a thin category: any choice of boundary-correct components
  // commutes.
  FinCategory thin = stock::chain2_up().base;
  FinCategory w = stock::walking_arrow();
  Functor f = const_functor(w, thin, "0");
  Functor g = const_functor(w, thin, "1");
  NatTrans t;
  t.src = f;
  t.dst = g;
  for (const auto& obj : w.objects) t.components[obj] = "0->1";
  CHECK(check_naturality(t).pass());
}

TEST_CASE("swapped components fail naturality with a square witness") {
  FinCategory w = stock::walking_arrow();
  Functor idw = id_functor(w);
  Functor cb = const_functor(w, w, "b");
  NatTrans t;
  t.src = idw;
  t.dst = cb;
  t.components = {{"a", "f"}, {"b", "id_b"}};
  CHECK(check_naturality(t).pass());
  NatTrans swapped = t;
  swapped.components = {{"a", "id_b"}, {"b", "f"}};
  CheckReport r = check_naturality(swapped);
  CHECK_FALSE(r.pass());
  CHECK((r.law_failed("naturality") || r.law_failed("component-boundary")));
}

TEST_CASE("products: unit, counting and squaring") {
  FinCategory one = terminal();
  FinCategory w = stock::walking_arrow();

  FinCategory unit_product = product_category(one, w);
  CHECK(unit_product.objects.size() == w.objects.size());
  CHECK(unit_product.morphisms.size() == w.morphisms.size());

  FinCategory square = product_category(w, w);
  CHECK(square.objects.size() == 4);
  CHECK(square.morphisms.size() == 9);

  FinCategory one_by_one = product_category(one, one);
  CHECK(one_by_one.objects.size() == 1);
  CHECK(one_by_one.morphisms.size() == 1);
}

TEST_CASE("products of valid categories are valid (stock and randomized)") {
  auto pool = base_pool();
  for (const auto& a : pool)
    for (const auto& b : pool)
      if (a.objects.size() * b.objects.size() <= 8) CHECK(check_category(product_category(a, b)).pass());

  std::mt19937 rng(20260811);
  for (int i = 0; i < 25; ++i) {
    const FinCategory& a = pick_base(pool, rng);
    const FinCategory& b = pick_base(pool, rng);
    CHECK(check_category(product_category(a, b)).pass());
  }
}

TEST_CASE("checker verdicts agree with a naive re-implementation") {
  auto pool = base_pool();
  for (const auto& c : pool) {
    CHECK(check_category(c).pass() == naive_category_ok(c));
  }
  // All single re-pointings of every comp entry, both verdicts in lockstep.
  std::size_t disagreements = 0;
  for (const auto& base : pool) {
    for (const auto& [pair, gf] : base.comp)
      for (const auto& alt : base.morphisms) {
        if (alt.id == gf) continue;
        FinCategory mutated = base;
        mutated.comp[pair] = alt.id;
        bool checker;
        try {
          checker = check_category(mutated).pass();
        } catch (const MalformedInput&) {
          continue;
        }
        if (checker != naive_category_ok(mutated)) ++disagreements;
      }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("witness replay reproduces failures on mutated instances") {
  FinCategory c = stock::idem_monoid();
  c.comp[{"e", "e"}] = "1";  // break idempotence
  CheckReport r = check_category(c);
  CHECK_FALSE(r.pass());
  for (const auto& w : r.witnesses) {
    if (w.lhs_path.empty() && w.rhs_path.empty()) continue;
    CHECK(replay_witness(c, w));
  }
}

TEST_CASE("compose_path folds first-applied-first") {
  FinCategory w = stock::walking_arrow();
  auto r = compose_path(w, {"id_a", "f", "id_b"});
  REQUIRE(r.has_value());
  CHECK(*r == "f");
  CHECK_FALSE(compose_path(w, {"f", "f"}).has_value());
}
