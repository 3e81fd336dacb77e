#include <doctest.h>

#include "support.hpp"

using namespace gmcat;
using namespace testsupport;

TEST_CASE("thin semilattice structures pass the monoidal laws") {
  CHECK(check_monoidal(stock::terminal_monoidal()).pass());
  CHECK(check_monoidal(stock::chain2_up()).pass());
  CHECK(check_monoidal(stock::chain2_down()).pass());
  CHECK(check_monoidal(thin_from_semilattice(stock::diamond(), ThinArrows::up)).pass());
}

TEST_CASE("semilattice shape: counts, unit, thinness") {
  MonoidalStructure m = stock::chain2_up();
  CHECK(m.base.objects.size() == 2);
  CHECK(m.base.morphisms.size() == 3);
  CHECK(m.unit == "1");
  CHECK(m.base.is_thin());
  CHECK(m.is_strict());

  MonoidalStructure one = stock::terminal_monoidal();
  CHECK(one.base.objects.size() == 1);
  CHECK(one.base.morphisms.size() == 1);
}

TEST_CASE("nabla is the unique codiagonal on thin structures") {
  MonoidalStructure m = stock::chain2_up();
  CHECK(m.nabla("0") == "0->0");
  CHECK(m.nabla("1") == "1->1");
}

TEST_CASE("non-semilattices are rejected with the offending pair") {
  Semilattice s;
  s.name = "antichain";
  s.elements = {"x", "y"};
  s.leq = {{"x", "x"}, {"y", "y"}};
  CHECK_THROWS_AS(thin_from_semilattice(s, ThinArrows::up), NotASemilattice);
}

TEST_CASE("a re-pointed unitor inverse fails the iso law") {
  MonoidalStructure m = stock::chain2_up();
  m.runit_inv["0"] = "0->1";
  CheckReport r = check_monoidal(m);
  CHECK_FALSE(r.pass());
  CHECK(r.law_failed("unitor-iso"));
}

TEST_CASE("non-thin stock structures pass") {
  CHECK(check_monoidal(stock::monoid_monoidal()).pass());
  CHECK(check_monoidal(stock::nonthin2_monoidal()).pass());
  CHECK(check_monoidal(stock::nonthin3_monoidal()).pass());
}

TEST_CASE("monoidal products of passing structures pass") {
  CHECK(check_monoidal(product_monoidal(stock::chain2_up(), stock::monoid_monoidal())).pass());
  CHECK(check_monoidal(product_monoidal(stock::terminal_monoidal(), stock::chain2_down())).pass());
}

TEST_CASE("identity monoidal endofunctors pass in both variants") {
  for (Variant v : {Variant::lax, Variant::oplax}) {
    CHECK(check_monoidal_functor(trivial_monoidal_endofunctor(stock::chain2_up(), v)).pass());
    CHECK(check_monoidal_functor(trivial_monoidal_endofunctor(stock::monoid_monoidal(), v)).pass());
  }
}

namespace {

// meet-with-bottom as a lax monoidal endofunctor of the down chain.
MonoidalFunctor meet_with_bottom_functor() {
  MonoidalStructure m = stock::chain2_down();
  MonoidalFunctor f;
  f.variant = Variant::lax;
  f.src = m;
  f.dst = m;
  f.F = stock::meet_with_bottom_monad().T;
  auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(f);
  f.phi.src = phi_src;
  f.phi.dst = phi_dst;
  for (const auto& obj : phi_src.src.objects) {
    auto h = m.base.hom(phi_src.on_object(obj), phi_dst.on_object(obj));
    REQUIRE(h.size() == 1);
    f.phi.components[obj] = h.front();
  }
  auto hb = m.base.hom(m.unit, f.F.on_object(m.unit));
  REQUIRE(hb.size() == 1);
  f.phibar = hb.front();
  return f;
}

}  // namespace

TEST_CASE("meet-with-bottom is lax monoidal on the down chain") {
  CHECK(check_monoidal_functor(meet_with_bottom_functor()).pass());
}

TEST_CASE("mislabelled variants are flagged, not silently checked") {
  MonoidalFunctor f = meet_with_bottom_functor();
  f.variant = Variant::oplax;  // phi still oriented lax
  CHECK_THROWS_AS(check_monoidal_functor(f), VariantMismatch);
}

TEST_CASE("identity monoidal transformations pass") {
  MonoidalFunctor f = trivial_monoidal_endofunctor(stock::chain2_up(), Variant::oplax);
  MonoidalTransformation t{f, f, id_nattrans(f.F)};
  CHECK(check_monoidal_transformation(t).pass());
}

TEST_CASE("thin boundary-correct monoidal transformations pass") {
  MonoidalFunctor f = meet_with_bottom_functor();
  MonoidalFunctor id = trivial_monoidal_endofunctor(stock::chain2_down(), Variant::lax);
  // The unique cell meet-with-bottom -> Id.
  NatTrans tau;
  tau.src = f.F;
  tau.dst = id.F;
  for (const auto& obj : f.src.base.objects) {
    auto h = f.src.base.hom(f.F.on_object(obj), obj);
    REQUIRE(h.size() == 1);
    tau.components[obj] = h.front();
  }
  MonoidalTransformation t{f, id, tau};
  CHECK(check_monoidal_transformation(t).pass());
}

TEST_CASE("corrupted components on the three-object non-thin instance fail with a diagram id") {
  MonoidalStructure m = stock::nonthin3_monoidal();
  MonoidalFunctor f = trivial_monoidal_endofunctor(m, Variant::oplax);

  // Replacing every component by its idempotent twin keeps naturality but
  // breaks the unit diagram.
  MonoidalTransformation all_e{f, f, id_nattrans(f.F)};
  for (auto& [obj, comp] : all_e.underlying.components) {
    auto candidates = m.base.hom(obj, obj);
    for (const auto& cand : candidates)
      if (cand != comp) comp = cand;
  }
  CheckReport r = check_monoidal_transformation(all_e);
  CHECK_FALSE(r.pass());
  CHECK(r.law_failed("monoidal-trans-unit"));
  CHECK_FALSE(r.law_failed("naturality"));

  // A single corrupted component breaks naturality instead.
  MonoidalTransformation one_off{f, f, id_nattrans(f.F)};
  auto first = one_off.underlying.components.begin();
  for (const auto& cand : m.base.hom(first->first, first->first))
    if (cand != first->second) first->second = cand;
  CheckReport r2 = check_monoidal_transformation(one_off);
  CHECK_FALSE(r2.pass());
  CHECK(r2.law_failed("naturality"));
}

TEST_CASE("mixing lax and oplax endpoints is a variant mismatch") {
  MonoidalFunctor lax = trivial_monoidal_endofunctor(stock::chain2_up(), Variant::lax);
  MonoidalFunctor oplax = trivial_monoidal_endofunctor(stock::chain2_up(), Variant::oplax);
  MonoidalTransformation t{lax, oplax, id_nattrans(lax.F)};
  CHECK_THROWS_AS(check_monoidal_transformation(t), VariantMismatch);
}

TEST_CASE("endo closure of the identity alone") {
  EndoMonoidal e = endo_monoidal(stock::walking_arrow(), {}, {});
  CHECK(e.monoidal.base.objects.size() == 1);
  CHECK(e.monoidal.unit == "Id");
  CHECK(check_monoidal(e.monoidal).pass());
}

TEST_CASE("endo closure of meet-with-bottom has two objects") {
  MonoidalStructure thin = stock::chain2_down();
  EndoMonoidal e = endo_monoidal(thin.base, {{"T0", stock::meet_with_bottom_monad().T}}, {});
  CHECK(e.monoidal.base.objects.size() == 2);  // Id and T0, with T0∘T0 = T0
  CHECK(e.monoidal.tensor_obj("T0", "T0") == "T0");
  CHECK(check_monoidal(e.monoidal).pass());
  CHECK(e.monoidal.is_strict());
}

TEST_CASE("non-idempotent generators exceed a tight closure bound") {
  FinCategory d = stock::discrete(4);
  Functor cycle;
  cycle.src = d;
  cycle.dst = d;
  for (std::size_t i = 0; i < 4; ++i) {
    cycle.obj_map["o" + std::to_string(i)] = "o" + std::to_string((i + 1) % 4);
    cycle.mor_map["id_o" + std::to_string(i)] = "id_o" + std::to_string((i + 1) % 4);
  }
  CHECK_THROWS_AS(endo_monoidal(d, {{"P", cycle}}, {}, 3), ClosureBound);
}

TEST_CASE("endo closure includes generated transformations and stays strict") {
  FinCategory m = stock::idem_monoid();
  Functor id = id_functor(m);
  NatTrans e = id_nattrans(id);
  e.components["*"] = "e";
  EndoMonoidal endo = endo_monoidal(m, {}, {{"eps", e}});
  CHECK(endo.monoidal.base.morphisms.size() >= 2);
  CHECK(check_monoidal(endo.monoidal).pass());
  CHECK(endo.monoidal.is_strict());
}
