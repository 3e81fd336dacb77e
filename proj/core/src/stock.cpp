#include "gmcat/stock.hpp"

#include "gmcat/errors.hpp"

namespace gmcat {
namespace stock {

FinCategory walking_arrow() {
  FinCategory c;
  c.name = "walking-arrow";
  c.objects = {"a", "b"};
  c.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}};
  c.identity = {{"a", "id_a"}, {"b", "id_b"}};
  c.comp[{"id_a", "id_a"}] = "id_a";
  c.comp[{"id_b", "id_b"}] = "id_b";
  c.comp[{"f", "id_a"}] = "f";
  c.comp[{"id_b", "f"}] = "f";
  return c;
}

FinCategory parallel_pair() {
  FinCategory c;
  c.name = "parallel-pair";
  c.objects = {"a", "b"};
  c.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"p", "a", "b"}, {"q", "a", "b"}};
  c.identity = {{"a", "id_a"}, {"b", "id_b"}};
  c.comp[{"id_a", "id_a"}] = "id_a";
  c.comp[{"id_b", "id_b"}] = "id_b";
  c.comp[{"p", "id_a"}] = "p";
  c.comp[{"id_b", "p"}] = "p";
  c.comp[{"q", "id_a"}] = "q";
  c.comp[{"id_b", "q"}] = "q";
  return c;
}

FinCategory idem_monoid() {
  FinCategory c;
  c.name = "idem-monoid";
  c.objects = {"*"};
  c.morphisms = {{"1", "*", "*"}, {"e", "*", "*"}};
  c.identity = {{"*", "1"}};
  c.comp[{"1", "1"}] = "1";
  c.comp[{"1", "e"}] = "e";
  c.comp[{"e", "1"}] = "e";
  c.comp[{"e", "e"}] = "e";
  return c;
}

FinCategory discrete(std::size_t n) {
  FinCategory c;
  c.name = "discrete" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string o = "o" + std::to_string(i);
    c.objects.push_back(o);
    c.morphisms.push_back({"id_" + o, o, o});
    c.identity[o] = "id_" + o;
    c.comp[{"id_" + o, "id_" + o}] = "id_" + o;
  }
  return c;
}

Semilattice chain2(const std::string& name) { return chain(2, name); }

Semilattice chain(std::size_t n, const std::string& name) {
  Semilattice s;
  s.name = name;
  for (std::size_t i = 0; i < n; ++i) s.elements.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.leq.insert({std::to_string(i), std::to_string(j)});
  return s;
}

Semilattice diamond() {
  Semilattice s;
  s.name = "diamond";
  s.elements = {"bot", "a", "b", "top"};
  for (const auto& e : s.elements) s.leq.insert({e, e});
  s.leq.insert({"bot", "a"});
  s.leq.insert({"bot", "b"});
  s.leq.insert({"bot", "top"});
  s.leq.insert({"a", "top"});
  s.leq.insert({"b", "top"});
  return s;
}

MonoidalStructure terminal_monoidal() {
  Semilattice one;
  one.name = "unit-lattice";
  one.elements = {"*"};
  one.leq = {{"*", "*"}};
  return thin_from_semilattice(one, ThinArrows::up);
}

MonoidalStructure chain2_up() { return thin_from_semilattice(chain2("chain2"), ThinArrows::up); }

MonoidalStructure chain2_down() { return thin_from_semilattice(chain2("chain2op"), ThinArrows::down); }

MonoidalStructure monoid_monoidal() {
  FinCategory c = idem_monoid();
  MonoidalStructure m;
  m.base = c;
  m.unit = "*";
  m.tensor.src = product_category(c, c);
  m.tensor.dst = c;
  m.tensor.obj_map[pair_id("*", "*")] = "*";
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms)
      m.tensor.mor_map[pair_id(f.id, g.id)] = c.compose(f.id, g.id);
  m.assoc[{"*", "*", "*"}] = "1";
  m.assoc_inv[{"*", "*", "*"}] = "1";
  m.lunit["*"] = "1";
  m.lunit_inv["*"] = "1";
  m.runit["*"] = "1";
  m.runit_inv["*"] = "1";
  return m;
}

MonoidalStructure nonthin2_monoidal() { return product_monoidal(chain2_down(), monoid_monoidal()); }

MonoidalStructure nonthin3_monoidal() {
  return product_monoidal(thin_from_semilattice(chain(3, "chain3op"), ThinArrows::down),
                          monoid_monoidal());
}

PlainMonad identity_monad(const FinCategory& c) {
  PlainMonad m;
  m.base = c;
  m.T = id_functor(c);
  m.mu = id_nattrans(m.T);
  m.eta = id_nattrans(m.T);
  return m;
}

namespace {

// The functor u∧-: thin meet category to itself (either orientation).
Functor meet_functor(const MonoidalStructure& thin, const std::string& u) {
  Functor f;
  f.src = thin.base;
  f.dst = thin.base;
  for (const auto& a : thin.base.objects) f.obj_map[a] = thin.tensor_obj(u, a);
  for (const auto& m : thin.base.morphisms)
    f.mor_map[m.id] = thin.tensor_obj(u, m.dom) + "->" + thin.tensor_obj(u, m.cod);
  return f;
}

// Thin categories have at most one morphism per hom; fetch it.
std::string thin_hom(const FinCategory& c, const std::string& a, const std::string& b) {
  auto h = c.hom(a, b);
  if (h.size() != 1)
    throw MalformedInput("expected a unique morphism " + a + " -> " + b + " in '" + c.name + "'");
  return h.front();
}

NatTrans thin_cell(const Functor& src, const Functor& dst) {
  NatTrans t;
  t.src = src;
  t.dst = dst;
  for (const auto& [a, fa] : src.obj_map) t.components[a] = thin_hom(src.dst, fa, dst.obj_map.at(a));
  return t;
}

GradedMonad reader_graded(const MonoidalStructure& thin) {
  GradedMonad t;
  t.grading = thin;
  t.base = thin.base;
  for (const auto& u : thin.base.objects) t.F_obj[u] = meet_functor(thin, u);
  for (const auto& m : thin.base.morphisms)
    t.F_mor[m.id] = thin_cell(t.F_obj.at(m.dom), t.F_obj.at(m.cod));
  for (const auto& u : thin.base.objects)
    for (const auto& v : thin.base.objects) {
      NatTrans g = thin_cell(compose_functors(t.F_obj.at(u), t.F_obj.at(v)),
                             t.F_obj.at(thin.tensor_obj(u, v)));
      t.gamma[{u, v}] = g;
    }
  t.delta = thin_cell(id_functor(thin.base), t.F_obj.at(thin.unit));
  return t;
}

}  // namespace

GradedMonad identity_graded() { return from_plain_monad(identity_monad(walking_arrow())); }

GradedMonad truncation_graded() {
  MonoidalStructure z = chain2_down();
  FinCategory w = walking_arrow();
  GradedMonad t;
  t.grading = z;
  t.base = w;
  Functor idw = id_functor(w);
  Functor constb = const_functor(w, w, "b");
  t.F_obj["1"] = idw;
  t.F_obj["0"] = constb;
  t.F_mor["1->1"] = id_nattrans(idw);
  t.F_mor["0->0"] = id_nattrans(constb);
  {
    NatTrans truncate;
    truncate.src = idw;
    truncate.dst = constb;
    truncate.components = {{"a", "f"}, {"b", "id_b"}};
    t.F_mor["1->0"] = truncate;
  }
  for (const auto& u : z.base.objects)
    for (const auto& v : z.base.objects) {
      Functor src = compose_functors(t.F_obj.at(u), t.F_obj.at(v));
      const Functor& dst = t.F_obj.at(z.tensor_obj(u, v));
      NatTrans g;
      g.src = src;
      g.dst = dst;
      for (const auto& a : w.objects) g.components[a] = w.identity_of(src.on_object(a));
      t.gamma[{u, v}] = g;
    }
  {
    NatTrans d;
    d.src = id_functor(w);
    d.dst = idw;
    for (const auto& a : w.objects) d.components[a] = w.identity_of(a);
    t.delta = d;
  }
  return t;
}

GradedMonad reader_graded_up() { return reader_graded(chain2_up()); }

GradedMonad reader_graded_down() { return reader_graded(chain2_down()); }

GradedMonad identity_family_graded(const FinCategory& base, const MonoidalStructure& grading) {
  GradedMonad t;
  t.grading = grading;
  t.base = base;
  Functor idc = id_functor(base);
  for (const auto& u : grading.base.objects) t.F_obj[u] = idc;
  for (const auto& m : grading.base.morphisms) t.F_mor[m.id] = id_nattrans(idc);
  NatTrans idcell = id_nattrans(idc);
  for (const auto& u : grading.base.objects)
    for (const auto& v : grading.base.objects) t.gamma[{u, v}] = idcell;
  t.delta = idcell;
  return t;
}

CommutativeGradedMonad reader_commutative() {
  MonoidalStructure thin = chain2_up();
  CommutativeGradedMonad t;
  t.underlying = reader_graded(thin);
  t.variant = Variant::oplax;
  t.base_monoidal = thin;
  for (const auto& u : thin.base.objects) {
    MonoidalFunctor shape;
    shape.variant = Variant::oplax;
    shape.src = thin;
    shape.dst = thin;
    shape.F = t.underlying.F_at(u);
    auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(shape);
    GradePhi gp;
    gp.phi = thin_cell(phi_src, phi_dst);
    gp.phibar = thin_hom(thin.base, thin.tensor_obj(u, thin.unit), thin.unit);
    t.Phi[u] = gp;
  }
  return t;
}

CommutativeGradedMonad monoid_commutative() {
  FinCategory c = idem_monoid();
  MonoidalStructure bm = monoid_monoidal();
  CommutativeGradedMonad t;
  t.underlying = identity_family_graded(c, terminal_monoidal());
  t.variant = Variant::oplax;
  t.base_monoidal = bm;
  MonoidalFunctor shape;
  shape.variant = Variant::oplax;
  shape.src = bm;
  shape.dst = bm;
  shape.F = id_functor(c);
  auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(shape);
  GradePhi gp;
  gp.phi.src = phi_src;
  gp.phi.dst = phi_dst;
  gp.phi.components[pair_id("*", "*")] = "1";
  gp.phibar = "1";
  t.Phi["*"] = gp;
  return t;
}

namespace {

PresheafOfCategories constant_presheaf(const MonoidalStructure& site, const FinCategory& level,
                                       const std::map<std::string, Functor>& restrictions) {
  PresheafOfCategories p;
  p.site = site;
  for (const auto& u : site.base.objects) p.at[u] = level;
  for (const auto& m : site.base.morphisms) {
    auto it = restrictions.find(m.id);
    p.restrict_along[m.id] = it != restrictions.end() ? it->second : id_functor(level);
  }
  return p;
}

FormalMonad formal_from_graded(const PresheafOfCategories& p, const GradedMonad& t,
                               const MonoidalStructure& grading) {
  FormalMonad m;
  m.base = p;
  for (const auto& u : grading.base.objects) {
    m.T[u] = t.F_at(u);
    m.mu[u] = t.gamma_at(u, u);
    NatTrans eta;
    eta.src = id_functor(t.base);
    eta.dst = t.F_at(u);
    const std::string bang = grading.unit + "->" + u;  // unit-initial thin sites
    NatTrans composite = vcomp(t.F_on(bang), t.delta);
    eta.components = composite.components;
    m.eta[u] = eta;
  }
  return m;
}

}  // namespace

PresheafOfCategories reader_presheaf() {
  MonoidalStructure site = chain2_down();
  std::map<std::string, Functor> restrictions;
  restrictions["1->0"] = meet_functor(site, "0");
  return constant_presheaf(site, site.base, restrictions);
}

FormalMonad reader_formal_identity() {
  PresheafOfCategories p = reader_presheaf();
  return formal_from_graded(p, identity_family_graded(p.site.base, p.site), p.site);
}

FormalMonad reader_formal_meet() {
  PresheafOfCategories p = reader_presheaf();
  return formal_from_graded(p, reader_graded_down(), p.site);
}

MonadMorphismFamily reader_family() {
  MonadMorphismFamily f;
  f.src = reader_formal_meet();
  f.dst = reader_formal_identity();
  for (const auto& u : f.src.base.site.base.objects)
    f.phibar[u] = thin_cell(f.dst.T.at(u), f.src.T.at(u));
  return f;
}

LocalisablePairing reader_pairing() {
  LocalisablePairing p;
  p.graded_src = reader_graded_down();
  p.graded_dst = identity_family_graded(chain2_down().base, chain2_down());
  p.formal_src = reader_formal_meet();
  p.formal_dst = reader_formal_identity();
  for (const auto& u : p.graded_src.grading.base.objects) p.component_map[u] = u;
  return p;
}

PresheafOfCategories monoid_presheaf() {
  return constant_presheaf(chain2_down(), idem_monoid(), {});
}

FormalMonad monoid_formal_identity() {
  PresheafOfCategories p = monoid_presheaf();
  return formal_from_graded(p, identity_family_graded(idem_monoid(), p.site), p.site);
}

MonadMorphismFamily monoid_family() {
  MonadMorphismFamily f;
  f.src = monoid_formal_identity();
  f.dst = monoid_formal_identity();
  for (const auto& u : f.src.base.site.base.objects)
    f.phibar[u] = id_nattrans(f.dst.T.at(u));
  return f;
}

LocalisablePairing monoid_pairing() {
  LocalisablePairing p;
  p.graded_src = identity_family_graded(idem_monoid(), chain2_down());
  p.graded_dst = p.graded_src;
  p.formal_src = monoid_formal_identity();
  p.formal_dst = p.formal_src;
  for (const auto& u : p.graded_src.grading.base.objects) p.component_map[u] = u;
  return p;
}

PlainMonad meet_with_bottom_monad() {
  MonoidalStructure thin = chain2_down();
  PlainMonad m;
  m.base = thin.base;
  m.T = meet_functor(thin, "0");
  m.mu = thin_cell(compose_functors(m.T, m.T), m.T);
  m.eta = thin_cell(id_functor(thin.base), m.T);
  return m;
}

namespace {

Resource category_resource(const FinCategory& c) { return {"category", c.name, c}; }

Resource monoidal_resource(const std::string& name, const MonoidalStructure& m) {
  return {"monoidal", name, m};
}

}  // namespace

Bundle terminal_identity_bundle() {
  Bundle b;
  b.name = "terminal-identity";
  GradedMonad t = identity_graded();
  b.resources.push_back(category_resource(t.grading.base));
  b.resources.push_back(monoidal_resource("grading-1", t.grading));
  b.resources.push_back(category_resource(t.base));
  b.resources.push_back({"graded", "identity-monad", GradedEntry{t, std::nullopt}});
  return b;
}

Bundle truncation_bundle() {
  Bundle b;
  b.name = "truncation";
  GradedMonad t = truncation_graded();
  b.resources.push_back(category_resource(t.grading.base));
  b.resources.push_back(monoidal_resource("chain2op-monoidal", t.grading));
  b.resources.push_back(category_resource(t.base));
  b.resources.push_back({"graded", "truncation-monad", GradedEntry{t, std::nullopt}});
  return b;
}

Bundle thin_reader_bundle() {
  Bundle b;
  b.name = "thin-reader";
  CommutativeGradedMonad t = reader_commutative();
  b.resources.push_back(category_resource(t.underlying.base));
  b.resources.push_back(monoidal_resource("chain2-monoidal", t.base_monoidal));
  b.resources.push_back({"graded", "reader-monad", GradedEntry{t.underlying, t}});
  auto algebras = enumerate_graded_algebras(t.underlying, 10000);
  for (std::size_t i = 0; i < algebras.size() && i < 2; ++i)
    b.resources.push_back(
        {"algebra", "reader-alg-" + std::to_string(i), AlgebraEntry{algebras[i], "reader-monad"}});
  return b;
}

Bundle monoid_commutative_bundle() {
  Bundle b;
  b.name = "monoid-commutative";
  CommutativeGradedMonad t = monoid_commutative();
  b.resources.push_back(category_resource(t.underlying.grading.base));
  b.resources.push_back(monoidal_resource("grading-unit", t.underlying.grading));
  b.resources.push_back(category_resource(t.underlying.base));
  b.resources.push_back(monoidal_resource("monoid-monoidal", t.base_monoidal));
  b.resources.push_back({"graded", "monoid-monad", GradedEntry{t.underlying, t}});
  return b;
}

Bundle reader_pairing_bundle() {
  Bundle b;
  b.name = "presheaf-pairing";
  LocalisablePairing p = reader_pairing();
  b.resources.push_back(category_resource(p.graded_src.base));
  b.resources.push_back(monoidal_resource("chain2op-monoidal", p.graded_src.grading));
  b.resources.push_back({"graded", "graded-id", GradedEntry{p.graded_src, std::nullopt}});
  b.resources.push_back({"graded", "graded-reader", GradedEntry{p.graded_dst, std::nullopt}});
  b.resources.push_back({"presheaf", "levels", p.formal_src.base});
  b.resources.push_back({"formal-monad", "formal-id", p.formal_src});
  b.resources.push_back({"formal-monad", "formal-reader", p.formal_dst});
  b.resources.push_back({"family", "family", reader_family()});
  b.resources.push_back({"pairing", "pairing", p});
  return b;
}

Bundle monoid_pairing_bundle() {
  Bundle b;
  b.name = "presheaf-pairing-monoid";
  LocalisablePairing p = monoid_pairing();
  b.resources.push_back(category_resource(p.formal_src.base.site.base));
  b.resources.push_back(monoidal_resource("chain2op-monoidal", p.formal_src.base.site));
  b.resources.push_back(category_resource(p.graded_src.base));
  b.resources.push_back({"graded", "graded-id", GradedEntry{p.graded_src, std::nullopt}});
  b.resources.push_back({"presheaf", "levels", p.formal_src.base});
  b.resources.push_back({"formal-monad", "formal-id", p.formal_src});
  b.resources.push_back({"family", "family", monoid_family()});
  b.resources.push_back({"pairing", "pairing", p});
  return b;
}

Bundle nonthin_monoidal_bundle() {
  Bundle b;
  b.name = "nonthin-monoidal";
  MonoidalStructure two = nonthin2_monoidal();
  MonoidalStructure three = nonthin3_monoidal();
  b.resources.push_back(category_resource(two.base));
  b.resources.push_back(monoidal_resource("nonthin2-monoidal", two));
  b.resources.push_back(category_resource(three.base));
  b.resources.push_back(monoidal_resource("nonthin3-monoidal", three));
  return b;
}

std::vector<Bundle> corpus() {
  return {terminal_identity_bundle(), truncation_bundle(),      thin_reader_bundle(),
          monoid_commutative_bundle(), reader_pairing_bundle(), monoid_pairing_bundle(),
          nonthin_monoidal_bundle()};
}

}  // namespace stock
}  // namespace gmcat
