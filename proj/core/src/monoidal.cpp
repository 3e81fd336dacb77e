#include "gmcat/monoidal.hpp"

#include <algorithm>

#include "gmcat/errors.hpp"

namespace gmcat {

std::string to_string(Variant v) { return v == Variant::lax ? "lax" : "oplax"; }

std::string MonoidalStructure::tensor_obj(const std::string& a, const std::string& b) const {
  return tensor.on_object(pair_id(a, b));
}

std::string MonoidalStructure::tensor_mor(const std::string& f, const std::string& g) const {
  return tensor.on_morphism(pair_id(f, g));
}

const std::string& MonoidalStructure::assoc_at(const std::string& a, const std::string& b,
                                               const std::string& c) const {
  auto it = assoc.find({a, b, c});
  if (it == assoc.end())
    throw MalformedInput("missing associator component at (" + a + "," + b + "," + c + ")");
  return it->second;
}

const std::string& MonoidalStructure::lunit_at(const std::string& a) const {
  auto it = lunit.find(a);
  if (it == lunit.end()) throw MalformedInput("missing left unitor component at " + a);
  return it->second;
}

const std::string& MonoidalStructure::runit_at(const std::string& a) const {
  auto it = runit.find(a);
  if (it == runit.end()) throw MalformedInput("missing right unitor component at " + a);
  return it->second;
}

bool MonoidalStructure::is_strict() const {
  auto is_id = [&](const std::string& m) {
    const Morphism* mor = base.find_morphism(m);
    return mor && mor->dom == mor->cod && base.identity_of(mor->dom) == m;
  };
  for (const auto& [k, v] : assoc)
    if (!is_id(v)) return false;
  for (const auto& [k, v] : lunit)
    if (!is_id(v)) return false;
  for (const auto& [k, v] : runit)
    if (!is_id(v)) return false;
  return true;
}

std::string MonoidalStructure::nabla(const std::string& u) const {
  auto candidates = base.hom(tensor_obj(u, u), u);
  if (candidates.size() != 1)
    throw MalformedInput("nabla(" + u + ") needs a unique morphism " + tensor_obj(u, u) + " -> " + u +
                         ", found " + std::to_string(candidates.size()));
  return candidates.front();
}

namespace {

void require_monoidal_tables(const MonoidalStructure& m) {
  validate_category(m.base);
  validate_functor(m.tensor);
  FinCategory expected_src = product_category(m.base, m.base);
  if (!(m.tensor.src == expected_src) || !(m.tensor.dst == m.base))
    throw ShapeMismatch("tensor must be a functor " + expected_src.name + " -> " + m.base.name +
                        ", got " + describe(m.tensor));
  if (!m.base.has_object(m.unit)) throw MalformedInput("unit object '" + m.unit + "' not in base");
  for (const auto& a : m.base.objects) {
    if (!m.lunit.count(a) || !m.lunit_inv.count(a))
      throw MalformedInput("left unitor (or inverse) missing at " + a);
    if (!m.runit.count(a) || !m.runit_inv.count(a))
      throw MalformedInput("right unitor (or inverse) missing at " + a);
    for (const auto& b : m.base.objects)
      for (const auto& c : m.base.objects)
        if (!m.assoc.count({a, b, c}) || !m.assoc_inv.count({a, b, c}))
          throw MalformedInput("associator (or inverse) missing at (" + a + "," + b + "," + c + ")");
  }
  for (const auto& [k, v] : m.assoc) m.base.morphism(v);
  for (const auto& [k, v] : m.assoc_inv) m.base.morphism(v);
  for (const auto& [k, v] : m.lunit) m.base.morphism(v);
  for (const auto& [k, v] : m.lunit_inv) m.base.morphism(v);
  for (const auto& [k, v] : m.runit) m.base.morphism(v);
  for (const auto& [k, v] : m.runit_inv) m.base.morphism(v);
}

void check_iso_pair(CheckReport& report, const FinCategory& c, const std::string& law,
                    std::map<std::string, std::string> binding, const std::string& fwd,
                    const std::string& bwd, const std::string& dom_obj, const std::string& cod_obj) {
  auto b1 = binding;
  b1["direction"] = "inverse-after";
  require_equal_paths(report, c, law, b1, {fwd, bwd}, {c.identity_of(dom_obj)});
  auto b2 = binding;
  b2["direction"] = "inverse-before";
  require_equal_paths(report, c, law, b2, {bwd, fwd}, {c.identity_of(cod_obj)});
}

}  // namespace

CheckReport check_monoidal(const MonoidalStructure& m) {
  require_monoidal_tables(m);
  CheckReport report;
  report.absorb(check_functor(m.tensor), "role", "tensor");

  const FinCategory& c = m.base;
  report.add_law("assoc-boundary");
  report.add_law("unitor-boundary");

  auto boundary = [&](const std::string& law, const std::string& mor, const std::string& dom,
                      const std::string& cod, std::map<std::string, std::string> binding) {
    const Morphism& mm = c.morphism(mor);
    if (mm.dom == dom && mm.cod == cod) return true;
    Witness w;
    w.law_id = law;
    w.binding = std::move(binding);
    w.lhs_path = {mor};
    w.lhs_result = mor;
    w.rhs_result = "expected " + dom + "->" + cod;
    w.category = c.name;
    report.add_witness(std::move(w));
    return false;
  };

  for (const auto& a : c.objects) {
    boundary("unitor-boundary", m.lunit_at(a), m.tensor_obj(m.unit, a), a, {{"A", a}, {"unitor", "lambda"}});
    boundary("unitor-boundary", m.runit_at(a), m.tensor_obj(a, m.unit), a, {{"A", a}, {"unitor", "rho"}});
    check_iso_pair(report, c, "unitor-iso", {{"A", a}, {"unitor", "lambda"}}, m.lunit_at(a),
                   m.lunit_inv.at(a), m.tensor_obj(m.unit, a), a);
    check_iso_pair(report, c, "unitor-iso", {{"A", a}, {"unitor", "rho"}}, m.runit_at(a),
                   m.runit_inv.at(a), m.tensor_obj(a, m.unit), a);
  }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects) {
        const std::string nested_l = m.tensor_obj(a, m.tensor_obj(b, d));
        const std::string nested_r = m.tensor_obj(m.tensor_obj(a, b), d);
        boundary("assoc-boundary", m.assoc_at(a, b, d), nested_l, nested_r,
                 {{"A", a}, {"B", b}, {"C", d}});
        check_iso_pair(report, c, "assoc-iso", {{"A", a}, {"B", b}, {"C", d}}, m.assoc_at(a, b, d),
                       m.assoc_inv.at({a, b, d}), nested_l, nested_r);
      }

  // Naturality of the unitors and the associator against every morphism
  // (triple of morphisms for the associator).
  for (const auto& f : c.morphisms) {
    require_equal_paths(report, c, "unitor-natural", {{"f", f.id}, {"unitor", "lambda"}},
                        {m.tensor_mor(c.identity_of(m.unit), f.id), m.lunit_at(f.cod)},
                        {m.lunit_at(f.dom), f.id});
    require_equal_paths(report, c, "unitor-natural", {{"f", f.id}, {"unitor", "rho"}},
                        {m.tensor_mor(f.id, c.identity_of(m.unit)), m.runit_at(f.cod)},
                        {m.runit_at(f.dom), f.id});
  }
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms)
      for (const auto& h : c.morphisms) {
        require_equal_paths(
            report, c, "assoc-natural", {{"f", f.id}, {"g", g.id}, {"h", h.id}},
            {m.tensor_mor(f.id, m.tensor_mor(g.id, h.id)), m.assoc_at(f.cod, g.cod, h.cod)},
            {m.assoc_at(f.dom, g.dom, h.dom), m.tensor_mor(m.tensor_mor(f.id, g.id), h.id)});
      }

  // Pentagon and triangle on raw object tuples; no coherence shortcuts.
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects)
        for (const auto& e : c.objects) {
          require_equal_paths(
              report, c, "pentagon", {{"A", a}, {"B", b}, {"C", d}, {"D", e}},
              {m.assoc_at(a, b, m.tensor_obj(d, e)), m.assoc_at(m.tensor_obj(a, b), d, e)},
              {m.tensor_mor(c.identity_of(a), m.assoc_at(b, d, e)), m.assoc_at(a, m.tensor_obj(b, d), e),
               m.tensor_mor(m.assoc_at(a, b, d), c.identity_of(e))});
        }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      require_equal_paths(report, c, "triangle", {{"A", a}, {"B", b}},
                          {m.assoc_at(a, m.unit, b), m.tensor_mor(m.runit_at(a), c.identity_of(b))},
                          {m.tensor_mor(c.identity_of(a), m.lunit_at(b))});
    }
  return report;
}

std::pair<Functor, Functor> monoidal_functor_phi_boundary(const MonoidalFunctor& f) {
  Functor ff = product_functor(f.F, f.F);
  Functor outer = compose_functors(f.dst.tensor, ff);        // ⊗'·(F×F)
  Functor inner = compose_functors(f.F, f.src.tensor);       // F·⊗
  if (f.variant == Variant::lax) return {outer, inner};
  return {inner, outer};
}

CheckReport check_monoidal_functor(const MonoidalFunctor& f) {
  validate_functor(f.F);
  if (!(f.F.src == f.src.base) || !(f.F.dst == f.dst.base))
    throw ShapeMismatch("monoidal functor carrier " + describe(f.F) + " does not match the structures");
  auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(f);
  if (!(f.phi.src == phi_src) || !(f.phi.dst == phi_dst)) {
    // Distinguish a mislabelled variant from a plain shape error.
    if (f.phi.src == phi_dst && f.phi.dst == phi_src)
      throw VariantMismatch("phi is oriented " + to_string(f.variant == Variant::lax ? Variant::oplax : Variant::lax) +
                            " but the functor is declared " + to_string(f.variant));
    throw ShapeMismatch("phi must go " + describe(phi_src) + " -> " + describe(phi_dst));
  }

  CheckReport report;
  report.absorb(check_naturality(f.phi), "cell", "phi");

  const FinCategory& tc = f.dst.base;
  const bool lax = f.variant == Variant::lax;

  // φ̄ boundary: lax I' -> F(I), oplax F(I) -> I'.
  report.add_law("unit-morphism-boundary");
  const Morphism& pb = tc.morphism(f.phibar);
  const std::string fi = f.F.on_object(f.src.unit);
  const std::string want_dom = lax ? f.dst.unit : fi;
  const std::string want_cod = lax ? fi : f.dst.unit;
  if (pb.dom != want_dom || pb.cod != want_cod) {
    Witness w;
    w.law_id = "unit-morphism-boundary";
    w.lhs_path = {f.phibar};
    w.lhs_result = f.phibar;
    w.rhs_result = "expected " + want_dom + "->" + want_cod;
    w.category = tc.name;
    report.add_witness(std::move(w));
  }

  auto phi_at = [&](const std::string& a, const std::string& b) { return f.phi.at(pair_id(a, b)); };
  auto fo = [&](const std::string& a) { return f.F.on_object(a); };
  auto id_of = [&](const std::string& a) { return tc.identity_of(a); };

  for (const auto& a : f.src.base.objects)
    for (const auto& b : f.src.base.objects)
      for (const auto& c : f.src.base.objects) {
        std::map<std::string, std::string> bind = {{"A", a}, {"B", b}, {"C", c}};
        if (lax) {
          // F(α)∘φ_{A,B⊗C}∘(1⊗'φ_{B,C}) = φ_{A⊗B,C}∘(φ_{A,B}⊗'1)∘α'
          require_equal_paths(report, tc, "monoidal-functor-assoc", bind,
                              {f.dst.tensor_mor(id_of(fo(a)), phi_at(b, c)),
                               phi_at(a, f.src.tensor_obj(b, c)),
                               f.F.on_morphism(f.src.assoc_at(a, b, c))},
                              {f.dst.assoc_at(fo(a), fo(b), fo(c)),
                               f.dst.tensor_mor(phi_at(a, b), id_of(fo(c))),
                               phi_at(f.src.tensor_obj(a, b), c)});
        } else {
          // α'∘(1⊗'φ_{B,C})∘φ_{A,B⊗C} = (φ_{A,B}⊗'1)∘φ_{A⊗B,C}∘F(α)
          require_equal_paths(report, tc, "monoidal-functor-assoc", bind,
                              {phi_at(a, f.src.tensor_obj(b, c)),
                               f.dst.tensor_mor(id_of(fo(a)), phi_at(b, c)),
                               f.dst.assoc_at(fo(a), fo(b), fo(c))},
                              {f.F.on_morphism(f.src.assoc_at(a, b, c)),
                               phi_at(f.src.tensor_obj(a, b), c),
                               f.dst.tensor_mor(phi_at(a, b), id_of(fo(c)))});
        }
      }

  for (const auto& a : f.src.base.objects) {
    std::map<std::string, std::string> bind = {{"A", a}};
    if (lax) {
      // F(ρ_A)∘φ_{A,I}∘(1⊗'φ̄) = ρ'_{FA}
      require_equal_paths(report, tc, "monoidal-functor-unit-right", bind,
                          {f.dst.tensor_mor(id_of(fo(a)), f.phibar), phi_at(a, f.src.unit),
                           f.F.on_morphism(f.src.runit_at(a))},
                          {f.dst.runit_at(fo(a))});
      // F(λ_A)∘φ_{I,A}∘(φ̄⊗'1) = λ'_{FA}
      require_equal_paths(report, tc, "monoidal-functor-unit-left", bind,
                          {f.dst.tensor_mor(f.phibar, id_of(fo(a))), phi_at(f.src.unit, a),
                           f.F.on_morphism(f.src.lunit_at(a))},
                          {f.dst.lunit_at(fo(a))});
    } else {
      // ρ'_{FA}∘(1⊗'φ̄)∘φ_{A,I} = F(ρ_A)
      require_equal_paths(report, tc, "monoidal-functor-unit-right", bind,
                          {phi_at(a, f.src.unit), f.dst.tensor_mor(id_of(fo(a)), f.phibar),
                           f.dst.runit_at(fo(a))},
                          {f.F.on_morphism(f.src.runit_at(a))});
      // λ'_{FA}∘(φ̄⊗'1)∘φ_{I,A} = F(λ_A)
      require_equal_paths(report, tc, "monoidal-functor-unit-left", bind,
                          {phi_at(f.src.unit, a), f.dst.tensor_mor(f.phibar, id_of(fo(a))),
                           f.dst.lunit_at(fo(a))},
                          {f.F.on_morphism(f.src.lunit_at(a))});
    }
  }
  return report;
}

CheckReport check_monoidal_transformation(const MonoidalTransformation& t) {
  if (t.src.variant != t.dst.variant)
    throw VariantMismatch("transformation between a " + to_string(t.src.variant) + " and a " +
                          to_string(t.dst.variant) + " monoidal functor");
  if (!(t.src.src == t.dst.src) || !(t.src.dst == t.dst.dst))
    throw ShapeMismatch("monoidal transformation endpoints live on different structures");
  if (!(t.underlying.src == t.src.F) || !(t.underlying.dst == t.dst.F))
    throw ShapeMismatch("underlying transformation boundary is not src.F -> dst.F");

  CheckReport report;
  report.absorb(check_naturality(t.underlying), "cell", "tau");

  const FinCategory& tc = t.src.dst.base;
  const bool lax = t.src.variant == Variant::lax;
  auto tau = [&](const std::string& a) { return t.underlying.at(a); };

  for (const auto& a : t.src.src.base.objects)
    for (const auto& b : t.src.src.base.objects) {
      std::map<std::string, std::string> bind = {{"A", a}, {"B", b}};
      const std::string ab = t.src.src.tensor_obj(a, b);
      if (lax) {
        // τ_{A⊗B}∘φ_{A,B} = φ'_{A,B}∘(τ_A⊗'τ_B)
        require_equal_paths(report, tc, "monoidal-trans-tensor", bind,
                            {t.src.phi.at(pair_id(a, b)), tau(ab)},
                            {t.src.dst.tensor_mor(tau(a), tau(b)), t.dst.phi.at(pair_id(a, b))});
      } else {
        // (τ_A⊗'τ_B)∘φ_{A,B} = φ'_{A,B}∘τ_{A⊗B}
        require_equal_paths(report, tc, "monoidal-trans-tensor", bind,
                            {t.src.phi.at(pair_id(a, b)), t.src.dst.tensor_mor(tau(a), tau(b))},
                            {tau(ab), t.dst.phi.at(pair_id(a, b))});
      }
    }

  const std::string i = t.src.src.unit;
  if (lax) {
    // φ̄' = τ_I ∘ φ̄
    require_equal_paths(report, tc, "monoidal-trans-unit", {}, {t.src.phibar, tau(i)}, {t.dst.phibar});
  } else {
    // φ̄' ∘ τ_I = φ̄
    require_equal_paths(report, tc, "monoidal-trans-unit", {}, {tau(i), t.dst.phibar}, {t.src.phibar});
  }
  return report;
}

MonoidalFunctor trivial_monoidal_endofunctor(const MonoidalStructure& m, Variant variant) {
  MonoidalFunctor f;
  f.variant = variant;
  f.src = m;
  f.dst = m;
  f.F = id_functor(m.base);
  auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(f);
  f.phi.src = phi_src;
  f.phi.dst = phi_dst;
  for (const auto& obj : phi_src.src.objects)
    f.phi.components[obj] = m.base.identity_of(phi_src.on_object(obj));
  f.phibar = m.base.identity_of(m.unit);
  return f;
}

MonoidalStructure product_monoidal(const MonoidalStructure& a, const MonoidalStructure& b) {
  MonoidalStructure p;
  p.base = product_category(a.base, b.base);
  p.unit = pair_id(a.unit, b.unit);
  p.tensor.src = product_category(p.base, p.base);
  p.tensor.dst = p.base;
  for (const auto& x : a.base.objects)
    for (const auto& u : b.base.objects)
      for (const auto& y : a.base.objects)
        for (const auto& v : b.base.objects)
          p.tensor.obj_map[pair_id(pair_id(x, u), pair_id(y, v))] =
              pair_id(a.tensor_obj(x, y), b.tensor_obj(u, v));
  for (const auto& f : a.base.morphisms)
    for (const auto& g : b.base.morphisms)
      for (const auto& h : a.base.morphisms)
        for (const auto& k : b.base.morphisms)
          p.tensor.mor_map[pair_id(pair_id(f.id, g.id), pair_id(h.id, k.id))] =
              pair_id(a.tensor_mor(f.id, h.id), b.tensor_mor(g.id, k.id));
  for (const auto& x : a.base.objects)
    for (const auto& u : b.base.objects) {
      const std::string xu = pair_id(x, u);
      p.lunit[xu] = pair_id(a.lunit_at(x), b.lunit_at(u));
      p.lunit_inv[xu] = pair_id(a.lunit_inv.at(x), b.lunit_inv.at(u));
      p.runit[xu] = pair_id(a.runit_at(x), b.runit_at(u));
      p.runit_inv[xu] = pair_id(a.runit_inv.at(x), b.runit_inv.at(u));
      for (const auto& y : a.base.objects)
        for (const auto& v : b.base.objects)
          for (const auto& z : a.base.objects)
            for (const auto& w : b.base.objects) {
              p.assoc[{xu, pair_id(y, v), pair_id(z, w)}] =
                  pair_id(a.assoc_at(x, y, z), b.assoc_at(u, v, w));
              p.assoc_inv[{xu, pair_id(y, v), pair_id(z, w)}] =
                  pair_id(a.assoc_inv.at({x, y, z}), b.assoc_inv.at({u, v, w}));
            }
    }
  return p;
}

MonoidalStructure thin_from_semilattice(const Semilattice& s, ThinArrows arrows) {
  // Poset sanity first.
  std::set<std::string> elems(s.elements.begin(), s.elements.end());
  if (elems.size() != s.elements.size()) throw NotASemilattice("duplicate elements in '" + s.name + "'");
  for (const auto& [a, b] : s.leq)
    if (!elems.count(a) || !elems.count(b))
      throw NotASemilattice("leq pair (" + a + "," + b + ") references unknown elements");
  auto le = [&](const std::string& a, const std::string& b) {
    return a == b || s.leq.count({a, b}) > 0;
  };
  for (const auto& a : s.elements)
    for (const auto& b : s.elements) {
      if (le(a, b) && le(b, a) && a != b) throw NotASemilattice("antisymmetry fails on (" + a + "," + b + ")");
      for (const auto& c : s.elements)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw NotASemilattice("transitivity fails on (" + a + "," + b + "," + c + ")");
    }
  // meets and top exist
  for (const auto& a : s.elements)
    for (const auto& b : s.elements) meet_of(s, a, b);
  top_of(s);

  FinCategory c;
  c.name = s.name;
  c.objects = s.elements;
  auto arrow_exists = [&](const std::string& u, const std::string& v) {
    return arrows == ThinArrows::up ? le(u, v) : le(v, u);
  };
  auto mor_id = [](const std::string& u, const std::string& v) { return u + "->" + v; };
  for (const auto& u : s.elements)
    for (const auto& v : s.elements)
      if (arrow_exists(u, v)) c.morphisms.push_back({mor_id(u, v), u, v});
  for (const auto& u : s.elements) c.identity[u] = mor_id(u, u);
  for (const auto& m2 : c.morphisms)
    for (const auto& m1 : c.morphisms)
      if (m2.dom == m1.cod) c.comp[{m2.id, m1.id}] = mor_id(m1.dom, m2.cod);

  MonoidalStructure m;
  m.base = c;
  m.unit = top_of(s);
  m.tensor.src = product_category(c, c);
  m.tensor.dst = c;
  for (const auto& u : s.elements)
    for (const auto& v : s.elements) m.tensor.obj_map[pair_id(u, v)] = meet_of(s, u, v);
  for (const auto& f : c.morphisms)
    for (const auto& g : c.morphisms)
      m.tensor.mor_map[pair_id(f.id, g.id)] = mor_id(meet_of(s, f.dom, g.dom), meet_of(s, f.cod, g.cod));
  for (const auto& a : s.elements) {
    m.lunit[a] = mor_id(meet_of(s, m.unit, a), a);
    m.lunit_inv[a] = mor_id(a, meet_of(s, m.unit, a));
    m.runit[a] = mor_id(meet_of(s, a, m.unit), a);
    m.runit_inv[a] = mor_id(a, meet_of(s, a, m.unit));
    for (const auto& b : s.elements)
      for (const auto& d : s.elements) {
        const std::string l = meet_of(s, a, meet_of(s, b, d));
        const std::string r = meet_of(s, meet_of(s, a, b), d);
        m.assoc[{a, b, d}] = mor_id(l, r);
        m.assoc_inv[{a, b, d}] = mor_id(r, l);
      }
  }
  return m;
}

std::string meet_of(const Semilattice& s, const std::string& a, const std::string& b) {
  auto le = [&](const std::string& x, const std::string& y) {
    return x == y || s.leq.count({x, y}) > 0;
  };
  std::vector<std::string> lower;
  for (const auto& w : s.elements)
    if (le(w, a) && le(w, b)) lower.push_back(w);
  for (const auto& cand : lower) {
    bool greatest = true;
    for (const auto& other : lower)
      if (!le(other, cand)) {
        greatest = false;
        break;
      }
    if (greatest) return cand;
  }
  throw NotASemilattice("pair (" + a + "," + b + ") has no meet in '" + s.name + "'");
}

std::string top_of(const Semilattice& s) {
  auto le = [&](const std::string& x, const std::string& y) {
    return x == y || s.leq.count({x, y}) > 0;
  };
  for (const auto& cand : s.elements) {
    bool top = true;
    for (const auto& other : s.elements)
      if (!le(other, cand)) {
        top = false;
        break;
      }
    if (top) return cand;
  }
  throw NotASemilattice("'" + s.name + "' has no greatest element");
}

namespace {

struct NamedFunctor {
  std::string name;
  Functor f;
};

struct NamedTrans {
  std::string name;
  std::string src_name;
  std::string dst_name;
  NatTrans t;
};

bool same_tables(const Functor& a, const Functor& b) {
  return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

bool same_tables(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && same_tables(a.src, b.src) && same_tables(a.dst, b.dst);
}

}  // namespace

EndoMonoidal endo_monoidal(const FinCategory& c, const std::map<std::string, Functor>& gen_functors,
                           const std::map<std::string, NatTrans>& gen_transes, std::size_t max_functors,
                           std::size_t max_transes) {
  validate_category(c);
  std::vector<NamedFunctor> functors;
  auto find_functor = [&](const Functor& f) -> const NamedFunctor* {
    for (const auto& nf : functors)
      if (same_tables(nf.f, f)) return &nf;
    return nullptr;
  };
  auto add_functor = [&](const std::string& name, const Functor& f) {
    if (find_functor(f)) return;
    if (functors.size() >= max_functors)
      throw ClosureBound("more than " + std::to_string(max_functors) + " endofunctors generated");
    functors.push_back({name, f});
  };

  add_functor("Id", id_functor(c));
  for (const auto& [name, f] : gen_functors) {
    validate_functor(f);
    if (!(f.src == c) || !(f.dst == c))
      throw MalformedInput("generator functor '" + name + "' is not an endofunctor of '" + c.name + "'");
    add_functor(name, f);
  }
  for (const auto& [name, t] : gen_transes) {
    validate_naturality_data(t);
    add_functor(name + ".src", t.src);
    add_functor(name + ".dst", t.dst);
  }

  for (std::size_t changed = 1; changed;) {
    changed = 0;
    const std::size_t n = functors.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Functor comp = compose_functors(functors[i].f, functors[j].f);
        if (!find_functor(comp)) {
          add_functor("(" + functors[i].name + "∘" + functors[j].name + ")", comp);
          ++changed;
        }
      }
  }

  std::vector<NamedTrans> transes;
  auto functor_name = [&](const Functor& f) -> std::string {
    const NamedFunctor* nf = find_functor(f);
    if (!nf) throw ClosureBound("a pasted transformation has a boundary outside the functor closure");
    return nf->name;
  };
  auto find_trans = [&](const NatTrans& t) -> const NamedTrans* {
    for (const auto& nt : transes)
      if (same_tables(nt.t, t)) return &nt;
    return nullptr;
  };
  auto add_trans = [&](const std::string& name, const NatTrans& t) {
    if (find_trans(t)) return;
    if (transes.size() >= max_transes)
      throw ClosureBound("more than " + std::to_string(max_transes) + " transformations generated");
    transes.push_back({name, functor_name(t.src), functor_name(t.dst), t});
  };

  for (const auto& nf : functors) add_trans("1_" + nf.name, id_nattrans(nf.f));
  for (const auto& [name, t] : gen_transes) add_trans(name, t);

  for (std::size_t changed = 1; changed;) {
    changed = 0;
    const std::size_t n = transes.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (same_tables(transes[j].t.dst, transes[i].t.src)) {
          NatTrans v = vcomp(transes[i].t, transes[j].t);
          if (!find_trans(v)) {
            add_trans("(" + transes[i].name + "·" + transes[j].name + ")", v);
            ++changed;
          }
        }
        NatTrans h = hcomp(transes[i].t, transes[j].t);
        if (!find_trans(h)) {
          add_trans("(" + transes[i].name + "⋆" + transes[j].name + ")", h);
          ++changed;
        }
      }
  }

  EndoMonoidal result;
  FinCategory e;
  e.name = "End(" + c.name + ")";
  for (const auto& nf : functors) {
    e.objects.push_back(nf.name);
    result.functor_of[nf.name] = nf.f;
  }
  for (const auto& nt : transes) {
    e.morphisms.push_back({nt.name, nt.src_name, nt.dst_name});
    result.trans_of[nt.name] = nt.t;
  }
  for (const auto& nf : functors) e.identity[nf.name] = "1_" + nf.name;
  auto trans_name = [&](const NatTrans& t) -> std::string {
    const NamedTrans* nt = find_trans(t);
    if (!nt) throw ClosureBound("transformation closure is not closed under pasting");
    return nt->name;
  };
  for (const auto& second : transes)
    for (const auto& first : transes)
      if (second.src_name == first.dst_name)
        e.comp[{second.name, first.name}] = trans_name(vcomp(second.t, first.t));

  MonoidalStructure m;
  m.base = e;
  m.unit = "Id";
  m.tensor.src = product_category(e, e);
  m.tensor.dst = e;
  for (const auto& a : functors)
    for (const auto& b : functors)
      m.tensor.obj_map[pair_id(a.name, b.name)] = functor_name(compose_functors(a.f, b.f));
  for (const auto& a : transes)
    for (const auto& b : transes)
      m.tensor.mor_map[pair_id(a.name, b.name)] = trans_name(hcomp(a.t, b.t));
  for (const auto& a : functors) {
    m.lunit[a.name] = "1_" + a.name;
    m.lunit_inv[a.name] = "1_" + a.name;
    m.runit[a.name] = "1_" + a.name;
    m.runit_inv[a.name] = "1_" + a.name;
    for (const auto& b : functors)
      for (const auto& d : functors) {
        const std::string id = "1_" + functor_name(compose_functors(a.f, compose_functors(b.f, d.f)));
        m.assoc[{a.name, b.name, d.name}] = id;
        m.assoc_inv[{a.name, b.name, d.name}] = id;
      }
  }
  result.monoidal = m;
  return result;
}

}  // namespace gmcat
