#include "gmcat/localisable.hpp"

#include <algorithm>

#include "gmcat/errors.hpp"

namespace gmcat {

const FinCategory& PresheafOfCategories::at_element(const std::string& u) const {
  auto it = at.find(u);
  if (it == at.end()) throw MalformedInput("presheaf has no category at element '" + u + "'");
  return it->second;
}

const Functor& PresheafOfCategories::restriction(const std::string& site_morphism) const {
  auto it = restrict_along.find(site_morphism);
  if (it == restrict_along.end())
    throw MalformedInput("presheaf has no restriction along '" + site_morphism + "'");
  return it->second;
}

std::string LocalisablePairing::site_element(const std::string& grading_object) const {
  if (component_map.empty()) return grading_object;
  auto it = component_map.find(grading_object);
  if (it == component_map.end())
    throw PairingMismatch("component map has no entry for grading object '" + grading_object + "'");
  return it->second;
}

namespace {

void require_presheaf_tables(const PresheafOfCategories& p) {
  validate_category(p.site.base);
  if (!p.site.base.is_thin()) throw MalformedInput("presheaf site '" + p.site.base.name + "' is not thin");
  for (const auto& u : p.site.base.objects) validate_category(p.at_element(u));
  for (const auto& m : p.site.base.morphisms) {
    const Functor& r = p.restriction(m.id);
    validate_functor(r);
    if (!(r.src == p.at_element(m.dom)) || !(r.dst == p.at_element(m.cod)))
      throw ShapeMismatch("restriction along '" + m.id + "' must go at(" + m.dom + ") -> at(" + m.cod + ")");
  }
}

// Functor-table equality reported as witnesses instead of a bool.
void require_same_functor(CheckReport& report, const std::string& law,
                          std::map<std::string, std::string> binding, const Functor& lhs,
                          const Functor& rhs, const std::string& category) {
  report.add_law(law);
  for (const auto& [a, la] : lhs.obj_map) {
    auto it = rhs.obj_map.find(a);
    const std::string r = it == rhs.obj_map.end() ? "(missing)" : it->second;
    if (r == la) continue;
    Witness w;
    w.law_id = law;
    w.binding = binding;
    w.binding["at"] = a;
    w.lhs_result = la;
    w.rhs_result = r;
    w.category = category;
    report.add_witness(std::move(w));
  }
  for (const auto& [m, lm] : lhs.mor_map) {
    auto it = rhs.mor_map.find(m);
    const std::string r = it == rhs.mor_map.end() ? "(missing)" : it->second;
    if (r == lm) continue;
    Witness w;
    w.law_id = law;
    w.binding = binding;
    w.binding["at"] = m;
    w.lhs_result = lm;
    w.rhs_result = r;
    w.category = category;
    report.add_witness(std::move(w));
  }
}

}  // namespace

CheckReport check_presheaf(const PresheafOfCategories& p) {
  require_presheaf_tables(p);
  CheckReport report;
  for (const auto& u : p.site.base.objects)
    report.absorb(check_category(p.at_element(u)), "element", u);
  for (const auto& m : p.site.base.morphisms)
    report.absorb(check_functor(p.restriction(m.id)), "site-morphism", m.id);

  for (const auto& u : p.site.base.objects) {
    require_same_functor(report, "restrict-identity", {{"element", u}},
                         p.restriction(p.site.base.identity_of(u)), id_functor(p.at_element(u)),
                         p.at_element(u).name);
  }
  for (const auto& m2 : p.site.base.morphisms)
    for (const auto& m1 : p.site.base.morphisms) {
      if (m2.dom != m1.cod) continue;
      const std::string m21 = p.site.base.compose(m2.id, m1.id);
      require_same_functor(report, "restrict-composition", {{"g", m2.id}, {"f", m1.id}},
                           p.restriction(m21),
                           compose_functors(p.restriction(m2.id), p.restriction(m1.id)),
                           p.at_element(m2.cod).name);
    }
  return report;
}

namespace {

void require_formal_tables(const FormalMonad& m) {
  require_presheaf_tables(m.base);
  for (const auto& u : m.base.site.base.objects) {
    const FinCategory& c = m.base.at_element(u);
    auto t = m.T.find(u);
    if (t == m.T.end()) throw MalformedInput("formal monad misses endofunctor at '" + u + "'");
    if (!(t->second.src == c) || !(t->second.dst == c))
      throw ShapeMismatch("component at '" + u + "' is not an endofunctor of at(" + u + ")");
    auto mu = m.mu.find(u);
    auto eta = m.eta.find(u);
    if (mu == m.mu.end() || eta == m.eta.end())
      throw MalformedInput("formal monad misses mu or eta at '" + u + "'");
    Functor tt = compose_functors(t->second, t->second);
    if (!(mu->second.src == tt) || !(mu->second.dst == t->second))
      throw ShapeMismatch("mu at '" + u + "' must go T_u∘T_u -> T_u");
    if (!(eta->second.src == id_functor(c)) || !(eta->second.dst == t->second))
      throw ShapeMismatch("eta at '" + u + "' must go Id -> T_u");
  }
}

}  // namespace

CheckReport check_formal_monad(const FormalMonad& m) {
  require_formal_tables(m);
  CheckReport report;

  for (const auto& u : m.base.site.base.objects) {
    const FinCategory& c = m.base.at_element(u);
    const Functor& t = m.T.at(u);
    const NatTrans& mu = m.mu.at(u);
    const NatTrans& eta = m.eta.at(u);
    report.absorb(check_functor(t), "element", u);
    report.absorb(check_naturality(mu), "element", u);
    report.absorb(check_naturality(eta), "element", u);
    for (const auto& a : c.objects) {
      // μ∘Tμ = μ∘μT
      require_equal_paths(report, c, "monad-assoc@" + u, {{"A", a}},
                          {t.on_morphism(mu.at(a)), mu.at(a)},
                          {mu.at(t.on_object(a)), mu.at(a)});
      // μ∘Tη = 1 = μ∘ηT
      require_equal_paths(report, c, "monad-unit@" + u, {{"A", a}, {"side", "right"}},
                          {t.on_morphism(eta.at(a)), mu.at(a)},
                          {c.identity_of(t.on_object(a))});
      require_equal_paths(report, c, "monad-unit@" + u, {{"A", a}, {"side", "left"}},
                          {eta.at(t.on_object(a)), mu.at(a)},
                          {c.identity_of(t.on_object(a))});
    }
  }

  // Strict compatibility with every restriction.
  for (const auto& sm : m.base.site.base.morphisms) {
    const Functor& r = m.base.restriction(sm.id);
    const FinCategory& target = m.base.at_element(sm.cod);
    require_same_functor(report, "restrict-monad-compat@" + sm.id, {},
                         compose_functors(m.T.at(sm.cod), r), compose_functors(r, m.T.at(sm.dom)),
                         target.name);
    for (const auto& a : m.base.at_element(sm.dom).objects) {
      require_equal_paths(report, target, "restrict-mu-compat@" + sm.id, {{"A", a}},
                          {r.on_morphism(m.mu.at(sm.dom).at(a))},
                          {m.mu.at(sm.cod).at(r.on_object(a))});
      require_equal_paths(report, target, "restrict-eta-compat@" + sm.id, {{"A", a}},
                          {r.on_morphism(m.eta.at(sm.dom).at(a))},
                          {m.eta.at(sm.cod).at(r.on_object(a))});
    }
  }
  return report;
}

CheckReport check_family(const MonadMorphismFamily& f) {
  require_formal_tables(f.src);
  require_formal_tables(f.dst);
  if (!(f.src.base == f.dst.base))
    throw ShapeMismatch("monad morphism family between monads on different presheaves");

  CheckReport report;
  for (const auto& u : f.src.base.site.base.objects) {
    const FinCategory& c = f.src.base.at_element(u);
    auto it = f.phibar.find(u);
    if (it == f.phibar.end()) throw MalformedInput("family misses phibar at '" + u + "'");
    const NatTrans& pb = it->second;
    if (!(pb.src == f.dst.T.at(u)) || !(pb.dst == f.src.T.at(u)))
      throw ShapeMismatch("phibar at '" + u + "' must go S_" + u + " -> T_" + u);
    report.absorb(check_naturality(pb), "element", u);

    const Functor& t = f.src.T.at(u);
    const Functor& s = f.dst.T.at(u);
    const NatTrans& mu_t = f.src.mu.at(u);
    const NatTrans& mu_s = f.dst.mu.at(u);
    const NatTrans& eta_t = f.src.eta.at(u);
    const NatTrans& eta_s = f.dst.eta.at(u);
    for (const auto& a : c.objects) {
      // φ̄∘η^S = η^T
      require_equal_paths(report, c, "family-unit@" + u, {{"A", a}},
                          {eta_s.at(a), pb.at(a)}, {eta_t.at(a)});
      // μ^T ∘ φ̄T ∘ Sφ̄ = φ̄ ∘ μ^S
      require_equal_paths(report, c, "family-mult@" + u, {{"A", a}},
                          {s.on_morphism(pb.at(a)), pb.at(t.on_object(a)), mu_t.at(a)},
                          {mu_s.at(a), pb.at(a)});
    }
  }
  for (const auto& sm : f.src.base.site.base.morphisms) {
    const Functor& r = f.src.base.restriction(sm.id);
    const FinCategory& target = f.src.base.at_element(sm.cod);
    for (const auto& a : f.src.base.at_element(sm.dom).objects) {
      require_equal_paths(report, target, "family-restriction@" + sm.id, {{"A", a}},
                          {r.on_morphism(f.phibar.at(sm.dom).at(a))},
                          {f.phibar.at(sm.cod).at(r.on_object(a))});
    }
  }
  return report;
}

CheckReport check_family_transformation(const FamilyTransformation& t) {
  if (!(t.src.src == t.dst.src) || !(t.src.dst == t.dst.dst))
    throw ShapeMismatch("family transformation endpoints are not parallel");
  CheckReport report;
  const PresheafOfCategories& base = t.src.src.base;
  for (const auto& u : base.site.base.objects) {
    const FinCategory& c = base.at_element(u);
    auto it = t.beta.find(u);
    if (it == t.beta.end()) throw MalformedInput("family transformation misses beta at '" + u + "'");
    const NatTrans& b = it->second;
    Functor idc = id_functor(c);
    if (!(b.src == idc) || !(b.dst == idc))
      throw ShapeMismatch("beta at '" + u + "' must be a cell Id -> Id");
    report.absorb(check_naturality(b), "element", u);

    const Functor& tu = t.src.src.T.at(u);
    const Functor& su = t.src.dst.T.at(u);
    for (const auto& a : c.objects) {
      // βT ∘ φ̄ = ψ̄ ∘ Sβ
      require_equal_paths(report, c, "family-trans@" + u, {{"A", a}},
                          {t.src.phibar.at(u).at(a), b.at(tu.on_object(a))},
                          {su.on_morphism(b.at(a)), t.dst.phibar.at(u).at(a)});
    }
  }
  for (const auto& sm : base.site.base.morphisms) {
    const Functor& r = base.restriction(sm.id);
    const FinCategory& target = base.at_element(sm.cod);
    for (const auto& a : base.at_element(sm.dom).objects) {
      require_equal_paths(report, target, "family-trans-restriction@" + sm.id, {{"A", a}},
                          {r.on_morphism(t.beta.at(sm.dom).at(a))},
                          {t.beta.at(sm.cod).at(r.on_object(a))});
    }
  }
  return report;
}

namespace {

void pairing_side(CheckReport& report, const GradedMonad& graded, const FormalMonad& formal,
                  const LocalisablePairing& p, const std::string& side) {
  const FinCategory& c = graded.base;
  for (const auto& u : graded.grading.base.objects) {
    const std::string su = p.site_element(u);
    std::map<std::string, std::string> bind = {{"side", side}, {"element", u}};
    report.add_law("pairing-base");
    if (!(formal.base.at_element(su) == c)) {
      Witness w;
      w.law_id = "pairing-base";
      w.binding = bind;
      w.lhs_result = formal.base.at_element(su).name;
      w.rhs_result = "expected the graded base '" + c.name + "'";
      w.category = c.name;
      report.add_witness(std::move(w));
      continue;
    }
    require_same_functor(report, "pairing-functor", bind, formal.T.at(su), graded.F_at(u), c.name);
    // η̄_u must agree with F(!_u)∘δ along the unique morphism from the unit.
    auto bang = graded.grading.base.hom(graded.grading.unit, u);
    report.add_law("pairing-unit");
    if (bang.size() != 1) {
      Witness w;
      w.law_id = "pairing-unit";
      w.binding = bind;
      w.lhs_result = "(no unique morphism " + graded.grading.unit + " -> " + u + ")";
      w.rhs_result = "expected a unit-initial thin grading";
      w.category = c.name;
      report.add_witness(std::move(w));
    }
    for (const auto& a : c.objects) {
      auto b = bind;
      b["A"] = a;
      require_equal_paths(report, c, "pairing-mult", b, {formal.mu.at(su).at(a)},
                          {graded.gamma_at(u, u).at(a)});
      if (bang.size() == 1)
        require_equal_paths(report, c, "pairing-unit", b, {formal.eta.at(su).at(a)},
                            {graded.delta.at(a), graded.F_on(bang.front()).at(a)});
    }
  }
}

}  // namespace

CheckReport verify_pairing(const LocalisablePairing& p) {
  CheckReport report;
  if (!(p.graded_src.grading == p.graded_dst.grading))
    throw ShapeMismatch("paired graded monads have different gradings");
  if (!(p.graded_src.base == p.graded_dst.base))
    throw ShapeMismatch("paired graded monads have different bases");
  if (!(p.formal_src.base == p.formal_dst.base))
    throw ShapeMismatch("paired formal monads live on different presheaves");

  // Site agreement through the component map.
  report.add_law("pairing-site");
  const FinCategory& g = p.graded_src.grading.base;
  const FinCategory& z = p.formal_src.base.site.base;
  auto mismatch = [&](const std::string& what, const std::string& got, const std::string& want) {
    Witness w;
    w.law_id = "pairing-site";
    w.binding = {{"at", what}};
    w.lhs_result = got;
    w.rhs_result = want;
    w.category = z.name;
    report.add_witness(std::move(w));
  };
  if (g.objects.size() != z.objects.size())
    mismatch("object-count", std::to_string(g.objects.size()), std::to_string(z.objects.size()));
  for (const auto& u : g.objects) {
    const std::string su = p.site_element(u);
    if (!z.has_object(su)) {
      mismatch("element:" + u, su, "an element of '" + z.name + "'");
      continue;
    }
    for (const auto& v : g.objects) {
      const bool gh = !g.hom(u, v).empty();
      const bool zh = !z.hom(su, p.site_element(v)).empty();
      if (gh != zh)
        mismatch("hom(" + u + "," + v + ")", gh ? "present" : "absent", zh ? "present" : "absent");
      if (p.site_element(p.graded_src.grading.tensor_obj(u, v)) !=
          p.formal_src.base.site.tensor_obj(su, p.site_element(v)))
        mismatch("tensor(" + u + "," + v + ")",
                 p.site_element(p.graded_src.grading.tensor_obj(u, v)),
                 p.formal_src.base.site.tensor_obj(su, p.site_element(v)));
    }
  }
  if (p.site_element(p.graded_src.grading.unit) != p.formal_src.base.site.unit)
    mismatch("unit", p.site_element(p.graded_src.grading.unit), p.formal_src.base.site.unit);

  pairing_side(report, p.graded_src, p.formal_src, p, "src");
  pairing_side(report, p.graded_dst, p.formal_dst, p, "dst");
  return report;
}

GradedMorphism theta_to_graded(const MonadMorphismFamily& f, const LocalisablePairing& p) {
  CheckReport agreement = verify_pairing(p);
  if (!agreement.pass())
    throw PairingMismatch("component agreement failed, first law: " + agreement.witnesses.front().law_id);
  if (!(f.src == p.formal_src) || !(f.dst == p.formal_dst))
    throw PairingMismatch("family endpoints are not the paired formal monads");

  GradedMorphism h;
  h.variant = Variant::oplax;
  h.src = p.graded_src;
  h.dst = p.graded_dst;
  h.Omega = id_functor(p.graded_src.base);
  for (const auto& u : p.graded_src.grading.base.objects) {
    const NatTrans& pb = f.phibar.at(p.site_element(u));
    NatTrans w;
    w.src = compose_functors(p.graded_dst.F_at(u), h.Omega);
    w.dst = compose_functors(h.Omega, p.graded_src.F_at(u));
    w.components = pb.components;
    h.omega[u] = w;
  }
  return h;
}

MonadMorphismFamily theta_from_graded(const GradedMorphism& h, const LocalisablePairing& p) {
  if (!(h.Omega == id_functor(h.src.base)))
    throw NotIdentityCarrier("the correspondence translates morphisms over the identity only");
  CheckReport agreement = verify_pairing(p);
  if (!agreement.pass())
    throw PairingMismatch("component agreement failed, first law: " + agreement.witnesses.front().law_id);
  if (!(h.src == p.graded_src) || !(h.dst == p.graded_dst))
    throw PairingMismatch("morphism endpoints are not the paired graded monads");
  if (h.variant != Variant::oplax)
    throw VariantMismatch("the correspondence translates oplax morphisms");

  MonadMorphismFamily f;
  f.src = p.formal_src;
  f.dst = p.formal_dst;
  for (const auto& u : p.graded_src.grading.base.objects) {
    const std::string su = p.site_element(u);
    NatTrans pb;
    pb.src = p.formal_dst.T.at(su);
    pb.dst = p.formal_src.T.at(su);
    pb.components = h.omega_at(u).components;
    f.phibar[su] = pb;
  }
  return f;
}

std::vector<CentralIdempotentCandidate> find_central_idempotents(const MonoidalStructure& m) {
  std::vector<CentralIdempotentCandidate> out;
  const FinCategory& c = m.base;
  for (const auto& u : c.objects) {
    for (const auto& eps : c.hom(u, m.unit)) {
      const std::string uu = m.tensor_obj(u, u);
      auto via_rho = compose_path(c, {m.tensor_mor(c.identity_of(u), eps), m.runit_at(u)});
      auto via_lambda = compose_path(c, {m.tensor_mor(eps, c.identity_of(u)), m.lunit_at(u)});
      if (!via_rho || !via_lambda || *via_rho != *via_lambda) continue;
      // Two-sided inverse by table scan.
      std::string inverse;
      for (const auto& s : c.hom(u, uu)) {
        auto left = c.compose_opt(*via_rho, s);
        auto right = c.compose_opt(s, *via_rho);
        if (left && right && *left == c.identity_of(u) && *right == c.identity_of(uu)) {
          inverse = s;
          break;
        }
      }
      if (inverse.empty()) continue;
      out.push_back({u, eps, *via_rho, inverse});
    }
  }
  return out;
}

}  // namespace gmcat
