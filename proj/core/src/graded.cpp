#include "gmcat/graded.hpp"

#include "gmcat/errors.hpp"

namespace gmcat {

const Functor& GradedMonad::F_at(const std::string& x) const {
  auto it = F_obj.find(x);
  if (it == F_obj.end()) throw MalformedInput("graded monad has no endofunctor for grade '" + x + "'");
  return it->second;
}

const NatTrans& GradedMonad::F_on(const std::string& grading_morphism) const {
  auto it = F_mor.find(grading_morphism);
  if (it == F_mor.end())
    throw MalformedInput("graded monad has no transformation for grading morphism '" + grading_morphism + "'");
  return it->second;
}

const NatTrans& GradedMonad::gamma_at(const std::string& x, const std::string& y) const {
  auto it = gamma.find({x, y});
  if (it == gamma.end()) throw MalformedInput("graded monad has no gamma at (" + x + "," + y + ")");
  return it->second;
}

const NatTrans& GradedMorphism::omega_at(const std::string& x) const {
  auto it = omega.find(x);
  if (it == omega.end()) throw MalformedInput("graded morphism has no omega at grade '" + x + "'");
  return it->second;
}

namespace {

void require_graded_tables(const GradedMonad& t) {
  validate_category(t.base);
  for (const auto& x : t.grading.base.objects) {
    const Functor& f = t.F_at(x);
    if (!(f.src == t.base) || !(f.dst == t.base))
      throw ShapeMismatch("F_" + x + " must be an endofunctor of '" + t.base.name + "', got " + describe(f));
  }
  for (const auto& m : t.grading.base.morphisms) {
    const NatTrans& ff = t.F_on(m.id);
    if (!(ff.src == t.F_at(m.dom)) || !(ff.dst == t.F_at(m.cod)))
      throw ShapeMismatch("F(" + m.id + ") must go F_" + m.dom + " -> F_" + m.cod);
  }
  for (const auto& x : t.grading.base.objects)
    for (const auto& y : t.grading.base.objects) {
      const NatTrans& g = t.gamma_at(x, y);
      Functor expected_src = compose_functors(t.F_at(x), t.F_at(y));
      const Functor& expected_dst = t.F_at(t.grading.tensor_obj(x, y));
      if (!(g.src == expected_src) || !(g.dst == expected_dst))
        throw ShapeMismatch("gamma(" + x + "," + y + ") must go F_" + x + "∘F_" + y + " -> F_" +
                            t.grading.tensor_obj(x, y));
    }
  Functor idc = id_functor(t.base);
  if (!(t.delta.src == idc) || !(t.delta.dst == t.F_at(t.grading.unit)))
    throw ShapeMismatch("delta must go Id -> F_" + t.grading.unit);
}

}  // namespace

CheckReport check_graded_monad(const GradedMonad& t) {
  require_graded_tables(t);
  CheckReport report;
  const FinCategory& c = t.base;
  const MonoidalStructure& m = t.grading;

  // F is a functor M -> End(C): each F_X is a functor, each F_f is natural,
  // identities and composition are preserved.
  for (const auto& x : m.base.objects) report.absorb(check_functor(t.F_at(x)), "grade", x);
  for (const auto& f : m.base.morphisms) report.absorb(check_naturality(t.F_on(f.id)), "grade-morphism", f.id);
  for (const auto& x : m.base.objects) {
    const NatTrans& fid = t.F_on(m.base.identity_of(x));
    for (const auto& a : c.objects)
      require_equal_paths(report, c, "grade-functoriality-id", {{"X", x}, {"A", a}},
                          {fid.at(a)}, {c.identity_of(t.F_at(x).on_object(a))});
  }
  for (const auto& g : m.base.morphisms)
    for (const auto& f : m.base.morphisms) {
      if (g.dom != f.cod) continue;
      const std::string gf = m.base.compose(g.id, f.id);
      for (const auto& a : c.objects)
        require_equal_paths(report, c, "grade-functoriality-comp",
                            {{"g", g.id}, {"f", f.id}, {"A", a}},
                            {t.F_on(f.id).at(a), t.F_on(g.id).at(a)}, {t.F_on(gf).at(a)});
    }

  // γ and δ are natural in the base variable ...
  for (const auto& x : m.base.objects)
    for (const auto& y : m.base.objects) {
      CheckReport r = check_naturality(t.gamma_at(x, y));
      CheckReport tagged;
      tagged.absorb(r, "X", x);
      report.absorb(tagged, "Y", y);
    }
  report.absorb(check_naturality(t.delta), "cell", "delta");

  // ... and γ is jointly natural in the grades.
  for (const auto& f : m.base.morphisms)
    for (const auto& g : m.base.morphisms) {
      const std::string fg = m.tensor_mor(f.id, g.id);
      const NatTrans& nf = t.F_on(f.id);
      const NatTrans& ng = t.F_on(g.id);
      for (const auto& a : c.objects) {
        // γ_{X',Y'} ∘ (F_f ⋆ F_g) = F_{f⊗g} ∘ γ_{X,Y}
        require_equal_paths(report, c, "gamma-naturality", {{"f", f.id}, {"g", g.id}, {"A", a}},
                            {t.F_at(f.dom).on_morphism(ng.at(a)), nf.at(t.F_at(g.cod).on_object(a)),
                             t.gamma_at(f.cod, g.cod).at(a)},
                            {t.gamma_at(f.dom, g.dom).at(a), t.F_on(fg).at(a)});
      }
    }

  // Associativity square, with F of the grading associator inserted on the
  // re-bracketing leg (an identity for strict gradings).
  for (const auto& x : m.base.objects)
    for (const auto& y : m.base.objects)
      for (const auto& z : m.base.objects) {
        const NatTrans& gxy = t.gamma_at(x, y);
        const NatTrans& gyz = t.gamma_at(y, z);
        const NatTrans& g_xy_z = t.gamma_at(m.tensor_obj(x, y), z);
        const NatTrans& g_x_yz = t.gamma_at(x, m.tensor_obj(y, z));
        const NatTrans& f_alpha = t.F_on(m.assoc_at(x, y, z));
        const Functor& fx = t.F_at(x);
        const Functor& fz = t.F_at(z);
        for (const auto& a : c.objects) {
          require_equal_paths(report, c, "graded-assoc", {{"X", x}, {"Y", y}, {"Z", z}, {"A", a}},
                              {gxy.at(fz.on_object(a)), g_xy_z.at(a)},
                              {fx.on_morphism(gyz.at(a)), g_x_yz.at(a), f_alpha.at(a)});
        }
      }

  // Unit triangles via F(ρ) and F(λ).
  for (const auto& x : m.base.objects) {
    const Functor& fx = t.F_at(x);
    const NatTrans& f_rho = t.F_on(m.runit_at(x));
    const NatTrans& f_lambda = t.F_on(m.lunit_at(x));
    const NatTrans& g_xi = t.gamma_at(x, m.unit);
    const NatTrans& g_ix = t.gamma_at(m.unit, x);
    for (const auto& a : c.objects) {
      require_equal_paths(report, c, "unit-right", {{"X", x}, {"A", a}},
                          {fx.on_morphism(t.delta.at(a)), g_xi.at(a), f_rho.at(a)},
                          {c.identity_of(fx.on_object(a))});
      require_equal_paths(report, c, "unit-left", {{"X", x}, {"A", a}},
                          {t.delta.at(fx.on_object(a)), g_ix.at(a), f_lambda.at(a)},
                          {c.identity_of(fx.on_object(a))});
    }
  }
  return report;
}

FinCategory terminal_category() {
  FinCategory c;
  c.name = "1";
  c.objects = {"*"};
  c.morphisms = {{"id_*", "*", "*"}};
  c.identity["*"] = "id_*";
  c.comp[{"id_*", "id_*"}] = "id_*";
  return c;
}

GradedMonad from_plain_monad(const PlainMonad& m) {
  Semilattice one;
  one.name = "1";
  one.elements = {"*"};
  one.leq = {{"*", "*"}};

  GradedMonad t;
  t.grading = thin_from_semilattice(one, ThinArrows::up);
  t.base = m.base;
  t.F_obj["*"] = m.T;
  t.F_mor["*->*"] = id_nattrans(m.T);
  t.gamma[{"*", "*"}] = m.mu;
  t.delta = m.eta;
  return t;
}

GradedMonad forget_commutative(const CommutativeGradedMonad& t) { return t.underlying; }

MonoidalFunctor monoidal_functor_at(const CommutativeGradedMonad& t, const std::string& x) {
  auto it = t.Phi.find(x);
  if (it == t.Phi.end()) throw MalformedInput("no monoidal data for grade '" + x + "'");
  MonoidalFunctor f;
  f.variant = t.variant;
  f.src = t.base_monoidal;
  f.dst = t.base_monoidal;
  f.F = t.underlying.F_at(x);
  f.phi = it->second.phi;
  f.phibar = it->second.phibar;
  return f;
}

MonoidalFunctor composite_structure(const CommutativeGradedMonad& t, const std::string& x,
                                    const std::string& y) {
  MonoidalFunctor fx = monoidal_functor_at(t, x);
  MonoidalFunctor fy = monoidal_functor_at(t, y);
  MonoidalFunctor out;
  out.variant = t.variant;
  out.src = t.base_monoidal;
  out.dst = t.base_monoidal;
  out.F = compose_functors(fx.F, fy.F);
  const FinCategory& c = t.base_monoidal.base;
  Functor fy_pair = product_functor(fy.F, fy.F);
  if (t.variant == Variant::lax) {
    // F_XΦ_Y · Φ_X(F_Y×F_Y) and F_XΦ̄_Y · Φ̄_X
    out.phi = vcomp(whisker_left(fx.F, fy.phi), whisker_right(fx.phi, fy_pair));
    out.phibar = c.compose(fx.F.on_morphism(fy.phibar), fx.phibar);
  } else {
    // Φ_X(F_Y×F_Y) · F_XΦ_Y and Φ̄_X · F_XΦ̄_Y
    out.phi = vcomp(whisker_right(fx.phi, fy_pair), whisker_left(fx.F, fy.phi));
    out.phibar = c.compose(fx.phibar, fx.F.on_morphism(fy.phibar));
  }
  return out;
}

CheckReport check_commutative(const CommutativeGradedMonad& t) {
  const GradedMonad& u = t.underlying;
  if (!(t.base_monoidal.base == u.base))
    throw ShapeMismatch("base monoidal structure lives on '" + t.base_monoidal.base.name +
                        "' but the graded monad on '" + u.base.name + "'");
  for (const auto& x : u.grading.base.objects)
    if (!t.Phi.count(x)) throw MalformedInput("missing monoidal data for grade '" + x + "'");

  CheckReport report;
  report.absorb(check_graded_monad(u), "part", "underlying");
  report.absorb(check_monoidal(t.base_monoidal), "part", "base-monoidal");

  // Each grade is a monoidal endofunctor.
  for (const auto& x : u.grading.base.objects)
    report.absorb(check_monoidal_functor(monoidal_functor_at(t, x)), "grade", x);

  // Each F_f is a monoidal transformation between the grade structures.
  for (const auto& f : u.grading.base.morphisms) {
    MonoidalTransformation mt;
    mt.src = monoidal_functor_at(t, f.dom);
    mt.dst = monoidal_functor_at(t, f.cod);
    mt.underlying = u.F_on(f.id);
    report.absorb(check_monoidal_transformation(mt), "grade-morphism", f.id);
  }

  // Each γ_{X,Y} is monoidal from the pasted structure on F_X∘F_Y.
  for (const auto& x : u.grading.base.objects)
    for (const auto& y : u.grading.base.objects) {
      MonoidalTransformation mt;
      mt.src = composite_structure(t, x, y);
      mt.dst = monoidal_functor_at(t, u.grading.tensor_obj(x, y));
      mt.underlying = u.gamma_at(x, y);
      CheckReport r;
      r.absorb(check_monoidal_transformation(mt), "X", x);
      report.absorb(r, "Y", y);
    }

  // δ is monoidal from the trivial structure on the identity.
  {
    MonoidalTransformation mt;
    mt.src = trivial_monoidal_endofunctor(t.base_monoidal, t.variant);
    mt.dst = monoidal_functor_at(t, u.grading.unit);
    mt.underlying = u.delta;
    report.absorb(check_monoidal_transformation(mt), "cell", "delta");
  }
  return report;
}

namespace {

void require_morphism_tables(const GradedMorphism& h) {
  if (!(h.src.grading == h.dst.grading))
    throw ShapeMismatch("graded morphism endpoints have different gradings");
  if (!(h.Omega.src == h.src.base) || !(h.Omega.dst == h.dst.base))
    throw ShapeMismatch("carrier must go '" + h.src.base.name + "' -> '" + h.dst.base.name + "', got " +
                        describe(h.Omega));
  for (const auto& x : h.src.grading.base.objects) {
    const NatTrans& w = h.omega_at(x);
    Functor lax_src = compose_functors(h.Omega, h.src.F_at(x));
    Functor lax_dst = compose_functors(h.dst.F_at(x), h.Omega);
    const Functor& want_src = h.variant == Variant::lax ? lax_src : lax_dst;
    const Functor& want_dst = h.variant == Variant::lax ? lax_dst : lax_src;
    if (!(w.src == want_src) || !(w.dst == want_dst)) {
      if (w.src == want_dst && w.dst == want_src)
        throw VariantMismatch("omega at grade '" + x + "' is oriented " +
                              to_string(h.variant == Variant::lax ? Variant::oplax : Variant::lax) +
                              " but the morphism is declared " + to_string(h.variant));
      throw ShapeMismatch("omega at grade '" + x + "' has the wrong boundary");
    }
  }
}

}  // namespace

CheckReport check_graded_morphism(const GradedMorphism& h) {
  require_morphism_tables(h);
  CheckReport report;
  const FinCategory& d = h.dst.base;
  const MonoidalStructure& m = h.src.grading;
  const bool lax = h.variant == Variant::lax;

  for (const auto& x : m.base.objects) report.absorb(check_naturality(h.omega_at(x)), "grade", x);

  // Naturality of ω in the grade.
  for (const auto& f : m.base.morphisms) {
    const NatTrans& wx = h.omega_at(f.dom);
    const NatTrans& wy = h.omega_at(f.cod);
    const NatTrans& ff = h.src.F_on(f.id);
    const NatTrans& gf = h.dst.F_on(f.id);
    for (const auto& a : h.src.base.objects) {
      std::map<std::string, std::string> bind = {{"f", f.id}, {"A", a}};
      if (lax) {
        // ω_Y ∘ ΩF_f = G_fΩ ∘ ω_X
        require_equal_paths(report, d, "omega-naturality", bind,
                            {h.Omega.on_morphism(ff.at(a)), wy.at(a)},
                            {wx.at(a), gf.at(h.Omega.on_object(a))});
      } else {
        // ΩF_f ∘ ω_X = ω_Y ∘ G_fΩ
        require_equal_paths(report, d, "omega-naturality", bind,
                            {wx.at(a), h.Omega.on_morphism(ff.at(a))},
                            {gf.at(h.Omega.on_object(a)), wy.at(a)});
      }
    }
  }

  // Compatibility with the multiplications.
  for (const auto& x : m.base.objects)
    for (const auto& y : m.base.objects) {
      const std::string xy = m.tensor_obj(x, y);
      const NatTrans& wx = h.omega_at(x);
      const NatTrans& wy = h.omega_at(y);
      const NatTrans& wxy = h.omega_at(xy);
      const NatTrans& gam = h.src.gamma_at(x, y);
      const NatTrans& mu = h.dst.gamma_at(x, y);
      const Functor& fy = h.src.F_at(y);
      const Functor& gx = h.dst.F_at(x);
      for (const auto& a : h.src.base.objects) {
        std::map<std::string, std::string> bind = {{"X", x}, {"Y", y}, {"A", a}};
        if (lax) {
          // μ_{X,Y}Ω ∘ G_Xω_Y ∘ ω_XF_Y = ω_{X⊗Y} ∘ Ωγ_{X,Y}
          require_equal_paths(report, d, "morphism-mult", bind,
                              {wx.at(fy.on_object(a)), gx.on_morphism(wy.at(a)),
                               mu.at(h.Omega.on_object(a))},
                              {h.Omega.on_morphism(gam.at(a)), wxy.at(a)});
        } else {
          // Ωγ_{X,Y} ∘ ω_XF_Y ∘ G_Xω_Y = ω_{X⊗Y} ∘ μ_{X,Y}Ω
          require_equal_paths(report, d, "morphism-mult", bind,
                              {gx.on_morphism(wy.at(a)), wx.at(fy.on_object(a)),
                               h.Omega.on_morphism(gam.at(a))},
                              {mu.at(h.Omega.on_object(a)), wxy.at(a)});
        }
      }
    }

  // Compatibility with the units.
  {
    const NatTrans& wi = h.omega_at(m.unit);
    for (const auto& a : h.src.base.objects) {
      std::map<std::string, std::string> bind = {{"A", a}};
      if (lax) {
        // ω_I ∘ Ωδ = ηΩ
        require_equal_paths(report, d, "morphism-unit", bind,
                            {h.Omega.on_morphism(h.src.delta.at(a)), wi.at(a)},
                            {h.dst.delta.at(h.Omega.on_object(a))});
      } else {
        // ω_I ∘ ηΩ = Ωδ
        require_equal_paths(report, d, "morphism-unit", bind,
                            {h.dst.delta.at(h.Omega.on_object(a)), wi.at(a)},
                            {h.Omega.on_morphism(h.src.delta.at(a))});
      }
    }
  }
  return report;
}

CheckReport check_graded_transformation(const GradedTransformation& b) {
  if (b.src.variant != b.dst.variant)
    throw VariantMismatch("transformation between a " + to_string(b.src.variant) + " and a " +
                          to_string(b.dst.variant) + " graded morphism");
  if (!(b.src.src == b.dst.src) || !(b.src.dst == b.dst.dst))
    throw ShapeMismatch("graded transformation endpoints are not parallel");
  if (!(b.beta.src == b.src.Omega) || !(b.beta.dst == b.dst.Omega))
    throw ShapeMismatch("beta must go from the source carrier to the target carrier");
  require_morphism_tables(b.src);
  require_morphism_tables(b.dst);

  CheckReport report;
  report.absorb(check_naturality(b.beta), "cell", "beta");

  const FinCategory& d = b.src.dst.base;
  const MonoidalStructure& m = b.src.src.grading;
  const bool lax = b.src.variant == Variant::lax;

  for (const auto& f : m.base.morphisms) {
    const NatTrans& wx = b.src.omega_at(f.dom);
    const NatTrans& xy = b.dst.omega_at(f.cod);
    const NatTrans& ff = b.src.src.F_on(f.id);
    const NatTrans& gf = b.src.dst.F_on(f.id);
    const Functor& fy = b.src.src.F_at(f.cod);
    const Functor& gx = b.src.dst.F_at(f.dom);
    for (const auto& a : b.src.src.base.objects) {
      std::map<std::string, std::string> bind = {{"f", f.id}, {"X", f.dom}, {"Y", f.cod}, {"A", a}};
      if (lax) {
        // G_fβ ∘ ω_X = ξ_Y ∘ βF_f
        require_equal_paths(report, d, "modification-square", bind,
                            {wx.at(a), gx.on_morphism(b.beta.at(a)),
                             gf.at(b.dst.Omega.on_object(a))},
                            {b.src.Omega.on_morphism(ff.at(a)), b.beta.at(fy.on_object(a)),
                             xy.at(a)});
      } else {
        // βF_f ∘ ω_X = ξ_Y ∘ G_fβ
        require_equal_paths(report, d, "modification-square", bind,
                            {wx.at(a), b.src.Omega.on_morphism(ff.at(a)),
                             b.beta.at(fy.on_object(a))},
                            {gx.on_morphism(b.beta.at(a)), gf.at(b.dst.Omega.on_object(a)),
                             xy.at(a)});
      }
    }
  }
  return report;
}

GradedMorphism identity_graded_morphism(const GradedMonad& t, Variant variant) {
  GradedMorphism h;
  h.variant = variant;
  h.src = t;
  h.dst = t;
  h.Omega = id_functor(t.base);
  for (const auto& x : t.grading.base.objects) {
    NatTrans w = id_nattrans(t.F_at(x));
    // Boundary bookkeeping: Ω∘F_X and F_X∘Ω have identical tables.
    w.src = compose_functors(variant == Variant::lax ? h.Omega : t.F_at(x),
                             variant == Variant::lax ? t.F_at(x) : h.Omega);
    w.dst = compose_functors(variant == Variant::lax ? t.F_at(x) : h.Omega,
                             variant == Variant::lax ? h.Omega : t.F_at(x));
    h.omega[x] = w;
  }
  return h;
}

GradedMorphism compose_graded_morphisms(const GradedMorphism& second, const GradedMorphism& first) {
  if (second.variant != first.variant)
    throw VariantMismatch("composing a " + to_string(first.variant) + " with a " + to_string(second.variant) +
                          " graded morphism");
  if (!(first.dst == second.src)) throw ShapeMismatch("graded morphisms are not composable");
  GradedMorphism r;
  r.variant = first.variant;
  r.src = first.src;
  r.dst = second.dst;
  r.Omega = compose_functors(second.Omega, first.Omega);
  for (const auto& x : first.src.grading.base.objects) {
    if (first.variant == Variant::lax) {
      // (ω2_X ⋆ Ω1) · (Ω2 ⋆ ω1_X)
      r.omega[x] = vcomp(whisker_right(second.omega_at(x), first.Omega),
                         whisker_left(second.Omega, first.omega_at(x)));
    } else {
      // (Ω2 ⋆ ω1_X) · (ω2_X ⋆ Ω1)
      r.omega[x] = vcomp(whisker_left(second.Omega, first.omega_at(x)),
                         whisker_right(second.omega_at(x), first.Omega));
    }
  }
  return r;
}

GradedMonad trivial_graded_monad(const MonoidalStructure& grading) {
  GradedMonad t;
  t.grading = grading;
  t.base = terminal_category();
  Functor idt = id_functor(t.base);
  for (const auto& x : grading.base.objects) t.F_obj[x] = idt;
  for (const auto& f : grading.base.morphisms) t.F_mor[f.id] = id_nattrans(idt);
  NatTrans idcell = id_nattrans(idt);
  for (const auto& x : grading.base.objects)
    for (const auto& y : grading.base.objects) t.gamma[{x, y}] = idcell;
  t.delta = idcell;
  return t;
}

GradedMonad product_graded_monad(const GradedMonad& a, const GradedMonad& b) {
  if (!(a.grading == b.grading)) throw ShapeMismatch("product of graded monads over different gradings");
  GradedMonad p;
  p.grading = a.grading;
  p.base = product_category(a.base, b.base);
  for (const auto& x : a.grading.base.objects)
    p.F_obj[x] = product_functor(a.F_at(x), b.F_at(x));
  for (const auto& f : a.grading.base.morphisms)
    p.F_mor[f.id] = product_nattrans(a.F_on(f.id), b.F_on(f.id));
  for (const auto& x : a.grading.base.objects)
    for (const auto& y : a.grading.base.objects)
      p.gamma[{x, y}] = product_nattrans(a.gamma_at(x, y), b.gamma_at(x, y));
  p.delta = product_nattrans(a.delta, b.delta);
  return p;
}

GradedMorphism product_graded_morphism(const GradedMorphism& a, const GradedMorphism& b) {
  if (a.variant != b.variant) throw VariantMismatch("product of graded morphisms with different variants");
  GradedMorphism p;
  p.variant = a.variant;
  p.src = product_graded_monad(a.src, b.src);
  p.dst = product_graded_monad(a.dst, b.dst);
  p.Omega = product_functor(a.Omega, b.Omega);
  for (const auto& x : a.src.grading.base.objects)
    p.omega[x] = product_nattrans(a.omega_at(x), b.omega_at(x));
  return p;
}

}  // namespace gmcat
