#include "gmcat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace gmcat {

using nlohmann::json;

const Resource* Bundle::find(const std::string& resource_name) const {
  for (const auto& r : resources)
    if (r.name == resource_name) return &r;
  return nullptr;
}

const MonoidalStructure& Bundle::monoidal(const std::string& resource_name) const {
  const Resource* r = find(resource_name);
  if (!r) throw MalformedInput("bundle has no resource named '" + resource_name + "'");
  if (const auto* m = std::get_if<MonoidalStructure>(&r->payload)) return *m;
  if (const auto* t = std::get_if<ThinMonoidalEntry>(&r->payload)) return t->value;
  throw MalformedInput("resource '" + resource_name + "' is not a monoidal structure");
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xF);
  return out.str();
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

[[noreturn]] void bad(const std::string& what) { throw MalformedInput(what); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + key + "' in " + where);
  return *it;
}

std::string str_field(const json& j, const std::string& key, const std::string& where) {
  const json& f = field(j, key, where);
  if (!f.is_string()) bad("field '" + key + "' in " + where + " must be a string");
  return f.get<std::string>();
}

std::map<std::string, std::string> string_map(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where + " must be an object of strings");
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) bad(where + "." + it.key() + " must be a string");
    out[it.key()] = it.value().get<std::string>();
  }
  return out;
}

json to_json(const std::map<std::string, std::string>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}

// ---- fincat/v1 ----

FinCategory category_from_json(const json& j) {
  FinCategory c;
  c.name = str_field(j, "name", "category");
  for (const auto& o : field(j, "objects", c.name)) c.objects.push_back(o.get<std::string>());
  for (const auto& m : field(j, "morphisms", c.name))
    c.morphisms.push_back({str_field(m, "id", c.name), str_field(m, "dom", c.name),
                           str_field(m, "cod", c.name)});
  c.identity = string_map(field(j, "identity", c.name), c.name + ".identity");
  for (const auto& t : field(j, "comp", c.name)) {
    if (!t.is_array() || t.size() != 3) bad("comp entries of '" + c.name + "' must be [g, f, gf]");
    c.comp[{t[0].get<std::string>(), t[1].get<std::string>()}] = t[2].get<std::string>();
  }
  validate_category(c);
  return c;
}

json category_to_json(const FinCategory& c) {
  json j;
  j["schema"] = "fincat/v1";
  j["kind"] = "category";
  j["name"] = c.name;
  j["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms) mors.push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  j["morphisms"] = mors;
  j["identity"] = to_json(c.identity);
  json comp = json::array();
  for (const auto& [pair, gf] : c.comp) comp.push_back({pair.first, pair.second, gf});
  j["comp"] = comp;
  return j;
}

Functor functor_tables(const json& j, const FinCategory& src, const FinCategory& dst,
                       const std::string& where) {
  Functor f;
  f.src = src;
  f.dst = dst;
  f.obj_map = string_map(field(j, "obj_map", where), where + ".obj_map");
  f.mor_map = string_map(field(j, "mor_map", where), where + ".mor_map");
  return f;
}

json functor_tables_to_json(const Functor& f) {
  return json{{"obj_map", to_json(f.obj_map)}, {"mor_map", to_json(f.mor_map)}};
}

// ---- monoidal/v1 ----

MonoidalStructure monoidal_from_json(const json& j, const Bundle& b, const std::string& name) {
  MonoidalStructure m;
  m.base = b.get<FinCategory>(str_field(j, "base", name));
  m.unit = str_field(j, "unit", name);
  m.tensor.src = product_category(m.base, m.base);
  m.tensor.dst = m.base;
  const json& tensor = field(j, "tensor", name);
  m.tensor.obj_map = string_map(field(tensor, "obj_map", name), name + ".tensor.obj_map");
  m.tensor.mor_map = string_map(field(tensor, "mor_map", name), name + ".tensor.mor_map");
  for (const auto& row : field(j, "assoc", name)) {
    if (!row.is_array() || row.size() != 5) bad("assoc rows of '" + name + "' must be [A,B,C,fwd,inv]");
    std::tuple<std::string, std::string, std::string> key{row[0].get<std::string>(),
                                                          row[1].get<std::string>(),
                                                          row[2].get<std::string>()};
    m.assoc[key] = row[3].get<std::string>();
    m.assoc_inv[key] = row[4].get<std::string>();
  }
  auto unitor = [&](const char* key, std::map<std::string, std::string>& fwd,
                    std::map<std::string, std::string>& inv) {
    for (const auto& row : field(j, key, name)) {
      if (!row.is_array() || row.size() != 3) bad(std::string(key) + " rows of '" + name + "' must be [A,fwd,inv]");
      fwd[row[0].get<std::string>()] = row[1].get<std::string>();
      inv[row[0].get<std::string>()] = row[2].get<std::string>();
    }
  };
  unitor("lunit", m.lunit, m.lunit_inv);
  unitor("runit", m.runit, m.runit_inv);
  return m;
}

json monoidal_to_json(const MonoidalStructure& m, const std::string& name) {
  json j;
  j["schema"] = "monoidal/v1";
  j["kind"] = "monoidal";
  j["name"] = name;
  j["base"] = m.base.name;
  j["unit"] = m.unit;
  j["tensor"] = json{{"obj_map", to_json(m.tensor.obj_map)}, {"mor_map", to_json(m.tensor.mor_map)}};
  json assoc = json::array();
  for (const auto& [key, fwd] : m.assoc) {
    const auto& [a, bb, c] = key;
    assoc.push_back({a, bb, c, fwd, m.assoc_inv.at(key)});
  }
  j["assoc"] = assoc;
  json lunit = json::array();
  for (const auto& [a, fwd] : m.lunit) lunit.push_back({a, fwd, m.lunit_inv.at(a)});
  j["lunit"] = lunit;
  json runit = json::array();
  for (const auto& [a, fwd] : m.runit) runit.push_back({a, fwd, m.runit_inv.at(a)});
  j["runit"] = runit;
  return j;
}

NatTrans components_cell(const json& j, const Functor& src, const Functor& dst,
                         const std::string& where) {
  NatTrans t;
  t.src = src;
  t.dst = dst;
  t.components = string_map(j, where);
  return t;
}

// ---- graded/v1 ----

GradedEntry graded_from_json(const json& j, const Bundle& b, const std::string& name) {
  GradedEntry entry;
  GradedMonad& t = entry.monad;
  t.grading = b.monoidal(str_field(j, "grading", name));
  t.base = b.get<FinCategory>(str_field(j, "base", name));
  const json& fobj = field(j, "F_obj", name);
  for (const auto& x : t.grading.base.objects) {
    if (!fobj.contains(x)) bad("graded monad '" + name + "' misses F_obj at '" + x + "'");
    t.F_obj[x] = functor_tables(fobj.at(x), t.base, t.base, name + ".F_obj." + x);
  }
  const json& fmor = field(j, "F_mor", name);
  for (const auto& m : t.grading.base.morphisms) {
    if (!fmor.contains(m.id)) bad("graded monad '" + name + "' misses F_mor at '" + m.id + "'");
    t.F_mor[m.id] = components_cell(fmor.at(m.id), t.F_obj.at(m.dom), t.F_obj.at(m.cod),
                                    name + ".F_mor." + m.id);
  }
  for (const auto& row : field(j, "gamma", name)) {
    if (!row.is_array() || row.size() != 3) bad("gamma rows of '" + name + "' must be [X,Y,components]");
    const std::string x = row[0].get<std::string>();
    const std::string y = row[1].get<std::string>();
    t.gamma[{x, y}] = components_cell(row[2], compose_functors(t.F_obj.at(x), t.F_obj.at(y)),
                                      t.F_obj.at(t.grading.tensor_obj(x, y)),
                                      name + ".gamma." + x + "," + y);
  }
  t.delta = components_cell(field(j, "delta", name), id_functor(t.base),
                            t.F_obj.at(t.grading.unit), name + ".delta");

  if (j.contains("commutative")) {
    const json& cj = j.at("commutative");
    CommutativeGradedMonad c;
    c.underlying = t;
    const std::string variant = str_field(cj, "variant", name + ".commutative");
    if (variant != "lax" && variant != "oplax") bad("variant of '" + name + "' must be lax or oplax");
    c.variant = variant == "lax" ? Variant::lax : Variant::oplax;
    c.base_monoidal = b.monoidal(str_field(cj, "base_monoidal", name));
    for (const auto& row : field(cj, "phi", name)) {
      if (!row.is_array() || row.size() != 2) bad("phi rows of '" + name + "' must be [X, data]");
      const std::string x = row[0].get<std::string>();
      MonoidalFunctor shape;
      shape.variant = c.variant;
      shape.src = c.base_monoidal;
      shape.dst = c.base_monoidal;
      shape.F = t.F_at(x);
      auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(shape);
      GradePhi gp;
      gp.phi = components_cell(field(row[1], "phi", name), phi_src, phi_dst, name + ".phi." + x);
      gp.phibar = str_field(row[1], "phibar", name + ".phi." + x);
      c.Phi[x] = gp;
    }
    entry.commutative = c;
  }
  return entry;
}

json graded_to_json(const GradedEntry& entry, const Bundle& b, const std::string& name,
                    const std::string& grading_ref, const std::string& base_monoidal_ref) {
  const GradedMonad& t = entry.monad;
  json j;
  j["schema"] = "graded/v1";
  j["kind"] = "monad";
  j["name"] = name;
  j["grading"] = grading_ref;
  j["base"] = t.base.name;
  json fobj = json::object();
  for (const auto& [x, f] : t.F_obj) fobj[x] = functor_tables_to_json(f);
  j["F_obj"] = fobj;
  json fmor = json::object();
  for (const auto& [f, cell] : t.F_mor) fmor[f] = to_json(cell.components);
  j["F_mor"] = fmor;
  json gamma = json::array();
  for (const auto& [key, cell] : t.gamma) gamma.push_back({key.first, key.second, to_json(cell.components)});
  j["gamma"] = gamma;
  j["delta"] = to_json(t.delta.components);
  if (entry.commutative) {
    const CommutativeGradedMonad& c = *entry.commutative;
    json cj;
    cj["variant"] = to_string(c.variant);
    cj["base_monoidal"] = base_monoidal_ref;
    json phi = json::array();
    for (const auto& [x, gp] : c.Phi)
      phi.push_back({x, json{{"phi", to_json(gp.phi.components)}, {"phibar", gp.phibar}}});
    cj["phi"] = phi;
    j["commutative"] = cj;
  }
  (void)b;
  return j;
}

// ---- resolution helpers for writer-side references ----

std::string monoidal_ref(const Bundle& b, const MonoidalStructure& m, const std::string& context) {
  for (const auto& r : b.resources) {
    if (const auto* p = std::get_if<MonoidalStructure>(&r.payload))
      if (*p == m) return r.name;
    if (const auto* t = std::get_if<ThinMonoidalEntry>(&r.payload))
      if (t->value == m) return r.name;
  }
  bad("no monoidal resource matches the structure used by " + context);
}

std::string graded_ref(const Bundle& b, const GradedMonad& t, const std::string& context) {
  for (const auto& r : b.resources)
    if (const auto* p = std::get_if<GradedEntry>(&r.payload))
      if (p->monad == t) return r.name;
  bad("no graded resource matches the monad used by " + context);
}

std::string formal_ref(const Bundle& b, const FormalMonad& m, const std::string& context) {
  for (const auto& r : b.resources)
    if (const auto* p = std::get_if<FormalMonad>(&r.payload))
      if (*p == m) return r.name;
  bad("no formal-monad resource matches the monad used by " + context);
}

std::string functor_ref(const Bundle& b, const Functor& f, const std::string& context) {
  for (const auto& r : b.resources)
    if (const auto* p = std::get_if<Functor>(&r.payload))
      if (*p == f) return r.name;
  bad("no functor resource matches the functor used by " + context);
}

std::string presheaf_ref(const Bundle& b, const PresheafOfCategories& p, const std::string& context) {
  for (const auto& r : b.resources)
    if (const auto* q = std::get_if<PresheafOfCategories>(&r.payload))
      if (*q == p) return r.name;
  bad("no presheaf resource matches the presheaf used by " + context);
}

std::string mf_ref(const Bundle& b, const MonoidalFunctor& f, const std::string& context) {
  for (const auto& r : b.resources)
    if (const auto* p = std::get_if<MonoidalFunctor>(&r.payload))
      if (*p == f) return r.name;
  bad("no monoidal-functor resource matches the functor used by " + context);
}

}  // namespace

Bundle bundle_from_json(const json& doc) {
  if (str_field(doc, "schema", "bundle") != "bundle/v1") bad("expected schema bundle/v1");
  Bundle b;
  b.name = str_field(doc, "name", "bundle");
  if (doc.contains("suite")) b.suite = doc.at("suite").get<std::string>();
  const json& resources = field(doc, "resources", "bundle");

  // Resources resolve kind by kind (categories before functors and so on) but
  // keep their document order in the loaded bundle, so a load/write cycle is
  // order-preserving.
  std::vector<std::size_t> doc_index;
  auto pass = [&](const std::string& kind, auto&& fn) {
    for (std::size_t i = 0; i < resources.size(); ++i) {
      const json& rj = resources[i];
      if (str_field(rj, "kind", "resource") != kind) continue;
      Resource r;
      r.kind = kind;
      r.name = str_field(rj, "name", kind + " resource");
      if (b.find(r.name)) bad("duplicate resource name '" + r.name + "'");
      r.payload = fn(rj, r.name);
      b.resources.push_back(std::move(r));
      doc_index.push_back(i);
    }
  };

  pass("category", [&](const json& j, const std::string&) -> Payload { return category_from_json(j); });
  pass("functor", [&](const json& j, const std::string& name) -> Payload {
    return functor_tables(j, b.get<FinCategory>(str_field(j, "src", name)),
                          b.get<FinCategory>(str_field(j, "dst", name)), name);
  });
  pass("nattrans", [&](const json& j, const std::string& name) -> Payload {
    return components_cell(field(j, "components", name), b.get<Functor>(str_field(j, "src", name)),
                           b.get<Functor>(str_field(j, "dst", name)), name);
  });
  pass("semilattice", [&](const json& j, const std::string& name) -> Payload {
    ThinMonoidalEntry entry;
    entry.lattice.name = name;
    for (const auto& e : field(j, "elements", name)) entry.lattice.elements.push_back(e.get<std::string>());
    for (const auto& p : field(j, "leq", name))
      entry.lattice.leq.insert({p[0].get<std::string>(), p[1].get<std::string>()});
    const std::string arrows = str_field(j, "orientation", name);
    if (arrows != "up" && arrows != "down") bad("orientation of '" + name + "' must be up or down");
    entry.arrows = arrows == "up" ? ThinArrows::up : ThinArrows::down;
    entry.value = thin_from_semilattice(entry.lattice, entry.arrows);
    return entry;
  });
  pass("monoidal", [&](const json& j, const std::string& name) -> Payload {
    return monoidal_from_json(j, b, name);
  });
  pass("monoidal-functor", [&](const json& j, const std::string& name) -> Payload {
    MonoidalFunctor f;
    const std::string variant = str_field(j, "variant", name);
    if (variant != "lax" && variant != "oplax") bad("variant of '" + name + "' must be lax or oplax");
    f.variant = variant == "lax" ? Variant::lax : Variant::oplax;
    f.src = b.monoidal(str_field(j, "src", name));
    f.dst = b.monoidal(str_field(j, "dst", name));
    f.F = functor_tables(field(j, "functor", name), f.src.base, f.dst.base, name + ".functor");
    auto [phi_src, phi_dst] = monoidal_functor_phi_boundary(f);
    f.phi = components_cell(field(j, "phi", name), phi_src, phi_dst, name + ".phi");
    f.phibar = str_field(j, "phibar", name);
    return f;
  });
  pass("monoidal-transformation", [&](const json& j, const std::string& name) -> Payload {
    MonoidalTransformation t;
    t.src = b.get<MonoidalFunctor>(str_field(j, "src", name));
    t.dst = b.get<MonoidalFunctor>(str_field(j, "dst", name));
    t.underlying = components_cell(field(j, "components", name), t.src.F, t.dst.F, name);
    return t;
  });
  pass("graded", [&](const json& j, const std::string& name) -> Payload {
    return graded_from_json(j, b, name);
  });
  pass("morphism", [&](const json& j, const std::string& name) -> Payload {
    GradedMorphism h;
    const std::string variant = str_field(j, "variant", name);
    if (variant != "lax" && variant != "oplax") bad("variant of '" + name + "' must be lax or oplax");
    h.variant = variant == "lax" ? Variant::lax : Variant::oplax;
    h.src = b.get<GradedEntry>(str_field(j, "src", name)).monad;
    h.dst = b.get<GradedEntry>(str_field(j, "dst", name)).monad;
    h.Omega = functor_tables(field(j, "carrier", name), h.src.base, h.dst.base, name + ".carrier");
    const json& omega = field(j, "omega", name);
    for (const auto& row : omega) {
      if (!row.is_array() || row.size() != 2) bad("omega rows of '" + name + "' must be [X, components]");
      const std::string x = row[0].get<std::string>();
      Functor lax_src = compose_functors(h.Omega, h.src.F_at(x));
      Functor lax_dst = compose_functors(h.dst.F_at(x), h.Omega);
      h.omega[x] = components_cell(row[1], h.variant == Variant::lax ? lax_src : lax_dst,
                                   h.variant == Variant::lax ? lax_dst : lax_src,
                                   name + ".omega." + x);
    }
    return h;
  });
  pass("algebra", [&](const json& j, const std::string& name) -> Payload {
    AlgebraEntry entry;
    entry.monad_ref = str_field(j, "monad", name);
    const GradedMonad& t = b.get<GradedEntry>(entry.monad_ref).monad;
    entry.value.carrier = functor_tables(field(j, "carrier", name), t.grading.base, t.base,
                                         name + ".carrier");
    for (const auto& row : field(j, "act", name)) {
      if (!row.is_array() || row.size() != 3) bad("act rows of '" + name + "' must be [X,N,morphism]");
      entry.value.act[{row[0].get<std::string>(), row[1].get<std::string>()}] = row[2].get<std::string>();
    }
    return entry;
  });
  pass("presheaf", [&](const json& j, const std::string& name) -> Payload {
    PresheafOfCategories p;
    p.site = b.monoidal(str_field(j, "site", name));
    const json& at = field(j, "at", name);
    for (const auto& u : p.site.base.objects) {
      if (!at.contains(u)) bad("presheaf '" + name + "' misses level at '" + u + "'");
      p.at[u] = b.get<FinCategory>(at.at(u).get<std::string>());
    }
    const json& restrict_j = field(j, "restrict", name);
    for (const auto& m : p.site.base.morphisms) {
      if (!restrict_j.contains(m.id)) bad("presheaf '" + name + "' misses restriction along '" + m.id + "'");
      p.restrict_along[m.id] = functor_tables(restrict_j.at(m.id), p.at.at(m.dom), p.at.at(m.cod),
                                              name + ".restrict." + m.id);
    }
    return p;
  });
  pass("formal-monad", [&](const json& j, const std::string& name) -> Payload {
    FormalMonad m;
    m.base = b.get<PresheafOfCategories>(str_field(j, "presheaf", name));
    const json& tj = field(j, "T", name);
    const json& muj = field(j, "mu", name);
    const json& etaj = field(j, "eta", name);
    for (const auto& u : m.base.site.base.objects) {
      if (!tj.contains(u) || !muj.contains(u) || !etaj.contains(u))
        bad("formal monad '" + name + "' misses data at '" + u + "'");
      const FinCategory& c = m.base.at_element(u);
      m.T[u] = functor_tables(tj.at(u), c, c, name + ".T." + u);
      m.mu[u] = components_cell(muj.at(u), compose_functors(m.T[u], m.T[u]), m.T[u], name + ".mu." + u);
      m.eta[u] = components_cell(etaj.at(u), id_functor(c), m.T[u], name + ".eta." + u);
    }
    return m;
  });
  pass("family", [&](const json& j, const std::string& name) -> Payload {
    MonadMorphismFamily f;
    f.src = b.get<FormalMonad>(str_field(j, "src", name));
    f.dst = b.get<FormalMonad>(str_field(j, "dst", name));
    const json& pb = field(j, "phibar", name);
    for (const auto& u : f.src.base.site.base.objects) {
      if (!pb.contains(u)) bad("family '" + name + "' misses phibar at '" + u + "'");
      f.phibar[u] = components_cell(pb.at(u), f.dst.T.at(u), f.src.T.at(u), name + ".phibar." + u);
    }
    return f;
  });
  pass("pairing", [&](const json& j, const std::string& name) -> Payload {
    LocalisablePairing p;
    p.graded_src = b.get<GradedEntry>(str_field(j, "graded_src", name)).monad;
    p.graded_dst = b.get<GradedEntry>(str_field(j, "graded_dst", name)).monad;
    p.formal_src = b.get<FormalMonad>(str_field(j, "formal_src", name));
    p.formal_dst = b.get<FormalMonad>(str_field(j, "formal_dst", name));
    p.component_map = string_map(field(j, "component_map", name), name + ".component_map");
    return p;
  });

  // Reject unknown kinds.
  for (const auto& rj : resources) {
    const std::string kind = str_field(rj, "kind", "resource");
    static const std::set<std::string> known = {
        "category", "functor", "nattrans", "semilattice", "monoidal", "monoidal-functor",
        "monoidal-transformation", "graded", "morphism", "algebra", "presheaf", "formal-monad",
        "family", "pairing"};
    if (!known.count(kind)) bad("unknown resource kind '" + kind + "'");
  }

  // Restore document order.
  std::vector<std::size_t> order(b.resources.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return doc_index[l] < doc_index[r]; });
  std::vector<Resource> sorted;
  sorted.reserve(b.resources.size());
  for (std::size_t i : order) sorted.push_back(std::move(b.resources[i]));
  b.resources = std::move(sorted);
  return b;
}

nlohmann::json bundle_to_json(const Bundle& b) {
  json doc;
  doc["schema"] = "bundle/v1";
  doc["name"] = b.name;
  doc["suite"] = b.suite;
  json resources = json::array();
  for (const auto& r : b.resources) {
    json j;
    if (const auto* c = std::get_if<FinCategory>(&r.payload)) {
      j = category_to_json(*c);
      j["name"] = r.name;
    } else if (const auto* f = std::get_if<Functor>(&r.payload)) {
      j = functor_tables_to_json(*f);
      j["schema"] = "fincat/v1";
      j["kind"] = "functor";
      j["name"] = r.name;
      j["src"] = f->src.name;
      j["dst"] = f->dst.name;
    } else if (const auto* t = std::get_if<NatTrans>(&r.payload)) {
      j["schema"] = "fincat/v1";
      j["kind"] = "nattrans";
      j["name"] = r.name;
      j["src"] = functor_ref(b, t->src, r.name);
      j["dst"] = functor_ref(b, t->dst, r.name);
      j["components"] = to_json(t->components);
    } else if (const auto* m = std::get_if<MonoidalStructure>(&r.payload)) {
      j = monoidal_to_json(*m, r.name);
    } else if (const auto* t = std::get_if<ThinMonoidalEntry>(&r.payload)) {
      j["schema"] = "monoidal/v1";
      j["kind"] = "semilattice";
      j["name"] = r.name;
      j["elements"] = t->lattice.elements;
      json leq = json::array();
      for (const auto& [x, y] : t->lattice.leq) leq.push_back({x, y});
      j["leq"] = leq;
      j["orientation"] = t->arrows == ThinArrows::up ? "up" : "down";
    } else if (const auto* f = std::get_if<MonoidalFunctor>(&r.payload)) {
      j["schema"] = "monoidal/v1";
      j["kind"] = "monoidal-functor";
      j["name"] = r.name;
      j["variant"] = to_string(f->variant);
      j["src"] = monoidal_ref(b, f->src, r.name);
      j["dst"] = monoidal_ref(b, f->dst, r.name);
      j["functor"] = functor_tables_to_json(f->F);
      j["phi"] = to_json(f->phi.components);
      j["phibar"] = f->phibar;
    } else if (const auto* t = std::get_if<MonoidalTransformation>(&r.payload)) {
      j["schema"] = "monoidal/v1";
      j["kind"] = "monoidal-transformation";
      j["name"] = r.name;
      j["src"] = mf_ref(b, t->src, r.name);
      j["dst"] = mf_ref(b, t->dst, r.name);
      j["components"] = to_json(t->underlying.components);
    } else if (const auto* g = std::get_if<GradedEntry>(&r.payload)) {
      const std::string base_monoidal =
          g->commutative ? monoidal_ref(b, g->commutative->base_monoidal, r.name) : "";
      j = graded_to_json(*g, b, r.name, monoidal_ref(b, g->monad.grading, r.name), base_monoidal);
    } else if (const auto* h = std::get_if<GradedMorphism>(&r.payload)) {
      j["schema"] = "graded/v1";
      j["kind"] = "morphism";
      j["name"] = r.name;
      j["variant"] = to_string(h->variant);
      j["src"] = graded_ref(b, h->src, r.name);
      j["dst"] = graded_ref(b, h->dst, r.name);
      j["carrier"] = functor_tables_to_json(h->Omega);
      json omega = json::array();
      for (const auto& [x, cell] : h->omega) omega.push_back({x, to_json(cell.components)});
      j["omega"] = omega;
    } else if (const auto* a = std::get_if<AlgebraEntry>(&r.payload)) {
      j["schema"] = "algebra/v1";
      j["name"] = r.name;
      j["monad"] = a->monad_ref;
      j["carrier"] = functor_tables_to_json(a->value.carrier);
      json act = json::array();
      for (const auto& [key, mor] : a->value.act) act.push_back({key.first, key.second, mor});
      j["act"] = act;
    } else if (const auto* p = std::get_if<PresheafOfCategories>(&r.payload)) {
      j["schema"] = "presheaf/v1";
      j["name"] = r.name;
      j["site"] = monoidal_ref(b, p->site, r.name);
      json at = json::object();
      for (const auto& [u, c] : p->at) at[u] = c.name;
      j["at"] = at;
      json restrict_j = json::object();
      for (const auto& [m, f] : p->restrict_along) restrict_j[m] = functor_tables_to_json(f);
      j["restrict"] = restrict_j;
    } else if (const auto* m = std::get_if<FormalMonad>(&r.payload)) {
      j["schema"] = "formalmonad/v1";
      j["kind"] = "monad";
      j["name"] = r.name;
      j["presheaf"] = presheaf_ref(b, m->base, r.name);
      json tj = json::object(), muj = json::object(), etaj = json::object();
      for (const auto& [u, f] : m->T) tj[u] = functor_tables_to_json(f);
      for (const auto& [u, cell] : m->mu) muj[u] = to_json(cell.components);
      for (const auto& [u, cell] : m->eta) etaj[u] = to_json(cell.components);
      j["T"] = tj;
      j["mu"] = muj;
      j["eta"] = etaj;
    } else if (const auto* f = std::get_if<MonadMorphismFamily>(&r.payload)) {
      j["schema"] = "formalmonad/v1";
      j["kind"] = "family";
      j["name"] = r.name;
      j["src"] = formal_ref(b, f->src, r.name);
      j["dst"] = formal_ref(b, f->dst, r.name);
      json pb = json::object();
      for (const auto& [u, cell] : f->phibar) pb[u] = to_json(cell.components);
      j["phibar"] = pb;
    } else if (const auto* p = std::get_if<LocalisablePairing>(&r.payload)) {
      j["schema"] = "pairing/v1";
      j["name"] = r.name;
      j["graded_src"] = graded_ref(b, p->graded_src, r.name);
      j["graded_dst"] = graded_ref(b, p->graded_dst, r.name);
      j["formal_src"] = formal_ref(b, p->formal_src, r.name);
      j["formal_dst"] = formal_ref(b, p->formal_dst, r.name);
      j["component_map"] = to_json(p->component_map);
    }
    j["kind"] = r.kind;
    resources.push_back(std::move(j));
  }
  doc["resources"] = resources;
  return doc;
}

Bundle load_bundle_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput(std::string("json parse error: ") + e.what());
  }
  return bundle_from_json(doc);
}

Bundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_bundle_text(buffer.str());
}

nlohmann::json witness_to_json(const Witness& w) {
  json j;
  j["law_id"] = w.law_id;
  j["binding"] = to_json(w.binding);
  j["lhs_path"] = w.lhs_path;
  j["rhs_path"] = w.rhs_path;
  j["lhs"] = w.lhs_result;
  j["rhs"] = w.rhs_result;
  j["category"] = w.category;
  j["witness_id"] = fnv1a_hex(canonical_dump(j));
  return j;
}

nlohmann::json report_to_json(const CheckReport& r) {
  json j;
  j["laws"] = r.laws;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  j["pass"] = r.pass();
  return j;
}

}  // namespace gmcat
