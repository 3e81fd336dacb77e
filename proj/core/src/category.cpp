#include "gmcat/category.hpp"

#include <algorithm>
#include <set>

#include "gmcat/errors.hpp"

namespace gmcat {

bool FinCategory::has_object(const std::string& id) const {
  return std::find(objects.begin(), objects.end(), id) != objects.end();
}

const Morphism* FinCategory::find_morphism(const std::string& id) const {
  for (const auto& m : morphisms)
    if (m.id == id) return &m;
  return nullptr;
}

const Morphism& FinCategory::morphism(const std::string& id) const {
  if (const Morphism* m = find_morphism(id)) return *m;
  throw MalformedInput("category '" + name + "' has no morphism '" + id + "'");
}

const std::string& FinCategory::identity_of(const std::string& object) const {
  auto it = identity.find(object);
  if (it == identity.end())
    throw MalformedInput("category '" + name + "' has no identity for object '" + object + "'");
  return it->second;
}

std::optional<std::string> FinCategory::compose_opt(const std::string& g, const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end()) return std::nullopt;
  return it->second;
}

std::string FinCategory::compose(const std::string& g, const std::string& f) const {
  auto r = compose_opt(g, f);
  if (!r)
    throw MalformedInput("category '" + name + "' has no composite for (" + g + ", " + f + ")");
  return *r;
}

std::vector<std::string> FinCategory::hom(const std::string& a, const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& m : morphisms)
    if (m.dom == a && m.cod == b) out.push_back(m.id);
  return out;
}

bool FinCategory::is_thin() const {
  for (const auto& a : objects)
    for (const auto& b : objects)
      if (hom(a, b).size() > 1) return false;
  return true;
}

const std::string& Functor::on_object(const std::string& id) const {
  auto it = obj_map.find(id);
  if (it == obj_map.end())
    throw MalformedInput("functor from '" + src.name + "' has no image for object '" + id + "'");
  return it->second;
}

const std::string& Functor::on_morphism(const std::string& id) const {
  auto it = mor_map.find(id);
  if (it == mor_map.end())
    throw MalformedInput("functor from '" + src.name + "' has no image for morphism '" + id + "'");
  return it->second;
}

const std::string& NatTrans::at(const std::string& object) const {
  auto it = components.find(object);
  if (it == components.end())
    throw MalformedInput("transformation has no component at object '" + object + "'");
  return it->second;
}

void validate_category(const FinCategory& c) {
  std::set<std::string> objs(c.objects.begin(), c.objects.end());
  if (objs.size() != c.objects.size()) throw MalformedInput("duplicate object ids in '" + c.name + "'");
  std::set<std::string> mors;
  for (const auto& m : c.morphisms) {
    if (!mors.insert(m.id).second)
      throw MalformedInput("duplicate morphism id '" + m.id + "' in '" + c.name + "'");
    if (!objs.count(m.dom) || !objs.count(m.cod))
      throw MalformedInput("morphism '" + m.id + "' of '" + c.name + "' has unknown endpoints");
  }
  for (const auto& obj : c.objects) {
    auto it = c.identity.find(obj);
    if (it == c.identity.end())
      throw MalformedInput("no identity assigned for object '" + obj + "' in '" + c.name + "'");
    if (!mors.count(it->second))
      throw MalformedInput("identity of '" + obj + "' in '" + c.name + "' is an unknown morphism");
  }
  for (const auto& [obj, mor] : c.identity)
    if (!objs.count(obj)) throw MalformedInput("identity table of '" + c.name + "' names unknown object '" + obj + "'");
  // comp must be defined for exactly the composable pairs.
  for (const auto& [pair, gf] : c.comp) {
    const auto& [g, f] = pair;
    if (!mors.count(g) || !mors.count(f) || !mors.count(gf))
      throw MalformedInput("comp entry (" + g + ", " + f + ") -> " + gf + " of '" + c.name + "' references unknown ids");
    if (c.morphism(g).dom != c.morphism(f).cod)
      throw MalformedInput("comp entry (" + g + ", " + f + ") of '" + c.name + "' is not a composable pair");
  }
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms)
      if (g.dom == f.cod && !c.comp.count({g.id, f.id}))
        throw MalformedInput("comp of '" + c.name + "' is partial: missing (" + g.id + ", " + f.id + ")");
}

void validate_functor(const Functor& f) {
  validate_category(f.src);
  validate_category(f.dst);
  for (const auto& obj : f.src.objects) {
    auto it = f.obj_map.find(obj);
    if (it == f.obj_map.end()) throw MalformedInput("functor object map misses '" + obj + "'");
    if (!f.dst.has_object(it->second))
      throw MalformedInput("functor sends '" + obj + "' to unknown object '" + it->second + "'");
  }
  for (const auto& m : f.src.morphisms) {
    auto it = f.mor_map.find(m.id);
    if (it == f.mor_map.end()) throw MalformedInput("functor morphism map misses '" + m.id + "'");
    if (!f.dst.find_morphism(it->second))
      throw MalformedInput("functor sends '" + m.id + "' to unknown morphism '" + it->second + "'");
  }
}

void validate_naturality_data(const NatTrans& t) {
  validate_functor(t.src);
  validate_functor(t.dst);
  if (!(t.src.src == t.dst.src) || !(t.src.dst == t.dst.dst))
    throw ShapeMismatch("naturality data between non-parallel functors ('" + t.src.src.name +
                        "'->'" + t.src.dst.name + "' vs '" + t.dst.src.name + "'->'" + t.dst.dst.name + "')");
  for (const auto& obj : t.src.src.objects) {
    auto it = t.components.find(obj);
    if (it == t.components.end()) throw MalformedInput("transformation misses component at '" + obj + "'");
    if (!t.src.dst.find_morphism(it->second))
      throw MalformedInput("component at '" + obj + "' is unknown morphism '" + it->second + "'");
  }
}

CheckReport check_category(const FinCategory& c) {
  validate_category(c);
  CheckReport report;
  report.add_law("composite-boundary");
  report.add_law("identity-law");
  report.add_law("associativity");

  for (const auto& [pair, gf_id] : c.comp) {
    const auto& [g, f] = pair;
    const Morphism& gf = c.morphism(gf_id);
    const Morphism& mg = c.morphism(g);
    const Morphism& mf = c.morphism(f);
    if (gf.dom != mf.dom || gf.cod != mg.cod) {
      Witness w;
      w.law_id = "composite-boundary";
      w.binding = {{"g", g}, {"f", f}};
      w.lhs_path = {f, g};
      w.rhs_path = {};
      w.lhs_result = gf_id;
      w.rhs_result = "expected " + mf.dom + "->" + mg.cod;
      w.category = c.name;
      report.add_witness(std::move(w));
    }
  }

  for (const auto& m : c.morphisms) {
    const std::string& id_dom = c.identity_of(m.dom);
    const std::string& id_cod = c.identity_of(m.cod);
    if (auto right = c.compose_opt(m.id, id_dom); !right || *right != m.id) {
      Witness w;
      w.law_id = "identity-law";
      w.binding = {{"f", m.id}, {"side", "right"}};
      w.lhs_path = {id_dom, m.id};
      w.rhs_path = {m.id};
      w.lhs_result = right ? *right : ill_typed_marker(w.lhs_path);
      w.rhs_result = m.id;
      w.category = c.name;
      report.add_witness(std::move(w));
    }
    if (auto left = c.compose_opt(id_cod, m.id); !left || *left != m.id) {
      Witness w;
      w.law_id = "identity-law";
      w.binding = {{"f", m.id}, {"side", "left"}};
      w.lhs_path = {m.id, id_cod};
      w.rhs_path = {m.id};
      w.lhs_result = left ? *left : ill_typed_marker(w.lhs_path);
      w.rhs_result = m.id;
      w.category = c.name;
      report.add_witness(std::move(w));
    }
  }

  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (h.dom != g.cod) continue;
      for (const auto& f : c.morphisms) {
        if (g.dom != f.cod) continue;
        auto lhs = compose_path(c, {f.id, g.id, h.id});   // h∘(g∘f) evaluated left-fold
        auto rhs_inner = c.compose_opt(h.id, g.id);
        std::optional<std::string> rhs;
        if (rhs_inner) rhs = c.compose_opt(*rhs_inner, f.id);
        if (lhs && rhs && *lhs == *rhs) continue;
        Witness w;
        w.law_id = "associativity";
        w.binding = {{"h", h.id}, {"g", g.id}, {"f", f.id}};
        w.lhs_path = {f.id, g.id, h.id};
        w.rhs_path = {f.id, rhs_inner ? *rhs_inner : ill_typed_marker({g.id, h.id})};
        w.lhs_result = lhs ? *lhs : ill_typed_marker(w.lhs_path);
        w.rhs_result = rhs ? *rhs : ill_typed_marker(w.rhs_path);
        w.category = c.name;
        report.add_witness(std::move(w));
      }
    }
  return report;
}

namespace {
Witness make_square_witness(const std::string& law, std::map<std::string, std::string> binding,
                            const FinCategory& in, std::vector<std::string> lhs_path,
                            std::vector<std::string> rhs_path) {
  Witness w;
  w.law_id = law;
  w.binding = std::move(binding);
  w.lhs_path = std::move(lhs_path);
  w.rhs_path = std::move(rhs_path);
  auto l = compose_path(in, w.lhs_path);
  auto r = compose_path(in, w.rhs_path);
  w.lhs_result = l ? *l : ill_typed_marker(w.lhs_path);
  w.rhs_result = r ? *r : ill_typed_marker(w.rhs_path);
  w.category = in.name;
  return w;
}
}  // namespace

CheckReport check_functor(const Functor& f) {
  validate_functor(f);
  CheckReport report;
  report.add_law("functor-boundary");
  report.add_law("functor-identity");
  report.add_law("functor-composition");

  for (const auto& m : f.src.morphisms) {
    const Morphism& image = f.dst.morphism(f.on_morphism(m.id));
    if (image.dom != f.on_object(m.dom) || image.cod != f.on_object(m.cod)) {
      Witness w;
      w.law_id = "functor-boundary";
      w.binding = {{"f", m.id}};
      w.lhs_path = {image.id};
      w.rhs_path = {};
      w.lhs_result = image.id;
      w.rhs_result = "expected " + f.on_object(m.dom) + "->" + f.on_object(m.cod);
      w.category = f.dst.name;
      report.add_witness(std::move(w));
    }
  }
  for (const auto& obj : f.src.objects) {
    const std::string& mapped = f.on_morphism(f.src.identity_of(obj));
    const std::string& expected = f.dst.identity_of(f.on_object(obj));
    if (mapped != expected) {
      Witness w;
      w.law_id = "functor-identity";
      w.binding = {{"A", obj}};
      w.lhs_path = {mapped};
      w.rhs_path = {expected};
      w.lhs_result = mapped;
      w.rhs_result = expected;
      w.category = f.dst.name;
      report.add_witness(std::move(w));
    }
  }
  for (const auto& g : f.src.morphisms)
    for (const auto& h : f.src.morphisms) {
      if (g.dom != h.cod) continue;
      const std::string gh = f.src.compose(g.id, h.id);
      auto mapped = f.dst.compose_opt(f.on_morphism(g.id), f.on_morphism(h.id));
      const std::string& direct = f.on_morphism(gh);
      if (mapped && *mapped == direct) continue;
      Witness w;
      w.law_id = "functor-composition";
      w.binding = {{"g", g.id}, {"f", h.id}};
      w.lhs_path = {f.on_morphism(h.id), f.on_morphism(g.id)};
      w.rhs_path = {direct};
      w.lhs_result = mapped ? *mapped : ill_typed_marker(w.lhs_path);
      w.rhs_result = direct;
      w.category = f.dst.name;
      report.add_witness(std::move(w));
    }
  return report;
}

CheckReport check_naturality(const NatTrans& t) {
  validate_naturality_data(t);
  CheckReport report;
  report.add_law("component-boundary");
  report.add_law("naturality");

  const FinCategory& target = t.src.dst;
  for (const auto& obj : t.src.src.objects) {
    const Morphism& cmp = target.morphism(t.at(obj));
    if (cmp.dom != t.src.on_object(obj) || cmp.cod != t.dst.on_object(obj)) {
      Witness w;
      w.law_id = "component-boundary";
      w.binding = {{"A", obj}};
      w.lhs_path = {cmp.id};
      w.rhs_path = {};
      w.lhs_result = cmp.id;
      w.rhs_result = "expected " + t.src.on_object(obj) + "->" + t.dst.on_object(obj);
      w.category = target.name;
      report.add_witness(std::move(w));
    }
  }
  for (const auto& m : t.src.src.morphisms) {
    // G(f)∘τ_A = τ_B∘F(f)
    std::vector<std::string> lhs = {t.at(m.dom), t.dst.on_morphism(m.id)};
    std::vector<std::string> rhs = {t.src.on_morphism(m.id), t.at(m.cod)};
    auto l = compose_path(target, lhs);
    auto r = compose_path(target, rhs);
    if (l && r && *l == *r) continue;
    Witness w = make_square_witness("naturality", {{"f", m.id}}, target, lhs, rhs);
    report.add_witness(std::move(w));
  }
  return report;
}

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  validate_category(a);
  validate_category(b);
  FinCategory p;
  p.name = "(" + a.name + "×" + b.name + ")";
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) p.objects.push_back(pair_id(x, y));
  for (const auto& f : a.morphisms)
    for (const auto& g : b.morphisms)
      p.morphisms.push_back({pair_id(f.id, g.id), pair_id(f.dom, g.dom), pair_id(f.cod, g.cod)});
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.identity[pair_id(x, y)] = pair_id(a.identity_of(x), b.identity_of(y));
  for (const auto& g1 : a.morphisms)
    for (const auto& f1 : a.morphisms) {
      if (g1.dom != f1.cod) continue;
      const std::string c1 = a.compose(g1.id, f1.id);
      for (const auto& g2 : b.morphisms)
        for (const auto& f2 : b.morphisms) {
          if (g2.dom != f2.cod) continue;
          p.comp[{pair_id(g1.id, g2.id), pair_id(f1.id, f2.id)}] = pair_id(c1, b.compose(g2.id, f2.id));
        }
    }
  return p;
}

std::optional<std::string> compose_path(const FinCategory& c, const std::vector<std::string>& path) {
  if (path.empty()) return std::nullopt;
  if (!c.find_morphism(path.front())) return std::nullopt;
  std::string acc = path.front();
  for (size_t i = 1; i < path.size(); ++i) {
    if (!c.find_morphism(path[i])) return std::nullopt;
    auto next = c.compose_opt(path[i], acc);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

bool require_equal_paths(CheckReport& report, const FinCategory& c, const std::string& law_id,
                         std::map<std::string, std::string> binding,
                         std::vector<std::string> lhs_path, std::vector<std::string> rhs_path) {
  report.add_law(law_id);
  auto l = compose_path(c, lhs_path);
  auto r = compose_path(c, rhs_path);
  if (l && r && *l == *r) return true;
  Witness w;
  w.law_id = law_id;
  w.binding = std::move(binding);
  w.lhs_result = l ? *l : ill_typed_marker(lhs_path);
  w.rhs_result = r ? *r : ill_typed_marker(rhs_path);
  w.lhs_path = std::move(lhs_path);
  w.rhs_path = std::move(rhs_path);
  w.category = c.name;
  report.add_witness(std::move(w));
  return false;
}

bool replay_witness(const FinCategory& c, const Witness& w) {
  if (w.lhs_path.empty() && w.rhs_path.empty()) return false;  // structural witness; replay elsewhere
  auto l = w.lhs_path.empty() ? std::nullopt : compose_path(c, w.lhs_path);
  auto r = w.rhs_path.empty() ? std::nullopt : compose_path(c, w.rhs_path);
  if (w.lhs_path.empty() || w.rhs_path.empty()) {
    // Boundary-style witness: one leg recorded against an expectation string.
    return true;
  }
  if (!l || !r) return true;  // a leg no longer composes: failure reproduced
  return *l != *r;
}

}  // namespace gmcat
