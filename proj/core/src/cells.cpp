#include "gmcat/cells.hpp"

#include "gmcat/errors.hpp"

namespace gmcat {

std::string describe(const Functor& f) {
  return "[" + f.src.name + " -> " + f.dst.name + "]";
}

Functor id_functor(const FinCategory& c) {
  Functor f;
  f.src = c;
  f.dst = c;
  for (const auto& obj : c.objects) f.obj_map[obj] = obj;
  for (const auto& m : c.morphisms) f.mor_map[m.id] = m.id;
  return f;
}

Functor const_functor(const FinCategory& src, const FinCategory& dst, const std::string& object) {
  if (!dst.has_object(object))
    throw MalformedInput("constant functor target '" + object + "' not in '" + dst.name + "'");
  Functor f;
  f.src = src;
  f.dst = dst;
  const std::string& id = dst.identity_of(object);
  for (const auto& obj : src.objects) f.obj_map[obj] = object;
  for (const auto& m : src.morphisms) f.mor_map[m.id] = id;
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(f.dst == g.src))
    throw ShapeMismatch("functor composition " + describe(g) + " after " + describe(f));
  Functor r;
  r.src = f.src;
  r.dst = g.dst;
  for (const auto& [a, fa] : f.obj_map) r.obj_map[a] = g.on_object(fa);
  for (const auto& [m, fm] : f.mor_map) r.mor_map[m] = g.on_morphism(fm);
  return r;
}

Functor product_functor(const Functor& f, const Functor& g) {
  Functor r;
  r.src = product_category(f.src, g.src);
  r.dst = product_category(f.dst, g.dst);
  for (const auto& [a, fa] : f.obj_map)
    for (const auto& [b, gb] : g.obj_map) r.obj_map[pair_id(a, b)] = pair_id(fa, gb);
  for (const auto& [m, fm] : f.mor_map)
    for (const auto& [n, gn] : g.mor_map) r.mor_map[pair_id(m, n)] = pair_id(fm, gn);
  return r;
}

NatTrans id_nattrans(const Functor& f) {
  NatTrans t;
  t.src = f;
  t.dst = f;
  for (const auto& [a, fa] : f.obj_map) t.components[a] = f.dst.identity_of(fa);
  return t;
}

NatTrans vcomp(const NatTrans& second, const NatTrans& first) {
  if (!(first.dst == second.src))
    throw ShapeMismatch("vertical composition: middle functors differ (" +
                        describe(first.dst) + " vs " + describe(second.src) + ")");
  NatTrans r;
  r.src = first.src;
  r.dst = second.dst;
  const FinCategory& target = first.src.dst;
  for (const auto& obj : first.src.src.objects) {
    auto c = target.compose_opt(second.at(obj), first.at(obj));
    // Boundary-broken components still paste: keep the raw second component so
    // the failure surfaces as a witness in the downstream check instead of a throw.
    r.components[obj] = c ? *c : second.at(obj);
  }
  return r;
}

NatTrans hcomp(const NatTrans& outer, const NatTrans& inner) {
  if (!(inner.src.dst == outer.src.src))
    throw ShapeMismatch("horizontal composition: inner lands in " + inner.src.dst.name +
                        " but outer starts at " + outer.src.src.name);
  NatTrans r;
  r.src = compose_functors(outer.src, inner.src);
  r.dst = compose_functors(outer.dst, inner.dst);
  const FinCategory& target = outer.src.dst;
  for (const auto& obj : inner.src.src.objects) {
    const std::string mapped = outer.src.on_morphism(inner.at(obj));
    auto c = target.compose_opt(outer.at(inner.dst.on_object(obj)), mapped);
    r.components[obj] = c ? *c : mapped;
  }
  return r;
}

NatTrans whisker_left(const Functor& f, const NatTrans& t) { return hcomp(id_nattrans(f), t); }

NatTrans whisker_right(const NatTrans& t, const Functor& f) { return hcomp(t, id_nattrans(f)); }

NatTrans product_nattrans(const NatTrans& a, const NatTrans& b) {
  NatTrans r;
  r.src = product_functor(a.src, b.src);
  r.dst = product_functor(a.dst, b.dst);
  for (const auto& [x, cx] : a.components)
    for (const auto& [y, cy] : b.components) r.components[pair_id(x, y)] = pair_id(cx, cy);
  return r;
}

}  // namespace gmcat
