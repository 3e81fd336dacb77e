#ifndef GMCAT_TESTS_SUPPORT_HPP
#define GMCAT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gmcat/stock.hpp"

namespace testsupport {

using namespace gmcat;

inline bool has_law(const CheckReport& r, const std::string& law_id) {
  return r.law_failed(law_id);
}

// ---------------------------------------------------------------------------
// Independent plain-monad oracle. Works on the raw tables only; it shares no
// evaluation code with the library checkers.
// ---------------------------------------------------------------------------

inline std::string table_compose(const FinCategory& c, const std::string& g, const std::string& f) {
  auto it = c.comp.find({g, f});
  return it == c.comp.end() ? std::string("!undefined") : it->second;
}

inline bool oracle_plain_monad(const PlainMonad& m) {
  const FinCategory& c = m.base;
  // T must be a functor.
  for (const auto& mor : c.morphisms) {
    auto img = m.T.mor_map.find(mor.id);
    if (img == m.T.mor_map.end()) return false;
    const Morphism* im = c.find_morphism(img->second);
    if (!im) return false;
    if (im->dom != m.T.obj_map.at(mor.dom) || im->cod != m.T.obj_map.at(mor.cod)) return false;
  }
  for (const auto& obj : c.objects)
    if (m.T.mor_map.at(c.identity.at(obj)) != c.identity.at(m.T.obj_map.at(obj))) return false;
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      if (g.dom != f.cod) continue;
      if (m.T.mor_map.at(table_compose(c, g.id, f.id)) !=
          table_compose(c, m.T.mor_map.at(g.id), m.T.mor_map.at(f.id)))
        return false;
    }
  auto tt_obj = [&](const std::string& a) { return m.T.obj_map.at(m.T.obj_map.at(a)); };
  // Component boundaries.
  for (const auto& obj : c.objects) {
    const Morphism* mu = c.find_morphism(m.mu.components.at(obj));
    const Morphism* eta = c.find_morphism(m.eta.components.at(obj));
    if (!mu || !eta) return false;
    if (mu->dom != tt_obj(obj) || mu->cod != m.T.obj_map.at(obj)) return false;
    if (eta->dom != obj || eta->cod != m.T.obj_map.at(obj)) return false;
  }
  // Naturality of mu and eta.
  for (const auto& f : c.morphisms) {
    const std::string tf = m.T.mor_map.at(f.id);
    const std::string ttf = m.T.mor_map.at(tf);
    if (table_compose(c, m.T.mor_map.at(f.id), m.mu.components.at(f.dom)) !=
        table_compose(c, m.mu.components.at(f.cod), ttf))
      return false;
    if (table_compose(c, m.T.mor_map.at(f.id), m.eta.components.at(f.dom)) !=
        table_compose(c, m.eta.components.at(f.cod), f.id))
      return false;
  }
  // Associativity and units.
  for (const auto& obj : c.objects) {
    const std::string mu_a = m.mu.components.at(obj);
    const std::string t_mu = m.T.mor_map.at(mu_a);
    const std::string mu_ta = m.mu.components.at(m.T.obj_map.at(obj));
    if (table_compose(c, mu_a, t_mu) != table_compose(c, mu_a, mu_ta)) return false;
    const std::string t_eta = m.T.mor_map.at(m.eta.components.at(obj));
    const std::string eta_ta = m.eta.components.at(m.T.obj_map.at(obj));
    const std::string id_ta = c.identity.at(m.T.obj_map.at(obj));
    if (table_compose(c, mu_a, t_eta) != id_ta) return false;
    if (table_compose(c, mu_a, eta_ta) != id_ta) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Randomized small instances (fixed seeds; every draw is boundary-valid).
// ---------------------------------------------------------------------------

inline std::vector<FinCategory> base_pool() {
  return {stock::walking_arrow(),
          stock::parallel_pair(),
          stock::idem_monoid(),
          stock::chain2_up().base,
          stock::chain2_down().base,
          stock::discrete(2),
          product_category(stock::walking_arrow(), stock::idem_monoid())};
}

template <typename Rng>
const FinCategory& pick_base(const std::vector<FinCategory>& pool, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

template <typename Rng>
std::string pick(const std::vector<std::string>& xs, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, xs.size() - 1);
  return xs[d(rng)];
}

// A random endofunctor candidate: object map arbitrary, morphism map any
// boundary-compatible choice. Not necessarily functorial.
template <typename Rng>
bool random_endofunctor(const FinCategory& c, Rng& rng, Functor& out) {
  out = Functor{};
  out.src = c;
  out.dst = c;
  for (const auto& obj : c.objects) {
    std::uniform_int_distribution<std::size_t> d(0, c.objects.size() - 1);
    out.obj_map[obj] = c.objects[d(rng)];
  }
  for (const auto& m : c.morphisms) {
    auto candidates = c.hom(out.obj_map.at(m.dom), out.obj_map.at(m.cod));
    if (candidates.empty()) return false;
    out.mor_map[m.id] = pick(candidates, rng);
  }
  return true;
}

// A random monad candidate over a random base: passes no law by construction,
// only the boundary constraints.
template <typename Rng>
bool random_monad_candidate(const std::vector<FinCategory>& pool, Rng& rng, PlainMonad& out) {
  const FinCategory& c = pick_base(pool, rng);
  Functor t;
  if (!random_endofunctor(c, rng, t)) return false;
  out.base = c;
  out.T = t;
  out.mu.src = compose_functors(t, t);
  out.mu.dst = t;
  out.eta.src = id_functor(c);
  out.eta.dst = t;
  out.mu.components.clear();
  out.eta.components.clear();
  for (const auto& obj : c.objects) {
    auto mu_c = c.hom(out.mu.src.on_object(obj), t.on_object(obj));
    auto eta_c = c.hom(obj, t.on_object(obj));
    if (mu_c.empty() || eta_c.empty()) return false;
    out.mu.components[obj] = pick(mu_c, rng);
    out.eta.components[obj] = pick(eta_c, rng);
  }
  return true;
}

// Valid graded monads for closure properties: readers and identity families
// over random thin gradings, plus the non-thin stock instances.
template <typename Rng>
GradedMonad random_valid_graded(Rng& rng) {
  std::uniform_int_distribution<int> d(0, 5);
  switch (d(rng)) {
    case 0: return stock::identity_graded();
    case 1: return stock::truncation_graded();
    case 2: return stock::reader_graded_up();
    case 3: return stock::reader_graded_down();
    case 4: {
      std::uniform_int_distribution<int> n(2, 4);
      MonoidalStructure g = thin_from_semilattice(stock::chain(n(rng), "rnd-chain"), ThinArrows::up);
      return stock::identity_family_graded(pick_base(base_pool(), rng), g);
    }
    default:
      return stock::identity_family_graded(stock::idem_monoid(), stock::chain2_down());
  }
}

}  // namespace testsupport

#endif
