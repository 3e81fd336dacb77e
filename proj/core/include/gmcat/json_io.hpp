#ifndef GMCAT_JSON_IO_HPP
#define GMCAT_JSON_IO_HPP

#include <optional>
#include <variant>

#include <json.hpp>

#include "gmcat/constructions.hpp"
#include "gmcat/errors.hpp"
#include "gmcat/localisable.hpp"

namespace gmcat {

// A graded-monad resource, optionally carrying its commutative upgrade
// (variant, per-grade monoidal data, base monoidal structure).
struct GradedEntry {
  GradedMonad monad;
  std::optional<CommutativeGradedMonad> commutative;

  bool operator==(const GradedEntry&) const = default;
};

struct AlgebraEntry {
  GradedAlgebra value;
  std::string monad_ref;

  bool operator==(const AlgebraEntry&) const = default;
};

// A monoidal structure declared in semilattice form; kept alongside the built
// structure so serialization reproduces the input form byte for byte.
struct ThinMonoidalEntry {
  Semilattice lattice;
  ThinArrows arrows = ThinArrows::up;
  MonoidalStructure value;

  bool operator==(const ThinMonoidalEntry&) const = default;
};

using Payload =
    std::variant<FinCategory, Functor, NatTrans, MonoidalStructure, ThinMonoidalEntry,
                 MonoidalFunctor, MonoidalTransformation, GradedEntry, GradedMorphism, AlgebraEntry,
                 PresheafOfCategories, FormalMonad, MonadMorphismFamily, LocalisablePairing>;

struct Resource {
  std::string kind;  // category|functor|nattrans|monoidal|monoidal-functor|
                     // monoidal-transformation|graded|morphism|algebra|presheaf|
                     // formal-monad|family|pairing
  std::string name;
  Payload payload;
};

// An instance bundle: named resources with intra-bundle references resolved
// at load time, plus a default suite selection.
struct Bundle {
  std::string name;
  std::string suite = "all";
  std::vector<Resource> resources;

  const Resource* find(const std::string& resource_name) const;
  template <typename T>
  const T& get(const std::string& resource_name) const {
    const Resource* r = find(resource_name);
    if (!r) throw MalformedInput("bundle has no resource named '" + resource_name + "'");
    const T* p = std::get_if<T>(&r->payload);
    if (!p) throw MalformedInput("resource '" + resource_name + "' has unexpected kind '" + r->kind + "'");
    return *p;
  }
  // A monoidal structure by name, from either a monoidal or a semilattice resource.
  const MonoidalStructure& monoidal(const std::string& resource_name) const;
};

// Parsing and canonical serialization. Loading validates every
// cross-reference and reconstructs all derived boundaries; it throws
// MalformedInput on dangling names, bad schemas or missing tables.
Bundle bundle_from_json(const nlohmann::json& doc);
nlohmann::json bundle_to_json(const Bundle& bundle);

Bundle load_bundle_text(const std::string& text);
Bundle load_bundle_file(const std::string& path);

// Sorted keys, two-space indentation, trailing newline; no volatile fields.
std::string canonical_dump(const nlohmann::json& doc);

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json report_to_json(const CheckReport& r);

// FNV-1a 64-bit digest, presented as 16 hex characters.
std::string fnv1a_hex(const std::string& data);

}  // namespace gmcat

#endif
