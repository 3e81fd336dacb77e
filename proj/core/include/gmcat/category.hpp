#ifndef GMCAT_CATEGORY_HPP
#define GMCAT_CATEGORY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmcat/report.hpp"

namespace gmcat {

// All hom-data is table-driven and ids are strings; two morphisms are equal
// iff their ids are. Values are immutable after construction and every check
// below is a pure function of its arguments.

struct Morphism {
  std::string id;
  std::string dom;
  std::string cod;

  bool operator==(const Morphism&) const = default;
};

struct FinCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identity;                       // object -> morphism id
  std::map<std::pair<std::string, std::string>, std::string> comp;   // (g, f) -> g∘f

  bool operator==(const FinCategory&) const = default;

  bool has_object(const std::string& id) const;
  const Morphism* find_morphism(const std::string& id) const;
  const Morphism& morphism(const std::string& id) const;  // throws MalformedInput
  const std::string& identity_of(const std::string& object) const;

  // Composite g∘f, or nullopt when the pair is not composable or absent.
  std::optional<std::string> compose_opt(const std::string& g, const std::string& f) const;
  // Throwing variant used by constructions that require totality.
  std::string compose(const std::string& g, const std::string& f) const;

  // Morphisms A -> B in table order.
  std::vector<std::string> hom(const std::string& a, const std::string& b) const;
  bool is_thin() const;
};

struct Functor {
  FinCategory src;
  FinCategory dst;
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;

  bool operator==(const Functor&) const = default;

  const std::string& on_object(const std::string& id) const;
  const std::string& on_morphism(const std::string& id) const;
};

struct NatTrans {
  Functor src;
  Functor dst;
  std::map<std::string, std::string> components;  // object of src.src -> morphism of src.dst

  bool operator==(const NatTrans&) const = default;

  const std::string& at(const std::string& object) const;
};

// Structural validation; throws MalformedInput instead of reporting witnesses.
void validate_category(const FinCategory& c);
void validate_functor(const Functor& f);
void validate_naturality_data(const NatTrans& t);

// Law checks. Structural defects in the tables (unknown ids, partial or
// overfull comp) throw MalformedInput; everything else is reported.
CheckReport check_category(const FinCategory& c);
CheckReport check_functor(const Functor& f);
CheckReport check_naturality(const NatTrans& t);

FinCategory product_category(const FinCategory& a, const FinCategory& b);

// Id scheme used by product_category: objects "(a,b)", morphisms "(f,g)".
std::string pair_id(const std::string& a, const std::string& b);

// Evaluates a composition path (first applied first) against a table.
std::optional<std::string> compose_path(const FinCategory& c, const std::vector<std::string>& path);

// Re-evaluates a witness against the category named by it. Returns true when
// the recorded failure is reproduced: either the two paths compose to
// different morphisms, or at least one leg no longer composes.
bool replay_witness(const FinCategory& c, const Witness& w);

// Evaluates both legs of a diagram in `c` and records a witness under
// `law_id` when they disagree or fail to compose. Returns true on agreement.
bool require_equal_paths(CheckReport& report, const FinCategory& c, const std::string& law_id,
                         std::map<std::string, std::string> binding,
                         std::vector<std::string> lhs_path, std::vector<std::string> rhs_path);

}  // namespace gmcat

#endif
