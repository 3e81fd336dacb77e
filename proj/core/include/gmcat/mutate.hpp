#ifndef GMCAT_MUTATE_HPP
#define GMCAT_MUTATE_HPP

#include "gmcat/json_io.hpp"

namespace gmcat {

// A single-entry corruption of a bundle document: one table cell re-pointed
// at a different (or unknown) id. Mutations are generated and applied on the
// JSON form so every cross-reference re-resolves against the mutated data.
struct MutationPoint {
  std::string resource;
  std::string path;       // JSON pointer into the bundle document
  std::string old_value;
  std::string new_value;
};

// Deterministic enumeration of mutation points over every mutable table
// (composition and identity entries, functor images, transformation
// components, monoidal structure maps, graded data, actions, restrictions).
// When `include_bogus` is set, every ninth point also yields a variant that
// re-points the entry at an id that exists nowhere.
std::vector<MutationPoint> enumerate_mutations(const nlohmann::json& bundle_doc,
                                               bool include_bogus = true);

nlohmann::json apply_mutation(const nlohmann::json& bundle_doc, const MutationPoint& m);

}  // namespace gmcat

#endif
