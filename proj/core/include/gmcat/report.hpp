#ifndef GMCAT_REPORT_HPP
#define GMCAT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace gmcat {

// A witness pins a coherence failure to a concrete binding of the diagram
// variables. Both legs are recorded as composition paths (first applied
// first), so a failure can be replayed against the composition table alone.
struct Witness {
  std::string law_id;
  std::map<std::string, std::string> binding;
  std::vector<std::string> lhs_path;
  std::vector<std::string> rhs_path;
  std::string lhs_result;   // morphism id, or an "!ill-typed[...]" marker
  std::string rhs_result;
  std::string category;     // name of the category the paths live in

  bool operator==(const Witness&) const = default;
};

// Result of one checker run. `laws` lists every law id that was evaluated,
// passed or not; a law passes iff no witness carries its id. Checkers never
// stop at the first failure.
struct CheckReport {
  std::vector<std::string> laws;
  std::vector<Witness> witnesses;

  bool pass() const { return witnesses.empty(); }
  bool law_failed(const std::string& law_id) const;
  // True iff some failing witness has a law id starting with `prefix`.
  bool any_failed_with_prefix(const std::string& prefix) const;

  void add_law(const std::string& law_id);
  void add_witness(Witness w);
  // Merge another report, tagging its witnesses with an extra binding entry.
  void absorb(const CheckReport& other,
              const std::string& context_key = "",
              const std::string& context_value = "");
};

// Marker value used in witness results when a diagram leg failed to compose.
std::string ill_typed_marker(const std::vector<std::string>& path);
bool is_ill_typed(const std::string& result);

}  // namespace gmcat

#endif
