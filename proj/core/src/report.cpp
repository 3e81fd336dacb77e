#include "gmcat/report.hpp"

#include <algorithm>

namespace gmcat {

bool CheckReport::law_failed(const std::string& law_id) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [&](const Witness& w) { return w.law_id == law_id; });
}

bool CheckReport::any_failed_with_prefix(const std::string& prefix) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const Witness& w) {
    return w.law_id.rfind(prefix, 0) == 0;
  });
}

void CheckReport::add_law(const std::string& law_id) {
  if (std::find(laws.begin(), laws.end(), law_id) == laws.end()) laws.push_back(law_id);
}

void CheckReport::add_witness(Witness w) { witnesses.push_back(std::move(w)); }

void CheckReport::absorb(const CheckReport& other,
                         const std::string& context_key,
                         const std::string& context_value) {
  for (const auto& law : other.laws) add_law(law);
  for (Witness w : other.witnesses) {
    if (!context_key.empty()) w.binding[context_key] = context_value;
    witnesses.push_back(std::move(w));
  }
}

std::string ill_typed_marker(const std::vector<std::string>& path) {
  std::string s = "!ill-typed[";
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += ",";
    s += path[i];
  }
  s += "]";
  return s;
}

bool is_ill_typed(const std::string& result) { return result.rfind("!ill-typed", 0) == 0; }

}  // namespace gmcat
