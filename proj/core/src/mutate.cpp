#include "gmcat/mutate.hpp"

#include <algorithm>

namespace gmcat {

using nlohmann::json;

namespace {

std::string escape_pointer_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const json* find_resource(const json& doc, const std::string& name) {
  for (const auto& r : doc.at("resources"))
    if (r.value("name", "") == name) return &r;
  return nullptr;
}

std::vector<std::string> category_morphisms(const json& doc, const std::string& category_name) {
  const json* r = find_resource(doc, category_name);
  std::vector<std::string> out;
  if (!r || r->value("kind", "") != "category") return out;
  for (const auto& m : r->at("morphisms")) out.push_back(m.at("id").get<std::string>());
  return out;
}

// Reference chasing on the raw document; empty string when unresolvable.
std::string functor_target(const json& doc, const std::string& functor_name) {
  const json* r = find_resource(doc, functor_name);
  if (!r) return "";
  return r->value("dst", "");
}

std::string monoidal_base(const json& doc, const std::string& monoidal_name) {
  const json* r = find_resource(doc, monoidal_name);
  if (!r) return "";
  return r->value("base", "");
}

std::string graded_base(const json& doc, const std::string& graded_name) {
  const json* r = find_resource(doc, graded_name);
  if (!r) return "";
  return r->value("base", "");
}

std::string presheaf_level(const json& doc, const std::string& presheaf_name, const std::string& u) {
  const json* r = find_resource(doc, presheaf_name);
  if (!r || !r->contains("at") || !r->at("at").contains(u)) return "";
  return r->at("at").at(u).get<std::string>();
}

std::string formal_level(const json& doc, const std::string& formal_name, const std::string& u) {
  const json* r = find_resource(doc, formal_name);
  if (!r) return "";
  return presheaf_level(doc, r->value("presheaf", ""), u);
}

struct Collector {
  const json& doc;
  std::vector<MutationPoint> points;
  std::vector<MutationPoint> bogus;

  void value(const std::string& resource, const std::string& path, const std::string& old_value,
             const std::string& pool_category) {
    auto pool = category_morphisms(doc, pool_category);
    std::size_t taken = 0;
    for (const auto& alt : pool) {
      if (alt == old_value) continue;
      points.push_back({resource, path, old_value, alt});
      if (++taken == 2) break;  // at most two re-pointings per cell
    }
    bogus.push_back({resource, path, old_value, "__unknown-id__"});
  }
};

}  // namespace

std::vector<MutationPoint> enumerate_mutations(const json& doc, bool include_bogus) {
  Collector collect{doc, {}};
  const json& resources = doc.at("resources");
  for (std::size_t i = 0; i < resources.size(); ++i) {
    const json& r = resources[i];
    const std::string kind = r.value("kind", "");
    const std::string name = r.value("name", "");
    const std::string base = "/resources/" + std::to_string(i);

    auto map_values = [&](const std::string& sub, const std::string& pool) {
      if (!r.contains(json::json_pointer(sub))) return;
      const json& m = r.at(json::json_pointer(sub));
      for (auto it = m.begin(); it != m.end(); ++it)
        if (it.value().is_string())
          collect.value(name, base + sub + "/" + escape_pointer_token(it.key()),
                        it.value().get<std::string>(), pool);
    };

    if (kind == "category") {
      const json& comp = r.at("comp");
      for (std::size_t k = 0; k < comp.size(); ++k)
        collect.value(name, base + "/comp/" + std::to_string(k) + "/2", comp[k][2].get<std::string>(),
                      name);
      map_values("/identity", name);
    } else if (kind == "functor") {
      map_values("/mor_map", r.value("dst", ""));
    } else if (kind == "nattrans") {
      map_values("/components", functor_target(doc, r.value("src", "")));
    } else if (kind == "monoidal") {
      const std::string pool = r.value("base", "");
      map_values("/tensor/mor_map", pool);
      const json& assoc = r.at("assoc");
      for (std::size_t k = 0; k < assoc.size(); ++k) {
        collect.value(name, base + "/assoc/" + std::to_string(k) + "/3", assoc[k][3].get<std::string>(), pool);
        collect.value(name, base + "/assoc/" + std::to_string(k) + "/4", assoc[k][4].get<std::string>(), pool);
      }
      for (const char* key : {"lunit", "runit"}) {
        const json& rows = r.at(key);
        for (std::size_t k = 0; k < rows.size(); ++k) {
          collect.value(name, base + "/" + key + "/" + std::to_string(k) + "/1",
                        rows[k][1].get<std::string>(), pool);
          collect.value(name, base + "/" + key + "/" + std::to_string(k) + "/2",
                        rows[k][2].get<std::string>(), pool);
        }
      }
    } else if (kind == "monoidal-functor") {
      const std::string pool = monoidal_base(doc, r.value("dst", ""));
      map_values("/phi", pool);
      map_values("/functor/mor_map", pool);
      if (r.contains("phibar"))
        collect.value(name, base + "/phibar", r.at("phibar").get<std::string>(), pool);
    } else if (kind == "monoidal-transformation") {
      const json* srcmf = find_resource(doc, r.value("src", ""));
      const std::string pool = srcmf ? monoidal_base(doc, srcmf->value("dst", "")) : "";
      map_values("/components", pool);
    } else if (kind == "graded") {
      const std::string pool = r.value("base", "");
      if (r.contains("F_obj"))
        for (auto it = r.at("F_obj").begin(); it != r.at("F_obj").end(); ++it)
          map_values("/F_obj/" + escape_pointer_token(it.key()) + "/mor_map", pool);
      if (r.contains("F_mor"))
        for (auto it = r.at("F_mor").begin(); it != r.at("F_mor").end(); ++it)
          map_values("/F_mor/" + escape_pointer_token(it.key()), pool);
      if (r.contains("gamma")) {
        const json& gamma = r.at("gamma");
        for (std::size_t k = 0; k < gamma.size(); ++k) {
          const json& cell = gamma[k][2];
          for (auto it = cell.begin(); it != cell.end(); ++it)
            collect.value(name,
                          base + "/gamma/" + std::to_string(k) + "/2/" + escape_pointer_token(it.key()),
                          it.value().get<std::string>(), pool);
        }
      }
      map_values("/delta", pool);
      if (r.contains("commutative")) {
        const json& phi = r.at("commutative").at("phi");
        for (std::size_t k = 0; k < phi.size(); ++k) {
          const json& cell = phi[k][1].at("phi");
          for (auto it = cell.begin(); it != cell.end(); ++it)
            collect.value(name,
                          base + "/commutative/phi/" + std::to_string(k) + "/1/phi/" +
                              escape_pointer_token(it.key()),
                          it.value().get<std::string>(), pool);
          collect.value(name, base + "/commutative/phi/" + std::to_string(k) + "/1/phibar",
                        phi[k][1].at("phibar").get<std::string>(), pool);
        }
      }
    } else if (kind == "morphism") {
      const std::string pool = graded_base(doc, r.value("dst", ""));
      map_values("/carrier/mor_map", pool);
      if (r.contains("omega")) {
        const json& omega = r.at("omega");
        for (std::size_t k = 0; k < omega.size(); ++k) {
          const json& cell = omega[k][1];
          for (auto it = cell.begin(); it != cell.end(); ++it)
            collect.value(name,
                          base + "/omega/" + std::to_string(k) + "/1/" + escape_pointer_token(it.key()),
                          it.value().get<std::string>(), pool);
        }
      }
    } else if (kind == "algebra") {
      const std::string pool = graded_base(doc, r.value("monad", ""));
      map_values("/carrier/mor_map", pool);
      const json& act = r.at("act");
      for (std::size_t k = 0; k < act.size(); ++k)
        collect.value(name, base + "/act/" + std::to_string(k) + "/2", act[k][2].get<std::string>(), pool);
    } else if (kind == "presheaf") {
      if (r.contains("restrict"))
        for (auto it = r.at("restrict").begin(); it != r.at("restrict").end(); ++it) {
          const std::string key = it.key();
          const auto arrow = key.find("->");
          const std::string cod = arrow == std::string::npos ? "" : key.substr(arrow + 2);
          map_values("/restrict/" + escape_pointer_token(key) + "/mor_map",
                     r.at("at").contains(cod) ? r.at("at").at(cod).get<std::string>() : "");
        }
    } else if (kind == "formal-monad") {
      for (const char* sub : {"T", "mu", "eta"}) {
        if (!r.contains(sub)) continue;
        for (auto it = r.at(sub).begin(); it != r.at(sub).end(); ++it) {
          const std::string pool = formal_level(doc, name, it.key());
          if (std::string(sub) == "T")
            map_values("/T/" + escape_pointer_token(it.key()) + "/mor_map", pool);
          else
            map_values("/" + std::string(sub) + "/" + escape_pointer_token(it.key()), pool);
        }
      }
    } else if (kind == "family") {
      if (r.contains("phibar"))
        for (auto it = r.at("phibar").begin(); it != r.at("phibar").end(); ++it) {
          const json* src = find_resource(doc, r.value("src", ""));
          const std::string pool = src ? formal_level(doc, r.value("src", ""), it.key()) : "";
          map_values("/phibar/" + escape_pointer_token(it.key()), pool);
        }
    }
  }

  std::vector<MutationPoint> out = collect.points;
  if (include_bogus) out.insert(out.end(), collect.bogus.begin(), collect.bogus.end());
  return out;
}

json apply_mutation(const json& doc, const MutationPoint& m) {
  json out = doc;
  out.at(json::json_pointer(m.path)) = m.new_value;
  return out;
}

}  // namespace gmcat
