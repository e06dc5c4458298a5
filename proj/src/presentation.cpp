#include "reesmod/presentation.hpp"

namespace reesmod {

namespace {

Json strings(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& v : a) {
    if (v.is_structured()) return false;
  }
  return true;
}

}  // namespace

Json presentation_record(const ModificationRing& m) {
  Json rec;
  rec["base_ring"] = m.rees.base_ring.to_string();
  rec["rees_vars"] = m.rees.rees_variables;
  Json images = Json::array();
  for (std::size_t i = 0; i < m.rees.generators.size(); ++i) {
    Json g;
    g["variable"] = m.rees.rees_variables[i];
    g["generator"] = m.rees.generators[i].to_string();
    g["image"] = m.generator_images[i].to_string();
    images.push_back(std::move(g));
  }
  rec["generator_images"] = std::move(images);
  rec["relation_generators"] = strings(m.relations.groebner().elements());
  return rec;
}

Json global_record(const GlobalModification& g) {
  Json rec;
  Json charts = Json::array();
  for (const auto& m : g.charts) charts.push_back(presentation_record(m));
  rec["charts"] = std::move(charts);
  Json checks = Json::array();
  for (const auto& c : g.consistency) {
    Json e;
    e["overlap"] = Json::array({c.i, c.j});
    e["status"] = c.status == CheckStatus::Pass ? "pass" : "inconclusive";
    e["max_n"] = c.max_n;
    e["witness"] = c.witness ? Json(*c.witness) : Json();
    checks.push_back(std::move(e));
  }
  rec["consistency"] = std::move(checks);
  rec["consistent"] = g.consistent();
  rec["inconclusive"] = g.inconclusive();
  return rec;
}

Json report_record(const ValidationReport& r) {
  Json rec;
  rec["valid"] = r.ok();
  Json issues = Json::array();
  for (const auto& is : r.issues) {
    Json e;
    e["check"] = is.check;
    e["charts"] = is.charts;
    e["witness"] = is.witness;
    issues.push_back(std::move(e));
  }
  rec["issues"] = std::move(issues);
  return rec;
}

std::string render_text(const Json& record, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::string out;
  if (!record.is_object()) return pad + scalar(record) + "\n";
  for (const auto& [key, v] : record.items()) {
    if (key == "summary") {
      out += pad + scalar(v) + "\n";
    } else if (v.is_object()) {
      out += pad + key + ":\n" + render_text(v, indent + 2);
    } else if (v.is_array() && all_scalars(v)) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : ", ") + scalar(e);
      out += pad + key + ": [" + line + "]\n";
    } else if (v.is_array()) {
      out += pad + key + ":\n";
      for (const auto& e : v) {
        std::string item = render_text(e, indent + 4);
        item.replace(static_cast<std::size_t>(indent) + 2, 2, "- ");
        out += item;
      }
    } else {
      out += pad + key + ": " + scalar(v) + "\n";
    }
  }
  return out;
}

}  // namespace reesmod
