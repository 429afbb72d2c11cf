#include "knspec/report.hpp"

#include <sstream>

#include <json.hpp>

namespace knspec {

namespace {

std::vector<std::string> names_of(const std::vector<PSymbol>& syms) {
  std::vector<std::string> out;
  for (const auto& s : syms) out.push_back(symbol_name(s));
  return out;
}

} // namespace

std::string report_json(const Config& cfg, const std::vector<StratumReport>& strata) {
  nlohmann::ordered_json doc;
  doc["n"] = cfg.n;
  doc["relations"] = effective_relations(cfg);
  doc["strata"] = nlohmann::ordered_json::array();
  for (const auto& r : strata) {
    nlohmann::ordered_json s;
    s["T"] = names_of(r.t.symbols());
    s["N_T"] = names_of(r.nt);
    s["toral_basis"] = names_of(r.basis_labels);
    s["center_rank"] = r.center.rank;
    s["center_generators"] = nlohmann::ordered_json::array();
    for (const auto& g : r.center.generators) {
      nlohmann::ordered_json cg;
      cg["word"] = g.word;
      cg["scalar"] = "1";
      s["center_generators"].push_back(std::move(cg));
    }
    s["primitive_family"] = r.family.description;
    doc["strata"].push_back(std::move(s));
  }
  return doc.dump(2) + "\n";
}

std::string report_text(const Config& cfg, const std::vector<StratumReport>& strata) {
  std::ostringstream os;
  os << "K_" << cfg.n << " strata and primitive ideal families\n";
  auto rels = effective_relations(cfg);
  if (rels.empty()) {
    os << "relations: (none, generic parameters)\n";
  } else {
    os << "relations:\n";
    for (const auto& r : rels) os << "  " << r << "\n";
  }
  os << "\n";
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i];
    }
    return s;
  };
  for (const auto& r : strata) {
    os << "T = {" << join(names_of(r.t.symbols())) << "}\n";
    os << "  N_T         = {" << join(names_of(r.nt)) << "}\n";
    os << "  toral basis = {" << join(names_of(r.basis_labels)) << "}\n";
    os << "  center rank = " << r.center.rank << "\n";
    if (!r.center.generators.empty()) {
      std::vector<std::string> words;
      for (const auto& g : r.center.generators) words.push_back(g.word);
      os << "  center gens = " << join(words) << "\n";
    }
    os << "  primitive family: " << r.family.description << "\n\n";
  }
  return os.str();
}

std::string run_report(const Config& cfg) {
  auto group = build_group(cfg);
  auto violations = group->validate();
  if (!violations.empty()) {
    std::string msg = "constraint violations:";
    for (const auto& v : violations) msg += "\n  [i=" + std::to_string(v.index) + "] " + v.message;
    throw std::invalid_argument(msg);
  }
  auto strata = full_report(group, cfg.n, cfg.threads);
  return cfg.format == "text" ? report_text(cfg, strata) : report_json(cfg, strata);
}

} // namespace knspec
