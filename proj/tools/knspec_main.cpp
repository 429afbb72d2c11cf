#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "knspec/report.hpp"
#include "knspec/verify.hpp"

namespace {

int fail_config(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classification of the torus-invariant prime spectrum and the "
      "primitive ideal families of the multiparameter quantum algebras K_n"};

  std::string config_path, preset, verify_arg, format, out_path;
  int n = 0, degree = 0, threads = 0;
  bool report = false;
  std::vector<std::string> relations;

  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--n", n, "rank of the algebra");
  app.add_option("--preset", preset,
                 "parameter preset (symplectic|euclidean|weyl|heisenberg|oh|generic)");
  app.add_option("--relation", relations,
                 "relation statement, repeatable ('word = 1' or 'order(word) = t')");
  app.add_flag("--report", report, "emit the strata report");
  app.add_option("--verify", verify_arg,
                 "comma-separated suites: commutation,tower,trace,normal,separation,assoc or all");
  app.add_option("--degree", degree, "degree bound for the tower suite (default 3)");
  app.add_option("--format", format, "report format: json|text");
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--threads", threads, "worker threads (1 = serial)");

  CLI11_PARSE(app, argc, argv);

  knspec::Config cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) return fail_config("cannot open config file " + config_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      cfg = knspec::parse_config(ss.str());
    }
    if (n > 0) cfg.n = n;
    if (!preset.empty()) cfg.preset = preset == "generic" ? "" : preset;
    for (const auto& r : relations) cfg.relations.push_back(r);
    if (degree > 0) cfg.degree = degree;
    if (!format.empty()) cfg.format = format;
    if (!out_path.empty()) cfg.out = out_path;
    if (threads > 0) cfg.threads = threads;
    if (!verify_arg.empty()) {
      cfg.verify_suites.clear();
      std::string cur;
      for (char c : verify_arg + ",") {
        if (c == ',') {
          if (!cur.empty()) cfg.verify_suites.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
    }
    if (cfg.n < 1) return fail_config("n must be given and positive");
    if (cfg.format != "json" && cfg.format != "text")
      return fail_config("format must be json or text");
  } catch (const knspec::ConfigError& e) {
    return fail_config(e.what());
  }

  try {
    if (!cfg.verify_suites.empty()) {
      auto group = knspec::build_group(cfg);
      auto violations = group->validate();
      if (!violations.empty()) {
        for (const auto& v : violations)
          std::cerr << "constraint violation [i=" << v.index << "]: " << v.message
                    << "\n";
        return 2;
      }
      auto results = knspec::run_verify(group, cfg.n, cfg.degree,
                                        cfg.verify_suites, cfg.threads, std::cout);
      bool ok = true;
      for (const auto& r : results) {
        if (!r.ok) {
          ok = false;
          std::cout << "suite " << r.name << " FAILED: " << r.detail << "\n";
        }
      }
      if (!report && ok) return 0;
      if (!ok) return 1;
    }

    std::string body = knspec::run_report(cfg);
    if (cfg.out.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(cfg.out, std::ios::binary);
      if (!out) return fail_config("cannot write " + cfg.out);
      out << body;
    }
    return 0;
  } catch (const knspec::ConfigError& e) {
    return fail_config(e.what());
  } catch (const std::invalid_argument& e) {
    return fail_config(e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
