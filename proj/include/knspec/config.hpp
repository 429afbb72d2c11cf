#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "knspec/param_group.hpp"

namespace knspec {

struct ConfigError : std::runtime_error {
  int line, col;
  ConfigError(int line_, int col_, const std::string& msg)
      : std::runtime_error("config:" + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

struct Config {
  int n = 0;
  std::string preset;                  // empty means generic
  std::vector<std::string> relations;  // statements in the relation grammar
  std::string format = "json";         // json | text
  std::string out;                     // empty = stdout
  std::vector<std::string> verify_suites;
  int degree = 3;
  int threads = 1;

  bool operator==(const Config& o) const = default;
};

// key=value document; `relations` takes a bracketed list of quoted statements
Config parse_config(const std::string& text);
std::string serialize_config(const Config& cfg);

// Relation statement: `word = 1`, `word = word`, or `order(word) = t` with
// word := term ('*' term)*, term := symbol ('^' integer)?.
struct ParsedRelation {
  std::vector<long long> exps; // over the group's symbols
  unsigned order = 1;
};
ParsedRelation parse_relation(const ParamGroup& group, const std::string& stmt,
                              int line = 0);

std::vector<std::string> preset_names();
std::vector<std::string> preset_relations(const std::string& preset, int n);
std::vector<std::string> preset_extra_symbols(const std::string& preset);

// preset relations followed by the user relations; this is the list reports carry
std::vector<std::string> effective_relations(const Config& cfg);

// group with preset + user relations applied (constraints not yet validated)
std::shared_ptr<const ParamGroup> build_group(const Config& cfg);

} // namespace knspec
