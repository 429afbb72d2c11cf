#include "knspec/config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knspec {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// ["stmt", "stmt"] with double-quoted entries
std::vector<std::string> parse_string_list(const std::string& s, int line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw ConfigError(line, static_cast<int>(i) + 1, msg);
  };
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != '[') fail("expected '['");
  ++i;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    if (i >= s.size() || s[i] != '"') fail("expected '\"'");
    ++i;
    std::string item;
    while (i < s.size() && s[i] != '"') item += s[i++];
    if (i >= s.size()) fail("unterminated string");
    ++i;
    out.push_back(item);
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      break;
    }
    fail("expected ',' or ']'");
  }
  while (i < s.size()) {
    if (!std::isspace(static_cast<unsigned char>(s[i]))) fail("trailing characters");
    ++i;
  }
  return out;
}

int parse_int(const std::string& s, int line, const std::string& key) {
  std::string t = trim(s);
  try {
    std::size_t pos = 0;
    int v = std::stoi(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ConfigError(line, 1, "invalid integer for " + key + ": '" + t + "'");
  }
}

} // namespace

Config parse_config(const std::string& text) {
  Config cfg;
  bool have_n = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(line, 1, "expected key=value");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key == "n") {
      cfg.n = parse_int(val, line, "n");
      if (cfg.n < 1) throw ConfigError(line, 1, "n must be a positive integer");
      have_n = true;
    } else if (key == "preset") {
      auto names = preset_names();
      if (std::find(names.begin(), names.end(), val) == names.end())
        throw ConfigError(line, static_cast<int>(eq) + 2, "unknown preset '" + val + "'");
      cfg.preset = val == "generic" ? "" : val;
    } else if (key == "relations") {
      cfg.relations = parse_string_list(val, line);
    } else if (key == "format") {
      if (val != "json" && val != "text")
        throw ConfigError(line, static_cast<int>(eq) + 2, "format must be json or text");
      cfg.format = val;
    } else if (key == "out") {
      cfg.out = val;
    } else if (key == "verify") {
      cfg.verify_suites = split_csv(val);
    } else if (key == "degree") {
      cfg.degree = parse_int(val, line, "degree");
      if (cfg.degree < 1) throw ConfigError(line, 1, "degree must be positive");
    } else if (key == "threads") {
      cfg.threads = parse_int(val, line, "threads");
    } else {
      throw ConfigError(line, 1, "unknown key '" + key + "'");
    }
  }
  if (!have_n) throw ConfigError(line, 1, "missing required key n");
  return cfg;
}

std::string serialize_config(const Config& cfg) {
  std::ostringstream os;
  os << "n = " << cfg.n << "\n";
  if (!cfg.preset.empty()) os << "preset = " << cfg.preset << "\n";
  if (!cfg.relations.empty()) {
    os << "relations = [";
    for (std::size_t i = 0; i < cfg.relations.size(); ++i) {
      if (i) os << ", ";
      os << '"' << cfg.relations[i] << '"';
    }
    os << "]\n";
  }
  os << "format = " << cfg.format << "\n";
  if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
  if (!cfg.verify_suites.empty()) {
    os << "verify = ";
    for (std::size_t i = 0; i < cfg.verify_suites.size(); ++i) {
      if (i) os << ",";
      os << cfg.verify_suites[i];
    }
    os << "\n";
  }
  os << "degree = " << cfg.degree << "\n";
  if (cfg.threads != 1) os << "threads = " << cfg.threads << "\n";
  return os.str();
}

// ------------------------------------------------------- relation parsing --

namespace {

struct RelTokenizer {
  const std::string& s;
  std::size_t i = 0;
  int line;

  explicit RelTokenizer(const std::string& str, int line_) : s(str), line(line_) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError(line, static_cast<int>(i) + 1, msg);
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i) fail("expected a symbol");
    return s.substr(start, i - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected an integer");
    return std::stoll(s.substr(start, i - start));
  }
};

std::vector<long long> parse_word(RelTokenizer& tok, const ParamGroup& group) {
  std::vector<long long> exps(group.symbol_count(), 0);
  while (true) {
    std::string sym = tok.ident();
    int idx = group.symbol_index(sym);
    if (idx < 0) tok.fail("unknown symbol '" + sym + "'");
    long long e = 1;
    if (tok.eat('^')) e = tok.integer();
    exps[static_cast<std::size_t>(idx)] += e;
    if (!tok.eat('*')) break;
  }
  return exps;
}

} // namespace

ParsedRelation parse_relation(const ParamGroup& group, const std::string& stmt,
                              int line) {
  RelTokenizer tok(stmt, line);
  ParsedRelation out;
  tok.skip_ws();

  // order(word) = t
  std::size_t after = stmt.find_first_not_of(" \t", tok.i + 5);
  if (stmt.compare(tok.i, 5, "order") == 0 && after != std::string::npos &&
      stmt[after] == '(') {
    tok.i += 5;
    if (!tok.eat('(')) tok.fail("expected '('");
    out.exps = parse_word(tok, group);
    if (!tok.eat(')')) tok.fail("expected ')'");
    if (!tok.eat('=')) tok.fail("expected '='");
    long long t = tok.integer();
    if (t < 1) tok.fail("order must be a positive integer");
    out.order = static_cast<unsigned>(t);
    if (tok.peek() != '\0') tok.fail("trailing characters");
    return out;
  }

  out.exps = parse_word(tok, group);
  if (!tok.eat('=')) tok.fail("expected '='");
  if (tok.peek() == '1' ) {
    std::size_t save = tok.i;
    long long v = tok.integer();
    if (v == 1 && tok.peek() == '\0') {
      out.order = 1;
      return out;
    }
    tok.i = save;
    tok.fail("right-hand side must be 1 or a word");
  }
  // word = word sugar
  std::vector<long long> rhs = parse_word(tok, group);
  if (tok.peek() != '\0') tok.fail("trailing characters");
  for (std::size_t j = 0; j < out.exps.size(); ++j) out.exps[j] -= rhs[j];
  out.order = 1;
  return out;
}

// ----------------------------------------------------------------- presets --

std::vector<std::string> preset_names() {
  return {"generic", "symplectic", "euclidean", "weyl", "heisenberg", "oh"};
}

std::vector<std::string> preset_relations(const std::string& preset, int n) {
  std::vector<std::string> out;
  auto all_p_one = [&] {
    for (int i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i) + " = 1");
  };
  auto all_q_one = [&] {
    for (int i = 1; i <= n; ++i) out.push_back("q" + std::to_string(i) + " = 1");
  };
  auto equal_family = [&](char c) { // q or p all equal to the first
    for (int i = 2; i <= n; ++i)
      out.push_back(std::string(1, c) + "1*" + c + std::to_string(i) + "^-1 = 1");
  };
  auto equal_gammas = [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (i == 1 && j == 2) continue;
        out.push_back("g12*" + ParamGroup::gamma_name(i, j) + "^-1 = 1");
      }
  };

  if (preset.empty() || preset == "generic") return out;
  if (preset == "weyl") {
    all_p_one();
  } else if (preset == "symplectic") {
    // p_i = 1, q_i = q^-2, gamma = q: encode q through g12
    all_p_one();
    equal_family('q');
    if (n >= 2) {
      equal_gammas();
      out.push_back("q1*g12^2 = 1");
    }
  } else if (preset == "euclidean" || preset == "heisenberg") {
    // euclidean: q_i = 1, p_i = q^-2, gamma = q^-1; heisenberg: q_i = 1,
    // p_i = q^2, gamma = q. Both collapse to p1 = g12^2 over the symbols.
    all_q_one();
    equal_family('p');
    if (n >= 2) {
      equal_gammas();
      out.push_back("p1*g12^-2 = 1");
    }
  } else if (preset == "oh") {
    for (int i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i) + "*d = 1");
  } else {
    throw std::invalid_argument("unknown preset '" + preset + "'");
  }
  return out;
}

std::vector<std::string> preset_extra_symbols(const std::string& preset) {
  if (preset == "oh") return {"d"};
  return {};
}

std::vector<std::string> effective_relations(const Config& cfg) {
  std::vector<std::string> out = preset_relations(cfg.preset, cfg.n);
  out.insert(out.end(), cfg.relations.begin(), cfg.relations.end());
  return out;
}

std::shared_ptr<const ParamGroup> build_group(const Config& cfg) {
  if (cfg.n < 1) throw ConfigError(0, 0, "n must be a positive integer");
  auto group = ParamGroup::make(cfg.n, preset_extra_symbols(cfg.preset));
  int line = 0;
  for (const std::string& stmt : effective_relations(cfg)) {
    ++line;
    ParsedRelation rel = parse_relation(*group, stmt, line);
    group = group->with_relation(UnitScalar{rel.exps}, rel.order);
  }
  return group;
}

} // namespace knspec
