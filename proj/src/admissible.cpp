#include "knspec/admissible.hpp"

#include <stdexcept>

namespace knspec {

namespace {

inline int bit_of(PKind k, int i) {
  return 3 * (i - 1) + static_cast<int>(k);
}

} // namespace

std::string symbol_name(const PSymbol& s) {
  switch (s.kind) {
    case PKind::X:
      return "x" + std::to_string(s.index);
    case PKind::Y:
      return "y" + std::to_string(s.index);
    case PKind::Om:
      return "Om" + std::to_string(s.index);
  }
  return "?";
}

AdmissibleSet::AdmissibleSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > 10) throw std::invalid_argument("admissible set: bad n");
  if (!bits_admissible(n, bits))
    throw std::invalid_argument("admissible set: conditions violated");
}

bool AdmissibleSet::bits_admissible(int n, std::uint32_t bits) {
  auto has = [&](PKind k, int i) { return (bits >> bit_of(k, i)) & 1u; };
  if (bits >> (3 * n)) return false; // stray bits
  if ((has(PKind::X, 1) || has(PKind::Y, 1)) != has(PKind::Om, 1)) return false;
  for (int i = 2; i <= n; ++i) {
    bool xy = has(PKind::X, i) || has(PKind::Y, i);
    bool oms = has(PKind::Om, i) && has(PKind::Om, i - 1);
    if (xy != oms) return false;
  }
  return true;
}

bool AdmissibleSet::contains(PKind k, int i) const {
  if (i < 1 || i > n_) return false;
  return (bits_ >> bit_of(k, i)) & 1u;
}

bool AdmissibleSet::subset_of(const AdmissibleSet& o) const {
  return n_ == o.n_ && (bits_ & ~o.bits_) == 0;
}

std::size_t AdmissibleSet::size() const {
  std::size_t c = 0;
  for (std::uint32_t b = bits_; b; b >>= 1) c += b & 1u;
  return c;
}

std::vector<PSymbol> AdmissibleSet::symbols() const {
  std::vector<PSymbol> out;
  for (int i = 1; i <= n_; ++i)
    for (PKind k : {PKind::X, PKind::Y, PKind::Om})
      if (contains(k, i)) out.push_back({k, i});
  return out;
}

std::vector<AdmissibleSet> enumerate_admissible(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_admissible: n must be >= 1");
  std::vector<AdmissibleSet> out;
  const std::uint32_t top = 1u << (3 * n);
  for (std::uint32_t bits = 0; bits < top; ++bits)
    if (AdmissibleSet::bits_admissible(n, bits)) out.emplace_back(n, bits);
  return out;
}

std::vector<PSymbol> n_set(const AdmissibleSet& t) {
  std::vector<PSymbol> out;
  const int n = t.n();
  for (int i = 1; i <= n; ++i) {
    bool flank = t.contains(PKind::Om, i) || (i > 1 && t.contains(PKind::Om, i - 1));
    if (!t.contains(PKind::X, i) && (i == 1 || flank)) out.push_back({PKind::X, i});
    if (!t.contains(PKind::Y, i) && (i == 1 || flank)) out.push_back({PKind::Y, i});
    if (!t.contains(PKind::Om, i)) out.push_back({PKind::Om, i});
  }
  return out;
}

std::vector<PSymbol> minimal_ideal_generators(const AdmissibleSet& t) {
  std::vector<PSymbol> out;
  for (int i = 1; i <= t.n(); ++i) {
    if (t.contains(PKind::X, i)) out.push_back({PKind::X, i});
    if (t.contains(PKind::Y, i)) out.push_back({PKind::Y, i});
    if (t.contains(PKind::Om, i) && !t.contains(PKind::X, i) && !t.contains(PKind::Y, i))
      out.push_back({PKind::Om, i});
  }
  return out;
}

HSpecPoset hspec_poset(int n) {
  HSpecPoset poset;
  poset.nodes = enumerate_admissible(n);
  const std::size_t count = poset.nodes.size();
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || !poset.nodes[a].subset_of(poset.nodes[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < count && cover; ++c) {
        if (c == a || c == b) continue;
        if (poset.nodes[a].subset_of(poset.nodes[c]) &&
            poset.nodes[c].subset_of(poset.nodes[b]))
          cover = false;
      }
      if (cover) poset.covers.emplace_back(a, b);
    }
  return poset;
}

PSymbol separation_witness(const AdmissibleSet& t, const AdmissibleSet& s) {
  if (!(t.subset_of(s)) || t == s)
    throw std::invalid_argument("separation_witness: requires T strictly inside S");
  // a new Omega works directly; otherwise a new x_i/y_i whose flanking Omega
  // already lies in S (hence in T) is in N_T
  for (int j = 1; j <= t.n(); ++j)
    if (s.contains(PKind::Om, j) && !t.contains(PKind::Om, j)) return {PKind::Om, j};
  for (int i = 1; i <= t.n(); ++i) {
    if (s.contains(PKind::X, i) && !t.contains(PKind::X, i)) return {PKind::X, i};
    if (s.contains(PKind::Y, i) && !t.contains(PKind::Y, i)) return {PKind::Y, i};
  }
  throw std::runtime_error("separation_witness: none found");
}

} // namespace knspec
