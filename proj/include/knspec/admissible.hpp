#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knspec {

enum class PKind { X, Y, Om };

// One of the 3n distinguished elements x_i, y_i, Omega_i.
struct PSymbol {
  PKind kind;
  int index; // 1-based
  bool operator==(const PSymbol& o) const { return kind == o.kind && index == o.index; }
  bool operator<(const PSymbol& o) const {
    if (index != o.index) return index < o.index;
    return static_cast<int>(kind) < static_cast<int>(o.kind);
  }
};

std::string symbol_name(const PSymbol& s);

// Subset of {x_i, y_i, Omega_i} closed under the admissibility conditions:
// for i >= 2, x_i or y_i present iff Omega_i and Omega_{i-1} both present;
// for i = 1, x_1 or y_1 present iff Omega_1 present.
class AdmissibleSet {
 public:
  AdmissibleSet(int n, std::uint32_t bits);

  static bool bits_admissible(int n, std::uint32_t bits);

  int n() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(PKind k, int i) const;
  bool contains(const PSymbol& s) const { return contains(s.kind, s.index); }
  bool subset_of(const AdmissibleSet& o) const;
  std::size_t size() const;
  std::vector<PSymbol> symbols() const;

  bool operator==(const AdmissibleSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator<(const AdmissibleSet& o) const { return bits_ < o.bits_; }

 private:
  int n_;
  std::uint32_t bits_; // bit 3(i-1)+{0,1,2} = x_i, y_i, Omega_i
};

std::vector<AdmissibleSet> enumerate_admissible(int n);

// N_T: the distinguished elements whose cosets are inverted when localizing.
std::vector<PSymbol> n_set(const AdmissibleSet& t);

// Minimal generating set of the ideal <T>: x's, y's, and those Omega_i in T
// with neither x_i nor y_i in T.
std::vector<PSymbol> minimal_ideal_generators(const AdmissibleSet& t);

struct HSpecPoset {
  std::vector<AdmissibleSet> nodes;                // sorted by bit pattern
  std::vector<std::pair<std::size_t, std::size_t>> covers; // (lower, upper)
};
HSpecPoset hspec_poset(int n);

// For T strictly contained in S: an element of S that stays invertible in the
// T-localization, i.e. a member of S intersect N_T.
PSymbol separation_witness(const AdmissibleSet& t, const AdmissibleSet& s);

} // namespace knspec
