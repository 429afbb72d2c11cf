#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knspec/field.hpp"
#include "knspec/lattice.hpp"

namespace knspec {

// Multiplicative word in the parameter symbols, stored as a canonical coset
// representative of Z^m modulo the declared relation lattice.
struct UnitScalar {
  std::vector<long long> exp;
  bool operator==(const UnitScalar& o) const { return exp == o.exp; }
  bool operator<(const UnitScalar& o) const { return exp < o.exp; }
};

struct ConstraintViolation {
  int index; // offending i for the p_i q_i^{-1} checks, 0 for global issues
  std::string message;
};

// The finitely generated abelian group generated by q_1..q_n, p_1..p_n and
// gamma_{i,j} (i < j), plus optional extra symbols, modulo declared
// relations. Immutable; adding a relation yields a fresh group. The Smith
// decomposition of the relation lattice drives canonical forms, orders and
// the exact embedding into Q(zeta_N)(t_1..t_r).
class ParamGroup {
 public:
  static std::shared_ptr<const ParamGroup> make(
      int n, const std::vector<std::string>& extra_symbols = {});
  std::shared_ptr<const ParamGroup> with_relation(const UnitScalar& word,
                                                  unsigned order = 1) const;

  int n() const { return n_; }
  std::size_t symbol_count() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  int symbol_index(const std::string& name) const;
  const std::vector<std::vector<long long>>& relation_rows() const { return relations_; }

  UnitScalar identity() const;
  UnitScalar unit(const std::string& symbol, long long e = 1) const;
  UnitScalar q(int i) const;
  UnitScalar p(int i) const;
  UnitScalar gamma(int i, int j) const; // gamma_{i,j}; inverse pair for i > j
  static std::string gamma_name(int i, int j); // requires i < j

  UnitScalar canonicalize(const std::vector<long long>& raw) const;
  UnitScalar mul(const UnitScalar& a, const UnitScalar& b) const;
  UnitScalar inv(const UnitScalar& a) const;
  UnitScalar power(const UnitScalar& a, long long e) const;
  bool is_identity(const UnitScalar& a) const;
  // nullopt encodes infinite order
  std::optional<unsigned long long> order_of(const UnitScalar& a) const;

  unsigned torsion_lcm() const { return torsion_lcm_; } // N
  unsigned free_rank() const { return static_cast<unsigned>(free_coords_.size()); }
  bool cyclic_torsion() const { return torsion_coords_.size() <= 1; }

  FieldElement embed(const UnitScalar& a) const;
  FieldElement field_one() const;
  FieldElement field_zero() const;
  FieldElement field_rational(const Rat& r) const;
  std::optional<UnitScalar> recognize_unit(const FieldElement& f) const;
  std::vector<std::string> free_var_names() const;

  std::vector<ConstraintViolation> validate() const;

  std::string scalar_str(const UnitScalar& a) const;

 private:
  ParamGroup() = default;
  void rebuild();

  int n_ = 0;
  std::vector<std::string> symbols_;
  std::vector<std::vector<long long>> relations_; // rows in Z^m

  // Smith data for the relation lattice
  IMat Q_, Qinv_;              // m x m unimodular, coords c = u * Q
  std::vector<BigInt> moduli_; // per coordinate: d >= 1 torsion/killed, 0 free
  std::vector<std::size_t> free_coords_;
  std::vector<std::pair<std::size_t, unsigned>> torsion_coords_; // (coord, d >= 2)
  unsigned torsion_lcm_ = 1;
};

} // namespace knspec
