#pragma once

#include <string>
#include <vector>

#include "knspec/algebra.hpp"
#include "knspec/lattice.hpp"

namespace knspec {

// Labeled normal element of the quotient: a surviving generator coset or a
// surviving Omega image.
struct ToralElement {
  PSymbol label;
  NCPoly value;
};

// N_T with redundant Omega images removed. At each collapsed level i the
// monomial x_i y_i is a field-scalar multiple of a word in the lower basis
// elements; those relations are recorded as dependency rows over the basis.
struct ToralBasis {
  AdmissibleSet t;
  Ctx qctx;
  std::vector<ToralElement> elems;
  IMat dependencies; // rows in Z^{|elems|}
};

ToralBasis toral_basis(const std::shared_ptr<const ParamGroup>& params,
                       const AdmissibleSet& t);

struct CommutationMatrix {
  std::vector<Generator> survivors;
  std::vector<std::vector<UnitScalar>> entries; // [basis element][survivor]
};

CommutationMatrix commutation_matrix(const ToralBasis& basis);

struct CenterGenerator {
  std::vector<long long> exponents; // over the toral basis
  std::string word;
  UnitScalar scalar; // normalizing unit carried by the label
};

struct CenterLattice {
  IMat kernel_hnf;     // L_T: exponent vectors whose commutation scalars vanish
  IMat dependency_hnf; // D_T <= L_T
  std::size_t rank;    // rank of L_T / D_T
  std::vector<CenterGenerator> generators;
};

CenterLattice center_lattice(const ToralBasis& basis, const CommutationMatrix& comm);

struct PrimitiveFamily {
  std::size_t center_rank;
  std::vector<std::string> ideal_generators; // minimal generators of <T>
  std::string description;                   // "<y1, x2^3 - alpha, ...>"
};

PrimitiveFamily primitive_family(const ToralBasis& basis, const CenterLattice& center);

struct StratumReport {
  AdmissibleSet t;
  std::vector<PSymbol> nt;
  std::vector<PSymbol> basis_labels;
  CommutationMatrix comm;
  CenterLattice center;
  PrimitiveFamily family;
};

StratumReport stratum_report(const std::shared_ptr<const ParamGroup>& params,
                             const AdmissibleSet& t);

// One report per admissible set, in bit-pattern order. threads == 1 runs the
// serial reference path.
std::vector<StratumReport> full_report(const std::shared_ptr<const ParamGroup>& params,
                                       int n, int threads = 1);

} // namespace knspec
