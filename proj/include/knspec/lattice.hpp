#pragma once

#include <optional>
#include <vector>

#include "knspec/rational.hpp"

// Exact integer-lattice tools: row-style Hermite normal form, Smith normal
// form with transform tracking, right kernels and lattice quotients.
// Lattices are given by generating rows; matrices are row-major vectors.

namespace knspec {

using IVec = std::vector<BigInt>;
using IMat = std::vector<IVec>;

IMat identity_mat(std::size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec vec_mat(const IVec& v, const IMat& m); // row vector times matrix

// Canonical row HNF of the lattice spanned by the rows: pivots positive,
// entries above a pivot reduced into [0, pivot), zero rows dropped.
IMat hnf_rows(IMat m);

// Membership of v in the lattice spanned by hnf rows (hnf must be canonical).
bool in_rowspace(const IMat& hnf, IVec v);

bool same_lattice(const IMat& a, const IMat& b);

std::size_t lattice_rank(const IMat& rows);

// Smith normal form: returns diag entries d_1 | d_2 | ... (trailing zeros for
// rank deficiency) and unimodular row/col transforms with P*A*Q = diag.
struct SmithResult {
  std::vector<BigInt> diag; // length min(rows, cols)
  IMat P, Q;                // P: r x r, Q: c x c
  IMat Qinv;                // inverse of Q, tracked during reduction
};
SmithResult smith_normal_form(const IMat& a, std::size_t rows, std::size_t cols);

// Basis rows of { x in Z^cols : A x^T = 0 }.
IMat right_kernel(const IMat& a, std::size_t rows, std::size_t cols);

// Representative rows spanning L/D inside Z^dim, for sublattices D <= L with
// Z^dim/D torsion-free on the relevant part. Returns lifted representatives,
// reduced modulo the HNF of D, in a deterministic order.
struct QuotientBasis {
  IMat reps;        // one row in Z^dim per quotient generator
  std::size_t rank; // rank(L) - rank(D)
};
QuotientBasis lattice_quotient(const IMat& l_rows, const IMat& d_rows, std::size_t dim);

} // namespace knspec
