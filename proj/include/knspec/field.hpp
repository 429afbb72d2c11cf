#pragma once

#include <string>

#include "knspec/laurent.hpp"

namespace knspec {

// Exact element of Q(zeta_N)(t_1..t_r): a reduced fraction of Laurent
// polynomials. Contract is content normalization (common monomial factors and
// the denominator's leading coefficient are stripped); on top of that an
// opportunistic exact-division cancellation keeps the common cases small.
class FieldElement {
 public:
  explicit FieldElement(unsigned nvars = 0)
      : num_(nvars), den_(Laurent::constant(nvars, QCyclo(Rat(1)))) {}
  FieldElement(Laurent num, Laurent den);

  static FieldElement from_rational(unsigned nvars, const Rat& r);
  static FieldElement from_laurent(Laurent l);

  unsigned nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  Laurent num_, den_;
  void normalize();
};

} // namespace knspec
