#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knspec/cyclotomic.hpp"

namespace knspec {

using ExpVec = std::vector<int>;

// Multivariate Laurent polynomial over Q(zeta_N) in a fixed number of
// commuting variables t_1..t_r. Terms are kept in lex order on exponents.
class Laurent {
 public:
  explicit Laurent(unsigned nvars = 0) : nvars_(nvars) {}
  static Laurent constant(unsigned nvars, const QCyclo& c);
  static Laurent monomial(unsigned nvars, const ExpVec& e, const QCyclo& c);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, QCyclo>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const QCyclo& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  ExpVec min_exponents() const; // componentwise min over support
  Laurent shifted(const ExpVec& by) const;
  const QCyclo& leading_coeff() const; // lex-largest term
  Laurent scaled(const QCyclo& c) const;

  // exact division (nullopt when o does not divide); both sides may be Laurent
  std::optional<Laurent> divided_by(const Laurent& o) const;

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  unsigned nvars_;
  std::map<ExpVec, QCyclo> terms_;
};

} // namespace knspec
