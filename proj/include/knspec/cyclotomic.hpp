#pragma once

#include <string>
#include <vector>

#include "knspec/rational.hpp"

namespace knspec {

// Element of Q(zeta_N), stored in the power basis of Z[x]/Phi_N(x).
// N = 1 degenerates to plain Q. Values from different conductors may be
// combined only when one of them is rational.
class QCyclo {
 public:
  QCyclo() : n_(1), c_(1, Rat(0)) {}
  explicit QCyclo(const Rat& r) : n_(1), c_(1, r) {}
  QCyclo(unsigned n, std::vector<Rat> coeffs);

  static QCyclo zeta(unsigned n, long power = 1);
  static unsigned phi_degree(unsigned n);

  unsigned conductor() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const; // requires is_rational()

  QCyclo operator+(const QCyclo& o) const;
  QCyclo operator-(const QCyclo& o) const;
  QCyclo operator-() const;
  QCyclo operator*(const QCyclo& o) const;
  QCyclo inverse() const;
  bool operator==(const QCyclo& o) const;
  bool operator!=(const QCyclo& o) const { return !(*this == o); }
  bool operator<(const QCyclo& o) const; // ordering for use as map key

  std::string str() const;

 private:
  unsigned n_;
  std::vector<Rat> c_; // length = deg Phi_N, reduced mod Phi_N

  QCyclo promoted(unsigned n) const;
  static const std::vector<Rat>& phi(unsigned n); // cached Phi_N coefficients
};

} // namespace knspec
