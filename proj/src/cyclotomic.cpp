#include "knspec/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace knspec {

namespace {

using Poly = std::vector<Rat>; // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// quotient of exact division (throws if not exact)
Poly poly_div_exact(Poly num, const Poly& den) {
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rat(0));
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / den.back();
    std::size_t off = num.size() - den.size();
    q[off] = f;
    for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::runtime_error("cyclotomic: non-exact division");
  trim(q);
  return q;
}

Poly poly_mod(Poly num, const Poly& den) {
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / den.back();
    std::size_t off = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
    trim(num);
  }
  return num;
}

} // namespace

const std::vector<Rat>& QCyclo::phi(unsigned n) {
  // insert-only cache; map nodes are stable, so shared readers may hold
  // references across later inserts
  static std::map<unsigned, Poly> cache;
  static std::shared_mutex mtx;
  {
    std::shared_lock<std::shared_mutex> rlock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock<std::shared_mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  Poly den{Rat(1)};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // recursive fill of the cache for divisors
    auto jt = cache.find(d);
    if (jt == cache.end()) {
      Poly nd(d + 1, Rat(0));
      nd[0] = -1;
      nd[d] = 1;
      Poly dd{Rat(1)};
      for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) dd = poly_mul(dd, cache.at(e));
      cache[d] = poly_div_exact(nd, dd);
      jt = cache.find(d);
    }
    den = poly_mul(den, jt->second);
  }
  cache[n] = poly_div_exact(num, den);
  return cache.at(n);
}

unsigned QCyclo::phi_degree(unsigned n) {
  return static_cast<unsigned>(phi(n).size() - 1);
}

QCyclo::QCyclo(unsigned n, std::vector<Rat> coeffs) : n_(n) {
  const unsigned deg = phi_degree(n);
  Poly p = poly_mod(std::move(coeffs), phi(n));
  p.resize(deg, Rat(0));
  c_ = std::move(p);
}

QCyclo QCyclo::zeta(unsigned n, long power) {
  long k = ((power % static_cast<long>(n)) + n) % n;
  Poly p(static_cast<std::size_t>(k) + 1, Rat(0));
  p[static_cast<std::size_t>(k)] = 1;
  return QCyclo(n, std::move(p));
}

bool QCyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool QCyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat QCyclo::rational_value() const {
  if (!is_rational()) throw std::runtime_error("cyclotomic: not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

QCyclo QCyclo::promoted(unsigned n) const {
  if (n_ == n) return *this;
  if (!is_rational())
    throw std::runtime_error("cyclotomic: mixed conductors");
  return QCyclo(n, {rational_value()});
}

QCyclo QCyclo::operator+(const QCyclo& o) const {
  unsigned n = std::max(n_, o.n_);
  QCyclo a = promoted(n), b = o.promoted(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

QCyclo QCyclo::operator-(const QCyclo& o) const { return *this + (-o); }

QCyclo QCyclo::operator-() const {
  QCyclo a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

QCyclo QCyclo::operator*(const QCyclo& o) const {
  unsigned n = std::max(n_, o.n_);
  QCyclo a = promoted(n), b = o.promoted(n);
  return QCyclo(n, poly_mul(a.c_, b.c_));
}

QCyclo QCyclo::inverse() const {
  if (is_zero()) throw std::runtime_error("cyclotomic: inverse of zero");
  if (is_rational()) {
    QCyclo r = *this;
    r.c_.assign(r.c_.size(), Rat(0));
    r.c_[0] = Rat(1) / rational_value();
    return r;
  }
  // extended euclid in Q[x]: s*c + t*Phi = gcd = const
  Poly a = c_, b = phi(n_);
  trim(a);
  Poly s0{Rat(1)}, s1{};
  while (!b.empty()) {
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    Poly r = a;
    trim(r);
    while (r.size() >= b.size() && !r.empty()) {
      Rat f = r.back() / b.back();
      std::size_t off = r.size() - b.size();
      q[off] += f;
      for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
      trim(r);
    }
    trim(q);
    Poly s2 = s0;
    Poly qs = poly_mul(q, s1);
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() != 1) throw std::runtime_error("cyclotomic: inverse failed");
  for (auto& x : s0) x /= a[0];
  return QCyclo(n_, std::move(s0));
}

bool QCyclo::operator==(const QCyclo& o) const {
  if (n_ != o.n_) {
    unsigned n = std::max(n_, o.n_);
    return promoted(n) == o.promoted(n);
  }
  return c_ == o.c_;
}

bool QCyclo::operator<(const QCyclo& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return c_ < o.c_;
}

std::string QCyclo::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << rational_value();
    return os.str();
  }
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i > 0) os << "*zeta" << n_ << "^" << i;
    first = false;
  }
  return os.str();
}

} // namespace knspec
