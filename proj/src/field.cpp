#include "knspec/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace knspec {

// ---------------------------------------------------------------- Laurent --

Laurent Laurent::constant(unsigned nvars, const QCyclo& c) {
  Laurent l(nvars);
  l.add_term(ExpVec(nvars, 0), c);
  return l;
}

Laurent Laurent::monomial(unsigned nvars, const ExpVec& e, const QCyclo& c) {
  Laurent l(nvars);
  l.add_term(e, c);
  return l;
}

void Laurent::add_term(const ExpVec& e, const QCyclo& c) {
  assert(e.size() == nvars_);
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  assert(nvars_ == o.nvars_);
  Laurent out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
  Laurent out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
  assert(nvars_ == o.nvars_);
  Laurent out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (unsigned i = 0; i < nvars_; ++i) e[i] += e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

ExpVec Laurent::min_exponents() const {
  ExpVec m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first) {
      m = e;
      first = false;
    } else {
      for (unsigned i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

Laurent Laurent::shifted(const ExpVec& by) const {
  Laurent out(nvars_);
  for (const auto& [e, c] : terms_) {
    ExpVec f = e;
    for (unsigned i = 0; i < nvars_; ++i) f[i] += by[i];
    out.terms_.emplace(f, c);
  }
  return out;
}

const QCyclo& Laurent::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

Laurent Laurent::scaled(const QCyclo& c) const {
  Laurent out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : terms_) out.add_term(e, k * c);
  return out;
}

std::optional<Laurent> Laurent::divided_by(const Laurent& o) const {
  if (o.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent(nvars_);
  // shift both to ordinary polynomials, divide, shift back
  ExpVec ms = min_exponents(), mo = o.min_exponents();
  ExpVec neg_ms(nvars_), neg_mo(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    neg_ms[i] = -ms[i];
    neg_mo[i] = -mo[i];
  }
  Laurent f = shifted(neg_ms), g = o.shifted(neg_mo);
  Laurent q(nvars_);
  while (!f.is_zero()) {
    const auto& [fe, fc] = *f.terms_.rbegin();
    const auto& [ge, gc] = *g.terms_.rbegin();
    ExpVec qe(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
      qe[i] = fe[i] - ge[i];
      if (qe[i] < 0) return std::nullopt;
    }
    QCyclo qc = fc * gc.inverse();
    Laurent t = Laurent::monomial(nvars_, qe, qc);
    q = q + t;
    f = f - t * g;
  }
  // undo the shifts: result exponent offset is ms - mo
  ExpVec off(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) off[i] = ms[i] - mo[i];
  return q.shifted(off);
}

std::string Laurent::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i < var_names.size() ? var_names[i] : "t" + std::to_string(i + 1));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// ----------------------------------------------------------- FieldElement --

FieldElement::FieldElement(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("field: zero denominator");
  normalize();
}

FieldElement FieldElement::from_rational(unsigned nvars, const Rat& r) {
  return FieldElement(Laurent::constant(nvars, QCyclo(r)),
                      Laurent::constant(nvars, QCyclo(Rat(1))));
}

FieldElement FieldElement::from_laurent(Laurent l) {
  unsigned nv = l.nvars();
  return FieldElement(std::move(l), Laurent::constant(nv, QCyclo(Rat(1))));
}

void FieldElement::normalize() {
  const unsigned nv = num_.nvars();
  if (num_.is_zero()) {
    den_ = Laurent::constant(nv, QCyclo(Rat(1)));
    return;
  }
  // monomials are units here: push the denominator's monomial content into
  // the numerator so a monomial denominator always collapses to 1
  ExpVec md = den_.min_exponents();
  ExpVec shift(nv);
  bool any = false;
  for (unsigned i = 0; i < nv; ++i) {
    shift[i] = -md[i];
    if (shift[i] != 0) any = true;
  }
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (den_.term_count() > 1) {
    if (auto q = num_.divided_by(den_)) {
      num_ = std::move(*q);
      den_ = Laurent::constant(nv, QCyclo(Rat(1)));
    }
  }
  // make the denominator's leading coefficient 1
  QCyclo lc = den_.leading_coeff();
  if (!(lc.is_rational() && lc.rational_value() == 1)) {
    QCyclo inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool FieldElement::is_one() const {
  return den_.term_count() == 1 && num_ == den_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (den_ == o.den_) return FieldElement(num_ + o.num_, den_);
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  Laurent n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  // cross-cancellation keeps chained products shallow
  if (d2.term_count() > 1)
    if (auto q = n1.divided_by(d2)) {
      n1 = std::move(*q);
      d2 = Laurent::constant(n1.nvars(), QCyclo(Rat(1)));
    }
  if (d1.term_count() > 1)
    if (auto q = n2.divided_by(d1)) {
      n2 = std::move(*q);
      d1 = Laurent::constant(n2.nvars(), QCyclo(Rat(1)));
    }
  return FieldElement(n1 * n2, d1 * d2);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::invalid_argument("field: inverse of zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  FieldElement acc = from_rational(nvars(), Rat(1));
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

std::string FieldElement::str(const std::vector<std::string>& var_names) const {
  std::string s = num_.str(var_names);
  if (den_.term_count() == 1 && den_.terms().begin()->first == ExpVec(nvars(), 0))
    return s;
  return "(" + s + ") / (" + den_.str(var_names) + ")";
}

} // namespace knspec
