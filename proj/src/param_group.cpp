#include "knspec/param_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knspec {

namespace {

unsigned long long gcd_ull(unsigned long long a, unsigned long long b) {
  while (b) {
    unsigned long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned long long lcm_ull(unsigned long long a, unsigned long long b) {
  return a / gcd_ull(a, b) * b;
}

long long to_ll(const BigInt& b) {
  if (b > std::numeric_limits<long long>::max() ||
      b < std::numeric_limits<long long>::min())
    throw std::overflow_error("param group: exponent overflow");
  return static_cast<long long>(b);
}

} // namespace

std::string ParamGroup::gamma_name(int i, int j) {
  if (i >= j) throw std::invalid_argument("gamma_name: requires i < j");
  if (j <= 9) return "g" + std::to_string(i) + std::to_string(j);
  return "g" + std::to_string(i) + "_" + std::to_string(j);
}

std::shared_ptr<const ParamGroup> ParamGroup::make(
    int n, const std::vector<std::string>& extra_symbols) {
  if (n < 1) throw std::invalid_argument("param group: n must be >= 1");
  auto g = std::shared_ptr<ParamGroup>(new ParamGroup());
  g->n_ = n;
  for (int i = 1; i <= n; ++i) g->symbols_.push_back("q" + std::to_string(i));
  for (int i = 1; i <= n; ++i) g->symbols_.push_back("p" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g->symbols_.push_back(gamma_name(i, j));
  for (const auto& s : extra_symbols) {
    if (g->symbol_index(s) >= 0)
      throw std::invalid_argument("param group: duplicate symbol " + s);
    g->symbols_.push_back(s);
  }
  g->rebuild();
  return g;
}

std::shared_ptr<const ParamGroup> ParamGroup::with_relation(
    const UnitScalar& word, unsigned order) const {
  if (order < 1) throw std::invalid_argument("param group: order must be >= 1");
  if (word.exp.size() != symbol_count())
    throw std::invalid_argument("param group: relation word has wrong length");
  auto g = std::shared_ptr<ParamGroup>(new ParamGroup(*this));
  std::vector<long long> row = word.exp;
  for (auto& x : row) x *= static_cast<long long>(order);
  g->relations_.push_back(std::move(row));
  g->rebuild();
  return g;
}

void ParamGroup::rebuild() {
  const std::size_t m = symbols_.size();
  IMat rel;
  for (const auto& r : relations_) {
    IVec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = r[j];
    rel.push_back(std::move(row));
  }
  if (rel.empty()) rel.push_back(IVec(m, 0)); // keep shapes simple

  SmithResult snf = smith_normal_form(rel, rel.size(), m);
  Q_ = snf.Q;
  Qinv_ = snf.Qinv;
  moduli_.assign(m, 0);
  for (std::size_t t = 0; t < snf.diag.size() && t < m; ++t)
    moduli_[t] = snf.diag[t] < 0 ? -snf.diag[t] : snf.diag[t];

  free_coords_.clear();
  torsion_coords_.clear();
  unsigned long long l = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (moduli_[j] == 0) {
      free_coords_.push_back(j);
    } else if (moduli_[j] > 1) {
      unsigned d = static_cast<unsigned>(moduli_[j]);
      torsion_coords_.emplace_back(j, d);
      l = lcm_ull(l, d);
    }
  }
  torsion_lcm_ = static_cast<unsigned>(l);
}

int ParamGroup::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<int>(i);
  return -1;
}

UnitScalar ParamGroup::identity() const {
  return UnitScalar{std::vector<long long>(symbol_count(), 0)};
}

UnitScalar ParamGroup::unit(const std::string& symbol, long long e) const {
  int idx = symbol_index(symbol);
  if (idx < 0) throw std::invalid_argument("param group: unknown symbol " + symbol);
  std::vector<long long> v(symbol_count(), 0);
  v[static_cast<std::size_t>(idx)] = e;
  return canonicalize(v);
}

UnitScalar ParamGroup::q(int i) const { return unit("q" + std::to_string(i)); }
UnitScalar ParamGroup::p(int i) const { return unit("p" + std::to_string(i)); }

UnitScalar ParamGroup::gamma(int i, int j) const {
  if (i == j) return identity();
  if (i < j) return unit(gamma_name(i, j));
  return unit(gamma_name(j, i), -1);
}

UnitScalar ParamGroup::canonicalize(const std::vector<long long>& raw) const {
  const std::size_t m = symbol_count();
  if (raw.size() != m)
    throw std::invalid_argument("param group: exponent vector has wrong length");
  IVec u(m);
  for (std::size_t j = 0; j < m; ++j) u[j] = raw[j];
  IVec c = vec_mat(u, Q_);
  for (std::size_t j = 0; j < m; ++j) {
    if (moduli_[j] >= 1) {
      c[j] %= moduli_[j];
      if (c[j] < 0) c[j] += moduli_[j];
    }
  }
  IVec back = vec_mat(c, Qinv_);
  UnitScalar out;
  out.exp.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.exp[j] = to_ll(back[j]);
  return out;
}

UnitScalar ParamGroup::mul(const UnitScalar& a, const UnitScalar& b) const {
  std::vector<long long> v(symbol_count());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.exp[j] + b.exp[j];
  return canonicalize(v);
}

UnitScalar ParamGroup::inv(const UnitScalar& a) const {
  std::vector<long long> v(symbol_count());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = -a.exp[j];
  return canonicalize(v);
}

UnitScalar ParamGroup::power(const UnitScalar& a, long long e) const {
  std::vector<long long> v(symbol_count());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.exp[j] * e;
  return canonicalize(v);
}

bool ParamGroup::is_identity(const UnitScalar& a) const {
  for (auto x : a.exp)
    if (x != 0) return false;
  return true;
}

std::optional<unsigned long long> ParamGroup::order_of(const UnitScalar& a) const {
  IVec u(symbol_count());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = a.exp[j];
  IVec c = vec_mat(u, Q_);
  unsigned long long ord = 1;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (moduli_[j] == 0) {
      if (c[j] != 0) return std::nullopt;
    } else if (moduli_[j] > 1) {
      unsigned long long d = static_cast<unsigned long long>(moduli_[j]);
      unsigned long long r =
          static_cast<unsigned long long>(((c[j] % moduli_[j]) + moduli_[j]) % moduli_[j]);
      if (r != 0) ord = lcm_ull(ord, d / gcd_ull(d, r));
    }
  }
  return ord;
}

FieldElement ParamGroup::embed(const UnitScalar& a) const {
  if (!cyclic_torsion())
    throw std::domain_error(
        "param group: torsion is not cyclic, no field realizes these relations");
  IVec u(symbol_count());
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = a.exp[j];
  IVec c = vec_mat(u, Q_);

  ExpVec e(free_rank());
  for (std::size_t k = 0; k < free_coords_.size(); ++k)
    e[k] = static_cast<int>(to_ll(c[free_coords_[k]]));

  QCyclo coeff(Rat(1));
  if (!torsion_coords_.empty()) {
    auto [coord, d] = torsion_coords_[0];
    BigInt r = ((c[coord] % d) + d) % d;
    long k = static_cast<long>(to_ll(r)) * (torsion_lcm_ / d);
    if (k != 0) coeff = QCyclo::zeta(torsion_lcm_, k);
  }
  return FieldElement::from_laurent(Laurent::monomial(free_rank(), e, coeff));
}

FieldElement ParamGroup::field_one() const {
  return FieldElement::from_rational(free_rank(), Rat(1));
}

FieldElement ParamGroup::field_zero() const {
  return FieldElement(free_rank());
}

FieldElement ParamGroup::field_rational(const Rat& r) const {
  return FieldElement::from_rational(free_rank(), r);
}

std::optional<UnitScalar> ParamGroup::recognize_unit(const FieldElement& f) const {
  if (f.is_zero()) return std::nullopt;
  if (f.den().term_count() != 1 || f.num().term_count() != 1) return std::nullopt;
  if (!(f.den() == Laurent::constant(f.nvars(), QCyclo(Rat(1))))) return std::nullopt;
  const auto& [e, coeff] = *f.num().terms().begin();

  long zk = -1;
  const unsigned N = torsion_lcm_;
  for (unsigned k = 0; k < N; ++k) {
    QCyclo z = (k == 0) ? QCyclo(Rat(1)) : QCyclo::zeta(N, k);
    if (coeff == z) {
      zk = static_cast<long>(k);
      break;
    }
  }
  if (zk < 0) return std::nullopt;
  if (torsion_coords_.empty() && zk != 0) return std::nullopt;

  IVec c(symbol_count(), 0);
  for (std::size_t k = 0; k < free_coords_.size(); ++k)
    c[free_coords_[k]] = e[k];
  if (!torsion_coords_.empty()) {
    auto [coord, d] = torsion_coords_[0];
    (void)d; // single torsion factor: d == N
    c[coord] = zk;
  }
  IVec back = vec_mat(c, Qinv_);
  UnitScalar out;
  out.exp.resize(symbol_count());
  for (std::size_t j = 0; j < out.exp.size(); ++j) out.exp[j] = to_ll(back[j]);
  out = canonicalize(out.exp);
  if (!(embed(out) == f)) return std::nullopt;
  return out;
}

std::vector<std::string> ParamGroup::free_var_names() const {
  std::vector<std::string> v;
  for (std::size_t k = 0; k < free_coords_.size(); ++k)
    v.push_back("t" + std::to_string(k + 1));
  return v;
}

std::vector<ConstraintViolation> ParamGroup::validate() const {
  std::vector<ConstraintViolation> out;
  for (int i = 1; i <= n_; ++i) {
    UnitScalar w = mul(p(i), inv(q(i)));
    auto ord = order_of(w);
    if (ord.has_value())
      out.push_back({i, "p" + std::to_string(i) + "*q" + std::to_string(i) +
                            "^-1 has finite order " + std::to_string(*ord)});
  }
  if (!cyclic_torsion())
    out.push_back({0,
                   "declared relations give non-cyclic torsion; no field "
                   "contains such a group of units"});
  return out;
}

std::string ParamGroup::scalar_str(const UnitScalar& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < a.exp.size(); ++j) {
    if (a.exp[j] == 0) continue;
    if (!first) os << "*";
    os << symbols_[j];
    if (a.exp[j] != 1) os << "^" << a.exp[j];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

} // namespace knspec
