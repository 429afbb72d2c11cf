#include "knspec/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace knspec {

namespace {

inline int gen_id(const Generator& g) { return 2 * (g.level - 1) + (g.is_y ? 1 : 0); }
inline int id_level(int id) { return id / 2 + 1; }
inline bool id_is_y(int id) { return id & 1; }

} // namespace

std::string generator_name(const Generator& g) {
  return (g.is_y ? "y" : "x") + std::to_string(g.level);
}

// ---------------------------------------------------------------- context --

std::shared_ptr<const AlgebraContext> AlgebraContext::full(
    std::shared_ptr<const ParamGroup> params, int n) {
  if (n < 1 || n > params->n())
    throw std::invalid_argument("algebra context: bad n");
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->n_ = n;
  ctx->params_ = std::move(params);
  ctx->x_alive_.assign(n + 1, true);
  ctx->y_alive_.assign(n + 1, true);
  ctx->collapsed_.assign(n + 1, false);
  ctx->build_tables();
  return ctx;
}

std::shared_ptr<const AlgebraContext> AlgebraContext::quotient(
    std::shared_ptr<const ParamGroup> params, const AdmissibleSet& t) {
  const int n = t.n();
  if (n > params->n()) throw std::invalid_argument("algebra context: bad n");
  auto ctx = std::shared_ptr<AlgebraContext>(new AlgebraContext());
  ctx->n_ = n;
  ctx->params_ = std::move(params);
  ctx->quotient_ = t;
  ctx->x_alive_.assign(n + 1, false);
  ctx->y_alive_.assign(n + 1, false);
  ctx->collapsed_.assign(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    ctx->x_alive_[i] = !t.contains(PKind::X, i);
    ctx->y_alive_[i] = !t.contains(PKind::Y, i);
    ctx->collapsed_[i] =
        t.contains(PKind::Om, i) && ctx->x_alive_[i] && ctx->y_alive_[i];
  }
  ctx->build_tables();
  return ctx;
}

void AlgebraContext::build_tables() {
  const auto& g = *params_;
  for (int i = 1; i <= n_; ++i)
    if (g.is_identity(g.mul(g.p(i), g.inv(g.q(i)))))
      throw std::invalid_argument("algebra context: requires p_i != q_i");

  const int ids = 2 * n_;
  swap_.assign(ids, std::vector<FieldElement>(ids, g.field_zero()));
  for (int a = 0; a < ids; ++a)
    for (int b = 0; b < ids; ++b) {
      int la = id_level(a), lb = id_level(b);
      if (la <= lb) continue;
      UnitScalar s;
      if (!id_is_y(a) && !id_is_y(b)) // x_l x_j = q_j^-1 p_l g_{l,j} x_j x_l
        s = g.mul(g.mul(g.inv(g.q(lb)), g.p(la)), g.gamma(la, lb));
      else if (!id_is_y(a) && id_is_y(b)) // x_l y_j = q_j g_{j,l} y_j x_l
        s = g.mul(g.q(lb), g.gamma(lb, la));
      else if (id_is_y(a) && !id_is_y(b)) // y_l x_j = p_l^-1 g_{j,l} x_j y_l
        s = g.mul(g.inv(g.p(la)), g.gamma(lb, la));
      else // y_l y_j = g_{l,j} y_j y_l
        s = g.gamma(la, lb);
      swap_[a][b] = g.embed(s);
    }

  q_inv_.assign(n_ + 1, g.field_zero());
  corr_qmain_.assign(n_ + 1, {});
  corr_col_yx_.assign(n_ + 1, {});
  corr_col_xy_.assign(n_ + 1, {});
  for (int i = 1; i <= n_; ++i) {
    q_inv_[i] = g.embed(g.inv(g.q(i)));
    FieldElement qi = g.embed(g.q(i)), pi = g.embed(g.p(i));
    FieldElement diff_i = qi - pi; // nonzero by the check above
    for (int l = 1; l < i; ++l) {
      if (!pair_alive(l)) continue;
      FieldElement diff_l = g.embed(g.q(l)) - g.embed(g.p(l));
      corr_qmain_[i].push_back({l, -(q_inv_[i] * diff_l)});
      if (collapsed_[i]) {
        FieldElement inv_diff = diff_i.inverse();
        corr_col_yx_[i].push_back({l, -(inv_diff * diff_l)});
        corr_col_xy_[i].push_back({l, -(pi * inv_diff * diff_l)});
      }
    }
    if (collapsed_[i] && corr_col_yx_[i].empty())
      throw std::runtime_error(
          "algebra context: collapsed level with vanishing lower term");
  }
}

bool AlgebraContext::alive(const Generator& g) const {
  return g.is_y ? y_alive_[g.level] : x_alive_[g.level];
}

bool AlgebraContext::pair_alive(int level) const {
  return x_alive_[level] && y_alive_[level];
}

bool AlgebraContext::collapsed(int level) const { return collapsed_[level]; }

std::vector<Generator> AlgebraContext::survivors() const {
  std::vector<Generator> out;
  for (int i = 1; i <= n_; ++i) {
    if (x_alive_[i]) out.push_back({i, false});
    if (y_alive_[i]) out.push_back({i, true});
  }
  return out;
}

bool AlgebraContext::same_as(const AlgebraContext& o) const {
  if (n_ != o.n_ || params_.get() != o.params_.get()) return false;
  if (quotient_.has_value() != o.quotient_.has_value()) return false;
  if (quotient_ && !(*quotient_ == *o.quotient_)) return false;
  return true;
}

const FieldElement& AlgebraContext::swap_scalar(int hi, int lo) const {
  return swap_[hi][lo];
}
const FieldElement& AlgebraContext::pair_q_inv(int level) const { return q_inv_[level]; }
const std::vector<AlgebraContext::Correction>& AlgebraContext::corr_qmain(int level) const {
  return corr_qmain_[level];
}
const std::vector<AlgebraContext::Correction>& AlgebraContext::corr_col_yx(int level) const {
  return corr_col_yx_[level];
}
const std::vector<AlgebraContext::Correction>& AlgebraContext::corr_col_xy(int level) const {
  return corr_col_xy_[level];
}

// ----------------------------------------------------------------- engine --

namespace {

struct Task {
  FieldElement coeff;
  std::vector<int> word;
  std::size_t hint;
};

Monomial word_to_monomial(int n, const std::vector<int>& w) {
  Monomial m(2 * n, 0);
  for (int id : w) ++m[static_cast<std::size_t>(id)];
  return m;
}

std::vector<int> monomial_to_word(const Monomial& m) {
  std::vector<int> w;
  for (std::size_t id = 0; id < m.size(); ++id)
    for (int k = 0; k < m[id]; ++k) w.push_back(static_cast<int>(id));
  return w;
}

// Left-normalization by local rewriting. Scalar swaps fix inversions; the
// same-level rules replace a pair at level i by lower-level words, so the
// multiset of generator levels drops in the multiset order and the process
// terminates. A spliced word can only create new inversions one slot to the
// left of the edit, hence the scan hint.
void normalize_into(const AlgebraContext& ctx, std::vector<Task>& stack,
                    std::map<Monomial, FieldElement>& out) {
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.coeff.is_zero()) continue;

    std::size_t k = t.hint;
    bool split = false;
    while (k + 1 < t.word.size()) {
      int a = t.word[k], b = t.word[k + 1];
      int la = id_level(a), lb = id_level(b);
      if (a > b) {
        if (la == lb) {
          // y_i x_i
          const int i = la;
          std::vector<Task> pieces;
          auto splice = [&](int lower, const FieldElement& c, bool keep_pair) {
            Task nt;
            nt.coeff = t.coeff * c;
            nt.word.reserve(t.word.size() + 2);
            nt.word.insert(nt.word.end(), t.word.begin(), t.word.begin() + k);
            if (keep_pair) {
              nt.word.push_back(a - 1); // x_i
              nt.word.push_back(b + 1); // y_i
            } else {
              nt.word.push_back(gen_id({lower, true}));
              nt.word.push_back(gen_id({lower, false}));
            }
            nt.word.insert(nt.word.end(), t.word.begin() + k + 2, t.word.end());
            nt.hint = k > 0 ? k - 1 : 0;
            pieces.push_back(std::move(nt));
          };
          if (ctx.collapsed(i)) {
            for (const auto& c : ctx.corr_col_yx(i)) splice(c.level, c.coeff, false);
          } else {
            splice(0, ctx.pair_q_inv(i), true);
            for (const auto& c : ctx.corr_qmain(i)) splice(c.level, c.coeff, false);
          }
          for (auto& p : pieces) stack.push_back(std::move(p));
          split = true;
          break;
        }
        // cross-level inversion: scalar swap in place
        t.coeff = t.coeff * ctx.swap_scalar(a, b);
        t.word[k] = b;
        t.word[k + 1] = a;
        k = k > 0 ? k - 1 : 0;
        continue;
      }
      if (la == lb && a < b && ctx.collapsed(la)) {
        // x_i y_i at a collapsed level reduces to lower-level terms
        const int i = la;
        for (const auto& c : ctx.corr_col_xy(i)) {
          Task nt;
          nt.coeff = t.coeff * c.coeff;
          nt.word.reserve(t.word.size());
          nt.word.insert(nt.word.end(), t.word.begin(), t.word.begin() + k);
          nt.word.push_back(gen_id({c.level, true}));
          nt.word.push_back(gen_id({c.level, false}));
          nt.word.insert(nt.word.end(), t.word.begin() + k + 2, t.word.end());
          nt.hint = k > 0 ? k - 1 : 0;
          stack.push_back(std::move(nt));
        }
        split = true;
        break;
      }
      ++k;
    }
    if (split) continue;

    Monomial m = word_to_monomial(ctx.n(), t.word);
    auto it = out.find(m);
    if (it == out.end()) {
      out.emplace(std::move(m), std::move(t.coeff));
    } else {
      it->second = it->second + t.coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

} // namespace

// ----------------------------------------------------------------- NCPoly --

NCPoly NCPoly::zero(Ctx ctx) { return NCPoly(std::move(ctx)); }

NCPoly NCPoly::one(Ctx ctx) {
  NCPoly p(std::move(ctx));
  p.add_term(Monomial(2 * p.ctx_->n(), 0), p.ctx_->params()->field_one());
  return p;
}

NCPoly NCPoly::generator(Ctx ctx, const Generator& g) {
  if (g.level < 1 || g.level > ctx->n())
    throw std::invalid_argument("generator: level out of range");
  if (!ctx->alive(g))
    throw std::invalid_argument("generator: " + generator_name(g) +
                                " is zero in this quotient");
  NCPoly p(ctx);
  Monomial m(2 * ctx->n(), 0);
  m[static_cast<std::size_t>(gen_id(g))] = 1;
  p.add_term(m, ctx->params()->field_one());
  return p;
}

NCPoly NCPoly::monomial(Ctx ctx, const Monomial& m, const FieldElement& c) {
  if (m.size() != static_cast<std::size_t>(2 * ctx->n()))
    throw std::invalid_argument("monomial: wrong length");
  for (std::size_t id = 0; id < m.size(); ++id)
    if (m[id] > 0 &&
        !ctx->alive(Generator{static_cast<int>(id) / 2 + 1, (id & 1) != 0}))
      return NCPoly(ctx); // contains a generator killed by the quotient
  std::vector<Task> tasks;
  tasks.push_back({c, monomial_to_word(m), 0});
  NCPoly p(ctx);
  normalize_into(*ctx, tasks, p.terms_);
  return p;
}

int NCPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void NCPoly::add_term(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  if (!ctx_->same_as(*o.ctx_))
    throw std::invalid_argument("ncpoly: context mismatch");
  NCPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
  NCPoly out(ctx_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  if (!ctx_->same_as(*o.ctx_))
    throw std::invalid_argument("ncpoly: context mismatch");
  std::vector<Task> tasks;
  for (const auto& [m1, c1] : terms_) {
    std::vector<int> w1 = monomial_to_word(m1);
    for (const auto& [m2, c2] : o.terms_) {
      Task t;
      t.coeff = c1 * c2;
      t.word = w1;
      std::vector<int> w2 = monomial_to_word(m2);
      t.word.insert(t.word.end(), w2.begin(), w2.end());
      t.hint = w1.empty() ? 0 : w1.size() - 1;
      tasks.push_back(std::move(t));
    }
  }
  NCPoly out(ctx_);
  normalize_into(*ctx_, tasks, out.terms_);
  return out;
}

NCPoly NCPoly::scaled(const FieldElement& c) const {
  NCPoly out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.add_term(m, k * c);
  return out;
}

NCPoly NCPoly::scaled_unit(const UnitScalar& u) const {
  return scaled(ctx_->params()->embed(u));
}

bool NCPoly::operator==(const NCPoly& o) const {
  return ctx_->same_as(*o.ctx_) && terms_ == o.terms_;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  auto vars = ctx_->params()->free_var_names();
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(vars) << ")";
    for (std::size_t id = 0; id < m.size(); ++id) {
      if (m[id] == 0) continue;
      Generator g{static_cast<int>(id) / 2 + 1, (id & 1) != 0};
      os << "*" << generator_name(g);
      if (m[id] != 1) os << "^" << m[id];
    }
  }
  return os.str();
}

// ------------------------------------------------------------- operations --

NCPoly omega(const Ctx& ctx, int i) {
  if (i < 0 || i > ctx->n()) throw std::invalid_argument("omega: bad index");
  const auto& g = *ctx->params();
  std::vector<Task> tasks;
  for (int l = 1; l <= i; ++l) {
    if (!ctx->pair_alive(l)) continue;
    FieldElement diff = g.embed(g.q(l)) - g.embed(g.p(l));
    tasks.push_back({diff,
                     {gen_id({l, true}), gen_id({l, false})},
                     0});
  }
  NCPoly out(ctx);
  std::map<Monomial, FieldElement> acc;
  normalize_into(*ctx, tasks, acc);
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

std::optional<UnitScalar> scalar_commutes(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("scalar_commutes: inputs must be nonzero");
  NCPoly ab = a * b, ba = b * a;
  if (ab.is_zero() || ba.is_zero()) return std::nullopt;
  if (ab.term_count() != ba.term_count()) return std::nullopt;
  auto it1 = ab.terms().begin();
  auto it2 = ba.terms().begin();
  if (it1->first != it2->first) return std::nullopt;
  FieldElement ratio = it1->second * it2->second.inverse();
  auto u = a.ctx()->params()->recognize_unit(ratio);
  if (!u) return std::nullopt;
  if (!(ab == ba.scaled(ratio))) return std::nullopt;
  return u;
}

std::optional<std::vector<std::pair<Generator, UnitScalar>>> is_normal(const NCPoly& z) {
  if (z.is_zero()) throw std::invalid_argument("is_normal: zero input");
  std::vector<std::pair<Generator, UnitScalar>> out;
  for (const Generator& g : z.ctx()->survivors()) {
    auto c = scalar_commutes(z, NCPoly::generator(z.ctx(), g));
    if (!c) return std::nullopt;
    out.emplace_back(g, *c);
  }
  return out;
}

NCPoly quotient_reduce(const Ctx& qctx, const NCPoly& f) {
  if (!qctx->is_quotient())
    throw std::invalid_argument("quotient_reduce: target is not a quotient");
  if (f.ctx()->is_quotient())
    throw std::invalid_argument("quotient_reduce: input must live in the full algebra");
  if (f.ctx()->params().get() != qctx->params().get() || f.ctx()->n() != qctx->n())
    throw std::invalid_argument("quotient_reduce: context mismatch");
  std::vector<Task> tasks;
  for (const auto& [m, c] : f.terms()) {
    bool killed = false;
    for (std::size_t id = 0; id < m.size(); ++id) {
      Generator g{static_cast<int>(id) / 2 + 1, (id & 1) != 0};
      if (m[id] > 0 && !qctx->alive(g)) {
        killed = true;
        break;
      }
    }
    if (!killed) tasks.push_back({c, monomial_to_word(m), 0});
  }
  NCPoly out(qctx);
  std::map<Monomial, FieldElement> acc;
  normalize_into(*qctx, tasks, acc);
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

NCPoly psymbol_image(const Ctx& ctx, const PSymbol& s) {
  switch (s.kind) {
    case PKind::X:
    case PKind::Y: {
      Generator g{s.index, s.kind == PKind::Y};
      if (!ctx->alive(g)) return NCPoly::zero(ctx);
      return NCPoly::generator(ctx, g);
    }
    case PKind::Om:
      return omega(ctx, s.index);
  }
  throw std::logic_error("psymbol_image: bad kind");
}

std::optional<PSymbol> trace_check(const std::shared_ptr<const ParamGroup>& params,
                                   const AdmissibleSet& t) {
  Ctx qctx = AlgebraContext::quotient(params, t);
  for (int i = 1; i <= t.n(); ++i)
    for (PKind k : {PKind::X, PKind::Y, PKind::Om}) {
      PSymbol s{k, i};
      bool vanishes = psymbol_image(qctx, s).is_zero();
      if (vanishes != t.contains(s)) return s;
    }
  return std::nullopt;
}

// ------------------------------------------------------------- characters --

CharacterVector h_character(int n, const Generator& g) {
  CharacterVector v(n + 1, 0);
  if (!g.is_y) {
    if (g.level == 1)
      v[0] = 1;
    else
      v[g.level] = 1;
  } else {
    if (g.level == 1) {
      v[1] = 1;
    } else {
      // h_{2i} = h_{2i-1}^{-1} h_1 h_2
      v[0] = 1;
      v[1] = 1;
      v[g.level] = -1;
    }
  }
  return v;
}

CharacterVector h_character(int n, const Monomial& m) {
  CharacterVector v(n + 1, 0);
  for (std::size_t id = 0; id < m.size(); ++id) {
    if (m[id] == 0) continue;
    Generator g{static_cast<int>(id) / 2 + 1, (id & 1) != 0};
    CharacterVector w = h_character(n, g);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += m[id] * w[j];
  }
  return v;
}

CharacterVector h_character_omega(int n) {
  CharacterVector v(n + 1, 0);
  v[0] = 1;
  v[1] = 1;
  return v;
}

CharacterVector h_character(int n, const PSymbol& s) {
  if (s.kind == PKind::Om) return h_character_omega(n);
  return h_character(n, Generator{s.index, s.kind == PKind::Y});
}

// --------------------------------------------------------------- the tower --

namespace {

// monomials over generator ids 0..max_id with total degree in [1, bound]
void enumerate_monomials(int n, int max_id, int bound,
                         std::vector<Monomial>& out) {
  Monomial m(2 * n, 0);
  std::function<void(int, int)> rec = [&](int id, int left) {
    if (id > max_id) {
      if (left < bound) out.push_back(m); // degree >= 1
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[static_cast<std::size_t>(id)] = e;
      rec(id + 1, left - e);
    }
    m[static_cast<std::size_t>(id)] = 0;
  };
  rec(0, bound);
}

} // namespace

std::optional<std::string> verify_skew_tower(
    const std::shared_ptr<const ParamGroup>& params, int n, int degree_bound) {
  Ctx ctx = AlgebraContext::full(params, n);
  const auto& g = *params;
  auto gen = [&](int level, bool is_y) {
    return NCPoly::generator(ctx, Generator{level, is_y});
  };

  // tau_i as a graded automorphism of the subalgebra below y_i
  auto tau_apply = [&](int i, const NCPoly& f) {
    NCPoly out(ctx);
    for (const auto& [m, c] : f.terms()) {
      UnitScalar s = g.identity();
      for (std::size_t id = 0; id < m.size(); ++id) {
        if (m[id] == 0) continue;
        int level = static_cast<int>(id) / 2 + 1;
        bool is_y = (id & 1) != 0;
        UnitScalar base;
        if (!is_y && level < i)
          base = g.mul(g.inv(g.p(i)), g.gamma(level, i));
        else if (is_y && level < i)
          base = g.gamma(i, level);
        else if (!is_y && level == i)
          base = g.inv(g.q(i));
        else
          throw std::logic_error("tau: monomial not below y_i");
        s = g.mul(s, g.power(base, m[id]));
      }
      out.add_term(m, c * g.embed(s));
    }
    return out;
  };
  auto delta_apply = [&](int i, const NCPoly& f) {
    return gen(i, true) * f - tau_apply(i, f) * gen(i, true);
  };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      // sigma_i on the generators below x_i
      UnitScalar sx = g.mul(g.mul(g.inv(g.q(j)), g.p(i)), g.gamma(i, j));
      if (!(gen(i, false) * gen(j, false) ==
            (gen(j, false) * gen(i, false)).scaled(g.embed(sx))))
        return "sigma: x" + std::to_string(i) + " x" + std::to_string(j) +
               " != sigma(x" + std::to_string(j) + ") x" + std::to_string(i);
      UnitScalar sy = g.mul(g.q(j), g.gamma(j, i));
      if (!(gen(i, false) * gen(j, true) ==
            (gen(j, true) * gen(i, false)).scaled(g.embed(sy))))
        return "sigma: x" + std::to_string(i) + " y" + std::to_string(j) +
               " != sigma(y" + std::to_string(j) + ") x" + std::to_string(i);
      // delta_i kills the generators below level i
      if (!delta_apply(i, gen(j, false)).is_zero())
        return "delta: delta_" + std::to_string(i) + "(x" + std::to_string(j) +
               ") != 0";
      if (!delta_apply(i, gen(j, true)).is_zero())
        return "delta: delta_" + std::to_string(i) + "(y" + std::to_string(j) +
               ") != 0";
    }
    // delta_i(x_i) = -q_i^-1 Omega_{i-1}
    NCPoly expect = omega(ctx, i - 1).scaled(-g.embed(g.inv(g.q(i))));
    if (!(delta_apply(i, gen(i, false)) == expect))
      return "delta: delta_" + std::to_string(i) + "(x" + std::to_string(i) +
             ") != -q^-1 Omega";

    // derivation law on monomial products of total degree <= bound
    std::vector<Monomial> monos;
    enumerate_monomials(n, 2 * (i - 1), degree_bound, monos);
    for (const auto& ma : monos) {
      int da = 0;
      for (int e : ma) da += e;
      NCPoly a = NCPoly::monomial(ctx, ma, g.field_one());
      NCPoly da_poly = delta_apply(i, a);
      NCPoly ta = tau_apply(i, a);
      for (const auto& mb : monos) {
        int db = 0;
        for (int e : mb) db += e;
        if (da + db > degree_bound) continue;
        NCPoly b = NCPoly::monomial(ctx, mb, g.field_one());
        NCPoly lhs = delta_apply(i, a * b);
        NCPoly rhs = ta * delta_apply(i, b) + da_poly * b;
        if (!(lhs == rhs))
          return "delta: derivation law fails at level " + std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

} // namespace knspec
