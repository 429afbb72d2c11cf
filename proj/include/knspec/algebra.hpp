#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knspec/admissible.hpp"
#include "knspec/param_group.hpp"

namespace knspec {

// Generator x_i (is_y = false) or y_i (is_y = true), 1-based level.
struct Generator {
  int level;
  bool is_y;
  bool operator==(const Generator& o) const { return level == o.level && is_y == o.is_y; }
  bool operator<(const Generator& o) const {
    if (level != o.level) return level < o.level;
    return is_y < o.is_y;
  }
};

std::string generator_name(const Generator& g);

// Exponent vector (r_1..r_{2n}) against the ordered basis
// x_1^{r_1} y_1^{r_2} x_2^{r_3} y_2^{r_4} ...
using Monomial = std::vector<int>;

// Additive H-character in the reduced torus coordinates
// (h_1, h_2, h_3, h_5, ..., h_{2n-1}); length n+1.
using CharacterVector = std::vector<long long>;

// Rewrite data for one algebra: either the full algebra on 2n generators or
// the quotient by the ideal of an admissible set. Quotients kill their
// generators and, at each level i with Omega_i in T but x_i, y_i surviving,
// trade the pair x_i y_i for the image of Omega_{i-1} ("collapsed" level);
// normal-form monomials then avoid x_i y_i pairs at collapsed levels.
class AlgebraContext {
 public:
  static std::shared_ptr<const AlgebraContext> full(
      std::shared_ptr<const ParamGroup> params, int n);
  static std::shared_ptr<const AlgebraContext> quotient(
      std::shared_ptr<const ParamGroup> params, const AdmissibleSet& t);

  int n() const { return n_; }
  const std::shared_ptr<const ParamGroup>& params() const { return params_; }
  const std::optional<AdmissibleSet>& quotient_set() const { return quotient_; }
  bool is_quotient() const { return quotient_.has_value(); }

  bool alive(const Generator& g) const;
  bool pair_alive(int level) const;   // both x_i and y_i survive
  bool collapsed(int level) const;    // Omega_level in T with the pair alive
  std::vector<Generator> survivors() const;

  bool same_as(const AlgebraContext& o) const;

  // engine tables, built once; ids are 2*(level-1) + is_y
  struct Correction {
    int level; // lower level l, the correction word is y_l x_l
    FieldElement coeff;
  };
  const FieldElement& swap_scalar(int hi_id, int lo_id) const;
  const FieldElement& pair_q_inv(int level) const;             // embed(q_i^-1)
  const std::vector<Correction>& corr_qmain(int level) const;  // -q_i^-1 (q_l - p_l)
  const std::vector<Correction>& corr_col_yx(int level) const; // -(q_i-p_i)^-1 (q_l - p_l)
  const std::vector<Correction>& corr_col_xy(int level) const; // -p_i (q_i-p_i)^-1 (q_l - p_l)

 private:
  AlgebraContext() = default;
  void build_tables();

  int n_ = 0;
  std::shared_ptr<const ParamGroup> params_;
  std::optional<AdmissibleSet> quotient_;
  std::vector<bool> x_alive_, y_alive_, collapsed_;
  std::vector<std::vector<FieldElement>> swap_; // [hi][lo]
  std::vector<FieldElement> q_inv_;
  std::vector<std::vector<Correction>> corr_qmain_, corr_col_yx_, corr_col_xy_;
};

using Ctx = std::shared_ptr<const AlgebraContext>;

// Element of K_n (or of a quotient) in PBW normal form: monomial -> coefficient.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

  static NCPoly zero(Ctx ctx);
  static NCPoly one(Ctx ctx);
  static NCPoly generator(Ctx ctx, const Generator& g);
  static NCPoly monomial(Ctx ctx, const Monomial& m, const FieldElement& c);

  const Ctx& ctx() const { return ctx_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree() const;

  void add_term(const Monomial& m, const FieldElement& c);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly scaled(const FieldElement& c) const;
  NCPoly scaled_unit(const UnitScalar& u) const;
  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Ctx ctx_;
  std::map<Monomial, FieldElement> terms_;
};

inline NCPoly multiply(const NCPoly& a, const NCPoly& b) { return a * b; }

// Omega_i = sum_{l <= i} (q_l - p_l) y_l x_l, normalized in ctx (i = 0 gives 0).
NCPoly omega(const Ctx& ctx, int i);

// The unique unit scalar c with a*b = c*(b*a), if one exists.
std::optional<UnitScalar> scalar_commutes(const NCPoly& a, const NCPoly& b);

// Witness scalars z*g = c_g*(g*z) for every surviving generator g.
std::optional<std::vector<std::pair<Generator, UnitScalar>>> is_normal(const NCPoly& z);

// Image of an element of the full algebra in the quotient context.
NCPoly quotient_reduce(const Ctx& qctx, const NCPoly& f);

// Image of a distinguished symbol in ctx.
NCPoly psymbol_image(const Ctx& ctx, const PSymbol& s);

// Checks `image of u vanishes iff u in T` over all 3n distinguished symbols;
// returns the violating symbol if any.
std::optional<PSymbol> trace_check(const std::shared_ptr<const ParamGroup>& params,
                                   const AdmissibleSet& t);

CharacterVector h_character(int n, const Generator& g);
CharacterVector h_character(int n, const Monomial& m);
CharacterVector h_character_omega(int n);
CharacterVector h_character(int n, const PSymbol& s);

// Confirms the skew tower data: x_i a = sigma_i(a) x_i below level i,
// y_i b = tau_i(b) y_i + delta_i(b), and the tau-derivation law for delta_i
// on products up to degree_bound. Returns a description of the first failure.
std::optional<std::string> verify_skew_tower(
    const std::shared_ptr<const ParamGroup>& params, int n, int degree_bound);

} // namespace knspec
