#include "knspec/verify.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <random>
#include <sstream>

#include "knspec/algebra.hpp"
#include "knspec/parallel.hpp"
#include "knspec/spectra.hpp"

namespace knspec {

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) {
      ok = false;
      detail = d;
    }
  }
};

SuiteResult suite_commutation(const std::shared_ptr<const ParamGroup>& params,
                              int n, std::ostream& log) {
  Check c;
  const auto& g = *params;
  Ctx ctx = AlgebraContext::full(params, n);
  auto X = [&](int i) { return NCPoly::generator(ctx, {i, false}); };
  auto Y = [&](int i) { return NCPoly::generator(ctx, {i, true}); };

  // defining relations, as engine identities
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != j) {
        if (!(Y(i) * Y(j) == (Y(j) * Y(i)).scaled_unit(g.gamma(i, j))))
          c.fail("y_i y_j relation fails at i=" + std::to_string(i) +
                 ", j=" + std::to_string(j));
        UnitScalar s = i < j ? g.mul(g.p(j), g.gamma(j, i))
                             : g.mul(g.q(j), g.gamma(j, i));
        if (!(X(i) * Y(j) == (Y(j) * X(i)).scaled_unit(s)))
          c.fail("x_i y_j relation fails at i=" + std::to_string(i) +
                 ", j=" + std::to_string(j));
        if (i < j) {
          UnitScalar t = g.mul(g.mul(g.q(i), g.inv(g.p(j))), g.gamma(i, j));
          if (!(X(i) * X(j) == (X(j) * X(i)).scaled_unit(t)))
            c.fail("x_i x_j relation fails at i=" + std::to_string(i) +
                   ", j=" + std::to_string(j));
        }
      }
    }
  log << "[commutation] defining relations hold in K_" << n << ": "
      << (c.ok ? "ok" : "FAIL") << "\n";

  // Omega ladder: x_i y_i - q_i y_i x_i = Omega_{i-1},
  //               x_i y_i - p_i y_i x_i = Omega_i
  for (int i = 1; i <= n; ++i) {
    if (!(X(i) * Y(i) - (Y(i) * X(i)).scaled_unit(g.q(i)) == omega(ctx, i - 1)))
      c.fail("ladder q-form fails at i=" + std::to_string(i));
    if (!(X(i) * Y(i) - (Y(i) * X(i)).scaled_unit(g.p(i)) == omega(ctx, i)))
      c.fail("ladder p-form fails at i=" + std::to_string(i));
  }
  log << "[commutation] Omega ladder (both forms) in K_" << n << ": "
      << (c.ok ? "ok" : "FAIL") << "\n";

  // Omega commutation scalars and Omega-Omega commutativity
  for (int i = 1; i <= n; ++i) {
    NCPoly om = omega(ctx, i);
    for (int j = 1; j <= n; ++j) {
      auto cx = scalar_commutes(om, X(j));
      UnitScalar ex = i < j ? g.inv(g.p(j)) : g.inv(g.q(j));
      if (!cx || !(*cx == ex))
        c.fail("Omega_i x_j scalar fails at i=" + std::to_string(i) +
               ", j=" + std::to_string(j));
      auto cy = scalar_commutes(om, Y(j));
      UnitScalar ey = i < j ? g.p(j) : g.q(j);
      if (!cy || !(*cy == ey))
        c.fail("Omega_i y_j scalar fails at i=" + std::to_string(i) +
               ", j=" + std::to_string(j));
    }
    for (int j = 1; j <= n; ++j)
      if (!(om * omega(ctx, j) == omega(ctx, j) * om))
        c.fail("Omega_i Omega_j commutativity fails at i=" + std::to_string(i) +
               ", j=" + std::to_string(j));
    if (!is_normal(om)) c.fail("Omega_i not normal at i=" + std::to_string(i));
  }
  log << "[commutation] Omega scalars, Omega-Omega, normality in K_" << n
      << ": " << (c.ok ? "ok" : "FAIL") << "\n";
  return {"commutation", c.ok, c.detail};
}

SuiteResult suite_tower(const std::shared_ptr<const ParamGroup>& params, int n,
                        int degree, std::ostream& log) {
  auto bad = verify_skew_tower(params, n, degree);
  log << "[tower] skew tower maps and derivation law up to degree " << degree
      << " in K_" << n << ": " << (bad ? "FAIL" : "ok") << "\n";
  return {"tower", !bad.has_value(), bad.value_or("")};
}

SuiteResult suite_trace(const std::shared_ptr<const ParamGroup>& params, int n,
                        int threads, std::ostream& log) {
  auto sets = enumerate_admissible(n);
  std::vector<std::string> fails(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) {
    if (auto v = trace_check(params, sets[i]))
      fails[i] = "trace violated by " + symbol_name(*v);
  });
  Check c;
  for (const auto& f : fails)
    if (!f.empty()) c.fail(f);
  log << "[trace] quotient images of the 3n distinguished elements match T for "
      << sets.size() << " admissible sets: " << (c.ok ? "ok" : "FAIL") << "\n";
  return {"trace", c.ok, c.detail};
}

SuiteResult suite_normal(const std::shared_ptr<const ParamGroup>& params, int n,
                         int threads, std::ostream& log) {
  auto sets = enumerate_admissible(n);
  std::vector<std::string> fails(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) {
    Ctx qctx = AlgebraContext::quotient(params, sets[i]);
    for (const PSymbol& s : n_set(sets[i])) {
      NCPoly v = psymbol_image(qctx, s);
      if (v.is_zero()) {
        fails[i] = symbol_name(s) + " vanishes in the quotient";
        return;
      }
      if (!is_normal(v)) {
        fails[i] = symbol_name(s) + " is not normal in the quotient";
        return;
      }
    }
  });
  Check c;
  for (const auto& f : fails)
    if (!f.empty()) c.fail(f);
  log << "[normal] every element of N_T is a nonzero normal coset, "
      << sets.size() << " admissible sets: " << (c.ok ? "ok" : "FAIL") << "\n";
  return {"normal", c.ok, c.detail};
}

SuiteResult suite_separation(int n, std::ostream& log) {
  auto sets = enumerate_admissible(n);
  Check c;
  std::size_t pairs = 0;
  for (const auto& t : sets)
    for (const auto& s : sets) {
      if (!(t.subset_of(s)) || t == s) continue;
      ++pairs;
      PSymbol w = separation_witness(t, s);
      if (!s.contains(w)) c.fail("witness not in S");
      auto nt = n_set(t);
      if (std::find(nt.begin(), nt.end(), w) == nt.end())
        c.fail("witness not in N_T");
    }
  log << "[separation] witness in S and N_T for " << pairs
      << " comparable admissible pairs: " << (c.ok ? "ok" : "FAIL") << "\n";
  return {"separation", c.ok, c.detail};
}

SuiteResult suite_assoc(const std::shared_ptr<const ParamGroup>& params, int n,
                        int threads, std::ostream& log) {
  Ctx ctx = AlgebraContext::full(params, n);
  const auto& g = *params;
  std::mt19937 rng(0x5eed1234u + static_cast<unsigned>(n));
  auto rand_poly = [&]() {
    NCPoly p(ctx);
    std::uniform_int_distribution<int> nterms(1, 3), deg(0, 3), coeff(-3, 3),
        sym(0, static_cast<int>(g.symbol_count()) - 1), se(-1, 1);
    for (int t = nterms(rng); t > 0; --t) {
      Monomial m(2 * n, 0);
      for (int d = deg(rng); d > 0; --d)
        ++m[static_cast<std::size_t>(
            std::uniform_int_distribution<int>(0, 2 * n - 1)(rng))];
      int c0 = coeff(rng);
      if (c0 == 0) c0 = 1;
      std::vector<long long> w(g.symbol_count(), 0);
      w[static_cast<std::size_t>(sym(rng))] = se(rng);
      FieldElement c = g.field_rational(Rat(c0)) * g.embed(g.canonicalize(w));
      p = p + NCPoly::monomial(ctx, m, c);
    }
    return p;
  };
  const int trials = 200;
  std::vector<std::array<NCPoly, 3>> inputs;
  inputs.reserve(trials);
  for (int t = 0; t < trials; ++t)
    inputs.push_back({rand_poly(), rand_poly(), rand_poly()});
  std::vector<char> okv(trials, 1);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    const auto& [a, b, cc] = inputs[i];
    okv[i] = ((a * b) * cc == a * (b * cc)) ? 1 : 0;
  });
  Check c;
  for (int i = 0; i < trials; ++i)
    if (!okv[static_cast<std::size_t>(i)])
      c.fail("associativity fails on random triple " + std::to_string(i));
  log << "[assoc] (fg)h = f(gh) on " << trials
      << " random degree<=3 triples in K_" << n << ": " << (c.ok ? "ok" : "FAIL")
      << "\n";
  return {"assoc", c.ok, c.detail};
}

} // namespace

std::vector<std::string> suite_names() {
  return {"commutation", "tower", "trace", "normal", "separation", "assoc"};
}

std::vector<SuiteResult> run_verify(const std::shared_ptr<const ParamGroup>& params,
                                    int n, int degree_bound,
                                    const std::vector<std::string>& suites,
                                    int threads, std::ostream& log) {
  std::vector<std::string> todo = suites;
  if (todo.size() == 1 && todo[0] == "all") todo = suite_names();
  std::vector<SuiteResult> out;
  for (const std::string& s : todo) {
    if (s == "commutation")
      out.push_back(suite_commutation(params, n, log));
    else if (s == "tower")
      out.push_back(suite_tower(params, n, degree_bound, log));
    else if (s == "trace")
      out.push_back(suite_trace(params, n, threads, log));
    else if (s == "normal")
      out.push_back(suite_normal(params, n, threads, log));
    else if (s == "separation")
      out.push_back(suite_separation(n, log));
    else if (s == "assoc")
      out.push_back(suite_assoc(params, n, threads, log));
    else
      throw std::invalid_argument("unknown verify suite '" + s + "'");
  }
  return out;
}

} // namespace knspec
