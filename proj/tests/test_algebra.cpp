#include <doctest.h>

#include <random>

#include "knspec/algebra.hpp"

using namespace knspec;

namespace {

struct Fixture {
  std::shared_ptr<const ParamGroup> g;
  Ctx ctx;
  explicit Fixture(int n) : g(ParamGroup::make(n)), ctx(AlgebraContext::full(g, n)) {}
  NCPoly X(int i) const { return NCPoly::generator(ctx, {i, false}); }
  NCPoly Y(int i) const { return NCPoly::generator(ctx, {i, true}); }
  FieldElement fe(const UnitScalar& u) const { return g->embed(u); }
};

AdmissibleSet named(int n, std::initializer_list<const char*> names) {
  std::uint32_t b = 0;
  for (const char* nm : names) {
    std::string s(nm);
    for (int i = 1; i <= n; ++i) {
      if (s == "x" + std::to_string(i)) b |= 1u << (3 * (i - 1));
      if (s == "y" + std::to_string(i)) b |= 1u << (3 * (i - 1) + 1);
      if (s == "Om" + std::to_string(i)) b |= 1u << (3 * (i - 1) + 2);
    }
  }
  return AdmissibleSet(n, b);
}

} // namespace

TEST_SUITE("algebra") {

TEST_CASE("basic reordering") {
  Fixture f(2);
  const auto& g = *f.g;

  // y1 x1 = q1^-1 x1 y1
  CHECK(f.Y(1) * f.X(1) == (f.X(1) * f.Y(1)).scaled_unit(g.inv(g.q(1))));

  // x2 x1 = q1^-1 p2 g12^-1 x1 x2
  UnitScalar s = g.mul(g.mul(g.inv(g.q(1)), g.p(2)), g.gamma(2, 1));
  CHECK(f.X(2) * f.X(1) == (f.X(1) * f.X(2)).scaled_unit(s));

  // y2 x2 = q2^-1 x2 y2 - q1^-1 q2^-1 (q1 - p1) x1 y1
  NCPoly lhs = f.Y(2) * f.X(2);
  FieldElement c1 = f.fe(g.inv(g.q(2)));
  FieldElement c2 = f.fe(g.mul(g.inv(g.q(1)), g.inv(g.q(2)))) *
                    (f.fe(g.q(1)) - f.fe(g.p(1)));
  NCPoly rhs = (f.X(2) * f.Y(2)).scaled(c1) - (f.X(1) * f.Y(1)).scaled(c2);
  CHECK(lhs == rhs);
}

TEST_CASE("omega") {
  Fixture f(2);
  const auto& g = *f.g;
  CHECK(omega(f.ctx, 0).is_zero());

  NCPoly om1 = omega(f.ctx, 1);
  FieldElement c = f.fe(g.inv(g.q(1))) * (f.fe(g.q(1)) - f.fe(g.p(1)));
  CHECK(om1 == (f.X(1) * f.Y(1)).scaled(c));

  CHECK(f.X(2) * f.Y(2) - (f.Y(2) * f.X(2)).scaled_unit(g.q(2)) == om1);

  // reordering the defining sum nests a correction: the x1 y1 coefficient of
  // Omega_2 is (q1 - p1) p2 q1^-1 q2^-1, not (q1 - p1) q1^-1
  NCPoly om2 = omega(f.ctx, 2);
  FieldElement c22 = f.fe(g.inv(g.q(2))) * (f.fe(g.q(2)) - f.fe(g.p(2)));
  FieldElement c11 = f.fe(g.mul(g.mul(g.inv(g.q(1)), g.inv(g.q(2))), g.p(2))) *
                     (f.fe(g.q(1)) - f.fe(g.p(1)));
  CHECK(om2 == (f.X(2) * f.Y(2)).scaled(c22) + (f.X(1) * f.Y(1)).scaled(c11));
}

TEST_CASE("omega ladder up to n=3") {
  Fixture f(3);
  const auto& g = *f.g;
  for (int i = 1; i <= 3; ++i) {
    CHECK(f.X(i) * f.Y(i) - (f.Y(i) * f.X(i)).scaled_unit(g.q(i)) ==
          omega(f.ctx, i - 1));
    CHECK(f.X(i) * f.Y(i) - (f.Y(i) * f.X(i)).scaled_unit(g.p(i)) ==
          omega(f.ctx, i));
  }
}

TEST_CASE("scalar_commutes") {
  Fixture f(2);
  const auto& g = *f.g;
  auto c1 = scalar_commutes(omega(f.ctx, 1), f.X(2));
  REQUIRE(c1.has_value());
  CHECK(*c1 == g.inv(g.p(2)));

  auto c2 = scalar_commutes(omega(f.ctx, 1), f.Y(1));
  REQUIRE(c2.has_value());
  CHECK(*c2 == g.q(1));

  CHECK(!scalar_commutes(f.X(2), f.Y(2)).has_value());
}

TEST_CASE("all omega commutation scalars for n=3") {
  Fixture f(3);
  const auto& g = *f.g;
  for (int i = 1; i <= 3; ++i) {
    NCPoly om = omega(f.ctx, i);
    for (int j = 1; j <= 3; ++j) {
      auto cx = scalar_commutes(om, f.X(j));
      REQUIRE(cx.has_value());
      CHECK(*cx == (i < j ? g.inv(g.p(j)) : g.inv(g.q(j))));
      auto cy = scalar_commutes(om, f.Y(j));
      REQUIRE(cy.has_value());
      CHECK(*cy == (i < j ? g.p(j) : g.q(j)));
    }
    for (int j = 1; j <= 3; ++j)
      CHECK(om * omega(f.ctx, j) == omega(f.ctx, j) * om);
  }
}

TEST_CASE("is_normal") {
  Fixture f(2);
  const auto& g = *f.g;
  auto w = is_normal(f.X(1));
  REQUIRE(w.has_value());
  for (const auto& [gen, c] : *w)
    if (gen == Generator{1, true}) CHECK(c == g.q(1)); // x1 y1 = q1 y1 x1

  CHECK(is_normal(omega(f.ctx, 2)).has_value());
  CHECK(!is_normal(f.X(2)).has_value());
}

TEST_CASE("quotient_reduce") {
  Fixture f(2);
  const auto& g = *f.g;

  // T = {x1, y1, Om1}: level 2 becomes a clean q2 plane
  Ctx q1 = AlgebraContext::quotient(f.g, named(2, {"x1", "y1", "Om1"}));
  NCPoly img = quotient_reduce(q1, f.Y(2) * f.X(2));
  NCPoly expect =
      (NCPoly::generator(q1, {2, false}) * NCPoly::generator(q1, {2, true}))
          .scaled_unit(g.inv(g.q(2)));
  CHECK(img == expect);

  // any T containing Om1 kills Omega_1
  CHECK(quotient_reduce(q1, omega(f.ctx, 1)).is_zero());

  // T = {Om2}: the image of x2 y2 - p2 y2 x2 vanishes
  Ctx q2 = AlgebraContext::quotient(f.g, named(2, {"Om2"}));
  NCPoly z = f.X(2) * f.Y(2) - (f.Y(2) * f.X(2)).scaled_unit(g.p(2));
  CHECK(quotient_reduce(q2, z).is_zero());
  CHECK(!quotient_reduce(q2, omega(f.ctx, 1)).is_zero());
}

TEST_CASE("trace_check") {
  auto g1 = ParamGroup::make(1);
  CHECK(!trace_check(g1, named(1, {"y1", "Om1"})).has_value());
  CHECK(!trace_check(g1, named(1, {})).has_value());

  auto g2 = ParamGroup::make(2);
  for (const auto& t : enumerate_admissible(2))
    CHECK(!trace_check(g2, t).has_value());

  auto g3 = ParamGroup::make(3);
  for (const auto& t : enumerate_admissible(3))
    CHECK(!trace_check(g3, t).has_value());
}

TEST_CASE("h characters") {
  CHECK(h_character(2, Generator{1, false}) == CharacterVector{1, 0, 0});
  CHECK(h_character(2, Generator{1, true}) == CharacterVector{0, 1, 0});
  CHECK(h_character(2, Generator{2, false}) == CharacterVector{0, 0, 1});
  CHECK(h_character(2, Generator{2, true}) == CharacterVector{1, 1, -1});
  CHECK(h_character_omega(2) == CharacterVector{1, 1, 0});
  // the omega character is the sum of its generator characters at any level
  for (int i = 1; i <= 2; ++i) {
    CharacterVector v = h_character(2, Generator{i, false});
    CharacterVector w = h_character(2, Generator{i, true});
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
    CHECK(v == h_character_omega(2));
  }

  // additivity over monomial products
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> d(0, 2);
  for (int t = 0; t < 30; ++t) {
    Monomial a(6), b(6), ab(6);
    for (int k = 0; k < 6; ++k) {
      a[k] = d(rng);
      b[k] = d(rng);
      ab[k] = a[k] + b[k];
    }
    CharacterVector va = h_character(3, a), vb = h_character(3, b);
    for (std::size_t k = 0; k < va.size(); ++k) va[k] += vb[k];
    CHECK(va == h_character(3, ab));
  }
}

TEST_CASE("associativity on random triples") {
  for (int n : {2, 3}) {
    auto g = ParamGroup::make(n);
    Ctx ctx = AlgebraContext::full(g, n);
    std::mt19937 rng(1000u + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> nt(1, 3), dg(0, 3), cf(-3, 3),
        slot(0, 2 * n - 1);
    auto rand_poly = [&]() {
      NCPoly p(ctx);
      for (int t = nt(rng); t > 0; --t) {
        Monomial m(2 * n, 0);
        for (int d = dg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
        int c = cf(rng);
        if (c == 0) c = 1;
        p = p + NCPoly::monomial(ctx, m, g->field_rational(Rat(c)));
      }
      return p;
    };
    for (int t = 0; t < 40; ++t) {
      NCPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("associativity in collapsed quotients") {
  auto g = ParamGroup::make(2);
  Ctx q = AlgebraContext::quotient(g, named(2, {"Om2"}));
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> nt(1, 3), dg(0, 3), cf(-2, 2), slot(0, 3);
  auto rand_poly = [&]() {
    NCPoly p(q);
    for (int t = nt(rng); t > 0; --t) {
      Monomial m(4, 0);
      for (int d = dg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
      int c = cf(rng);
      if (c == 0) c = 1;
      p = p + NCPoly::monomial(q, m, g->field_rational(Rat(c)));
    }
    return p;
  };
  for (int t = 0; t < 40; ++t) {
    NCPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
  }
  // normal form never keeps an x2 y2 pair
  for (int t = 0; t < 20; ++t) {
    NCPoly p = rand_poly() * rand_poly();
    for (const auto& [m, c] : p.terms()) CHECK((m[2] == 0 || m[3] == 0));
  }
}

TEST_CASE("skew tower") {
  Fixture f(2);
  const auto& g = *f.g;
  // sigma_2(x1) = q1^-1 p2 g12^-1 x1 certifies x2 x1 = sigma_2(x1) x2
  UnitScalar s = g.mul(g.mul(g.inv(g.q(1)), g.p(2)), g.gamma(2, 1));
  CHECK(f.X(2) * f.X(1) == (f.X(1) * f.X(2)).scaled_unit(s));

  // y2 x2 = tau_2(x2) y2 + delta_2(x2), delta_2(x2) = -q2^-1 (q1-p1) y1 x1
  NCPoly delta = f.Y(2) * f.X(2) - (f.X(2) * f.Y(2)).scaled_unit(g.inv(g.q(2)));
  NCPoly expected =
      (f.Y(1) * f.X(1)).scaled(-(f.fe(g.inv(g.q(2)))) * (f.fe(g.q(1)) - f.fe(g.p(1))));
  CHECK(delta == expected);

  // delta_2 kills the level-1 generators
  UnitScalar t_x1 = g.mul(g.inv(g.p(2)), g.gamma(1, 2));
  CHECK((f.Y(2) * f.X(1) - (f.X(1) * f.Y(2)).scaled_unit(t_x1)).is_zero());
  UnitScalar t_y1 = g.gamma(2, 1);
  CHECK((f.Y(2) * f.Y(1) - (f.Y(1) * f.Y(2)).scaled_unit(t_y1)).is_zero());

  CHECK(!verify_skew_tower(f.g, 2, 3).has_value());
  CHECK(!verify_skew_tower(ParamGroup::make(3), 3, 3).has_value());
}

TEST_CASE("engine under a torsion regime") {
  // g12 = 1 with q1 p2^-1 of order 3: coefficients live in Q(zeta_3)(t...)
  auto g0 = ParamGroup::make(2);
  std::vector<long long> w{1, 0, 0, -1, 0};
  auto g = g0->with_relation(UnitScalar{w}, 3)
               ->with_relation(g0->gamma(1, 2), 1);
  REQUIRE(g->validate().empty());

  for (const auto& t : enumerate_admissible(2))
    CHECK(!trace_check(g, t).has_value());

  Ctx ctx = AlgebraContext::full(g, 2);
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> nt(1, 2), dg(0, 3), cf(-2, 2), slot(0, 3);
  auto rand_poly = [&]() {
    NCPoly p(ctx);
    for (int t = nt(rng); t > 0; --t) {
      Monomial m(4, 0);
      for (int d = dg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
      int c = cf(rng);
      if (c == 0) c = 1;
      p = p + NCPoly::monomial(ctx, m, g->field_rational(Rat(c)));
    }
    return p;
  };
  for (int t = 0; t < 25; ++t) {
    NCPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
  }
  CHECK(!verify_skew_tower(g, 2, 3).has_value());
}

TEST_CASE("quotient_reduce is a ring map") {
  // the quotient engines must send products to products; this exercises the
  // collapsed-level reduction much harder than the membership checks
  auto g = ParamGroup::make(2);
  Ctx full = AlgebraContext::full(g, 2);
  std::mt19937 rng(91);
  std::uniform_int_distribution<int> nt(1, 2), dg(0, 3), cf(-2, 2), slot(0, 3);
  auto rand_poly = [&]() {
    NCPoly p(full);
    for (int t = nt(rng); t > 0; --t) {
      Monomial m(4, 0);
      for (int d = dg(rng); d > 0; --d) ++m[static_cast<std::size_t>(slot(rng))];
      int c = cf(rng);
      if (c == 0) c = 1;
      p = p + NCPoly::monomial(full, m, g->field_rational(Rat(c)));
    }
    return p;
  };
  for (const auto& t : enumerate_admissible(2)) {
    Ctx q = AlgebraContext::quotient(g, t);
    for (int trial = 0; trial < 12; ++trial) {
      NCPoly a = rand_poly(), b = rand_poly();
      CHECK(quotient_reduce(q, a * b) ==
            quotient_reduce(q, a) * quotient_reduce(q, b));
      CHECK(quotient_reduce(q, a + b) ==
            quotient_reduce(q, a) + quotient_reduce(q, b));
    }
  }
}

TEST_CASE("multiplication preserves the H grading") {
  auto g = ParamGroup::make(3);
  Ctx ctx = AlgebraContext::full(g, 3);
  std::mt19937 rng(92);
  std::uniform_int_distribution<int> dg(0, 4), slot(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    Monomial a(6, 0), b(6, 0);
    for (int d = dg(rng); d > 0; --d) ++a[static_cast<std::size_t>(slot(rng))];
    for (int d = dg(rng); d > 0; --d) ++b[static_cast<std::size_t>(slot(rng))];
    CharacterVector want = h_character(3, a);
    CharacterVector wb = h_character(3, b);
    for (std::size_t k = 0; k < want.size(); ++k) want[k] += wb[k];
    NCPoly prod = NCPoly::monomial(ctx, a, g->field_one()) *
                  NCPoly::monomial(ctx, b, g->field_one());
    for (const auto& [m, c] : prod.terms()) CHECK(h_character(3, m) == want);
  }
}

TEST_CASE("scalar_commutes convention is coherent") {
  auto g = ParamGroup::make(2);
  Ctx ctx = AlgebraContext::full(g, 2);
  NCPoly om = omega(ctx, 1);
  NCPoly x2 = NCPoly::generator(ctx, {2, false});
  auto c = scalar_commutes(om, x2);
  auto cinv = scalar_commutes(x2, om);
  REQUIRE(c.has_value());
  REQUIRE(cinv.has_value());
  CHECK(g->is_identity(g->mul(*c, *cinv)));
}

TEST_CASE("context guards") {
  auto g = ParamGroup::make(2);
  auto bad = g->with_relation(g->mul(g->q(1), g->inv(g->p(1))), 1); // q1 = p1
  CHECK_THROWS_AS(AlgebraContext::full(bad, 2), std::invalid_argument);

  Ctx ctx = AlgebraContext::quotient(g, named(2, {"x1", "Om1"}));
  CHECK_THROWS_AS(NCPoly::generator(ctx, Generator{1, false}), std::invalid_argument);
}

} // TEST_SUITE
