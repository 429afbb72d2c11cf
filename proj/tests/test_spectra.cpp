#include <doctest.h>

#include <map>
#include <set>

#include "knspec/config.hpp"
#include "knspec/report.hpp"
#include "knspec/spectra.hpp"

using namespace knspec;

namespace {

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

std::vector<std::string> basis_names(const ToralBasis& b) {
  std::vector<std::string> out;
  for (const auto& e : b.elems) out.push_back(symbol_name(e.label));
  return out;
}

std::shared_ptr<const ParamGroup> group_with(int n,
                                             std::vector<std::string> relations) {
  Config cfg;
  cfg.n = n;
  cfg.relations = std::move(relations);
  return build_group(cfg);
}

int survivor_index(const CommutationMatrix& m, const std::string& name) {
  for (std::size_t i = 0; i < m.survivors.size(); ++i)
    if (generator_name(m.survivors[i]) == name) return static_cast<int>(i);
  return -1;
}

int basis_index(const ToralBasis& b, const std::string& name) {
  for (std::size_t i = 0; i < b.elems.size(); ++i)
    if (symbol_name(b.elems[i].label) == name) return static_cast<int>(i);
  return -1;
}

} // namespace

TEST_SUITE("spectra") {

TEST_CASE("toral basis selection") {
  auto g = ParamGroup::make(2);

  ToralBasis b1 = toral_basis(g, named(2, {"y1", "Om1", "y2", "Om2"}));
  CHECK(basis_names(b1) == std::vector<std::string>{"x1", "x2"});
  CHECK(b1.dependencies.empty());

  // Omega_1 is redundant over x1 y1; Omega_2 stays
  ToralBasis b2 = toral_basis(g, named(2, {}));
  CHECK(basis_names(b2) == std::vector<std::string>{"x1", "y1", "Om2"});
  CHECK(b2.dependencies.empty());

  ToralBasis b3 = toral_basis(g, named(2, {"x1", "y1", "Om1"}));
  CHECK(basis_names(b3) == std::vector<std::string>{"x2", "y2"});

  // collapsed level: x2 y2 is proportional to x1 y1 in the quotient
  ToralBasis b4 = toral_basis(g, named(2, {"Om2"}));
  CHECK(basis_names(b4) == std::vector<std::string>{"x1", "y1", "x2", "y2"});
  REQUIRE(b4.dependencies.size() == 1);
  CHECK(b4.dependencies[0] == IVec{-1, -1, 1, 1});
}

TEST_CASE("toral basis dependencies at n=3") {
  auto g = ParamGroup::make(3);
  // collapsed level 3 referencing the kept Omega_2
  ToralBasis b = toral_basis(g, named(3, {"Om3"}));
  CHECK(basis_names(b) ==
        std::vector<std::string>{"x1", "y1", "Om2", "x3", "y3"});
  REQUIRE(b.dependencies.size() == 1);
  CHECK(b.dependencies[0] == IVec{0, 0, -1, 1, 1});
}

TEST_CASE("commutation matrix entries") {
  auto g = ParamGroup::make(2);
  ToralBasis b = toral_basis(g, named(2, {}));
  CommutationMatrix m = commutation_matrix(b);

  int x1 = basis_index(b, "x1"), om2 = basis_index(b, "Om2");
  int gx2 = survivor_index(m, "x2"), gy2 = survivor_index(m, "y2");
  REQUIRE(x1 >= 0);
  REQUIRE(om2 >= 0);
  REQUIRE(gx2 >= 0);
  REQUIRE(gy2 >= 0);

  UnitScalar c_x1_x2 = g->mul(g->mul(g->q(1), g->inv(g->p(2))), g->gamma(1, 2));
  CHECK(m.entries[static_cast<std::size_t>(x1)][static_cast<std::size_t>(gx2)] ==
        c_x1_x2);
  CHECK(m.entries[static_cast<std::size_t>(om2)][static_cast<std::size_t>(gx2)] ==
        g->inv(g->q(2)));
  CHECK(m.entries[static_cast<std::size_t>(om2)][static_cast<std::size_t>(gy2)] ==
        g->q(2));
}

TEST_CASE("center lattice examples") {
  // free parameters: rank 0 on the quantum-plane stratum
  auto g = ParamGroup::make(2);
  {
    ToralBasis b = toral_basis(g, named(2, {"y1", "Om1", "y2", "Om2"}));
    CenterLattice c = center_lattice(b, commutation_matrix(b));
    CHECK(c.rank == 0);
    CHECK(c.kernel_hnf.empty());
  }

  // g12 = 1 and q1 p2^-1 of order 3: the lattice is 3Z + 3Z
  auto g3 = group_with(2, {"g12 = 1", "order(q1*p2^-1) = 3"});
  {
    ToralBasis b = toral_basis(g3, named(2, {"y1", "Om1", "y2", "Om2"}));
    CenterLattice c = center_lattice(b, commutation_matrix(b));
    CHECK(c.rank == 2);
    CHECK(c.kernel_hnf == IMat{IVec{3, 0}, IVec{0, 3}});
    REQUIRE(c.generators.size() == 2);
    CHECK(c.generators[0].word == "x1^3");
    CHECK(c.generators[1].word == "x2^3");
  }

  // the full admissible set: no basis, trivial lattice
  {
    ToralBasis b =
        toral_basis(g, named(2, {"x1", "y1", "Om1", "x2", "y2", "Om2"}));
    CenterLattice c = center_lattice(b, commutation_matrix(b));
    CHECK(c.rank == 0);
    CHECK(b.elems.empty());
  }
}

TEST_CASE("primitive families") {
  auto g = ParamGroup::make(2);
  {
    StratumReport r = stratum_report(g, named(2, {"y1", "Om1", "x2", "Om2"}));
    CHECK(r.family.description == "<y1, x2>");
    CHECK(r.center.rank == 0);
  }
  {
    StratumReport r = stratum_report(g, named(2, {"Om2"}));
    CHECK(r.family.description == "<Om2>");
  }
  {
    auto gr = group_with(2, {"q1 = 1", "g12 = 1", "q2 = 1"});
    StratumReport r = stratum_report(gr, named(2, {}));
    CHECK(r.center.rank == 2);
    CHECK(r.family.description == "<y1 - alpha, Om2 - beta>");
  }
}

TEST_CASE("full report shapes") {
  auto g1 = ParamGroup::make(1);
  auto r1 = full_report(g1, 1);
  CHECK(r1.size() == 4);

  auto g2 = ParamGroup::make(2);
  auto r2 = full_report(g2, 2);
  CHECK(r2.size() == 14);

  // the five strata with x,y pairs at every level give the unconditional
  // primitive families
  std::set<std::string> families;
  for (const auto& r : r2) families.insert(r.family.description);
  CHECK(families.count("<x1, y1, x2, y2>"));
  CHECK(families.count("<x1, y1, x2 - alpha, y2>"));
  CHECK(families.count("<x1, y1, x2, y2 - alpha>"));
  CHECK(families.count("<x1 - alpha, y1, x2, y2>"));
  CHECK(families.count("<x1, y1 - alpha, x2, y2>"));

  // heisenberg specialization runs end to end
  Config cfg;
  cfg.n = 2;
  cfg.preset = "heisenberg";
  auto gh = build_group(cfg);
  CHECK(gh->validate().empty());
  auto rh = full_report(gh, 2);
  CHECK(rh.size() == 14);
}

TEST_CASE("rank bound across regimes") {
  std::vector<std::vector<std::string>> regimes = {
      {},
      {"q1 = 1", "q2 = 1"},
      {"g12 = 1", "order(q1*p2^-1) = 3"},
      {"p1 = 1", "p2 = 1"},
      {"q1 = 1", "p2 = 1", "g12 = 1"},
  };
  for (const auto& rels : regimes) {
    auto g = group_with(2, rels);
    for (const auto& r : full_report(g, 2))
      CHECK(r.center.rank <= 3);
  }
  auto g3 = ParamGroup::make(3);
  for (const auto& r : full_report(g3, 3)) CHECK(r.center.rank <= 4);
}

TEST_CASE("center generators have independent characters") {
  auto g = group_with(2, {"q1 = 1", "q2 = 1", "p2 = g12"});
  for (const auto& r : full_report(g, 2)) {
    if (r.center.generators.empty()) continue;
    IMat chars;
    for (const auto& cg : r.center.generators) {
      CharacterVector v(3, 0);
      for (std::size_t b = 0; b < cg.exponents.size(); ++b) {
        CharacterVector w = h_character(2, r.basis_labels[b]);
        for (std::size_t k = 0; k < v.size(); ++k)
          v[k] += cg.exponents[b] * w[k];
      }
      chars.push_back(IVec(v.begin(), v.end()));
    }
    CHECK(lattice_rank(chars) == chars.size());
  }
}

TEST_CASE("center lattice against a brute-force membership oracle") {
  // independent route: e is central iff for every survivor the product of
  // commutation scalars c(b,g)^{e_b} is the identity in the parameter group
  std::vector<std::vector<std::string>> regimes = {
      {},
      {"g12 = 1", "order(q1*p2^-1) = 3"},
      {"q1 = 1", "p2 = g12"},
      {"q1 = 1", "p2 = 1", "g12 = 1"},
  };
  for (const auto& rels : regimes) {
    auto g = group_with(2, rels);
    for (const auto& t : enumerate_admissible(2)) {
      ToralBasis b = toral_basis(g, t);
      CommutationMatrix m = commutation_matrix(b);
      CenterLattice c = center_lattice(b, m);
      const std::size_t nb = b.elems.size();
      if (nb == 0) continue;
      std::vector<long long> e(nb, -2);
      while (true) {
        bool central = true;
        for (std::size_t gi = 0; gi < m.survivors.size() && central; ++gi) {
          UnitScalar acc = g->identity();
          for (std::size_t bi = 0; bi < nb; ++bi)
            acc = g->mul(acc, g->power(m.entries[bi][gi], e[bi]));
          central = g->is_identity(acc);
        }
        CHECK(central == in_rowspace(c.kernel_hnf, IVec(e.begin(), e.end())));
        // odometer over [-2, 2]^nb
        std::size_t pos = 0;
        while (pos < nb && e[pos] == 2) e[pos++] = -2;
        if (pos == nb) break;
        ++e[pos];
      }
    }
  }
}

TEST_CASE("center generators plus dependencies regenerate the kernel") {
  auto g = group_with(2, {"q1 = 1", "p2 = 1", "g12 = 1"});
  for (const auto& t : enumerate_admissible(2)) {
    ToralBasis b = toral_basis(g, t);
    CenterLattice c = center_lattice(b, commutation_matrix(b));
    IMat joined = c.dependency_hnf;
    for (const auto& cg : c.generators)
      joined.push_back(IVec(cg.exponents.begin(), cg.exponents.end()));
    CHECK(same_lattice(joined, c.kernel_hnf));
    CHECK(c.rank + lattice_rank(c.dependency_hnf) == lattice_rank(c.kernel_hnf));
  }
}

TEST_CASE("n=4 smoke: counts and the rank bound") {
  auto g = ParamGroup::make(4);
  auto reports = full_report(g, 4, 0);
  CHECK(reports.size() == 164);
  for (const auto& r : reports) CHECK(r.center.rank <= 5);
}

TEST_CASE("report monotone over inclusions") {
  auto g = ParamGroup::make(2);
  auto sets = enumerate_admissible(2);
  std::map<std::uint32_t, std::set<std::string>> gens;
  for (const auto& t : sets) {
    std::set<std::string> s;
    for (const auto& p : minimal_ideal_generators(t)) s.insert(symbol_name(p));
    gens[t.bits()] = s;
  }
  for (const auto& t : sets)
    for (const auto& s : sets) {
      if (!t.subset_of(s)) continue;
      for (const auto& nm : gens[t.bits()]) {
        // each minimal generator of <T> is a symbol of S
        bool found = false;
        for (const auto& sym : s.symbols())
          if (symbol_name(sym) == nm) found = true;
        CHECK(found);
      }
    }
}

} // TEST_SUITE
