#include <doctest.h>

#include <algorithm>
#include <set>

#include "knspec/admissible.hpp"

using namespace knspec;

namespace {

std::uint32_t bits_of(int n, const std::vector<std::string>& names) {
  std::uint32_t b = 0;
  for (const auto& nm : names) {
    for (int i = 1; i <= n; ++i) {
      if (nm == "x" + std::to_string(i)) b |= 1u << (3 * (i - 1));
      if (nm == "y" + std::to_string(i)) b |= 1u << (3 * (i - 1) + 1);
      if (nm == "Om" + std::to_string(i)) b |= 1u << (3 * (i - 1) + 2);
    }
  }
  return b;
}

AdmissibleSet make_set(int n, const std::vector<std::string>& names) {
  return AdmissibleSet(n, bits_of(n, names));
}

std::set<std::string> name_set(const std::vector<PSymbol>& syms) {
  std::set<std::string> out;
  for (const auto& s : syms) out.insert(symbol_name(s));
  return out;
}

// independent construction: extend level by level following the two ways an
// admissible set can continue (top Omega present or absent)
void build_rec(int n, int level, std::uint32_t bits, bool top_omega,
               std::vector<std::uint32_t>& out) {
  if (level > n) {
    out.push_back(bits);
    return;
  }
  int base = 3 * (level - 1);
  // nothing at this level
  build_rec(n, level + 1, bits, false, out);
  if (level == 1 || top_omega) {
    build_rec(n, level + 1, bits | (1u << base) | (4u << base), true, out);
    build_rec(n, level + 1, bits | (2u << base) | (4u << base), true, out);
    build_rec(n, level + 1, bits | (3u << base) | (4u << base), true, out);
  } else {
    build_rec(n, level + 1, bits | (4u << base), true, out);
  }
  (void)0;
}

std::vector<std::uint32_t> independent_enumeration(int n) {
  std::vector<std::uint32_t> out;
  // level 1 has no Omega_0; handle the "Omega_1 alone" exclusion by seeding
  build_rec(n, 2, 0, false, out);                       // empty level 1
  build_rec(n, 2, bits_of(n, {"x1", "Om1"}), true, out);
  build_rec(n, 2, bits_of(n, {"y1", "Om1"}), true, out);
  build_rec(n, 2, bits_of(n, {"x1", "y1", "Om1"}), true, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_SUITE("strata") {

TEST_CASE("is_admissible") {
  CHECK(!AdmissibleSet::bits_admissible(1, bits_of(1, {"Om1"})));
  CHECK(AdmissibleSet::bits_admissible(1, bits_of(1, {"y1", "Om1"})));
  CHECK(!AdmissibleSet::bits_admissible(2, bits_of(2, {"x2", "Om2"})));
  CHECK(AdmissibleSet::bits_admissible(2, 0));
  CHECK_THROWS_AS(AdmissibleSet(1, bits_of(1, {"Om1"})), std::invalid_argument);
}

TEST_CASE("enumerate n=1") {
  auto sets = enumerate_admissible(1);
  REQUIRE(sets.size() == 4);
  std::set<std::uint32_t> got;
  for (const auto& s : sets) got.insert(s.bits());
  std::set<std::uint32_t> want{0, bits_of(1, {"y1", "Om1"}), bits_of(1, {"x1", "Om1"}),
                               bits_of(1, {"x1", "y1", "Om1"})};
  CHECK(got == want);
}

TEST_CASE("enumerate n=2 matches the known fourteen") {
  auto sets = enumerate_admissible(2);
  REQUIRE(sets.size() == 14);
  std::set<std::uint32_t> got;
  for (const auto& s : sets) got.insert(s.bits());
  std::vector<std::vector<std::string>> fourteen = {
      {"x1", "y1", "Om1", "x2", "y2", "Om2"},
      {"x1", "y1", "Om1", "y2", "Om2"},
      {"x1", "y1", "Om1", "x2", "Om2"},
      {"y1", "Om1", "x2", "y2", "Om2"},
      {"x1", "Om1", "x2", "y2", "Om2"},
      {"y1", "Om1", "y2", "Om2"},
      {"y1", "Om1", "x2", "Om2"},
      {"x1", "Om1", "x2", "Om2"},
      {"x1", "Om1", "y2", "Om2"},
      {"x1", "y1", "Om1"},
      {"y1", "Om1"},
      {"x1", "Om1"},
      {"Om2"},
      {},
  };
  std::set<std::uint32_t> want;
  for (const auto& f : fourteen) want.insert(bits_of(2, f));
  CHECK(got == want);
}

TEST_CASE("enumerate n=3 and n=4 against the independent construction") {
  auto sets3 = enumerate_admissible(3);
  CHECK(sets3.size() == 48);
  std::vector<std::uint32_t> got3;
  for (const auto& s : sets3) got3.push_back(s.bits());
  CHECK(got3 == independent_enumeration(3));

  // recurrence a(k) = 3a(k-1) + b(k-1), b(k) = a(k-1) + b(k-1)
  long a = 3, b = 1;
  for (int k = 2; k <= 4; ++k) {
    long a2 = 3 * a + b, b2 = a + b;
    a = a2;
    b = b2;
    CHECK(enumerate_admissible(k).size() == static_cast<std::size_t>(a + b));
  }

  auto sets4 = enumerate_admissible(4);
  std::vector<std::uint32_t> got4;
  for (const auto& s : sets4) got4.push_back(s.bits());
  CHECK(got4 == independent_enumeration(4));
}

TEST_CASE("n_set") {
  CHECK(name_set(n_set(make_set(2, {"y1", "Om1", "y2", "Om2"}))) ==
        std::set<std::string>{"x1", "x2"});
  CHECK(name_set(n_set(make_set(2, {}))) ==
        std::set<std::string>{"x1", "y1", "Om1", "Om2"});
  CHECK(name_set(n_set(make_set(2, {"x1", "y1", "Om1"}))) ==
        std::set<std::string>{"x2", "y2", "Om2"});

  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_admissible(n))
      for (const auto& s : n_set(t)) CHECK(!t.contains(s));
}

TEST_CASE("minimal ideal generators") {
  CHECK(name_set(minimal_ideal_generators(make_set(2, {"y1", "Om1"}))) ==
        std::set<std::string>{"y1"});
  CHECK(name_set(minimal_ideal_generators(make_set(2, {"Om2"}))) ==
        std::set<std::string>{"Om2"});
  CHECK(name_set(minimal_ideal_generators(
            make_set(2, {"x1", "y1", "Om1", "x2", "y2", "Om2"}))) ==
        std::set<std::string>{"x1", "y1", "x2", "y2"});
}

TEST_CASE("hspec poset") {
  HSpecPoset p1 = hspec_poset(1);
  CHECK(p1.nodes.size() == 4);
  CHECK(p1.covers.size() == 4);

  HSpecPoset p2 = hspec_poset(2);
  CHECK(p2.nodes.size() == 14);
  // bottom element: the empty set, minimal and below everything
  std::size_t bottom = 0;
  for (std::size_t i = 0; i < p2.nodes.size(); ++i)
    if (p2.nodes[i].bits() == 0) bottom = i;
  for (std::size_t i = 0; i < p2.nodes.size(); ++i)
    CHECK(p2.nodes[bottom].subset_of(p2.nodes[i]));
  for (const auto& [lo, hi] : p2.covers) {
    CHECK(p2.nodes[lo].subset_of(p2.nodes[hi]));
    CHECK(hi != bottom);
  }
  // every non-bottom node is reached by some cover
  std::set<std::size_t> covered;
  for (const auto& [lo, hi] : p2.covers) covered.insert(hi);
  CHECK(covered.size() == p2.nodes.size() - 1);
}

TEST_CASE("separation witness") {
  auto t0 = make_set(1, {});
  auto s0 = make_set(1, {"y1", "Om1"});
  PSymbol w = separation_witness(t0, s0);
  CHECK(s0.contains(w));

  auto t1 = make_set(2, {"Om2"});
  auto s1 = make_set(2, {"x1", "y1", "Om1", "x2", "y2", "Om2"});
  PSymbol w1 = separation_witness(t1, s1);
  CHECK(w1 == PSymbol{PKind::Om, 1});

  for (int n = 1; n <= 3; ++n) {
    auto sets = enumerate_admissible(n);
    for (const auto& t : sets)
      for (const auto& s : sets) {
        if (!t.subset_of(s) || t == s) continue;
        PSymbol wit = separation_witness(t, s);
        CHECK(s.contains(wit));
        auto nt = n_set(t);
        CHECK(std::find(nt.begin(), nt.end(), wit) != nt.end());
      }
  }
}

} // TEST_SUITE
