#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cayint/abelian.hpp"
#include "cayint/errors.hpp"

using namespace cayint;

namespace {

AbElement el(std::vector<int> c) { return AbElement{std::move(c)}; }

IndexSet indices(const AbelianGroup& g, const std::vector<std::vector<int>>& coords) {
  IndexSet out;
  for (const auto& c : coords) out.push_back(g.index(el(c)));
  std::sort(out.begin(), out.end());
  return out;
}

// Exact character sum of an index subset, lifted to Z[zeta_exponent].
CycloInt chi_sum(const AbelianGroup& g, const Character& chi, const IndexSet& s) {
  return character_sum(chi.table(g, g.exponent()), s, g.exponent());
}

}  // namespace

TEST_CASE("element arithmetic") {
  const AbelianGroup z4({4});
  CHECK(ab_mul(z4, el({1}), el({3})) == el({0}));
  CHECK(ab_mul(z4, el({2}), el({3})) == el({1}));
  const AbelianGroup z2z3({2, 3});
  CHECK(ab_mul(z2z3, el({1, 2}), el({1, 2})) == el({0, 1}));
  CHECK_THROWS_AS(ab_mul(z2z3, el({1}), el({1, 2})), StructuralError);
  CHECK_THROWS_AS(z2z3.index(el({2, 0})), StructuralError);

  CHECK(element_order(z4, el({2})) == 2);
  CHECK(element_order(z4, el({1})) == 4);
  CHECK(element_order(z2z3, el({1, 1})) == 6);
  CHECK(z2z3.exponent() == 6);
  CHECK(z2z3.order() == 6);

  for (int i = 0; i < z2z3.order(); ++i) {
    CHECK(z2z3.index(z2z3.element(i)) == i);
    for (int j = 0; j < z2z3.order(); ++j) {
      CHECK(z2z3.mul(i, j) == z2z3.index(z2z3.mul(z2z3.element(i), z2z3.element(j))));
    }
  }
  CHECK(el({1, 2}).to_string() == "1,2");
  CHECK_THROWS_AS(AbelianGroup({4, 1}), StructuralError);
}

TEST_CASE("automorphisms") {
  const AbelianGroup z8({8});
  const auto f = Automorphism::power_map(z8, 3);
  CHECK(f.is_involution());
  CHECK_FALSE(f.is_identity());
  CHECK_FALSE(f.is_inversion());
  CHECK(f.apply(el({3})) == el({1}));
  CHECK(Automorphism::inversion(z8).is_inversion());
  CHECK_THROWS_AS(Automorphism::power_map(z8, 2), PreconditionError);

  const AbelianGroup z2z4({2, 4});
  // e1 -> (0,1) is not a homomorphism: order 4 image for an order-2 generator.
  CHECK_THROWS_AS(Automorphism(z2z4, {el({0, 1}), el({0, 1})}), StructuralError);
  // Well-defined but not bijective.
  CHECK_THROWS_AS(Automorphism(z2z4, {el({0, 2}), el({0, 2})}), StructuralError);
  // e1 -> e1, e2 -> e1 + e2 squares to the identity.
  const Automorphism g(z2z4, {el({1, 0}), el({1, 1})});
  CHECK(g.is_involution());
}

TEST_CASE("subgroup B") {
  const AbelianGroup z4({4});
  CHECK(subgroup_B(z4, Automorphism::inversion(z4)) == IndexSet{0, 2});
  const AbelianGroup z3({3});
  CHECK(subgroup_B(z3, Automorphism::inversion(z3)) == IndexSet{0, 1, 2});

  // For f(a) = a^s on a cyclic group, f(a) a^{-1} = a^{s-1}.
  const AbelianGroup z8({8});
  for (int s : {3, 5, 7}) {
    std::set<int> oracle;
    for (int k = 0; k < 8; ++k) oracle.insert(((s - 1) * k) % 8);
    const auto b = subgroup_B(z8, Automorphism::power_map(z8, s));
    CHECK(b == IndexSet(oracle.begin(), oracle.end()));
    CHECK(is_subgroup(z8, b));
  }
  CHECK(subgroup_B(z8, Automorphism::power_map(z8, 3)) == IndexSet{0, 2, 4, 6});
}

TEST_CASE("quotient") {
  const AbelianGroup z4({4});
  const auto q = quotient(z4, {0, 2});
  CHECK(q.index == 2);
  CHECK(q.cosets == std::vector<IndexSet>{{0, 2}, {1, 3}});
  CHECK(q.coset_of == std::vector<int>{0, 1, 0, 1});
  CHECK(q.representative(1) == 1);

  const AbelianGroup v4({2, 2});
  CHECK(quotient(v4, {0}).index == 4);

  const AbelianGroup z8({8});
  CHECK(quotient(z8, {0, 2, 4, 6}).index == 2);
  CHECK_THROWS_AS(quotient(z8, {0, 1}), StructuralError);
  CHECK_THROWS_AS(quotient(z8, {2, 4}), StructuralError);
}

TEST_CASE("characters") {
  const AbelianGroup z2({2});
  const auto c2 = characters(z2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].value(z2, el({1}), 2) == CycloInt::integer(2, 1));
  CHECK(c2[1].value(z2, el({1}), 2) == CycloInt::integer(2, -1));

  const AbelianGroup z4({4});
  const auto c4 = characters(z4);
  REQUIRE(c4.size() == 4);
  const auto i = CycloInt::root(4, 1);
  CHECK(c4[0].value(z4, el({1}), 4) == CycloInt::integer(4, 1));
  CHECK(c4[1].value(z4, el({1}), 4) == i);
  CHECK(c4[2].value(z4, el({1}), 4) == CycloInt::integer(4, -1));
  CHECK(c4[3].value(z4, el({1}), 4) == -i);
  CHECK(std::is_sorted(c4.begin(), c4.end()));

  CHECK(characters(AbelianGroup({2, 3})).size() == 6);
  CHECK_THROWS_AS(c4[1].value(z4, el({1}), 6), StructuralError);
}

TEST_CASE("characters are homomorphisms and orthonormal") {
  for (const auto& factors : std::vector<std::vector<int>>{{4}, {2, 3}, {2, 4}, {6}, {2, 2, 2}}) {
    const AbelianGroup a(factors);
    const int e = a.exponent();
    const auto chars = characters(a);
    CHECK(static_cast<int>(chars.size()) == a.order());
    for (const auto& chi : chars) {
      const auto t = chi.table(a, e);
      CHECK(t[0] == 0);
      for (int x = 0; x < a.order(); ++x) {
        for (int y = 0; y < a.order(); ++y) {
          CHECK(t[static_cast<std::size_t>(a.mul(x, y))] == (t[static_cast<std::size_t>(x)] + t[static_cast<std::size_t>(y)]) % e);
        }
      }
    }
    for (std::size_t p = 0; p < chars.size(); ++p) {
      for (std::size_t q = 0; q < chars.size(); ++q) {
        const auto tp = chars[p].table(a, e);
        const auto tq = chars[q].table(a, e);
        CycloInt sum(e);
        for (int x = 0; x < a.order(); ++x) sum.add_root(tp[static_cast<std::size_t>(x)] - tq[static_cast<std::size_t>(x)]);
        CHECK(is_rational_integer(sum) == (p == q ? a.order() : 0));
      }
    }
  }
}

TEST_CASE("characters nontrivial on B") {
  const AbelianGroup z4({4});
  const auto nt = characters_nontrivial_on_B(z4, {0, 2});
  REQUIRE(nt.size() == 2);
  const auto i = CycloInt::root(4, 1);
  CHECK(nt[0].value(z4, el({1}), 4) == i);
  CHECK(nt[1].value(z4, el({1}), 4) == -i);

  const AbelianGroup z3({3});
  CHECK(characters_nontrivial_on_B(z3, {0, 1, 2}).size() == 2);

  const AbelianGroup z8({8});
  for (int s : {3, 5, 7}) {
    const auto b = subgroup_B(z8, Automorphism::power_map(z8, s));
    const int index = z8.order() / static_cast<int>(b.size());
    CHECK(static_cast<int>(characters_nontrivial_on_B(z8, b).size()) == z8.order() - index);
  }
}

TEST_CASE("atoms") {
  const AbelianGroup z4({4});
  const auto a4 = atoms(z4);
  REQUIRE(a4.size() == 3);
  CHECK(a4[0].members == IndexSet{0});
  CHECK(a4[1].members == IndexSet{1, 3});
  CHECK(a4[2].members == IndexSet{2});

  CHECK(atoms(AbelianGroup({2, 2})).size() == 4);

  const AbelianGroup z6({6});
  std::set<IndexSet> got;
  for (const auto& at : atoms(z6)) got.insert(at.members);
  CHECK(got == std::set<IndexSet>{{0}, {3}, {2, 4}, {1, 5}});

  // Partition, closed under coprime powers.
  for (const auto& factors : std::vector<std::vector<int>>{{8}, {2, 4}, {12}, {3, 3}}) {
    const AbelianGroup a(factors);
    std::vector<int> seen(static_cast<std::size_t>(a.order()), 0);
    for (const auto& at : atoms(a)) {
      for (int x : at.members) ++seen[static_cast<std::size_t>(x)];
      for (int j = 1; j < a.exponent(); ++j) {
        if (std::gcd(j, a.exponent()) == 1) CHECK(set_power(a, at.members, j) == at.members);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("boolean algebra membership") {
  const AbelianGroup z4({4});
  CHECK(in_boolean_algebra(z4, {1, 3}));
  CHECK_FALSE(in_boolean_algebra(z4, {1}));
  CHECK(in_boolean_algebra(z4, {}));
  const AbelianGroup z6({6});
  CHECK(in_boolean_algebra(z6, {2, 3, 4}));
  CHECK_FALSE(in_boolean_algebra(z6, {1, 2, 4}));
}

TEST_CASE("power closure") {
  const AbelianGroup z4({4});
  CHECK(power_closure_check(z4, {1, 3}, 3));
  const AbelianGroup z6({6});
  CHECK(power_closure_check(z6, {2, 4}, 5));
  const AbelianGroup z5({5});
  CHECK(power_closure_check(z5, {1, 2, 3, 4}, 2));
  CHECK_FALSE(power_closure_check(z5, {1}, 2));
  CHECK_THROWS_AS(power_closure_check(z6, {2, 4}, 3), PreconditionError);
}

TEST_CASE("character sums are integral exactly on the boolean algebra") {
  for (const auto& factors : std::vector<std::vector<int>>{{4}, {5}, {6}, {2, 2}, {2, 3}}) {
    const AbelianGroup a(factors);
    const auto chars = characters(a);
    for (std::uint32_t bits = 0; bits < (1U << a.order()); ++bits) {
      IndexSet s;
      for (int x = 0; x < a.order(); ++x) {
        if ((bits >> x) & 1U) s.push_back(x);
      }
      const bool integral = std::all_of(chars.begin(), chars.end(),
                                        [&](const Character& chi) { return is_rational_integer(chi_sum(a, chi, s)).has_value(); });
      CHECK(integral == in_boolean_algebra(a, s));
    }
  }
  CHECK(indices(AbelianGroup({2, 2}), {{1, 0}, {0, 1}}) == IndexSet{1, 2});
}
