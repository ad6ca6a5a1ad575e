#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayint/errors.hpp"
#include "cayint/representations.hpp"

using namespace cayint;

namespace {

const std::vector<std::string> kCatalog = {"dihedral(6)",   "dihedral(8)",       "dihedral(10)",    "dihedral(12)",
                                           "dicyclic(4;2)", "dicyclic(2x4;0,2)", "semidihedral(8)", "modular(8)",
                                           "generic(2x4; f=[[1,0],[1,3]]; y=1,0)"};

// Reduced coefficient vectors of a character, for set comparisons.
std::vector<std::vector<std::int64_t>> fingerprint(const std::vector<CycloInt>& chi) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : chi) out.push_back(v.reduced());
  return out;
}

}  // namespace

TEST_CASE("counts and dimensions") {
  struct Expect {
    const char* spec;
    int one_dim;
    int two_dim;
  };
  for (const auto& ex : {Expect{"dihedral(8)", 4, 1}, Expect{"dicyclic(4;2)", 4, 1}, Expect{"semidihedral(8)", 4, 3},
                         Expect{"dihedral(6)", 2, 1}, Expect{"modular(8)", 8, 2}}) {
    const auto g = parse_group(ex.spec);
    const auto reps = classify(g);
    const auto n1 = std::count_if(reps.begin(), reps.end(), [](const Rep& r) { return r.dim == 1; });
    CHECK_MESSAGE(n1 == ex.one_dim, ex.spec);
    CHECK_MESSAGE(static_cast<int>(reps.size()) - n1 == ex.two_dim, ex.spec);
  }
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const auto reps = classify(g);
    const int index = g.index_B();
    CHECK(static_cast<int>(reps.size()) == 2 * index + (g.base().order() - index) / 2);
    int squares = 0;
    for (const auto& r : reps) squares += r.dim * r.dim;
    CHECK(squares == g.order());
    for (std::size_t k = 0; k < reps.size(); ++k) CHECK(reps[k].label == static_cast<int>(k));
    // Dimension-one reps first.
    CHECK(std::is_sorted(reps.begin(), reps.end(), [](const Rep& a, const Rep& b) { return a.dim < b.dim; }));
  }
}

TEST_CASE("representations are homomorphisms") {
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    for (const auto& r : classify(g)) {
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          CHECK(matmul(r.matrix(a), r.matrix(b), r.dim) == r.matrix(g.mul(a, b)));
        }
      }
      if (r.dim == 1) {
        for (int b : g.B()) CHECK(r.matrix(b)[0] == CycloInt::integer(g.working_order(), 1));
      }
    }
  }
}

TEST_CASE("character values") {
  const auto d8 = parse_group("dihedral(8)");
  const auto reps = classify(d8);
  const auto& two = reps.back();
  REQUIRE(two.dim == 2);
  const auto chi = character_of(two, d8.order());
  CHECK(chi[0] == CycloInt::integer(8, 2));
  CHECK(chi[1].is_zero());
  CHECK(is_rational_integer(chi[2]) == -2);
  for (int g = 4; g < 8; ++g) CHECK(chi[static_cast<std::size_t>(g)].is_zero());
  for (const auto& r : reps) CHECK(character_of(r, 8)[0] == CycloInt::integer(8, r.dim));
}

TEST_CASE("orthonormality and the regular character") {
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const auto reps = classify(g);
    std::vector<std::vector<CycloInt>> chars;
    for (const auto& r : reps) chars.push_back(character_of(r, g.order()));
    for (std::size_t p = 0; p < chars.size(); ++p) {
      for (std::size_t q = 0; q < chars.size(); ++q) {
        const auto ip = inner_product(chars[p], chars[q]);
        REQUIRE(ip.exact);
        CHECK_MESSAGE(is_rational_integer(ip.value) == (p == q ? 1 : 0), spec << " " << p << "," << q);
      }
    }
    for (int x = 0; x < g.order(); ++x) {
      CycloInt sum(g.working_order());
      for (std::size_t k = 0; k < reps.size(); ++k) sum = sum + chars[k][static_cast<std::size_t>(x)] * reps[k].dim;
      CHECK(is_rational_integer(sum) == (x == 0 ? g.order() : 0));
    }
  }
}

TEST_CASE("inner product reports inexact division") {
  const int m = 4;
  std::vector<CycloInt> one(3, CycloInt::integer(m, 1));
  std::vector<CycloInt> zero(3, CycloInt(m));
  zero[0] = CycloInt::integer(m, 1);
  const auto ip = inner_product(one, zero);
  CHECK_FALSE(ip.exact);
  CHECK(is_rational_integer(ip.sum) == 1);
}

TEST_CASE("vanishing sum over characters nontrivial on B") {
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const auto& a = g.base();
    const int e = a.exponent();
    for (const auto& pi : characters_nontrivial_on_B(a, g.B())) {
      const auto t = pi.table(a, e);
      CycloInt sum(e);
      for (int x = 0; x < a.order(); ++x) {
        sum.add_root(t[static_cast<std::size_t>(a.mul(g.twist().apply(x), a.inverse(x)))]);
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("orbits under the twist") {
  const auto d8 = parse_group("dihedral(8)");
  const auto& a = d8.base();
  const auto nt = characters_nontrivial_on_B(a, d8.B());
  REQUIRE(nt.size() == 2);
  const auto chars = characters(a);
  CHECK(chars[static_cast<std::size_t>(compose_with_twist(a, d8.twist(), nt[0]))] == nt[1]);
  CHECK(equivalent_characters(a, d8.twist(), nt[0], nt[1]));
  CHECK(equivalent_characters(a, d8.twist(), nt[0], nt[0]));

  const auto sd = parse_group("semidihedral(8)");
  const auto sd_chars = characters(sd.base());
  CHECK_FALSE(equivalent_characters(sd.base(), sd.twist(), sd_chars[1], sd_chars[5]));
  CHECK(equivalent_characters(sd.base(), sd.twist(), sd_chars[1], sd_chars[3]));
}

TEST_CASE("square roots of unity") {
  CHECK(sqrt_of_unity(CycloInt::integer(4, 1)) == CycloInt::integer(4, 1));
  CHECK(sqrt_of_unity(CycloInt::integer(4, -1)) == CycloInt::root(4, 1));
  // Odd powers of zeta_12 have no square root in Z[zeta_12]; every power of an odd-order root does.
  for (int t = 0; t < 12; ++t) {
    const auto v = CycloInt::root(12, t);
    if (t % 2 == 1) {
      CHECK_THROWS_AS(sqrt_of_unity(v), StructuralError);
      continue;
    }
    const auto r = sqrt_of_unity(v);
    CHECK(r * r == v);
    CHECK(r == CycloInt::root(12, sqrt_exponent(t, 12)));
  }
  for (int t = 0; t < 15; ++t) {
    const auto v = CycloInt::root(15, t);
    const auto r = sqrt_of_unity(v);
    CHECK(r * r == v);
  }
  CHECK_THROWS_AS(sqrt_of_unity(CycloInt::integer(4, 2)), StructuralError);
  CHECK_THROWS_AS(sqrt_of_unity(CycloInt(4)), StructuralError);
}

TEST_CASE("flipping the square-root branch permutes the one-dimensional reps") {
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    std::set<std::vector<std::vector<std::int64_t>>> standard, flipped;
    for (const auto& r : classify(g, SqrtBranch::standard)) standard.insert(fingerprint(character_of(r, g.order())));
    for (const auto& r : classify(g, SqrtBranch::flipped)) flipped.insert(fingerprint(character_of(r, g.order())));
    CHECK(standard == flipped);
  }
}

TEST_CASE("conjugacy classes") {
  const auto d8 = parse_group("dihedral(8)");
  const auto classes = conjugacy_classes(d8);
  CHECK(classes.size() == 5);
  CHECK(classes[0] == std::vector<int>{0});
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    CHECK(conjugacy_classes(g).size() == classify(g).size());
  }
}
