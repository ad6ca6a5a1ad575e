// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cayint/census.hpp"
#include "cayint/criteria.hpp"
#include "cayint/representations.hpp"
#include "cayint/spectrum.hpp"
#include "oracle.hpp"

using namespace cayint;

namespace {

// Collects the first few failure messages of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  std::string report() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) {
      out << ", " << failures_ << " failed:";
      for (const auto& m : messages_) out << " [" << m << "]";
    }
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> messages_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool antisymmetric(const ExtGroup& g, Mask mask) { return (inverse_mask(g, mask) & mask) == 0; }

Mask full_range(const ExtGroup& g) { return Mask{1} << (g.order() - 1); }

std::string mask_text(const ExtGroup& g, Mask mask) {
  std::string out = "{";
  for (int e = 1; e < g.order(); ++e) {
    if (!((mask >> (e - 1)) & 1U)) continue;
    if (out.size() > 1) out += ",";
    out += g.label(e);
  }
  return out + "}";
}

// AC1: directed sets over the dicyclic group of order 8.
void ac1(Tally& t) {
  const auto g = parse_group("dicyclic(4;2)");
  const auto plan = enumerate_masks(g, MaskKind::directed, 1 << 20);
  t.expect(plan.masks.size() == 27, "27 admissible masks, got " + std::to_string(plan.masks.size()));

  std::set<Mask> expected;
  for (const char* s : {"a", "a^3", "", "x", "x*a", "x*a^2", "x*a^3"}) expected.insert(mask_of(g, parse_set(g, s)));

  const auto result = run_census(g, plan.masks);
  std::set<Mask> integral;
  for (const auto& r : result.records) {
    t.expect(r.agree(), "routes disagree on " + mask_text(g, r.mask));
    t.expect(r.verdict_exact == oracle::integral(g, r.mask), "oracle disagrees on " + mask_text(g, r.mask));
    if (r.verdict_criteria) integral.insert(r.mask);
  }
  t.expect(integral == expected, "integral sets differ from the seven expected ones");
}

// AC2: directed sets over dihedral groups of order 8 and 2p.
void ac2(Tally& t) {
  const auto d8 = parse_group("dihedral(8)");
  const auto plan8 = enumerate_masks(d8, MaskKind::directed, 1 << 20);
  t.expect(plan8.masks.size() == 3, "dihedral(8) has 3 directed masks");
  for (const auto& r : run_census(d8, plan8.masks).records) {
    t.expect(r.verdict_criteria && r.agree(), "dihedral(8) " + mask_text(d8, r.mask) + " not integral");
    t.expect(oracle::integral(d8, r.mask), "oracle: dihedral(8) " + mask_text(d8, r.mask));
  }

  for (const char* spec : {"dihedral(6)", "dihedral(10)", "dihedral(14)"}) {
    const auto g = parse_group(spec);
    const CriteriaContext ctx(g);
    // Antisymmetric subsets of A\{1}: the bits below |A|.
    const Mask a_bits = Mask{1} << (g.base().order() - 1);
    long seen = 0;
    for (Mask mask = 1; mask < a_bits; ++mask) {
      if (!antisymmetric(g, mask)) continue;
      ++seen;
      const auto cs = split_connection_set(g, mask);
      t.expect(!check_main(ctx, cs, true).overall, std::string(spec) + " " + mask_text(g, mask) + " integral");
      t.expect(!check_dihedral_directed(ctx, cs).overall, std::string(spec) + " corollary on " + mask_text(g, mask));
      t.expect(!oracle::integral(g, mask), std::string("oracle: ") + spec + " " + mask_text(g, mask));
    }
    // Every nonempty directed mask over the whole group, through the census.
    const auto plan = enumerate_masks(g, MaskKind::directed, 1 << 20);
    for (const auto& r : run_census(g, plan.masks).records) {
      t.expect(r.agree(), std::string(spec) + " routes disagree on " + mask_text(g, r.mask));
      t.expect(r.mask == 0 || !r.verdict_exact, std::string(spec) + " " + mask_text(g, r.mask) + " integral");
    }
    // Each pair {a, a^-1} contributes a, a^-1 or neither.
    long expected = 1;
    for (int k = 0; k < (g.base().order() - 1) / 2; ++k) expected *= 3;
    t.expect(seen == expected - 1, std::string(spec) + " antisymmetric count");
  }
}

const std::vector<std::string> kCatalog = {"dihedral(6)",   "dihedral(8)",       "dihedral(10)",    "dihedral(12)",
                                           "dicyclic(4;2)", "dicyclic(2x4;0,2)", "semidihedral(8)", "modular(8)"};

// AC3: criteria, exact spectrum and numeric spectrum agree on every mask.
void ac3(Tally& t, int workers) {
  t.expect(default_catalog() == kCatalog, "default catalog differs from the acceptance catalog");
  std::mt19937_64 rng(2024);
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const auto plan = enumerate_masks(g, MaskKind::all, Mask{1} << 15, 1, 10000);
    const bool exhaustive = full_range(g) <= (Mask{1} << 15);
    t.expect(plan.sampled != exhaustive && plan.masks.size() == (exhaustive ? full_range(g) : 10000),
             spec + " plan size");
    CensusOptions opt;
    opt.workers = workers;
    const auto result = run_census(g, plan.masks, opt);
    t.expect(result.disagreements.empty(), spec + ": " + std::to_string(result.disagreements.size()) + " disagreements");
    // Spot checks against the nullity oracle.
    for (int k = 0; k < 150; ++k) {
      const auto& r = result.records[rng() % result.records.size()];
      t.expect(r.verdict_exact == oracle::integral(g, r.mask), spec + " oracle on " + mask_text(g, r.mask));
    }
  }
}

// AC4: representation theory of every catalog group.
void ac4(Tally& t) {
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const auto reps = classify(g);
    const int index = g.index_B();
    t.expect(static_cast<int>(reps.size()) == 2 * index + (g.base().order() - index) / 2, spec + " rep count");
    int squares = 0;
    for (const auto& r : reps) squares += r.dim * r.dim;
    t.expect(squares == g.order(), spec + " sum of squared dimensions");

    for (const auto& r : reps) {
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          t.expect(matmul(r.matrix(a), r.matrix(b), r.dim) == r.matrix(g.mul(a, b)),
                   spec + " homomorphism, rep " + std::to_string(r.label));
        }
      }
    }

    std::vector<std::vector<CycloInt>> chars;
    for (const auto& r : reps) chars.push_back(character_of(r, g.order()));
    for (std::size_t p = 0; p < chars.size(); ++p) {
      for (std::size_t q = 0; q < chars.size(); ++q) {
        const auto ip = inner_product(chars[p], chars[q]);
        t.expect(ip.exact && is_rational_integer(ip.value) == (p == q ? 1 : 0),
                 spec + " orthonormality " + std::to_string(p) + "," + std::to_string(q));
      }
    }
    // Norm of the two-dimensional characters, straight from the definition.
    for (std::size_t p = 0; p < reps.size(); ++p) {
      if (reps[p].dim != 2) continue;
      CycloInt norm(g.working_order());
      for (const auto& v : chars[p]) norm += v * v.conj();
      t.expect(is_rational_integer(norm) == g.order(), spec + " irreducibility of rep " + std::to_string(p));
    }

    const auto& a = g.base();
    const int e = a.exponent();
    for (const auto& pi : characters_nontrivial_on_B(a, g.B())) {
      const auto table = pi.table(a, e);
      std::complex<double> sum = 0;
      CycloInt exact(e);
      for (int x = 0; x < a.order(); ++x) {
        const int t_exp = table[static_cast<std::size_t>(a.mul(g.twist().apply(x), a.inverse(x)))];
        exact.add_root(t_exp);
        sum += std::polar(1.0, 2 * std::numbers::pi * t_exp / e);
      }
      t.expect(exact.is_zero() && std::abs(sum) < 1e-9, spec + " vanishing sum for " + pi.to_string());
    }
  }
}

// AC5: corollaries agree with the main criterion where they apply; the
// generator of integral undirected sets yields numerically integral graphs.
void ac5(Tally& t, std::string& note) {
  std::ostringstream eligible;
  for (const auto& spec : kCatalog) {
    const auto g = parse_group(spec);
    const CriteriaContext ctx(g);
    for (Mask mask = 0; mask < full_range(g); ++mask) {
      const auto cs = split_connection_set(g, mask);
      const bool verdict = check_main(ctx, cs, true).overall;
      const std::string where = spec + " " + mask_text(g, mask);
      if (cs.undirected()) t.expect(check_undirected(ctx, cs).overall == verdict, "undirected corollary, " + where);
      if (g.twist().is_inversion()) t.expect(check_s_minus_one(ctx, cs).overall == verdict, "inversion corollary, " + where);
      if (antisymmetric(g, mask)) {
        if (g.is_dihedral()) t.expect(check_dihedral_directed(ctx, cs).overall == verdict, "dihedral corollary, " + where);
        if (g.is_dicyclic()) t.expect(check_dicyclic_directed(ctx, cs).overall == verdict, "dicyclic corollary, " + where);
      }
    }

    // Groups with fewer than 100 admissible pairs emit (and check) all of them.
    const std::size_t space = coro_simple_space(g);
    const auto sets = coro_simple_generator(g, 5, 1000);
    t.expect(sets.size() == std::min<std::size_t>(space, 1000), spec + " generator size");
    if (space >= 100) {
      t.expect(sets.size() >= 100, spec + " generator emitted fewer than 100 sets");
      eligible << (eligible.tellp() > 0 ? ", " : "") << spec << ":" << sets.size();
    }
    for (const auto& cs : sets) {
      t.expect(is_integral_numeric(numeric_spectrum(oracle::adjacency(g, cs.mask))),
               spec + " generated set " + mask_text(g, cs.mask) + " not integral");
    }
  }
  note = "generator sets per eligible group: " + eligible.str();
}

// Atoms computed from cyclic subgroups, independent of the library.
std::vector<int> atom_ids(const AbelianGroup& a) {
  std::vector<std::set<int>> cyclic(static_cast<std::size_t>(a.order()));
  for (int x = 0; x < a.order(); ++x) {
    int p = 0;
    do {
      cyclic[static_cast<std::size_t>(x)].insert(p);
      p = a.mul(p, x);
    } while (p != 0);
  }
  std::vector<int> id(static_cast<std::size_t>(a.order()), -1);
  int next = 0;
  for (int x = 0; x < a.order(); ++x) {
    if (id[static_cast<std::size_t>(x)] >= 0) continue;
    for (int z = x; z < a.order(); ++z) {
      if (cyclic[static_cast<std::size_t>(z)] == cyclic[static_cast<std::size_t>(x)]) id[static_cast<std::size_t>(z)] = next;
    }
    ++next;
  }
  return id;
}

// AC6: integral subsets of abelian groups are the unions of atoms, and are power closed.
void ac6(Tally& t) {
  const std::vector<std::vector<int>> shapes = {{}, {2}, {3}, {4}, {2, 2}, {5}, {6}, {2, 3}, {7}, {8}, {2, 4}, {2, 2, 2}};
  for (const auto& factors : shapes) {
    const AbelianGroup a(factors);
    std::string name = "Z";
    for (int n : factors) name += "/" + std::to_string(n);
    const int n = a.order();
    const auto ids = atom_ids(a);
    const auto chars = characters(a);

    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
      IndexSet s;
      for (int x = 0; x < n; ++x) {
        if ((bits >> x) & 1U) s.push_back(x);
      }
      bool union_of_atoms = true;
      for (int x = 0; x < n; ++x) {
        for (int z = 0; z < n; ++z) {
          if (ids[static_cast<std::size_t>(x)] == ids[static_cast<std::size_t>(z)] &&
              ((bits >> x) & 1U) != ((bits >> z) & 1U)) {
            union_of_atoms = false;
          }
        }
      }
      // Integral: every character sum is a rational integer, evaluated in floating point.
      bool integral = true;
      for (const auto& chi : chars) {
        std::complex<double> sum = 0;
        for (int x : s) {
          const auto el = a.element(x);
          double phase = 0;
          for (std::size_t k = 0; k < factors.size(); ++k) {
            phase += static_cast<double>(chi.exponents[k] * el.coords[k]) / factors[k];
          }
          sum += std::polar(1.0, 2 * std::numbers::pi * phase);
        }
        if (std::abs(sum.imag()) > 1e-9 || std::abs(sum.real() - std::round(sum.real())) > 1e-9) integral = false;
      }
      const std::string where = name + " subset " + std::to_string(bits);
      t.expect(integral == union_of_atoms, "integral iff union of atoms fails for " + where);
      t.expect(in_boolean_algebra(a, s) == union_of_atoms, "in_boolean_algebra on " + where);

      bool closed = true;
      for (int j = 1; j < std::max(a.exponent(), 2); ++j) {
        if (std::gcd(j, a.exponent()) != 1) continue;
        const bool lib = power_closure_check(a, s, j);
        t.expect(lib == (set_power(a, s, j) == s), "power_closure_check on " + where);
        closed = closed && lib;
        if (union_of_atoms) t.expect(lib, "power closure with j=" + std::to_string(j) + " on " + where);
      }
      // Conversely, closure under all coprime powers forces a union of atoms.
      t.expect(closed == union_of_atoms, "power closure characterizes " + where);
    }
  }
}

CycloInt random_cyclo(std::mt19937_64& rng, int m, int span = 3) {
  CycloInt x(m);
  for (int k = 0; k < m; ++k) x.add_root(k, static_cast<std::int64_t>(rng() % (2 * span + 1)) - span);
  return x;
}

std::complex<double> evaluate(const CycloInt& x) {
  std::complex<double> out = 0;
  const auto c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out += static_cast<double>(c[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / x.order());
  }
  return out;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// AC7: cyclotomic arithmetic.
void ac7(Tally& t) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 64);
    const auto a = random_cyclo(rng, m);
    const auto b = random_cyclo(rng, m);
    const auto c = random_cyclo(rng, m);
    const auto zero = CycloInt(m);
    const auto one = CycloInt::integer(m, 1);
    const std::string where = "trial " + std::to_string(trial) + " m=" + std::to_string(m);
    t.expect((a + b) + c == a + (b + c), "additive associativity, " + where);
    t.expect(a + b == b + a, "additive commutativity, " + where);
    t.expect(a + zero == a && a * one == a, "identities, " + where);
    t.expect((a + (-a)).is_zero(), "additive inverse, " + where);
    t.expect((a * b) * c == a * (b * c), "multiplicative associativity, " + where);
    t.expect(a * b == b * a, "multiplicative commutativity, " + where);
    t.expect(a * (b + c) == a * b + a * c, "distributivity, " + where);
    t.expect((a * b).conj() == a.conj() * b.conj(), "conjugation, " + where);

    const auto ab = a * b;
    t.expect(std::abs(a.numeric() - evaluate(a)) < 1e-9, "numeric value, " + where);
    t.expect(std::abs(ab.numeric() - evaluate(a) * evaluate(b)) < 1e-9 * std::max(1.0, std::abs(ab.numeric())),
             "numeric product, " + where);
    t.expect(std::abs(a.conj().numeric() - std::conj(evaluate(a))) < 1e-9, "numeric conjugate, " + where);
    if (const auto n = is_rational_integer(a + a.conj())) {
      t.expect(std::abs((a + a.conj()).numeric() - std::complex<double>(static_cast<double>(*n), 0)) < 1e-9,
               "integer value, " + where);
    }
  }

  for (int m = 1; m <= 64; ++m) {
    std::vector<std::int64_t> prod{1};
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<std::int64_t> expected(static_cast<std::size_t>(m) + 1, 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(m)] = 1;
    t.expect(prod == expected, "x^m - 1 factorization, m=" + std::to_string(m));
    t.expect(static_cast<int>(cyclotomic_polynomial(m).size()) == totient(m) + 1, "degree of Phi_" + std::to_string(m));
  }
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<std::string(Tally&)> run;
};

}  // namespace

int main() {
  const unsigned hw = std::thread::hardware_concurrency();
  std::vector<Criterion> criteria = {
      {"AC1 dicyclic(4;2) directed census", 1.0, [](Tally& t) { ac1(t); return std::string(); }},
      {"AC2 dihedral directed sets", 5.0, [](Tally& t) { ac2(t); return std::string(); }},
      {"AC3 grand equivalence, 1 worker", 300.0, [](Tally& t) { ac3(t, 1); return std::string(); }},
      {"AC4 representation suite", 10.0, [](Tally& t) { ac4(t); return std::string(); }},
      {"AC5 corollaries and generator", 60.0, [](Tally& t) { std::string note; ac5(t, note); return note; }},
      {"AC6 Boolean algebra suite", 10.0, [](Tally& t) { ac6(t); return std::string(); }},
      {"AC7 cyclotomic unit suite", 30.0, [](Tally& t) { ac7(t); return std::string(); }},
  };
  if (hw >= 8) {
    criteria.insert(criteria.begin() + 3, Criterion{"AC3 grand equivalence, 8 workers", 60.0,
                                                    [](Tally& t) { ac3(t, 8); return std::string(); }});
  }

  bool all = true;
  for (const auto& c : criteria) {
    Tally tally;
    std::string note;
    const auto start = Clock::now();
    try {
      note = c.run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    const bool pass = tally.ok() && elapsed < c.limit_s;
    all = all && pass;
    std::printf("%s %s: %.2f s (limit %.0f s), %s%s%s\n", pass ? "PASS" : "FAIL", c.name, elapsed, c.limit_s,
                tally.report().c_str(), note.empty() ? "" : "; ", note.c_str());
    std::fflush(stdout);
  }
  if (hw < 8) {
    std::printf("note: %u hardware thread(s); the 8-worker AC3 limit was not measured\n", hw);
  }
  return all ? 0 : 1;
}
