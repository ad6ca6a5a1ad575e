#include "cayint/criteria.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "cayint/errors.hpp"

namespace cayint {

const char* to_string(Route route) {
  switch (route) {
    case Route::main:
      return "main";
    case Route::undirected:
      return "undirected";
    case Route::s_minus_one:
      return "s=-1";
    case Route::dihedral_directed:
      return "dihedral-directed";
    case Route::dicyclic_directed:
      return "dicyclic-directed";
  }
  return "?";
}

const Check* CriterionTrace::witness() const {
  for (const auto* list : {&condition1, &condition2}) {
    for (const auto& c : *list) {
      if (!c.ok) return &c;
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

CriteriaContext::CriteriaContext(const ExtGroup& group) : CriteriaContext(group, classify(group)) {}

CriteriaContext::CriteriaContext(const ExtGroup& group, std::vector<Rep> reps)
    : group_(&group), m_(group.working_order()), reps_(std::move(reps)) {
  const auto& A = group.base();
  const auto& f = group.twist();
  chars_ = characters(A);
  for (const auto& chi : chars_) tables_.push_back(chi.table(A, m_));
  for (std::size_t c = 0; c < chars_.size(); ++c) {
    partner_.push_back(compose_with_twist(A, f, chars_[c]));
    const bool nontrivial = std::any_of(group.B().begin(), group.B().end(),
                                        [&](int b) { return tables_[c][static_cast<std::size_t>(b)] != 0; });
    if (nontrivial) nontrivial_.push_back(static_cast<int>(c));
  }
  for (int a = 0; a < A.order(); ++a) {
    inverse_.push_back(A.inverse(a));
    twist_.push_back(f.apply(a));
    twist_inverse_.push_back(f.apply(A.inverse(a)));
  }
}

CycloInt CriteriaContext::sum_mapped(int c, const IndexSet& xs, const std::vector<int>& map, int shift) const {
  const auto& t = table(c);
  CycloInt s(m_);
  for (int x : xs) s.add_root(t[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] + shift);
  return s;
}

CycloInt CriteriaContext::sum(int c, const IndexSet& xs) const {
  const auto& t = table(c);
  CycloInt s(m_);
  for (int x : xs) s.add_root(t[static_cast<std::size_t>(x)]);
  return s;
}

CycloInt CriteriaContext::sum_inverse(int c, const IndexSet& xs) const { return sum_mapped(c, xs, inverse_, 0); }

CycloInt CriteriaContext::sum_twisted(int c, const IndexSet& xs) const { return sum_mapped(c, xs, twist_, 0); }

CycloInt CriteriaContext::sum_twisted_inverse(int c, const IndexSet& xs) const {
  return sum_mapped(c, xs, twist_inverse_, 0);
}

CycloInt CriteriaContext::sum_y_twisted(int c, const IndexSet& xs) const {
  return sum_mapped(c, xs, twist_, table(c)[static_cast<std::size_t>(group_->y_index())]);
}

// ---------------------------------------------------------------------------

GreekLetters greek_letters(const CriteriaContext& ctx, const ConnectionSet& cs, int c) {
  const auto& nt = ctx.nontrivial_on_B();
  if (!std::binary_search(nt.begin(), nt.end(), c)) {
    throw PreconditionError("greek_letters: B lies in the kernel of character " + ctx.chars()[static_cast<std::size_t>(c)].to_string());
  }
  const CycloInt i = ctx.i();
  const CycloInt pi_s1 = ctx.sum(c, cs.S1);
  const CycloInt pi_fs1 = ctx.sum_twisted(c, cs.S1);
  const CycloInt pi_s2 = ctx.sum(c, cs.S2);
  const CycloInt pi_s2_inv = ctx.sum_inverse(c, cs.S2);

  GreekLetters g;
  g.alpha = ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1);
  g.beta = ctx.sum_y_twisted(c, cs.T2) - ctx.sum_inverse(c, cs.T2);
  g.gamma = ctx.sum_twisted(c, cs.T1) - ctx.sum_twisted_inverse(c, cs.T1);
  g.delta = pi_fs1 + pi_s1 + i * (g.alpha + g.gamma);
  const CycloInt beta_bar = g.beta.conj();
  g.epsilon = pi_s1 * pi_fs1 - pi_s2 * pi_s2_inv +
              i * (pi_s1 * g.gamma + pi_fs1 * g.alpha - g.beta * pi_s2 + beta_bar * pi_s2_inv) -
              g.alpha * g.gamma - g.beta * beta_bar;
  return g;
}

namespace {

Check integer_check(std::string condition, int subject, std::string name, CycloInt value) {
  Check c;
  c.condition = std::move(condition);
  c.subject = subject;
  c.witness = is_rational_integer(value);
  c.ok = c.witness.has_value();
  c.values.emplace_back(std::move(name), std::move(value));
  return c;
}

Check square_check(std::string condition, int subject, std::string name, CycloInt value) {
  Check c;
  c.condition = std::move(condition);
  c.subject = subject;
  c.witness = perfect_square_integer(value);
  c.ok = c.witness.has_value();
  c.values.emplace_back(std::move(name), std::move(value));
  return c;
}

// i(z - conj z) = -2 Im z
CycloInt minus_two_im(const CycloInt& z, const CycloInt& i) { return i * (z - z.conj()); }

void finish(CriterionTrace& trace) {
  trace.overall = true;
  for (const auto* list : {&trace.condition1, &trace.condition2}) {
    for (const auto& c : *list) trace.overall = trace.overall && c.ok;
  }
  for (const auto& [name, ok] : trace.set_conditions) trace.overall = trace.overall && ok;
}

// Characters pi with A^2 not in ker(pi), split by whether y is in ker(pi).
// For f = inversion, B = A^2, so these are exactly the B-nontrivial ones.
std::pair<std::vector<int>, std::vector<int>> split_by_y(const CriteriaContext& ctx) {
  std::vector<int> y_in, y_out;
  for (int c : ctx.nontrivial_on_B()) {
    (ctx.in_kernel(c, ctx.group().y_index()) ? y_in : y_out).push_back(c);
  }
  return {y_in, y_out};
}

}  // namespace

CriterionTrace check_main(const CriteriaContext& ctx, const ConnectionSet& cs, bool paranoid) {
  CriterionTrace trace;
  trace.route = Route::main;
  const CycloInt i = ctx.i();
  const int m = ctx.m();

  for (const auto& rep : ctx.reps()) {
    if (rep.dim != 1) continue;
    CycloInt sym(m), z1(m), z2(m);
    for (int a : cs.S1) sym.add_root(rep.pi[static_cast<std::size_t>(a)]);
    for (int a : cs.S2) sym.add_root(rep.x_exponent + rep.pi[static_cast<std::size_t>(a)]);
    for (int a : cs.T1) z1.add_root(rep.pi[static_cast<std::size_t>(a)]);
    for (int a : cs.T2) z2.add_root(rep.x_exponent + rep.pi[static_cast<std::size_t>(a)]);
    CycloInt value = sym + minus_two_im(z1, i) + minus_two_im(z2, i);
    trace.condition1.push_back(integer_check("1", rep.label, "value", std::move(value)));
  }

  for (int c : ctx.nontrivial_on_B()) {
    if (!paranoid && ctx.partner(c) < c) continue;
    const auto g = greek_letters(ctx, cs, c);
    CycloInt disc = g.delta * g.delta - 4 * g.epsilon;
    Check check;
    check.condition = "2";
    check.subject = c;
    const auto delta_int = is_rational_integer(g.delta);
    check.witness = delta_int ? perfect_square_integer(disc) : std::nullopt;
    check.ok = delta_int && check.witness;
    check.values = {{"delta", g.delta}, {"epsilon", g.epsilon}, {"discriminant", std::move(disc)}};
    trace.condition2.push_back(std::move(check));
  }
  finish(trace);
  return trace;
}

CriterionTrace check_main(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps, bool paranoid) {
  return check_main(CriteriaContext(group, reps), cs, paranoid);
}

CriterionTrace check_undirected(const CriteriaContext& ctx, const ConnectionSet& cs) {
  if (!cs.undirected()) throw PreconditionError("check_undirected: S is not symmetric (T is non-empty)");
  CriterionTrace trace;
  trace.route = Route::undirected;
  const int m = ctx.m();
  for (const auto& rep : ctx.reps()) {
    if (rep.dim != 1) continue;
    CycloInt value(m);
    for (int a : cs.S1) value.add_root(rep.pi[static_cast<std::size_t>(a)]);
    for (int a : cs.S2) value.add_root(rep.x_exponent + rep.pi[static_cast<std::size_t>(a)]);
    trace.condition1.push_back(integer_check("1", rep.label, "value", std::move(value)));
  }
  for (int c : ctx.nontrivial_on_B()) {
    const CycloInt pi_s1 = ctx.sum(c, cs.S1);
    const CycloInt pi_fs1 = ctx.sum_twisted(c, cs.S1);
    CycloInt trace_sum = pi_fs1 + pi_s1;
    const CycloInt diff = pi_fs1 - pi_s1;
    CycloInt disc = diff * diff + 4 * (ctx.sum(c, cs.S2) * ctx.sum_inverse(c, cs.S2));
    Check check;
    check.condition = "2";
    check.subject = c;
    const auto t = is_rational_integer(trace_sum);
    check.witness = t ? perfect_square_integer(disc) : std::nullopt;
    check.ok = t && check.witness;
    check.values = {{"delta", std::move(trace_sum)}, {"discriminant", std::move(disc)}};
    trace.condition2.push_back(std::move(check));
  }
  finish(trace);
  return trace;
}

CriterionTrace check_s_minus_one(const CriteriaContext& ctx, const ConnectionSet& cs) {
  if (!ctx.group().twist().is_inversion()) throw PreconditionError("check_s_minus_one: f is not a -> a^{-1}");
  CriterionTrace trace;
  trace.route = Route::s_minus_one;
  trace.set_conditions.emplace_back("S1 in B(A)", in_boolean_algebra(ctx.group().base(), cs.S1));
  const auto [y_in, y_out] = split_by_y(ctx);
  for (int c : y_in) {
    const CycloInt alpha = ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1);
    CycloInt v = ctx.sum(c, cs.S2) * ctx.sum_inverse(c, cs.S2) - alpha * alpha;
    trace.condition2.push_back(square_check("2", c, "value", std::move(v)));
  }
  for (int c : y_out) {
    const CycloInt alpha = ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1);
    CycloInt v = 4 * (ctx.sum(c, cs.T2) * ctx.sum_inverse(c, cs.T2)) - alpha * alpha;
    trace.condition2.push_back(square_check("3", c, "value", std::move(v)));
  }
  finish(trace);
  return trace;
}

CriterionTrace check_dihedral_directed(const CriteriaContext& ctx, const ConnectionSet& cs) {
  if (!ctx.group().is_dihedral()) throw PreconditionError("check_dihedral_directed: G is not generalized dihedral");
  if (!cs.directed()) throw PreconditionError("check_dihedral_directed: S is not antisymmetric");
  if (!cs.T2.empty()) throw StructuralError("antisymmetric set over a dihedral group meets xA");
  CriterionTrace trace;
  trace.route = Route::dihedral_directed;
  const CycloInt minus_i = ctx.i().conj();
  for (int c : ctx.nontrivial_on_B()) {
    CycloInt v = minus_i * (ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1));
    trace.condition2.push_back(integer_check("1", c, "-i(pi(S) - pi(S^-1))", std::move(v)));
  }
  finish(trace);
  return trace;
}

CriterionTrace check_dicyclic_directed(const CriteriaContext& ctx, const ConnectionSet& cs) {
  if (!ctx.group().is_dicyclic()) throw PreconditionError("check_dicyclic_directed: G is not generalized dicyclic");
  if (!cs.directed()) throw PreconditionError("check_dicyclic_directed: S is not antisymmetric");
  CriterionTrace trace;
  trace.route = Route::dicyclic_directed;
  const CycloInt minus_i = ctx.i().conj();
  const auto [y_in, y_out] = split_by_y(ctx);
  for (int c : y_in) {
    CycloInt v = minus_i * (ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1));
    trace.condition2.push_back(integer_check("a", c, "-i(pi(T1) - pi(T1^-1))", std::move(v)));
  }
  for (int c : y_out) {
    const CycloInt alpha = ctx.sum(c, cs.T1) - ctx.sum_inverse(c, cs.T1);
    CycloInt v = 4 * (ctx.sum(c, cs.T2) * ctx.sum_inverse(c, cs.T2)) - alpha * alpha;
    trace.condition2.push_back(square_check("b", c, "value", std::move(v)));
  }
  finish(trace);
  return trace;
}

// ---------------------------------------------------------------------------

namespace {

IndexSet sorted_image(const IndexSet& xs, auto&& fn) {
  IndexSet out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(fn(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Unions of atoms (skipping atom 0 = {1} when exclude_identity) that satisfy pred.
std::vector<IndexSet> atom_unions(const std::vector<Atom>& atoms, bool exclude_identity, auto&& pred,
                                  std::uint64_t seed) {
  const std::size_t first = exclude_identity ? 1 : 0;
  const std::size_t k = atoms.size() - first;
  auto build = [&](std::uint64_t bits) {
    IndexSet s;
    for (std::size_t j = 0; j < k; ++j) {
      if ((bits >> j) & 1U) {
        const auto& mem = atoms[first + j].members;
        s.insert(s.end(), mem.begin(), mem.end());
      }
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<IndexSet> out;
  constexpr std::size_t kExhaustiveAtoms = 16;
  if (k <= kExhaustiveAtoms) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
      auto s = build(bits);
      if (pred(s)) out.push_back(std::move(s));
    }
    return out;
  }
  // Too many atoms to enumerate: sample unions instead.
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  for (int tries = 0; tries < 200000 && out.size() < 4096; ++tries) {
    const std::uint64_t bits = rng() & ((std::uint64_t{1} << k) - 1);
    if (!seen.insert(bits).second) continue;
    auto s = build(bits);
    if (pred(s)) out.push_back(std::move(s));
  }
  return out;
}

std::pair<std::vector<IndexSet>, std::vector<IndexSet>> admissible_parts(const ExtGroup& group, std::uint64_t seed) {
  const auto& A = group.base();
  const auto& f = group.twist();
  const auto at = atoms(A);
  const int y_inv = A.inverse(group.y_index());
  auto s1 = atom_unions(
      at, true, [&](const IndexSet& s) { return sorted_image(s, [&](int a) { return f.apply(a); }) == s; }, seed);
  auto s2 = atom_unions(
      at, false,
      [&](const IndexSet& s) {
        return sorted_image(s, [&](int a) { return f.apply(a); }) == sorted_image(s, [&](int a) { return A.mul(y_inv, a); });
      },
      seed + 1);
  return {std::move(s1), std::move(s2)};
}

}  // namespace

std::size_t coro_simple_space(const ExtGroup& group) {
  const auto [s1, s2] = admissible_parts(group, 0);
  return s1.size() * s2.size();
}

std::vector<ConnectionSet> coro_simple_generator(const ExtGroup& group, std::uint64_t seed, std::size_t budget) {
  const auto [s1, s2] = admissible_parts(group, seed);
  const std::size_t total = s1.size() * s2.size();
  std::vector<std::size_t> picks;
  if (total <= budget) {
    for (std::size_t p = 0; p < total; ++p) picks.push_back(p);
  } else {
    std::mt19937_64 rng(seed);
    std::set<std::size_t> chosen;
    while (chosen.size() < budget) chosen.insert(static_cast<std::size_t>(rng() % total));
    picks.assign(chosen.begin(), chosen.end());
  }
  std::vector<ConnectionSet> out;
  out.reserve(picks.size());
  for (auto p : picks) {
    ConnectionSet parts;
    parts.S1 = s1[p / s2.size()];
    parts.S2 = s2[p % s2.size()];
    out.push_back(split_connection_set(group, mask_of(group, parts)));
  }
  return out;
}

}  // namespace cayint
