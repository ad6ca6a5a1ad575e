#pragma once

// Closed-form integrality criteria for Cay(G, S).
//
// With S \ T = S1 u xS2 and T = T1 u xT2, Cay(G, S) is integral iff
//   (1) rho(S1) + rho(x)rho(S2) - 2Im rho(T1) - 2Im(rho(x)rho(T2)) is in Z for
//       every one-dimensional rho, and
//   (2) for every character pi of A nontrivial on B, delta(pi) is in Z and
//       delta(pi)^2 - 4 epsilon(pi) is a perfect square,
// where
//   alpha = pi(T1) - pi(T1^-1)
//   beta  = pi(y f(T2)) - pi(T2^-1)
//   gamma = pi(f(T1)) - pi(f(T1^-1))
//   delta = pi(f(S1)) + pi(S1) + i(alpha + gamma)
//   eps   = pi(S1)pi(f(S1)) - pi(S2)pi(S2^-1)
//           + i(pi(S1)gamma + pi(f(S1))alpha - beta pi(S2) + conj(beta) pi(S2^-1))
//           - alpha gamma - beta conj(beta).
// Everything is evaluated exactly in Z[zeta_m]; 2Im(z) is taken as -i(z - conj z).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayint/abelian.hpp"
#include "cayint/cyclotomic.hpp"
#include "cayint/extension.hpp"
#include "cayint/representations.hpp"

namespace cayint {

enum class Route { main, undirected, s_minus_one, dihedral_directed, dicyclic_directed };
const char* to_string(Route route);

struct Check {
  /// Clause of the criterion, e.g. "1", "2", "3", "a", "b".
  std::string condition;
  /// Rep label for clauses over one-dimensional reps of G, else an index into characters(A).
  int subject = -1;
  /// Named exact quantities that were tested.
  std::vector<std::pair<std::string, CycloInt>> values;
  /// The integer (or square root) found when the test passes.
  std::optional<std::int64_t> witness;
  bool ok = false;
};

struct CriterionTrace {
  Route route = Route::main;
  std::vector<Check> condition1;
  std::vector<Check> condition2;
  /// Conditions on sets rather than characters (e.g. S1 in B(A)).
  std::vector<std::pair<std::string, bool>> set_conditions;
  bool overall = false;

  /// First failing check, if any.
  const Check* witness() const;
};

struct GreekLetters {
  CycloInt alpha, beta, gamma, delta, epsilon;
};

/// Per-group data shared by all criteria evaluations: representations,
/// character tables over Z[zeta_m], and the {pi, pi o f} pairing.
class CriteriaContext {
 public:
  explicit CriteriaContext(const ExtGroup& group);
  CriteriaContext(const ExtGroup& group, std::vector<Rep> reps);

  const ExtGroup& group() const noexcept { return *group_; }
  const std::vector<Rep>& reps() const noexcept { return reps_; }
  const std::vector<Character>& chars() const noexcept { return chars_; }
  /// zeta_m exponents of characters()[c] per A index.
  const std::vector<int>& table(int c) const { return tables_[static_cast<std::size_t>(c)]; }
  /// Characters nontrivial on B.
  const std::vector<int>& nontrivial_on_B() const noexcept { return nontrivial_; }
  /// Index of pi o f.
  int partner(int c) const { return partner_[static_cast<std::size_t>(c)]; }
  bool in_kernel(int c, int a) const { return table(c)[static_cast<std::size_t>(a)] == 0; }

  /// pi(X) for X a subset of A.
  CycloInt sum(int c, const IndexSet& xs) const;
  CycloInt sum_inverse(int c, const IndexSet& xs) const;
  CycloInt sum_twisted(int c, const IndexSet& xs) const;
  CycloInt sum_twisted_inverse(int c, const IndexSet& xs) const;
  CycloInt sum_y_twisted(int c, const IndexSet& xs) const;

  CycloInt i() const { return CycloInt::root(m_, m_ / 4); }
  int m() const noexcept { return m_; }

 private:
  CycloInt sum_mapped(int c, const IndexSet& xs, const std::vector<int>& map, int shift) const;

  const ExtGroup* group_;
  int m_;
  std::vector<Rep> reps_;
  std::vector<Character> chars_;
  std::vector<std::vector<int>> tables_;
  std::vector<int> nontrivial_;
  std::vector<int> partner_;
  std::vector<int> inverse_;
  std::vector<int> twist_;
  std::vector<int> twist_inverse_;
};

/// Throws PreconditionError if B lies in ker(pi).
GreekLetters greek_letters(const CriteriaContext& ctx, const ConnectionSet& cs, int character);

/// Full criterion. Condition (2) runs over one character per {pi, pi o f}
/// orbit, or over all of them when paranoid.
CriterionTrace check_main(const CriteriaContext& ctx, const ConnectionSet& cs, bool paranoid = false);
CriterionTrace check_main(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps,
                          bool paranoid = false);

/// T = {} only.
CriterionTrace check_undirected(const CriteriaContext& ctx, const ConnectionSet& cs);
/// f = inversion only.
CriterionTrace check_s_minus_one(const CriteriaContext& ctx, const ConnectionSet& cs);
/// Dihedral G with antisymmetric S only.
CriterionTrace check_dihedral_directed(const CriteriaContext& ctx, const ConnectionSet& cs);
/// Dicyclic G with antisymmetric S only.
CriterionTrace check_dicyclic_directed(const CriteriaContext& ctx, const ConnectionSet& cs);

/// Undirected sets S1 u xS2 with S1, S2 unions of atoms of A, 1 not in S1,
/// f(S1) = S1 and f(S2) = y^{-1} S2. All admissible pairs when there are at
/// most `budget`, otherwise a seeded sample of `budget` distinct pairs.
std::vector<ConnectionSet> coro_simple_generator(const ExtGroup& group, std::uint64_t seed,
                                                 std::size_t budget = 1000);

/// Number of admissible (S1, S2) pairs for coro_simple_generator.
std::size_t coro_simple_space(const ExtGroup& group);

}  // namespace cayint
