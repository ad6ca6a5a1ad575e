#pragma once

// Irreducible representations of G = A u xA.
//
// One-dimensional: for each character pi of A trivial on B, two lifts with
// rho(a) = pi(a) and rho(x) = +/- sqrt(pi(y)).
// Two-dimensional: for each orbit {psi, psi o f} of characters nontrivial on
// B, the representation
//     R(a)  = [[psi(a), 0], [0, psi(f(a))]]
//     R(xa) = [[0, psi(y f(a))], [psi(a), 0]].

#include <string>
#include <vector>

#include "cayint/abelian.hpp"
#include "cayint/cyclotomic.hpp"
#include "cayint/extension.hpp"

namespace cayint {

/// Row-major dim x dim matrix over Z[zeta_m].
using CycloMatrix = std::vector<CycloInt>;

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b, int dim);

struct Rep {
  int label = 0;
  int dim = 1;
  int m = 4;
  int base_order = 0;
  /// pi (trivial on B) when dim = 1, psi when dim = 2.
  Character character;
  /// zeta_m exponent of pi(a), per A index.
  std::vector<int> pi;
  /// zeta_m exponent of pi(f(a)), per A index. Two-dimensional only.
  std::vector<int> pi_f;
  /// rho(x) = zeta_m^x_exponent. One-dimensional only.
  int x_exponent = 0;
  /// zeta_m exponent of pi(y).
  int y_exponent = 0;

  /// rho(g) for a dense element index g.
  CycloMatrix matrix(int g) const;
  /// zeta_m exponent of rho(g). One-dimensional only.
  int scalar_exponent(int g) const;
};

enum class SqrtBranch { standard, flipped };

/// Exactly 2(A:B) one-dimensional reps (all "+" lifts, then all "-" lifts, in
/// character order) followed by (|A| - (A:B))/2 two-dimensional reps, one per
/// {psi, psi o f} orbit, represented by the lexicographically smaller psi.
std::vector<Rep> classify(const ExtGroup& group, SqrtBranch branch = SqrtBranch::standard);

/// Exponent s with zeta_m^s squared = zeta_m^t: t/2 if t is even, else (t+m)/2.
int sqrt_exponent(int t, int m);

/// Square root of a root of unity v = zeta_m^t on the fixed branch above.
/// Throws StructuralError if v is not a root of unity in Z[zeta_m].
CycloInt sqrt_of_unity(const CycloInt& v);

/// Trace of rho(g) for every g.
std::vector<CycloInt> character_of(const Rep& rep, int group_order);

struct InnerProduct {
  /// (1/|G|) sum f1(g) conj(f2(g)), valid when exact is true.
  CycloInt value;
  /// Reduced sum before division; kept as the residue when division fails.
  CycloInt sum;
  bool exact = false;
};

InnerProduct inner_product(const std::vector<CycloInt>& chi1, const std::vector<CycloInt>& chi2);

/// pi2 = pi1 or pi2 = pi1 o f, compared pointwise.
bool equivalent_characters(const AbelianGroup& group, const Automorphism& f, const Character& pi1,
                           const Character& pi2);

/// Index in characters(A) of pi o f.
int compose_with_twist(const AbelianGroup& group, const Automorphism& f, const Character& pi);

/// Conjugacy classes by brute force, ordered by smallest member.
std::vector<std::vector<int>> conjugacy_classes(const ExtGroup& group);

}  // namespace cayint
