#pragma once

// Finite abelian groups given as Z/n_1 x ... x Z/n_k.
//
// Elements have two interchangeable carriers: an AbElement (residue vector)
// and a dense index in [0, |A|). Index order is lexicographic on coordinates,
// with the first factor most significant, so index 0 is the identity. Subsets
// of A are sorted index vectors (IndexSet).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cayint/cyclotomic.hpp"

namespace cayint {

struct AbElement {
  std::vector<int> coords;

  friend auto operator<=>(const AbElement&, const AbElement&) = default;

  /// Comma-joined coordinates, e.g. "1,2".
  std::string to_string() const;
};

using IndexSet = std::vector<int>;

class AbelianGroup {
 public:
  /// Every factor must be >= 2. An empty factor list is the trivial group.
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const noexcept { return order_; }
  int exponent() const noexcept { return exponent_; }

  AbElement identity() const { return AbElement{std::vector<int>(factors_.size(), 0)}; }
  AbElement element(int index) const;
  int index(const AbElement& a) const;

  /// Throws StructuralError unless a has rank() coordinates, each in range.
  void validate(const AbElement& a) const;

  AbElement mul(const AbElement& a, const AbElement& b) const;
  AbElement inverse(const AbElement& a) const;
  AbElement power(const AbElement& a, std::int64_t k) const;

  int mul(int a, int b) const;
  int inverse(int a) const;
  int power(int a, std::int64_t k) const;

  /// Least t >= 1 with a^t = 1.
  int element_order(const AbElement& a) const;

  /// All element indices, 0..order()-1.
  IndexSet all() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
  int exponent_ = 1;
};

AbElement ab_mul(const AbelianGroup& group, const AbElement& a, const AbElement& b);
int element_order(const AbelianGroup& group, const AbElement& a);

/// Automorphism given by the images of the standard generators e_1..e_k.
class Automorphism {
 public:
  /// Validates that the images define a bijective homomorphism.
  Automorphism(const AbelianGroup& group, std::vector<AbElement> generator_images);

  static Automorphism identity(const AbelianGroup& group);
  static Automorphism inversion(const AbelianGroup& group);
  /// a -> a^r; r must be coprime to the exponent.
  static Automorphism power_map(const AbelianGroup& group, std::int64_t r);

  AbElement apply(const AbElement& a) const;
  int apply(int index) const { return table_[static_cast<std::size_t>(index)]; }

  bool is_identity() const;
  bool is_involution() const;
  /// f(a) = a^{-1} for every a.
  bool is_inversion() const { return inversion_; }

  const std::vector<AbElement>& generator_images() const noexcept { return images_; }
  const std::vector<int>& table() const noexcept { return table_; }

 private:
  AbelianGroup group_;
  std::vector<AbElement> images_;
  std::vector<int> table_;
  bool inversion_ = false;
};

/// {f(a) a^{-1} : a in A}.
IndexSet subgroup_B(const AbelianGroup& group, const Automorphism& f);

bool is_subgroup(const AbelianGroup& group, const IndexSet& subset);

struct Quotient {
  int index = 0;
  /// Cosets in order of their smallest member; each coset sorted.
  std::vector<IndexSet> cosets;
  /// Element index -> coset number.
  std::vector<int> coset_of;

  int representative(int coset) const { return cosets[static_cast<std::size_t>(coset)].front(); }
};

/// A/B with canonical coset representatives. Throws StructuralError if B is not a subgroup.
Quotient quotient(const AbelianGroup& group, const IndexSet& subgroup);

/// pi_k(a) = exp(2 pi i sum_j k_j a_j / n_j).
struct Character {
  std::vector<int> exponents;

  friend auto operator<=>(const Character&, const Character&) = default;

  /// t with pi(a) = zeta_m^t; requires exponent(A) | m.
  std::int64_t exponent_at(const AbelianGroup& group, const AbElement& a, int m) const;
  CycloInt value(const AbelianGroup& group, const AbElement& a, int m) const;
  /// exponent_at for every element index.
  std::vector<int> table(const AbelianGroup& group, int m) const;

  std::string to_string() const;
};

/// All |A| characters, lexicographic on exponent vectors.
std::vector<Character> characters(const AbelianGroup& group);

/// Characters pi with B not inside ker(pi).
std::vector<Character> characters_nontrivial_on_B(const AbelianGroup& group, const IndexSet& subgroup);

/// Exact sum of pi over a subset, in Z[zeta_m].
CycloInt character_sum(const std::vector<int>& table, const IndexSet& subset, int m);

struct Atom {
  int representative = 0;
  IndexSet members;
};

/// Partition of A into classes {x : <x> = <g>}, ordered by smallest member.
std::vector<Atom> atoms(const AbelianGroup& group);

/// True iff the subset is a union of atoms.
bool in_boolean_algebra(const AbelianGroup& group, const IndexSet& subset);

/// S^j = {s^j : s in S}, sorted.
IndexSet set_power(const AbelianGroup& group, const IndexSet& subset, std::int64_t j);

/// Whether S^j = S. Throws PreconditionError unless gcd(j, exponent) = 1.
bool power_closure_check(const AbelianGroup& group, const IndexSet& subset, std::int64_t j);

}  // namespace cayint
