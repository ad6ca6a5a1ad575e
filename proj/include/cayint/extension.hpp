#pragma once

// G = <A, x | x^2 = y, x a x^{-1} = f(a)>, with f an involutive, non-identity
// automorphism of A fixing y. G is the disjoint union A u xA.
//
// Dense element indices: g = flag * |A| + index_A(a) for g = x^flag a. Index 0
// is the identity; the remaining indices list A\{1} then xA, each in
// lexicographic coordinate order. A connection-set mask uses bit g-1 for g.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayint/abelian.hpp"

namespace cayint {

struct ExtElement {
  int flag = 0;  // 0: a, 1: x a
  AbElement a;

  friend auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

using Mask = std::uint64_t;

class ExtGroup {
 public:
  /// Largest supported |G|; masks must fit in 64 bits.
  static constexpr int kMaxOrder = 64;

  /// Throws StructuralError unless f is an involution, f != id, f(y) = y and
  /// 3 <= |A| <= kMaxOrder / 2.
  ExtGroup(AbelianGroup base, Automorphism twist, AbElement y, std::string spec = {});

  const AbelianGroup& base() const noexcept { return base_; }
  const Automorphism& twist() const noexcept { return twist_; }
  const AbElement& y() const noexcept { return y_; }
  int y_index() const noexcept { return y_index_; }
  /// B = {f(a) a^{-1}}.
  const IndexSet& B() const noexcept { return b_; }
  /// (A:B).
  int index_B() const noexcept { return base_.order() / static_cast<int>(b_.size()); }
  /// Cyclotomic order lcm(4, 2 * exponent(A)) used for every exact value on G.
  int working_order() const noexcept { return m_; }
  int order() const noexcept { return 2 * base_.order(); }
  const std::string& spec() const noexcept { return spec_; }

  /// Generalized dihedral: f = inversion, y = 1.
  bool is_dihedral() const noexcept { return twist_.is_inversion() && y_index_ == 0; }
  /// Generalized dicyclic: f = inversion, y of order 2.
  bool is_dicyclic() const noexcept { return twist_.is_inversion() && y_index_ != 0; }

  ExtElement mul(const ExtElement& g, const ExtElement& h) const;
  ExtElement inverse(const ExtElement& g) const;

  int index(const ExtElement& g) const;
  ExtElement element(int g) const;
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g * order() + h)]; }
  int inverse(int g) const { return inv_[static_cast<std::size_t>(g)]; }

  static int flag_of(int g, int base_order) { return g / base_order; }
  int flag_of(int g) const { return g / base_.order(); }
  int a_part(int g) const { return g % base_.order(); }
  int with_x(int a) const { return base_.order() + a; }

  /// "1", "a^2", "x*a" for cyclic A; "(1,0)", "x*(0,1)" otherwise.
  std::string label(int g) const;

 private:
  AbelianGroup base_;
  Automorphism twist_;
  AbElement y_;
  int y_index_ = 0;
  IndexSet b_;
  int m_ = 4;
  std::string spec_;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

ExtElement ext_mul(const ExtGroup& group, const ExtElement& g, const ExtElement& h);
ExtElement ext_inv(const ExtGroup& group, const ExtElement& g);

/// Parses dihedral(N) | dicyclic(N1xN2...; c1,c2,...) | semidihedral(M) |
/// modular(M) | generic(N1x...; f=[r1,...] or f=[[...],...]; y=c1,...).
/// Whitespace-insensitive. Throws ParseError with the offending position.
ExtGroup parse_group(std::string_view text);

/// S = S1 u xS2 u T1 u xT2 with T the elements of S whose inverse is not in S.
struct ConnectionSet {
  Mask mask = 0;
  IndexSet S1, S2, T1, T2;  // subsets of A, by A-index

  bool undirected() const { return T1.empty() && T2.empty(); }
  bool directed() const { return S1.empty() && S2.empty(); }
};

enum class SetKind { undirected, directed, mixed };
const char* to_string(SetKind kind);
SetKind kind_of(const ConnectionSet& cs);

/// Throws PreconditionError if the mask has bits beyond G\{1}.
ConnectionSet split_connection_set(const ExtGroup& group, Mask mask);

/// Mask of a list of element indices. Throws PreconditionError on the identity.
Mask mask_of(const ExtGroup& group, const std::vector<int>& elements);
std::vector<int> elements_of(const ExtGroup& group, Mask mask);
Mask inverse_mask(const ExtGroup& group, Mask mask);
/// Mask of S1 u xS2 u T1 u xT2 (inverse of split_connection_set).
Mask mask_of(const ExtGroup& group, const ConnectionSet& parts);

/// Parses "a,a^2,x*a^3" (cyclic A) or "(1,0),x*(0,1)". Empty text is the empty set.
std::vector<int> parse_set(const ExtGroup& group, std::string_view text);

}  // namespace cayint
