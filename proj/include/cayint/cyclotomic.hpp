#pragma once

// Exact arithmetic in Z[zeta_m].
//
// Values are stored as coefficient vectors in Z[x]/(x^m - 1), so products are
// cyclic convolutions. That representation is not canonical: equality and
// integrality tests reduce modulo the m-th cyclotomic polynomial first.
// All coefficient arithmetic is overflow-checked and throws std::overflow_error.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cayint {

class CycloInt {
 public:
  /// Zero of Z[zeta_1] (= Z).
  CycloInt() : CycloInt(1) {}

  /// Zero of Z[zeta_order].
  explicit CycloInt(int order);

  /// zeta_order^t. t is reduced modulo order.
  static CycloInt root(int order, std::int64_t t);
  static CycloInt integer(int order, std::int64_t n);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  /// Adds c * zeta^t in place; the workhorse for character sums.
  void add_root(std::int64_t t, std::int64_t c = 1);

  CycloInt& operator+=(const CycloInt& rhs);
  CycloInt& operator-=(const CycloInt& rhs);
  CycloInt& operator*=(const CycloInt& rhs);
  CycloInt& operator*=(std::int64_t k);

  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator*(CycloInt a, std::int64_t k) { return a *= k; }
  friend CycloInt operator*(std::int64_t k, CycloInt a) { return a *= k; }
  CycloInt operator-() const;

  /// Complex conjugation: zeta^t -> zeta^{-t}.
  CycloInt conj() const;

  /// Multiplication by zeta^t (cyclic shift of coefficients).
  CycloInt times_root(std::int64_t t) const;

  /// Embeds into Z[zeta_target] via zeta_m = zeta_target^{target/m}.
  CycloInt lift(int target) const;

  /// Canonical representative: remainder modulo Phi_m, length phi(m).
  std::vector<std::int64_t> reduced() const;

  bool is_zero() const;
  friend bool operator==(const CycloInt& a, const CycloInt& b);

  std::complex<double> numeric() const;

  /// Debug rendering "c0 + c1*z^1 + ... (order m)". Not a stable format.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

CycloInt cyclo_add(const CycloInt& x, const CycloInt& y);
CycloInt cyclo_mul(const CycloInt& x, const CycloInt& y);
CycloInt cyclo_neg(const CycloInt& x);
CycloInt cyclo_conj(const CycloInt& x);

/// Phi_m as coefficients c0..c_deg (ascending powers). Cached per thread.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

/// Euler's totient, via the degree of Phi_m.
int totient(int m);

/// The rational integer n with x = n, if x is one.
std::optional<std::int64_t> is_rational_integer(const CycloInt& x);

/// The root r >= 0 with x = r^2, if x is a non-negative perfect-square integer.
std::optional<std::int64_t> perfect_square_integer(const CycloInt& x);

/// floor(sqrt(n)) for n >= 0, by bisection.
std::int64_t integer_sqrt(std::int64_t n);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace cayint
