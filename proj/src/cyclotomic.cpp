#include "cayint/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cayint/errors.hpp"

namespace cayint {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow (add)");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow (sub)");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow (mul)");
  return r;
}

}  // namespace checked

namespace {

std::size_t wrap(std::int64_t t, int m) {
  auto r = t % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

void require_same_order(const CycloInt& a, const CycloInt& b) {
  if (a.order() != b.order()) {
    throw StructuralError("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }
}

// Exact division of a by monic b; throws if there is a remainder.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw StructuralError("polynomial division: dividend degree too small");
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] = checked::sub(a[i - db + k], checked::mul(c, b[k]));
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw StructuralError("polynomial division left a remainder");
  }
  return q;
}

std::vector<std::int64_t> compute_cyclotomic(int m) {
  // x^m - 1
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  if (m < 1) throw PreconditionError("cyclotomic_polynomial: m must be >= 1");
  thread_local std::unordered_map<int, std::vector<std::int64_t>> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  auto poly = compute_cyclotomic(m);
  return cache.emplace(m, std::move(poly)).first->second;
}

int totient(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CycloInt::CycloInt(int order) {
  if (order < 1) throw StructuralError("cyclotomic order must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order), 0);
}

CycloInt CycloInt::root(int order, std::int64_t t) {
  CycloInt r(order);
  r.coeffs_[wrap(t, order)] = 1;
  return r;
}

CycloInt CycloInt::integer(int order, std::int64_t n) {
  CycloInt r(order);
  r.coeffs_[0] = n;
  return r;
}

void CycloInt::add_root(std::int64_t t, std::int64_t c) {
  auto& slot = coeffs_[wrap(t, order())];
  slot = checked::add(slot, c);
}

CycloInt& CycloInt::operator+=(const CycloInt& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& rhs) {
  require_same_order(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloInt& CycloInt::operator*=(std::int64_t k) {
  for (auto& c : coeffs_) c = checked::mul(c, k);
  return *this;
}

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  require_same_order(a, b);
  const auto m = a.coeffs_.size();
  CycloInt r(a.order());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = r.coeffs_[(i + j) % m];
      slot = checked::add(slot, checked::mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return r;
}

CycloInt CycloInt::operator-() const {
  CycloInt r(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked::sub(0, coeffs_[i]);
  return r;
}

CycloInt CycloInt::conj() const {
  const auto m = coeffs_.size();
  CycloInt r(order());
  for (std::size_t i = 0; i < m; ++i) r.coeffs_[(m - i) % m] = coeffs_[i];
  return r;
}

CycloInt CycloInt::times_root(std::int64_t t) const {
  const auto m = coeffs_.size();
  const auto shift = wrap(t, order());
  CycloInt r(order());
  for (std::size_t i = 0; i < m; ++i) r.coeffs_[(i + shift) % m] = coeffs_[i];
  return r;
}

CycloInt CycloInt::lift(int target) const {
  if (target < 1 || target % order() != 0) {
    throw StructuralError("cannot lift order " + std::to_string(order()) + " to " + std::to_string(target));
  }
  const int step = target / order();
  CycloInt r(target);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return r;
}

std::vector<std::int64_t> CycloInt::reduced() const {
  const auto& phi = cyclotomic_polynomial(order());
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> p = coeffs_;
  for (std::size_t i = p.size(); i-- > deg;) {
    const std::int64_t c = p[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) p[i - deg + k] = checked::sub(p[i - deg + k], checked::mul(c, phi[k]));
  }
  p.resize(deg);
  return p;
}

bool CycloInt::is_zero() const {
  for (auto c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

bool operator==(const CycloInt& a, const CycloInt& b) { return (a - b).is_zero(); }

std::complex<double> CycloInt::numeric() const {
  std::complex<double> z{0.0, 0.0};
  const double m = static_cast<double>(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    z += static_cast<double>(coeffs_[i]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / m);
  }
  return z;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << 0;
  os << " (order " << order() << ")";
  return os.str();
}

CycloInt cyclo_add(const CycloInt& x, const CycloInt& y) { return x + y; }
CycloInt cyclo_mul(const CycloInt& x, const CycloInt& y) { return x * y; }
CycloInt cyclo_neg(const CycloInt& x) { return -x; }
CycloInt cyclo_conj(const CycloInt& x) { return x.conj(); }

std::optional<std::int64_t> is_rational_integer(const CycloInt& x) {
  const auto r = x.reduced();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

std::int64_t integer_sqrt(std::int64_t n) {
  if (n < 0) throw PreconditionError("integer_sqrt of a negative number");
  std::int64_t lo = 0;
  std::int64_t hi = std::min<std::int64_t>(n, 3037000499LL) + 1;  // floor(sqrt(INT64_MAX)) + 1
  // invariant: lo^2 <= n < hi^2
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<std::int64_t> perfect_square_integer(const CycloInt& x) {
  const auto n = is_rational_integer(x);
  if (!n || *n < 0) return std::nullopt;
  const auto r = integer_sqrt(*n);
  if (r * r != *n) return std::nullopt;
  return r;
}

}  // namespace cayint
