#include "cayint/representations.hpp"

#include <algorithm>

#include "cayint/errors.hpp"

namespace cayint {

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b, int dim) {
  const auto d = static_cast<std::size_t>(dim);
  CycloMatrix r(d * d, CycloInt(a.front().order()));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) r[i * d + j] += a[i * d + k] * b[k * d + j];
    }
  }
  return r;
}

int Rep::scalar_exponent(int g) const {
  if (dim != 1) throw StructuralError("scalar_exponent on a two-dimensional representation");
  const int a = g % base_order;
  const int t = g >= base_order ? x_exponent + pi[static_cast<std::size_t>(a)] : pi[static_cast<std::size_t>(a)];
  return t % m;
}

CycloMatrix Rep::matrix(int g) const {
  if (dim == 1) return {CycloInt::root(m, scalar_exponent(g))};
  const auto a = static_cast<std::size_t>(g % base_order);
  CycloMatrix r(4, CycloInt(m));
  if (g < base_order) {
    r[0] = CycloInt::root(m, pi[a]);
    r[3] = CycloInt::root(m, pi_f[a]);
  } else {
    r[1] = CycloInt::root(m, y_exponent + pi_f[a]);
    r[2] = CycloInt::root(m, pi[a]);
  }
  return r;
}

int sqrt_exponent(int t, int m) {
  t %= m;
  if (t < 0) t += m;
  if (t % 2 == 0) return t / 2;
  if (m % 2 != 0) return (t + m) / 2;
  throw StructuralError("zeta_m^" + std::to_string(t) + " has no square root in Z[zeta_" + std::to_string(m) + "]");
}

CycloInt sqrt_of_unity(const CycloInt& v) {
  const int m = v.order();
  for (int t = 0; t < m; ++t) {
    if (v == CycloInt::root(m, t)) return CycloInt::root(m, sqrt_exponent(t, m));
  }
  throw StructuralError("sqrt_of_unity: " + v.to_string() + " is not a root of unity");
}

int compose_with_twist(const AbelianGroup& group, const Automorphism& f, const Character& pi) {
  const int e = group.exponent();
  std::vector<int> exps(static_cast<std::size_t>(group.rank()));
  for (int i = 0; i < group.rank(); ++i) {
    auto gen = group.identity();
    gen.coords[static_cast<std::size_t>(i)] = 1;
    const int n = group.factors()[static_cast<std::size_t>(i)];
    const auto t = pi.exponent_at(group, f.apply(gen), e);  // in units of zeta_e
    exps[static_cast<std::size_t>(i)] = static_cast<int>(t / (e / n));
  }
  return group.index(AbElement{exps});
}

bool equivalent_characters(const AbelianGroup& group, const Automorphism& f, const Character& pi1,
                           const Character& pi2) {
  const int e = group.exponent();
  const auto t1 = pi1.table(group, e);
  const auto t2 = pi2.table(group, e);
  if (t1 == t2) return true;
  for (int a = 0; a < group.order(); ++a) {
    if (t2[static_cast<std::size_t>(a)] != t1[static_cast<std::size_t>(f.apply(a))]) return false;
  }
  return true;
}

std::vector<Rep> classify(const ExtGroup& group, SqrtBranch branch) {
  const auto& A = group.base();
  const auto& f = group.twist();
  const int m = group.working_order();
  const auto chars = characters(A);

  std::vector<Rep> plus, minus, two;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    auto table = chars[c].table(A, m);
    const bool trivial_on_b = std::all_of(group.B().begin(), group.B().end(),
                                          [&](int b) { return table[static_cast<std::size_t>(b)] == 0; });
    const int y_exp = table[static_cast<std::size_t>(group.y_index())];
    if (trivial_on_b) {
      Rep rep;
      rep.dim = 1;
      rep.m = m;
      rep.base_order = A.order();
      rep.character = chars[c];
      rep.pi = std::move(table);
      rep.y_exponent = y_exp;
      const int root = sqrt_exponent(y_exp, m);
      const int other = (root + m / 2) % m;
      Rep neg = rep;
      rep.x_exponent = branch == SqrtBranch::standard ? root : other;
      neg.x_exponent = branch == SqrtBranch::standard ? other : root;
      plus.push_back(std::move(rep));
      minus.push_back(std::move(neg));
      continue;
    }
    const int partner = compose_with_twist(A, f, chars[c]);
    if (partner < static_cast<int>(c)) continue;
    Rep rep;
    rep.dim = 2;
    rep.m = m;
    rep.base_order = A.order();
    rep.character = chars[c];
    rep.pi_f.resize(table.size());
    for (int a = 0; a < A.order(); ++a) rep.pi_f[static_cast<std::size_t>(a)] = table[static_cast<std::size_t>(f.apply(a))];
    rep.pi = std::move(table);
    rep.y_exponent = y_exp;
    two.push_back(std::move(rep));
  }

  std::vector<Rep> out;
  out.reserve(plus.size() + minus.size() + two.size());
  for (auto* part : {&plus, &minus, &two}) {
    for (auto& r : *part) out.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = static_cast<int>(i);
  return out;
}

std::vector<CycloInt> character_of(const Rep& rep, int group_order) {
  std::vector<CycloInt> chi;
  chi.reserve(static_cast<std::size_t>(group_order));
  for (int g = 0; g < group_order; ++g) {
    const auto mat = rep.matrix(g);
    chi.push_back(rep.dim == 1 ? mat[0] : mat[0] + mat[3]);
  }
  return chi;
}

InnerProduct inner_product(const std::vector<CycloInt>& chi1, const std::vector<CycloInt>& chi2) {
  if (chi1.size() != chi2.size() || chi1.empty()) throw StructuralError("inner_product: class functions differ in size");
  const int m = chi1.front().order();
  CycloInt sum(m);
  for (std::size_t g = 0; g < chi1.size(); ++g) sum += chi1[g] * chi2[g].conj();

  // Canonical form: the Phi_m remainder, padded back to length m.
  const auto reduced = sum.reduced();
  CycloInt canonical(m);
  for (std::size_t i = 0; i < reduced.size(); ++i) canonical.add_root(static_cast<std::int64_t>(i), reduced[i]);

  InnerProduct ip;
  ip.sum = canonical;
  ip.value = CycloInt(m);
  const auto n = static_cast<std::int64_t>(chi1.size());
  ip.exact = std::all_of(reduced.begin(), reduced.end(), [n](std::int64_t c) { return c % n == 0; });
  if (ip.exact) {
    for (std::size_t i = 0; i < reduced.size(); ++i) ip.value.add_root(static_cast<std::int64_t>(i), reduced[i] / n);
  }
  return ip;
}

std::vector<std::vector<int>> conjugacy_classes(const ExtGroup& group) {
  const int n = group.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < n; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    std::vector<int> cls;
    for (int h = 0; h < n; ++h) {
      const int c = group.mul(group.mul(h, g), group.inverse(h));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace cayint
