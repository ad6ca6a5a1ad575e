#include "cayint/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cayint/errors.hpp"

namespace cayint {

HermitianMatrix::HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {
  if (n < 0) throw StructuralError("negative matrix size");
}

HermitianMatrix::HermitianMatrix(int n, std::vector<std::complex<double>> entries) : n_(n), a_(std::move(entries)) {
  if (n < 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw StructuralError("matrix entry count does not match size");
  }
  if (!is_hermitian(1e-12)) throw StructuralError("matrix is not Hermitian");
}

void HermitianMatrix::set(int k, int j, std::complex<double> v) {
  a_[static_cast<std::size_t>(k * n_ + j)] = v;
  a_[static_cast<std::size_t>(j * n_ + k)] = std::conj(v);
}

bool HermitianMatrix::is_hermitian(double tol) const {
  for (int k = 0; k < n_; ++k) {
    for (int j = k; j < n_; ++j) {
      if (std::abs(at(k, j) - std::conj(at(j, k))) > tol) return false;
    }
  }
  return true;
}

HermitianMatrix adjacency(const ExtGroup& group, const ConnectionSet& cs) {
  const int n = group.order();
  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (int g : elements_of(group, cs.mask)) in_s[static_cast<std::size_t>(g)] = true;
  HermitianMatrix adj(n);
  const std::complex<double> i{0.0, 1.0};
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      const bool fwd = in_s[static_cast<std::size_t>(group.mul(group.inverse(k), j))];
      const bool back = in_s[static_cast<std::size_t>(group.mul(group.inverse(j), k))];
      if (fwd && back) {
        adj.set(k, j, 1.0);
      } else if (fwd) {
        adj.set(k, j, i);
      } else if (back) {
        adj.set(k, j, -i);
      }
    }
  }
  return adj;
}

namespace {

// block += zeta^shift * rho(g)
void accumulate(CycloMatrix& block, const Rep& rep, int g, int shift) {
  if (rep.dim == 1) {
    block[0].add_root(rep.scalar_exponent(g) + shift);
    return;
  }
  const auto a = static_cast<std::size_t>(g % rep.base_order);
  if (g < rep.base_order) {
    block[0].add_root(rep.pi[a] + shift);
    block[3].add_root(rep.pi_f[a] + shift);
  } else {
    block[1].add_root(rep.y_exponent + rep.pi_f[a] + shift);
    block[2].add_root(rep.pi[a] + shift);
  }
}

}  // namespace

std::vector<CycloMatrix> babai_blocks(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps) {
  const int m = group.working_order();
  const int i_shift = m / 4;
  const int minus_i_shift = 3 * m / 4;

  std::vector<int> symmetric, antisymmetric;
  for (int a : cs.S1) symmetric.push_back(a);
  for (int a : cs.S2) symmetric.push_back(group.with_x(a));
  for (int a : cs.T1) antisymmetric.push_back(a);
  for (int a : cs.T2) antisymmetric.push_back(group.with_x(a));

  std::vector<CycloMatrix> blocks;
  blocks.reserve(reps.size());
  for (const auto& rep : reps) {
    const auto d = static_cast<std::size_t>(rep.dim);
    CycloMatrix block(d * d, CycloInt(m));
    for (int s : symmetric) accumulate(block, rep, s, 0);
    for (int t : antisymmetric) {
      accumulate(block, rep, t, i_shift);
      accumulate(block, rep, group.inverse(t), minus_i_shift);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

SpectrumReport exact_spectrum(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps) {
  const auto blocks = babai_blocks(group, cs, reps);
  SpectrumReport report;
  report.integral = true;
  std::vector<std::pair<double, std::optional<std::int64_t>>> values;

  for (std::size_t r = 0; r < reps.size(); ++r) {
    const auto& block = blocks[r];
    BlockSpectrum bs;
    bs.label = reps[r].label;
    bs.dim = reps[r].dim;
    if (bs.dim == 1) {
      bs.trace = block[0];
      const auto n = is_rational_integer(bs.trace);
      bs.integral = n.has_value();
      if (n) bs.exact.push_back(*n);
      bs.numeric.push_back(bs.trace.numeric().real());
    } else {
      bs.trace = block[0] + block[3];
      bs.det = block[0] * block[3] - block[1] * block[2];
      bs.discriminant = bs.trace * bs.trace - 4 * bs.det;
      const auto delta = is_rational_integer(bs.trace);
      const auto root = delta ? perfect_square_integer(bs.discriminant) : std::nullopt;
      bs.integral = delta && root;
      if (bs.integral) {
        if ((*delta - *root) % 2 != 0) {
          throw StructuralError("block eigenvalues are half-integers; determinant is not an algebraic integer");
        }
        bs.exact = {(*delta - *root) / 2, (*delta + *root) / 2};
        bs.numeric = {static_cast<double>(bs.exact[0]), static_cast<double>(bs.exact[1])};
      } else {
        const double d = bs.trace.numeric().real();
        const double disc = std::max(0.0, bs.discriminant.numeric().real());
        bs.numeric = {(d - std::sqrt(disc)) / 2.0, (d + std::sqrt(disc)) / 2.0};
      }
    }
    report.integral = report.integral && bs.integral;
    for (std::size_t k = 0; k < bs.numeric.size(); ++k) {
      const std::optional<std::int64_t> ex = bs.integral ? std::optional(bs.exact[k]) : std::nullopt;
      for (int copy = 0; copy < bs.dim; ++copy) values.emplace_back(bs.numeric[k], ex);
    }
    report.blocks.push_back(std::move(bs));
  }

  if (values.size() != static_cast<std::size_t>(group.order())) {
    throw StructuralError("spectrum multiplicities do not add up to |G|");
  }
  std::sort(values.begin(), values.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [v, ex] : values) {
    report.eigenvalues.push_back(v);
    report.exact.push_back(ex);
  }
  return report;
}

std::vector<double> numeric_spectrum(const HermitianMatrix& input) {
  if (!input.is_hermitian(1e-12)) throw StructuralError("numeric_spectrum: matrix is not Hermitian");
  const int n = input.size();
  std::vector<std::complex<double>> a = input.entries();
  auto at = [&](int k, int j) -> std::complex<double>& { return a[static_cast<std::size_t>(k * n + j)]; };

  auto off_mass = [&] {
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
      for (int j = k + 1; j < n; ++j) s += std::norm(at(k, j));
    }
    return std::sqrt(2.0 * s);
  };

  constexpr int kMaxSweeps = 100;
  constexpr double kTolerance = 1e-12;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_mass() >= kTolerance; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> apq = at(p, q);
        const double b = std::abs(apq);
        if (b < 1e-300) continue;
        // Phase e^{-i phi} on column q makes the (p, q) entry real and equal to b;
        // a real rotation then annihilates it.
        const std::complex<double> phase = std::conj(apq) / b;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const std::complex<double> akp = at(k, p);
          const std::complex<double> akq = at(k, q) * phase;
          const std::complex<double> new_kp = c * akp - s * akq;
          const std::complex<double> new_kq = s * akp + c * akq;
          at(k, p) = new_kp;
          at(p, k) = std::conj(new_kp);
          at(k, q) = new_kq;
          at(q, k) = std::conj(new_kq);
        }
        at(p, p) = app - t * b;
        at(q, q) = aqq + t * b;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  if (off_mass() >= kTolerance) {
    throw ConvergenceError("Jacobi sweeps did not converge after " + std::to_string(kMaxSweeps) + " sweeps");
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) eig[static_cast<std::size_t>(k)] = at(k, k).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

bool is_integral_numeric(std::span<const double> eigenvalues, double tol) {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

}  // namespace cayint
