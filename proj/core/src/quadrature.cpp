#include "teich/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "teich/error.hpp"

namespace teich {

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const double mid = 0.5 * (b + a);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i - 1)] = mid - half * x;
    nodes[static_cast<std::size_t>(n - i)] = mid + half * x;
    weights[static_cast<std::size_t>(i - 1)] = half * w;
    weights[static_cast<std::size_t>(n - i)] = half * w;
  }
}

PolarGrid::PolarGrid(int nr, int ntheta) : nr_(nr), ntheta_(ntheta) {
  if (nr < 1 || ntheta < 1) {
    throw Error(ErrorCode::kGridShape, "grid needs at least one node in each direction");
  }
  std::vector<double> w;
  gauss_legendre(nr, 0.0, 1.0, radii_, w);
  weights_.resize(radii_.size());
  const double dtheta = 2.0 * std::numbers::pi / ntheta;
  for (std::size_t i = 0; i < radii_.size(); ++i) weights_[i] = w[i] * radii_[i] * dtheta;
}

double PolarGrid::angle(int itheta) const {
  return 2.0 * std::numbers::pi * itheta / ntheta_;
}

DiscNode PolarGrid::node(int ir, int itheta) const {
  return {ir, itheta, std::polar(radius(ir), angle(itheta)), weight(ir)};
}

std::pair<int, int> PolarGrid::locate(cplx z) const {
  const double r = std::abs(z);
  const auto it = std::lower_bound(radii_.begin(), radii_.end(), r * (1.0 - 1e-12));
  if (it == radii_.end() || std::abs(*it - r) > 1e-12 * std::max(1.0, r)) return {-1, -1};
  double theta = std::arg(z);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double pos = theta * ntheta_ / (2.0 * std::numbers::pi);
  const long j = std::lround(pos);
  if (std::abs(pos - static_cast<double>(j)) > 1e-9) return {-1, -1};
  return {static_cast<int>(it - radii_.begin()), static_cast<int>(j % ntheta_)};
}

cplx integrate_disc(const std::function<cplx(const DiscNode&)>& f, const PolarGrid& grid) {
  cplx total{};
  for (int ir = 0; ir < grid.nr(); ++ir) {
    cplx ring{};
    for (int it = 0; it < grid.ntheta(); ++it) {
      const DiscNode node = grid.node(ir, it);
      const cplx v = f(node);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::kIntegrationDomain,
                    "non-finite integrand at node (" + std::to_string(ir) + ", " +
                        std::to_string(it) + "), z = (" + std::to_string(node.z.real()) + ", " +
                        std::to_string(node.z.imag()) + ")");
      }
      ring += v;
    }
    total += grid.weight(ir) * ring;
  }
  return total;
}

cplx integrate_disc(const std::function<cplx(cplx)>& f, const PolarGrid& grid) {
  return integrate_disc([&f](const DiscNode& n) { return f(n.z); }, grid);
}

std::vector<cplx> integrate_disc_moments(const std::function<cplx(const DiscNode&)>& f,
                                         const PolarGrid& grid, int m_lo, int m_hi) {
  const int count = std::max(0, m_hi - m_lo + 1);
  std::vector<cplx> total(static_cast<std::size_t>(count));
  std::vector<cplx> ring(static_cast<std::size_t>(count));
  for (int ir = 0; ir < grid.nr(); ++ir) {
    std::fill(ring.begin(), ring.end(), cplx{});
    for (int it = 0; it < grid.ntheta(); ++it) {
      const DiscNode node = grid.node(ir, it);
      const cplx v = f(node);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorCode::kIntegrationDomain,
                    "non-finite integrand at node (" + std::to_string(ir) + ", " +
                        std::to_string(it) + ")");
      }
      // z^m_lo by repeated multiplication (or division), then step upward.
      cplx zp{1.0, 0.0};
      for (int m = 0; m < m_lo; ++m) zp *= node.z;
      for (int m = 0; m > m_lo; --m) zp /= node.z;
      for (int m = 0; m < count; ++m) {
        ring[static_cast<std::size_t>(m)] += v * zp;
        zp *= node.z;
      }
    }
    for (int m = 0; m < count; ++m) {
      total[static_cast<std::size_t>(m)] += grid.weight(ir) * ring[static_cast<std::size_t>(m)];
    }
  }
  return total;
}

cplx monomial_disc_integral(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::kOutOfRange, "monomial exponents must be >= 0");
  if (p != q) return {};
  return {std::numbers::pi / (p + 1), 0.0};
}

}  // namespace teich
