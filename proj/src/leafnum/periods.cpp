#include <algorithm>
#include <cmath>
#include <numbers>

#include "mflab/error.hpp"
#include "mflab/leafnum.hpp"

namespace mflab {

namespace {

constexpr int kNodes = 24;
constexpr int kMaxPanels = 4096;

struct GaussLegendre {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule = [] {
    GaussLegendre r;
    const int n = kNodes;
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = z;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1);
        double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      r.x[i] = z;
      r.w[i] = 2 / ((1 - z * z) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Integrals of du/y and u du/y from a to b, with y = sqrt(4(u-a)(u-b)(u-c))
// continued along the straight segment. Substituting u = m - R cos(phi)
// removes both endpoint singularities.
std::pair<Complex, Complex> half_period(Complex a, Complex b, Complex c, const NumericTolerances& tol) {
  const Complex m = (a + b) / 2.0, r = (b - a) / 2.0;
  const auto& rule = gauss_legendre();
  std::pair<Complex, Complex> prev{};
  for (int panels = 4; panels <= kMaxPanels; panels *= 2) {
    Complex i0 = 0, i1 = 0, root = 0;
    bool first = true;
    const double width = std::numbers::pi / panels;
    for (int p = 0; p < panels; ++p) {
      // Nodes are visited in increasing phi so the branch can be tracked.
      for (int k = kNodes - 1; k >= 0; --k) {
        double phi = width * (p + (rule.x[k] + 1) / 2);
        Complex u = m - r * std::cos(phi);
        Complex s = std::sqrt(4.0 * (u - c));
        if (!first && std::abs(s + root) < std::abs(s - root)) s = -s;
        first = false;
        root = s;
        double w = rule.w[k] * width / 2;
        i0 += w / s;
        i1 += w * u / s;
      }
    }
    const Complex minus_i(0, -1);
    std::pair<Complex, Complex> cur{minus_i * i0, minus_i * i1};
    if (panels > 4) {
      double scale = std::abs(cur.first) + std::abs(cur.second);
      double change = std::abs(cur.first - prev.first) + std::abs(cur.second - prev.second);
      if (change <= tol.quadrature * scale) return cur;
    }
    prev = cur;
  }
  return prev;
}

}  // namespace

std::array<Complex, 3> weierstrass_roots(Complex t2, Complex t3) {
  // u^3 + p u + q with p = -t2/4, q = -t3/4.
  const Complex p = -t2 / 4.0, q = -t3 / 4.0;
  Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex c1 = -q / 2.0 + disc, c2 = -q / 2.0 - disc;
  Complex c = std::pow(std::abs(c1) >= std::abs(c2) ? c1 : c2, 1.0 / 3.0);
  const Complex omega(-0.5, std::sqrt(3.0) / 2);
  std::array<Complex, 3> roots{};
  for (int k = 0; k < 3; ++k) {
    if (std::abs(c) == 0) {
      roots[k] = 0;
      continue;
    }
    Complex ck = c * std::pow(omega, k);
    Complex u = ck - p / (3.0 * ck);
    for (int it = 0; it < 4; ++it) {
      Complex f = u * u * u + p * u + q, df = 3.0 * u * u + p;
      if (std::abs(df) == 0) break;
      u -= f / df;
    }
    roots[k] = u;
  }
  return roots;
}

PeriodMatrix periods(const std::array<Complex, 3>& t, const NumericTolerances& tol) {
  const Complex t2 = t[1], t3 = t[2];
  double scale = std::abs(t2 * t2 * t2) + 27 * std::abs(t3 * t3);
  if (scale == 0 || std::abs(27.0 * t3 * t3 - t2 * t2 * t2) <= tol.degenerate * scale) {
    throw Error(ErrorCode::kDegenerateCurve, "periods: curve is singular");
  }
  auto e = weierstrass_roots(t2, t3);

  // Pivot at the vertex with the largest angle, so the opposite root is as
  // far as possible from both segments.
  int pivot = 0;
  double best = -1;
  for (int i = 0; i < 3; ++i) {
    Complex u = e[(i + 1) % 3] - e[i], v = e[(i + 2) % 3] - e[i];
    double angle = std::abs(std::arg(v / u));
    if (angle > best) {
      best = angle;
      pivot = i;
    }
  }
  const Complex a = e[pivot], b = e[(pivot + 1) % 3], c = e[(pivot + 2) % 3];
  auto [w_delta, n_delta] = half_period(a, b, c, tol);
  auto [w_gamma, n_gamma] = half_period(a, c, b, tol);

  PeriodMatrix out;
  const Complex t1 = t[0];
  out.entries[0] = {2.0 * w_delta, 2.0 * (n_delta + t1 * w_delta)};
  out.entries[1] = {2.0 * w_gamma, 2.0 * (n_gamma + t1 * w_gamma)};
  if (std::imag(out.entries[0][0] * std::conj(out.entries[1][0])) < 0) {
    out.entries[1][0] = -out.entries[1][0];
    out.entries[1][1] = -out.entries[1][1];
  }
  // With this orientation the Legendre relation reads det = -2 pi i.
  const Complex two_pi_i(0, 2 * std::numbers::pi);
  out.legendre_residual = std::abs(-mat_det(out.entries) - two_pi_i);
  return out;
}

CMatrix2 mat_mul(const CMatrix2& a, const CMatrix2& b) {
  CMatrix2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Complex mat_det(const CMatrix2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

CMatrix2 mat_inverse(const CMatrix2& a) {
  Complex det = mat_det(a);
  if (std::abs(det) == 0) throw Error(ErrorCode::kDivisionByZero, "mat_inverse: singular matrix");
  CMatrix2 r{};
  r[0][0] = a[1][1] / det;
  r[0][1] = -a[0][1] / det;
  r[1][0] = -a[1][0] / det;
  r[1][1] = a[0][0] / det;
  return r;
}

}  // namespace mflab
