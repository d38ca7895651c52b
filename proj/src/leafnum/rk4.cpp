#include <cmath>

#include "mflab/error.hpp"
#include "mflab/leafnum.hpp"

namespace mflab {

namespace {

std::vector<Complex> eval_field(const VectorField& v, const std::vector<Complex>& x) {
  static const std::function<Complex(const Rational&)> lift = [](const Rational& c) {
    return Complex(c.get_d());
  };
  std::vector<Complex> out(v.dimension());
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    out[i] = evaluate<Complex>(v[i], std::span<const Complex>(x), lift);
  }
  return out;
}

std::vector<Complex> axpy(const std::vector<Complex>& x, double a, const std::vector<Complex>& k) {
  std::vector<Complex> r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * k[i];
  return r;
}

bool escaped(const std::vector<Complex>& x, double limit) {
  for (const auto& c : x) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || std::abs(c) > limit) return true;
  }
  return false;
}

}  // namespace

Trajectory rk4_integrate(const VectorField& v, const std::vector<Complex>& start, double time, double step,
                         int sample_every, const NumericTolerances& tol) {
  if (start.size() != v.ring()->size()) {
    throw Error(ErrorCode::kVariableMismatch, "rk4_integrate: start point does not match ring");
  }
  if (!(step > 0) || !(time >= 0) || sample_every < 1) {
    throw Error(ErrorCode::kInvalidArgument, "rk4_integrate: need step > 0, time >= 0, sample_every >= 1");
  }
  const long steps = std::lround(std::ceil(time / step - 1e-9));
  const double h = steps > 0 ? time / steps : 0;
  const std::size_t n = v.dimension();

  Trajectory out;
  std::vector<Complex> x = start;
  out.times.push_back(0);
  out.points.push_back(x);
  for (long k = 1; k <= steps; ++k) {
    auto k1 = eval_field(v, x);
    auto k2 = eval_field(v, axpy(x, h / 2, k1));
    auto k3 = eval_field(v, axpy(x, h / 2, k2));
    auto k4 = eval_field(v, axpy(x, h, k3));
    for (std::size_t i = 0; i < n; ++i) x[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (escaped(x, tol.blow_up)) {
      out.blew_up = true;
      out.times.push_back(k * h);
      out.points.push_back(x);
      return out;
    }
    if (k % sample_every == 0 || k == steps) {
      out.times.push_back(k * h);
      out.points.push_back(x);
    }
  }
  return out;
}

}  // namespace mflab
