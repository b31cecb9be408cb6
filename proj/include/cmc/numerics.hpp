#ifndef CMC_NUMERICS_HPP
#define CMC_NUMERICS_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "cmc/types.hpp"

namespace cmc {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Uniform samples v_k = v(k * period / n), k = 0..n-1, of a periodic
// function over one full period.
template <class T>
struct PeriodicSamples {
  std::vector<T> values;
  double period = two_pi;

  int n() const { return static_cast<int>(values.size()); }
  double t(int k) const { return period * k / n(); }
};

// Trapezoid rule on a full period: (period/n) * sum(values).
// Spectrally accurate for smooth periodic integrands.
template <class T>
T periodic_integral(const PeriodicSamples<T>& s) {
  if (s.values.empty()) throw std::invalid_argument("periodic_integral: empty samples");
  T acc = s.values[0];
  for (size_t k = 1; k < s.values.size(); ++k) acc += s.values[k];
  return (s.period / s.n()) * acc;
}

// Fourier coefficients c(m) = (1/n) * sum_k v_k exp(-i m t_k 2pi/period)
// for m in [-n_max, n_max].
struct FourierCoefficients {
  std::vector<Complex> c;  // index m + n_max
  int n_max = 0;

  Complex operator()(int m) const {
    if (m < -n_max || m > n_max) throw std::invalid_argument("FourierCoefficients: m out of range");
    return c[static_cast<size_t>(m + n_max)];
  }
};

FourierCoefficients dft(const PeriodicSamples<double>& s, int n_max);
FourierCoefficients dft(const PeriodicSamples<Complex>& s, int n_max);

// Evaluates sum_m c(m) exp(i m t_k 2pi/period) back on a uniform grid of
// n points. Inverse of dft for band-limited data.
PeriodicSamples<Complex> idft(const FourierCoefficients& f, int n, double period = two_pi);

// Differentiates periodic samples with respect to t via the full DFT
// spectrum (Nyquist mode dropped). Exact for band-limited data.
PeriodicSamples<double> spectral_derivative(const PeriodicSamples<double>& s);
PeriodicSamples<Complex> spectral_derivative(const PeriodicSamples<Complex>& s);
PeriodicSamples<Vec3> spectral_derivative(const PeriodicSamples<Vec3>& s);

// Second-order central finite-difference jet of a point evaluator.
// Requires eval to be defined on a square of half-width 2h around z.
Jet2 fd_jet(const std::function<Vec3(double, double)>& eval, Complex z, double h = 1e-4);

// Scalar carrying value plus first and second partials in two real
// variables; arithmetic propagates derivatives exactly. Used to build
// analytic jets of closed-form surfaces.
struct Dual2 {
  double v = 0, dx = 0, dy = 0, dxx = 0, dxy = 0, dyy = 0;

  static Dual2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Dual2 var_x(double x) { return {x, 1, 0, 0, 0, 0}; }
  static Dual2 var_y(double y) { return {y, 0, 1, 0, 0, 0}; }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.v + b.v, a.dx + b.dx, a.dy + b.dy, a.dxx + b.dxx, a.dxy + b.dxy, a.dyy + b.dyy};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.v - b.v, a.dx - b.dx, a.dy - b.dy, a.dxx - b.dxx, a.dxy - b.dxy, a.dyy - b.dyy};
}
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.dx, -a.dy, -a.dxx, -a.dxy, -a.dyy}; }
inline Dual2 operator*(double s, const Dual2& a) {
  return {s * a.v, s * a.dx, s * a.dy, s * a.dxx, s * a.dxy, s * a.dyy};
}
inline Dual2 operator*(const Dual2& a, double s) { return s * a; }
inline Dual2 operator+(const Dual2& a, double s) { return {a.v + s, a.dx, a.dy, a.dxx, a.dxy, a.dyy}; }
inline Dual2 operator+(double s, const Dual2& a) { return a + s; }
inline Dual2 operator-(const Dual2& a, double s) { return a + (-s); }
inline Dual2 operator-(double s, const Dual2& a) { return (-a) + s; }

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
  return {a.v * b.v,
          a.dx * b.v + a.v * b.dx,
          a.dy * b.v + a.v * b.dy,
          a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx,
          a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
          a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy};
}

// Chain rule for a unary function with derivatives d1 = phi'(g), d2 = phi''(g).
inline Dual2 chain(const Dual2& g, double val, double d1, double d2) {
  return {val,
          d1 * g.dx,
          d1 * g.dy,
          d2 * g.dx * g.dx + d1 * g.dxx,
          d2 * g.dx * g.dy + d1 * g.dxy,
          d2 * g.dy * g.dy + d1 * g.dyy};
}

inline Dual2 recip(const Dual2& g) {
  const double w = 1.0 / g.v;
  return chain(g, w, -w * w, 2.0 * w * w * w);
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) { return a * recip(b); }
inline Dual2 operator/(const Dual2& a, double s) { return (1.0 / s) * a; }
inline Dual2 operator/(double s, const Dual2& b) { return s * recip(b); }

inline Dual2 sin(const Dual2& g) { return chain(g, std::sin(g.v), std::cos(g.v), -std::sin(g.v)); }
inline Dual2 cos(const Dual2& g) { return chain(g, std::cos(g.v), -std::sin(g.v), -std::cos(g.v)); }

// Packs three Dual2 components into a surface jet.
inline Jet2 pack_jet(const Dual2& X, const Dual2& Y, const Dual2& Z) {
  Jet2 j;
  j.f = {X.v, Y.v, Z.v};
  j.f_x = {X.dx, Y.dx, Z.dx};
  j.f_y = {X.dy, Y.dy, Z.dy};
  j.f_xx = {X.dxx, Y.dxx, Z.dxx};
  j.f_xy = {X.dxy, Y.dxy, Z.dxy};
  j.f_yy = {X.dyy, Y.dyy, Z.dyy};
  return j;
}

}  // namespace cmc

#endif
