#include "cmc/numerics.hpp"

namespace cmc {

namespace {

// n-th roots of unity e^{-2 pi i j / n}; exact table lookups keep the
// direct transforms deterministic and symmetric.
std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> r(n);
  for (int j = 0; j < n; ++j) r[j] = std::polar(1.0, -two_pi * j / n);
  return r;
}

inline int root_index(long long m, long long k, int n) {
  long long idx = (m * k) % n;
  if (idx < 0) idx += n;
  return static_cast<int>(idx);
}

template <class T>
void check_dft_args(const PeriodicSamples<T>& s, int n_max) {
  if (s.n() < 2) throw std::invalid_argument("dft: need at least 2 samples");
  if (n_max < 0 || n_max > s.n() / 2 - 1)
    throw std::invalid_argument("dft: n_max must satisfy 0 <= n_max <= n/2 - 1");
}

template <class T>
FourierCoefficients dft_impl(const PeriodicSamples<T>& s, int n_max) {
  check_dft_args(s, n_max);
  const int n = s.n();
  const auto roots = unit_roots(n);
  FourierCoefficients out;
  out.n_max = n_max;
  out.c.resize(2 * n_max + 1);
  for (int m = -n_max; m <= n_max; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) acc += Complex(s.values[k]) * roots[root_index(m, k, n)];
    out.c[static_cast<size_t>(m + n_max)] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace

FourierCoefficients dft(const PeriodicSamples<double>& s, int n_max) { return dft_impl(s, n_max); }
FourierCoefficients dft(const PeriodicSamples<Complex>& s, int n_max) { return dft_impl(s, n_max); }

PeriodicSamples<Complex> idft(const FourierCoefficients& f, int n, double period) {
  if (n < 2) throw std::invalid_argument("idft: need n >= 2");
  const auto roots = unit_roots(n);
  PeriodicSamples<Complex> out;
  out.period = period;
  out.values.resize(n);
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int m = -f.n_max; m <= f.n_max; ++m)
      acc += f(m) * std::conj(roots[root_index(m, k, n)]);
    out.values[static_cast<size_t>(k)] = acc;
  }
  return out;
}

PeriodicSamples<double> spectral_derivative(const PeriodicSamples<double>& s) {
  const int n = s.n();
  if (n < 4) throw std::invalid_argument("spectral_derivative: need n >= 4");
  const int m_max = (n - 1) / 2;  // Nyquist mode dropped for even n
  const double omega = two_pi / s.period;
  const auto roots = unit_roots(n);

  // Real input: c(-m) = conj(c(m)), so only positive frequencies are needed.
  std::vector<Complex> c(static_cast<size_t>(m_max) + 1, Complex(0.0));
  for (int m = 1; m <= m_max; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) acc += s.values[k] * roots[root_index(m, k, n)];
    c[static_cast<size_t>(m)] = acc / static_cast<double>(n);
  }

  PeriodicSamples<double> out;
  out.period = s.period;
  out.values.resize(n);
#pragma omp parallel for schedule(static) if (n >= 2048)
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int m = 1; m <= m_max; ++m) {
      const Complex e = std::conj(roots[root_index(m, k, n)]);  // e^{+ i m t_k}
      acc += 2.0 * (Complex(0.0, m * omega) * c[static_cast<size_t>(m)] * e).real();
    }
    out.values[static_cast<size_t>(k)] = acc;
  }
  return out;
}

PeriodicSamples<Complex> spectral_derivative(const PeriodicSamples<Complex>& s) {
  const int n = s.n();
  if (n < 4) throw std::invalid_argument("spectral_derivative: need n >= 4");
  const int m_max = (n - 1) / 2;
  const double omega = two_pi / s.period;
  const auto roots = unit_roots(n);

  std::vector<Complex> c(static_cast<size_t>(2 * m_max) + 1);
  for (int m = -m_max; m <= m_max; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) acc += s.values[k] * roots[root_index(m, k, n)];
    c[static_cast<size_t>(m + m_max)] = acc / static_cast<double>(n);
  }

  PeriodicSamples<Complex> out;
  out.period = s.period;
  out.values.resize(n);
#pragma omp parallel for schedule(static) if (n >= 2048)
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int m = -m_max; m <= m_max; ++m) {
      const Complex e = std::conj(roots[root_index(m, k, n)]);
      acc += Complex(0.0, m * omega) * c[static_cast<size_t>(m + m_max)] * e;
    }
    out.values[static_cast<size_t>(k)] = acc;
  }
  return out;
}

PeriodicSamples<Vec3> spectral_derivative(const PeriodicSamples<Vec3>& s) {
  PeriodicSamples<double> comp;
  comp.period = s.period;
  comp.values.resize(s.values.size());
  PeriodicSamples<Vec3> out;
  out.period = s.period;
  out.values.assign(s.values.size(), Vec3::Zero());
  for (int axis = 0; axis < 3; ++axis) {
    for (size_t k = 0; k < s.values.size(); ++k) comp.values[k] = s.values[k][axis];
    const auto d = spectral_derivative(comp);
    for (size_t k = 0; k < s.values.size(); ++k) out.values[k][axis] = d.values[k];
  }
  return out;
}

Jet2 fd_jet(const std::function<Vec3(double, double)>& eval, Complex z, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_jet: step must be positive");
  const double x = z.real(), y = z.imag();
  const Vec3 f00 = eval(x, y);
  const Vec3 fpx = eval(x + h, y), fmx = eval(x - h, y);
  const Vec3 fpy = eval(x, y + h), fmy = eval(x, y - h);
  const Vec3 fpp = eval(x + h, y + h), fpm = eval(x + h, y - h);
  const Vec3 fmp = eval(x - h, y + h), fmm = eval(x - h, y - h);

  Jet2 j;
  j.f = f00;
  j.f_x = (fpx - fmx) / (2.0 * h);
  j.f_y = (fpy - fmy) / (2.0 * h);
  j.f_xx = (fpx - 2.0 * f00 + fmx) / (h * h);
  j.f_yy = (fpy - 2.0 * f00 + fmy) / (h * h);
  j.f_xy = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
  return j;
}

}  // namespace cmc
