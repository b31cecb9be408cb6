#include "cmc/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>

namespace cmc {

namespace {

Vec3 unit_normal(const Jet2& j) {
  const Vec3 cross = j.f_x.cross(j.f_y);
  const double scale2 = j.f_x.squaredNorm() + j.f_y.squaredNorm();
  if (cross.norm() <= 1e-12 * scale2)
    throw DegenerateImmersionError("hopf: degenerate first fundamental form");
  return cross.normalized();
}

}  // namespace

double mean_curvature(const Jet2& j) {
  const Vec3 N = unit_normal(j);
  const double nu2 = j.f_x.dot(j.f_x);
  return 0.5 * (j.f_xx + j.f_yy).dot(N) / nu2;
}

Complex hopf_coefficient(const Jet2& j) {
  const Vec3 N = unit_normal(j);
  return Complex(0.25 * (N.dot(j.f_xx) - N.dot(j.f_yy)), -0.5 * N.dot(j.f_xy));
}

std::pair<double, double> principal_curvatures(const Jet2& j) {
  const double H = mean_curvature(j);
  const double half_gap = 2.0 * std::abs(hopf_coefficient(j)) / j.f_x.dot(j.f_x);
  return {H + half_gap, H - half_gap};
}

std::vector<Complex> interior_grid(const Domain& d, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("interior_grid: need grid_n >= 2");
  const double margin = 0.05;
  const double a = (1.0 - margin) * d.r_out;
  const double r_min = d.kind == DomainKind::Annulus ? (1.0 + margin) * d.r_in : 0.0;
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(grid_n) * grid_n);
  for (int iy = 0; iy < grid_n; ++iy) {
    for (int ix = 0; ix < grid_n; ++ix) {
      const Complex z(-a + 2.0 * a * ix / (grid_n - 1), -a + 2.0 * a * iy / (grid_n - 1));
      const double r = std::abs(z);
      if (r <= a && r >= r_min) pts.push_back(z);
    }
  }
  return pts;
}

namespace {

HopfSample field_sample(const Surface& surface, Complex z, double h) {
  HopfSample s;
  s.z = z;
  const Jet2 j = surface.jet(z);
  s.Q = hopf_coefficient(j);
  s.nu2 = j.f_x.dot(j.f_x);
  s.H = mean_curvature(j);
  // dQ/dz_bar = (dQ/dx + i dQ/dy) / 2 by central differences.
  const Complex qpx = hopf_coefficient(surface.jet(z + h));
  const Complex qmx = hopf_coefficient(surface.jet(z - h));
  const Complex qpy = hopf_coefficient(surface.jet(z + Complex(0.0, h)));
  const Complex qmy = hopf_coefficient(surface.jet(z - Complex(0.0, h)));
  s.cr_residual = std::abs(((qpx - qmx) + Complex(0.0, 1.0) * (qpy - qmy)) / (4.0 * h));
  return s;
}

void check_field_args(const Surface& surface, int grid_n, double h) {
  if (grid_n < 2) throw std::invalid_argument("hopf_field: need grid_n >= 2");
  if (!(h > 0.0)) throw std::invalid_argument("hopf_field: step must be positive");
  const Domain d = surface.domain();
  // The grid keeps a 5% margin; the difference stencil must stay inside it.
  const double margin_abs = 0.05 * (d.kind == DomainKind::Annulus
                                        ? std::min(d.r_out, d.r_in)
                                        : d.r_out);
  if (2.0 * h >= margin_abs)
    throw std::domain_error("hopf_field: difference stencil reaches the domain boundary");
}

}  // namespace

HopfField hopf_field(const Surface& surface, int grid_n, double h) {
  check_field_args(surface, grid_n, h);
  const auto pts = interior_grid(surface.domain(), grid_n);
  HopfField field;
  field.grid_n = grid_n;
  field.h = h;
  field.samples.resize(pts.size());
  std::exception_ptr failure = nullptr;
  const int m = static_cast<int>(pts.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < m; ++i) {
    try {
      field.samples[static_cast<size_t>(i)] =
          field_sample(surface, pts[static_cast<size_t>(i)], h);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return field;
}

HopfField hopf_field_serial(const Surface& surface, int grid_n, double h) {
  check_field_args(surface, grid_n, h);
  const auto pts = interior_grid(surface.domain(), grid_n);
  HopfField field;
  field.grid_n = grid_n;
  field.h = h;
  field.samples.resize(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    field.samples[i] = field_sample(surface, pts[i], h);
  return field;
}

double HopfField::cr_max() const {
  double m = 0.0;
  for (const HopfSample& s : samples) m = std::max(m, s.cr_residual);
  return m;
}

double cr_residual(const Surface& surface, int grid_n, double h) {
  return hopf_field(surface, grid_n, h).cr_max();
}

double boundary_hopf_identity(const BoundaryProfile& p, double H) {
  if (p.hopf.size() != static_cast<size_t>(p.n()))
    throw std::invalid_argument("boundary_hopf_identity: profile lacks Hopf samples");
  double worst = 0.0;
  for (int k = 0; k < p.n(); ++k) {
    const Complex rhs =
        0.5 * Complex(p.kappa_n[k] - H, -p.tau_g[k]) * p.nu2[k];
    worst = std::max(worst, std::abs(p.hopf[static_cast<size_t>(k)] - rhs));
  }
  return worst;
}

UmbilicScanResult umbilic_scan(const Surface& surface, int grid_n, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("umbilic_scan: tol must be positive");
  const HopfField field = hopf_field(surface, grid_n);
  UmbilicScanResult res;

  std::vector<double> nu2s;
  nu2s.reserve(field.samples.size());
  for (const HopfSample& s : field.samples) {
    res.q_max = std::max(res.q_max, std::abs(s.Q));
    nu2s.push_back(s.nu2);
  }
  std::nth_element(nu2s.begin(), nu2s.begin() + nu2s.size() / 2, nu2s.end());
  const double nu2_med = nu2s[nu2s.size() / 2];
  const double H_ref = surface.nominal_H();

  // When Q is negligible everywhere the whole patch is umbilic; the
  // reference scale falls back to the metric and curvature magnitudes.
  if (res.q_max < tol * nu2_med * (std::abs(H_ref) + 1.0)) {
    res.globally_umbilic = true;
    res.threshold = tol * nu2_med * (std::abs(H_ref) + 1.0);
    return res;
  }

  res.threshold = tol * res.q_max;
  for (const HopfSample& s : field.samples)
    if (std::abs(s.Q) < res.threshold) res.points.push_back(s.z);
  return res;
}

void write_hopf_csv(std::ostream& os, const HopfField& field) {
  os << "re(z),im(z),re(Q),im(Q),nu2,cr_residual\n" << std::setprecision(17);
  for (const HopfSample& s : field.samples) {
    os << s.z.real() << ',' << s.z.imag() << ',' << s.Q.real() << ','
       << s.Q.imag() << ',' << s.nu2 << ',' << s.cr_residual << '\n';
  }
}

}  // namespace cmc
