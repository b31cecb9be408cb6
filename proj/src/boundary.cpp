#include "cmc/boundary.hpp"

#include <cmath>
#include <exception>
#include <iomanip>
#include <ostream>

namespace cmc {

DarbouxFrame darboux_frame(const Jet2& j, double a, double b) {
  const Vec3 tangent = a * j.f_x + b * j.f_y;
  const Vec3 cross = j.f_x.cross(j.f_y);
  const double scale2 = j.f_x.squaredNorm() + j.f_y.squaredNorm();
  if (cross.norm() <= 1e-12 * scale2 || !(tangent.squaredNorm() > 0.0))
    throw DegenerateImmersionError("darboux_frame: degenerate first fundamental form");
  DarbouxFrame fr;
  fr.X = tangent.normalized();
  fr.N = cross.normalized();
  fr.Y = fr.N.cross(fr.X);
  return fr;
}

Jet2 strip_jet(const Surface& surface, double rho, double t) {
  // w = e^{iz} maps the boundary coordinate z = t - i log(rho) to the
  // circle point w = rho e^{it}; dw/dz = i w and d2w/dz2 = -w.
  const Complex w = std::polar(rho, t);
  return pullback_jet(surface.jet(w), Complex(0.0, 1.0) * w, -w);
}

double BoundaryProfile::diameter() const {
  if (gamma.empty()) return 0.0;
  Vec3 lo = gamma.front(), hi = gamma.front();
  for (const Vec3& g : gamma) {
    lo = lo.cwiseMin(g);
    hi = hi.cwiseMax(g);
  }
  return (hi - lo).norm();
}

namespace {

struct SampleRow {
  Vec3 gamma;
  DarbouxFrame frame;
  double nu2, kappa_g, kappa_n;
  Complex hopf;
};

SampleRow profile_sample(const Surface& surface, double rho, double t) {
  const Jet2 j = strip_jet(surface, rho, t);
  SampleRow r;
  r.gamma = j.f;
  r.nu2 = j.f_x.dot(j.f_x);
  r.frame = darboux_frame(j, 1.0, 0.0);
  const double n_xx = r.frame.N.dot(j.f_xx);
  const double n_yy = r.frame.N.dot(j.f_yy);
  const double n_xy = r.frame.N.dot(j.f_xy);
  r.kappa_n = n_xx / r.nu2;
  r.kappa_g = r.frame.Y.dot(j.f_xx) / r.nu2;
  r.hopf = Complex(0.25 * (n_xx - n_yy), -0.5 * n_xy);
  return r;
}

void check_profile_args(const Surface& surface, double rho, int n) {
  if (n < 64) throw std::invalid_argument("boundary_profile: need n >= 64");
  const Domain d = surface.domain();
  const bool ok = d.kind == DomainKind::Disc
                      ? rho > 0.0 && rho <= d.r_out * (1.0 + 1e-9)
                      : rho >= d.r_in * (1.0 - 1e-9) && rho <= d.r_out * (1.0 + 1e-9);
  if (!ok) throw std::domain_error("boundary_profile: circle not inside the domain");
}

BoundaryProfile assemble(double rho, int n, const std::vector<SampleRow>& rows) {
  BoundaryProfile p;
  p.rho = rho;
  p.t.resize(n);
  p.gamma.resize(n);
  p.frame.resize(n);
  p.nu2.resize(n);
  p.ds_dt.resize(n);
  p.kappa_g.resize(n);
  p.kappa_n.resize(n);
  p.tau_g.resize(n);
  p.hopf.resize(n);

  double nu2_max = 0.0;
  for (int k = 0; k < n; ++k) {
    const SampleRow& r = rows[static_cast<size_t>(k)];
    p.t[k] = two_pi * k / n;
    p.gamma[k] = r.gamma;
    p.frame[k] = r.frame;
    p.nu2[k] = r.nu2;
    p.ds_dt[k] = std::sqrt(r.nu2);
    p.kappa_g[k] = r.kappa_g;
    p.kappa_n[k] = r.kappa_n;
    p.hopf[k] = r.hopf;
    nu2_max = std::max(nu2_max, r.nu2);
  }
  for (int k = 0; k < n; ++k)
    if (p.nu2[k] < 1e-12 * nu2_max)
      throw DegenerateImmersionError("boundary_profile: conformal factor degenerates");

  // Geodesic torsion from the derivative of the sampled normal:
  // tau_g = -<dN/ds, Y> with d/ds = (1/nu) d/dt.
  PeriodicSamples<Vec3> normals;
  normals.values.resize(n);
  for (int k = 0; k < n; ++k) normals.values[static_cast<size_t>(k)] = p.frame[k].N;
  const auto dN = spectral_derivative(normals);
  for (int k = 0; k < n; ++k)
    p.tau_g[k] = -dN.values[static_cast<size_t>(k)].dot(p.frame[k].Y) / p.ds_dt[k];

  return p;
}

}  // namespace

BoundaryProfile boundary_profile(const Surface& surface, double rho, int n) {
  check_profile_args(surface, rho, n);
  std::vector<SampleRow> rows(static_cast<size_t>(n));
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < n; ++k) {
    try {
      rows[static_cast<size_t>(k)] = profile_sample(surface, rho, two_pi * k / n);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(rho, n, rows);
}

BoundaryProfile boundary_profile_serial(const Surface& surface, double rho, int n) {
  check_profile_args(surface, rho, n);
  std::vector<SampleRow> rows(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    rows[static_cast<size_t>(k)] = profile_sample(surface, rho, two_pi * k / n);
  return assemble(rho, n, rows);
}

void write_profile_csv(std::ostream& os, const BoundaryProfile& p) {
  os << "t,x,y,z,nu2,ds_dt,kappa_g,kappa_n,tau_g\n" << std::setprecision(17);
  for (int k = 0; k < p.n(); ++k) {
    os << p.t[k] << ',' << p.gamma[k].x() << ',' << p.gamma[k].y() << ','
       << p.gamma[k].z() << ',' << p.nu2[k] << ',' << p.ds_dt[k] << ','
       << p.kappa_g[k] << ',' << p.kappa_n[k] << ',' << p.tau_g[k] << '\n';
  }
}

}  // namespace cmc
