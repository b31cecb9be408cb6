#include "cmc/capillary.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace cmc {

SupportSurface ruled_support(const BoundaryProfile& p,
                             const std::function<double(double)>& angle_fn) {
  if (!angle_fn) throw std::invalid_argument("ruled_support: null angle function");
  const int n = p.n();
  SupportSurface s;
  s.t = p.t;
  s.ds_dt = p.ds_dt;
  s.theta.resize(n);
  s.d.resize(n);
  s.N2.resize(n);
  s.Y2.resize(n);
  s.angle_cos.resize(n);
  for (int k = 0; k < n; ++k) {
    const double th = angle_fn(p.t[k]);
    const double c = std::cos(th), si = std::sin(th);
    s.theta[k] = th;
    s.d[k] = c * p.frame[k].Y + si * p.frame[k].N;
    s.N2[k] = c * p.frame[k].N - si * p.frame[k].Y;
    s.Y2[k] = s.d[k];
    s.angle_cos[k] = p.frame[k].N.dot(s.N2[k]);
  }
  return s;
}

SupportSurface ruled_support(const BoundaryProfile& p, double constant_angle) {
  return ruled_support(p, [constant_angle](double) { return constant_angle; });
}

std::vector<double> torsion_in_support(const SupportSurface& s) {
  PeriodicSamples<Vec3> normals;
  normals.values.assign(s.N2.begin(), s.N2.end());
  const auto dN2 = spectral_derivative(normals);
  std::vector<double> tau(static_cast<size_t>(s.n()));
  for (int k = 0; k < s.n(); ++k)
    tau[static_cast<size_t>(k)] =
        -dN2.values[static_cast<size_t>(k)].dot(s.Y2[static_cast<size_t>(k)]) / s.ds_dt[k];
  return tau;
}

TorsionComparison torsion_comparison(const BoundaryProfile& p, const SupportSurface& s) {
  if (p.n() != s.n())
    throw std::invalid_argument("torsion_comparison: mismatched sample counts");
  TorsionComparison c;
  c.t = p.t;
  c.tau_M = p.tau_g;
  c.tau_S = torsion_in_support(s);
  c.angle_cos = s.angle_cos;

  const auto [th_min, th_max] = std::minmax_element(s.theta.begin(), s.theta.end());
  c.angle_range = *th_max - *th_min;

  double mag = 0.0;
  for (int k = 0; k < p.n(); ++k) {
    c.max_gap = std::max(c.max_gap, std::abs(c.tau_M[k] - c.tau_S[k]));
    mag = std::max({mag, std::abs(c.tau_M[k]), std::abs(c.tau_S[k])});
  }
  c.scale = std::max(mag, 1.0 / p.diameter());
  return c;
}

const char* to_string(TJVerdict v) {
  switch (v) {
    case TJVerdict::ConstantAngleAndEqualTorsion: return "ConstantAngleAndEqualTorsion";
    case TJVerdict::VaryingAngleAndUnequalTorsion: return "VaryingAngleAndUnequalTorsion";
    default: return "Inconsistent";
  }
}

TJVerdict tj_check(const TorsionComparison& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tj_check: tol must be positive");
  const bool constant_angle = c.angle_range < 1e-8;
  const bool equal_torsion = c.max_gap <= tol * c.scale;
  if (constant_angle && equal_torsion) return TJVerdict::ConstantAngleAndEqualTorsion;
  if (!constant_angle && !equal_torsion) return TJVerdict::VaryingAngleAndUnequalTorsion;
  return TJVerdict::Inconsistent;
}

const char* to_string(CapillaryUmbilicity u) {
  return u == CapillaryUmbilicity::UmbilicCertified ? "UmbilicCertified" : "NonUmbilic";
}

CapillaryUmbilicity capillary_umbilicity(const BoundaryProfile& p, const SupportSurface& s,
                                         double H, double tol) {
  TorsionComparison c = torsion_comparison(p, s);
  if (c.angle_range >= 1e-8)
    throw std::domain_error("capillary_umbilicity: contact angle is not constant");

  const auto [lo, hi] = std::minmax_element(c.tau_S.begin(), c.tau_S.end());
  if (*hi - *lo >= tol * c.scale) return CapillaryUmbilicity::NonUmbilic;

  // Constant support torsion certifies umbilicity; the torsion must then
  // vanish and the profile classification must agree.
  const double tau_mag = std::max(std::abs(*lo), std::abs(*hi));
  if (tau_mag >= tol * c.scale)
    throw std::runtime_error(
        "capillary_umbilicity: constant support torsion fails to vanish");
  if (classify(p, H, tol) != Classification::TotallyUmbilic)
    throw std::runtime_error(
        "capillary_umbilicity: certification disagrees with boundary classification");
  return CapillaryUmbilicity::UmbilicCertified;
}

void write_torsion_csv(std::ostream& os, const TorsionComparison& c) {
  os << "t,tau_M,tau_S,angle_cos\n" << std::setprecision(17);
  for (size_t k = 0; k < c.t.size(); ++k) {
    os << c.t[k] << ',' << c.tau_M[k] << ',' << c.tau_S[k] << ',' << c.angle_cos[k]
       << '\n';
  }
}

}  // namespace cmc
