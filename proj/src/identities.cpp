#include "cmc/identities.hpp"

#include <algorithm>
#include <cmath>

namespace cmc {

namespace {

PeriodicSamples<double> weighted(const BoundaryProfile& p,
                                 const std::function<double(int)>& f) {
  PeriodicSamples<double> s;
  s.values.resize(static_cast<size_t>(p.n()));
  for (int k = 0; k < p.n(); ++k) s.values[static_cast<size_t>(k)] = f(k);
  return s;
}

double alpha_at(const BoundaryProfile& p, double H, int k) {
  return (p.kappa_n[k] - H) * p.nu2[k];
}
double beta_at(const BoundaryProfile& p, int k) { return -p.tau_g[k] * p.nu2[k]; }

}  // namespace

IntegralIdentities integral_identities(const BoundaryProfile& p, double H) {
  IntegralIdentities out;
  out.I1 = periodic_integral(weighted(p, [&](int k) { return (H - p.kappa_n[k]) * p.nu2[k]; }));
  out.I2 = periodic_integral(weighted(p, [&](int k) { return p.tau_g[k] * p.nu2[k]; }));
  out.moments[0] =
      periodic_integral(weighted(p, [&](int k) { return alpha_at(p, H, k) * std::cos(p.t[k]); }));
  out.moments[1] =
      periodic_integral(weighted(p, [&](int k) { return alpha_at(p, H, k) * std::sin(p.t[k]); }));
  out.moments[2] =
      periodic_integral(weighted(p, [&](int k) { return beta_at(p, k) * std::cos(p.t[k]); }));
  out.moments[3] =
      periodic_integral(weighted(p, [&](int k) { return beta_at(p, k) * std::sin(p.t[k]); }));
  return out;
}

RecoveredMean recover_H(const BoundaryProfile& p) {
  RecoveredMean out;
  out.M = periodic_integral(weighted(p, [&](int k) { return p.nu2[k]; }));
  const double num =
      periodic_integral(weighted(p, [&](int k) { return p.kappa_n[k] * p.nu2[k]; }));
  if (!(out.M > 0.0)) throw std::invalid_argument("recover_H: degenerate weight");
  out.H_recovered = num / out.M;
  return out;
}

FourierDiagnostics fourier_structure(const BoundaryProfile& p, double H, int n_max) {
  if (n_max < 4) throw std::invalid_argument("fourier_structure: need n_max >= 4");
  FourierDiagnostics out;
  const auto alpha = weighted(p, [&](int k) { return alpha_at(p, H, k); });
  const auto beta = weighted(p, [&](int k) { return beta_at(p, k); });
  out.alpha_c = dft(alpha, n_max);
  out.beta_c = dft(beta, n_max);

  out.low_order_max = 0.0;
  for (int m = -1; m <= 1; ++m)
    out.low_order_max =
        std::max({out.low_order_max, std::abs(out.alpha_c(m)), std::abs(out.beta_c(m))});

  out.pairing_residual = 0.0;
  for (int m = 2; m <= n_max; ++m)
    out.pairing_residual = std::max(
        out.pairing_residual, std::abs(out.beta_c(m) + Complex(0.0, 1.0) * out.alpha_c(m)));

  out.coeff_max = 0.0;
  for (int m = -n_max; m <= n_max; ++m)
    out.coeff_max = std::max({out.coeff_max, std::abs(out.alpha_c(m)), std::abs(out.beta_c(m))});
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::TotallyUmbilic: return "TotallyUmbilic";
    case Classification::StrictlyBounded: return "StrictlyBounded";
    default: return "Violation";
  }
}

Classification classify(const BoundaryProfile& p, double H, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify: tol must be positive");
  const auto [kn_min_it, kn_max_it] = std::minmax_element(p.kappa_n.begin(), p.kappa_n.end());
  const auto [tg_min_it, tg_max_it] = std::minmax_element(p.tau_g.begin(), p.tau_g.end());
  const double kn_min = *kn_min_it, kn_max = *kn_max_it;
  const double tg_min = *tg_min_it, tg_max = *tg_max_it;

  double mag = std::abs(H);
  for (int k = 0; k < p.n(); ++k)
    mag = std::max({mag, std::abs(p.kappa_n[k]), std::abs(p.tau_g[k])});
  const double scale = std::max(mag, 1.0 / p.diameter());

  const bool kn_const = kn_max - kn_min < tol * scale;
  const bool tg_const = tg_max - tg_min < tol * scale;
  if (kn_const || tg_const) {
    const double kn_dev = std::max(std::abs(kn_min - H), std::abs(kn_max - H));
    const double tg_dev = std::max(std::abs(tg_min), std::abs(tg_max));
    if (kn_dev < tol * scale && tg_dev < tol * scale) return Classification::TotallyUmbilic;
    return Classification::Violation;
  }

  // Strictness margin of one quadrature error bar; a mean curvature that
  // only touches the range is reported as a Violation, never clamped.
  const double margin = 1e-8 * scale;
  if (kn_min + margin < H && H < kn_max - margin) return Classification::StrictlyBounded;
  return Classification::Violation;
}

double flux_residual(const BoundaryProfile& p, double H, const Vec3& a) {
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& g : p.gamma) centroid += g;
  centroid /= p.n();
  return periodic_integral(weighted(p, [&](int k) {
    const Vec3 moment = (p.gamma[k] - centroid).cross(p.frame[k].X);
    return (p.frame[k].Y.dot(a) + H * moment.dot(a)) * p.ds_dt[k];
  }));
}

double circular_flux(const BoundaryProfile& p, double H) {
  const int n = p.n();
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& g : p.gamma) centroid += g;
  centroid /= n;

  Vec3 axis = Vec3::Zero();
  for (int k = 0; k < n; ++k)
    axis += (p.gamma[k] - centroid).cross(p.gamma[(k + 1) % n] - centroid);
  if (axis.norm() <= 0.0) throw std::domain_error("circular_flux: boundary has no plane");
  axis.normalize();

  double radius = 0.0;
  for (const Vec3& g : p.gamma) radius += (g - centroid).norm();
  radius /= n;

  const double geo_tol = 1e-8 * p.diameter();
  for (const Vec3& g : p.gamma) {
    const Vec3 r = g - centroid;
    if (std::abs(r.dot(axis)) > geo_tol || std::abs(r.norm() - radius) > geo_tol)
      throw std::domain_error("circular_flux: boundary is not a planar circle");
  }

  return periodic_integral(
      weighted(p, [&](int k) { return (p.kappa_n[k] - H) * p.ds_dt[k]; }));
}

IdentityReport build_report(const Surface& surface, const ReportConfig& config) {
  IdentityReport rep;
  rep.surface_kind = surface.kind_name();
  try {
    rep.surface_descriptor = surface.descriptor();
  } catch (const std::invalid_argument&) {
    rep.surface_descriptor = "";
  }
  rep.config = config;
  rep.H_nominal = surface.nominal_H();

  const BoundaryProfile p = boundary_profile(surface, config.rho, config.n);
  const IntegralIdentities ii = integral_identities(p, rep.H_nominal);
  rep.I1 = ii.I1;
  rep.I2 = ii.I2;
  rep.moments = ii.moments;

  const RecoveredMean rec = recover_H(p);
  rep.H_recovered = rec.H_recovered;
  rep.M = rec.M;

  const auto [kn_min, kn_max] = std::minmax_element(p.kappa_n.begin(), p.kappa_n.end());
  rep.kappa_n_min = *kn_min;
  rep.kappa_n_max = *kn_max;

  rep.classification = classify(p, rep.H_nominal, config.tol);
  rep.fourier = fourier_structure(p, rep.H_nominal, config.n_max);
  rep.boundary_hopf = boundary_hopf_identity(p, rep.H_nominal);

  const Domain dom = surface.domain();
  for (int axis = 0; axis < 3; ++axis) {
    const Vec3 a = Vec3::Unit(axis);
    if (dom.kind == DomainKind::Disc) {
      rep.flux_residuals[static_cast<size_t>(axis)] = flux_residual(p, rep.H_nominal, a);
    } else {
      // Full boundary of the annulus: outer circle with the sampling
      // orientation, inner circle with the opposite (induced) one.
      const BoundaryProfile outer = boundary_profile(surface, dom.r_out, config.n);
      const BoundaryProfile inner = boundary_profile(surface, dom.r_in, config.n);
      rep.flux_residuals[static_cast<size_t>(axis)] =
          flux_residual(outer, rep.H_nominal, a) - flux_residual(inner, rep.H_nominal, a);
    }
  }

  try {
    rep.circular_flux = circular_flux(p, rep.H_nominal);
  } catch (const std::domain_error&) {
    rep.circular_flux = std::nullopt;
  }

  rep.cr_residual = cr_residual(surface, config.grid_n);
  rep.umbilics = umbilic_scan(surface, config.grid_n, config.tol);

  if (!surface.disc_topology())
    rep.warnings.push_back(
        "non-disc topology: single-boundary identities are reported as controls");
  return rep;
}

namespace {

nlohmann::ordered_json coefficients_json(const FourierCoefficients& c) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int m = -c.n_max; m <= c.n_max; ++m)
    rows.push_back({m, c(m).real(), c(m).imag()});
  return rows;
}

}  // namespace

nlohmann::ordered_json report_to_json(const IdentityReport& rep) {
  nlohmann::ordered_json j;
  j["I1"] = rep.I1;
  j["I2"] = rep.I2;
  j["moments"] = rep.moments;
  j["M"] = rep.M;
  j["H_recovered"] = rep.H_recovered;
  j["H_nominal"] = rep.H_nominal;
  j["kappa_n_min"] = rep.kappa_n_min;
  j["kappa_n_max"] = rep.kappa_n_max;
  j["classification"] = to_string(rep.classification);
  j["flux_residuals"] = rep.flux_residuals;
  if (rep.circular_flux)
    j["circular_flux"] = *rep.circular_flux;
  else
    j["circular_flux"] = nullptr;
  j["fourier"] = {{"n_max", rep.fourier.alpha_c.n_max},
                  {"alpha", coefficients_json(rep.fourier.alpha_c)},
                  {"beta", coefficients_json(rep.fourier.beta_c)},
                  {"low_order_max", rep.fourier.low_order_max},
                  {"pairing_residual", rep.fourier.pairing_residual}};
  j["cr_residual"] = rep.cr_residual;
  j["boundary_hopf"] = rep.boundary_hopf;

  nlohmann::ordered_json umb;
  umb["globally_umbilic"] = rep.umbilics.globally_umbilic;
  umb["q_max"] = rep.umbilics.q_max;
  umb["threshold"] = rep.umbilics.threshold;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Complex& z : rep.umbilics.points) pts.push_back({z.real(), z.imag()});
  umb["points"] = pts;
  j["umbilics"] = umb;

  j["warnings"] = rep.warnings;
  j["meta"] = {{"tool", "cmc-kit"},
               {"surface", rep.surface_kind},
               {"descriptor", rep.surface_descriptor},
               {"config",
                {{"rho", rep.config.rho},
                 {"n", rep.config.n},
                 {"grid_n", rep.config.grid_n},
                 {"tol", rep.config.tol},
                 {"n_max", rep.config.n_max}}}};
  return j;
}

}  // namespace cmc
