#ifndef CMC_IDENTITIES_HPP
#define CMC_IDENTITIES_HPP

#include <array>
#include <optional>
#include <string>

#include <json.hpp>

#include "cmc/boundary.hpp"
#include "cmc/hopf.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

// Throughout, alpha = (kappa_n - H) nu^2 and beta = -tau_g nu^2 are the
// real and imaginary parts of the boundary Hopf data (up to the factor 2).

struct IntegralIdentities {
  double I1;  // integral of (H - kappa_n) (ds/dt)^2 dt; zero for CMC discs
  double I2;  // integral of tau_g (ds/dt)^2 dt; zero for CMC discs
  // integrals of alpha cos t, alpha sin t, beta cos t, beta sin t
  std::array<double, 4> moments;
};

IntegralIdentities integral_identities(const BoundaryProfile& p, double H);

struct RecoveredMean {
  double H_recovered;  // weighted average of kappa_n with weight (ds/dt)^2
  double M;            // total weight
};

RecoveredMean recover_H(const BoundaryProfile& p);

struct FourierDiagnostics {
  FourierCoefficients alpha_c, beta_c;
  double low_order_max;     // max coefficient magnitude over |m| <= 1
  double pairing_residual;  // max over 2 <= m <= n_max of |c_m(beta) + i c_m(alpha)|
  double coeff_max;         // largest coefficient magnitude seen
};

FourierDiagnostics fourier_structure(const BoundaryProfile& p, double H, int n_max = 16);

enum class Classification { TotallyUmbilic, StrictlyBounded, Violation };

const char* to_string(Classification c);

// Trichotomy for the boundary data of a CMC disc: either kappa_n == H and
// tau_g == 0 everywhere, or H lies strictly between min and max of
// kappa_n. Anything else (e.g. data from a non-disc domain) is a
// Violation.
Classification classify(const BoundaryProfile& p, double H, double tol = 1e-6);

// Line integral of <Y, a> + H <(gamma - centroid) x X, a> with respect to
// arc length; vanishes over the full boundary of a compact CMC surface.
double flux_residual(const BoundaryProfile& p, double H, const Vec3& a);

// Specialization for a planar circular boundary: integral of
// (kappa_n - H) (ds/dt) dt. Throws std::domain_error when the sampled
// boundary is not a planar circle.
double circular_flux(const BoundaryProfile& p, double H);

struct ReportConfig {
  double rho = 1.0;
  int n = 512;
  int grid_n = 32;
  double tol = 1e-6;
  int n_max = 16;
};

struct IdentityReport {
  std::string surface_kind;
  std::string surface_descriptor;
  ReportConfig config;

  double I1 = 0, I2 = 0;
  std::array<double, 4> moments{};
  double M = 0;
  double H_recovered = 0, H_nominal = 0;
  double kappa_n_min = 0, kappa_n_max = 0;
  Classification classification = Classification::Violation;
  std::array<double, 3> flux_residuals{};  // basis directions e1, e2, e3
  std::optional<double> circular_flux;
  FourierDiagnostics fourier;
  double cr_residual = 0;
  double boundary_hopf = 0;
  UmbilicScanResult umbilics;
  std::vector<std::string> warnings;
};

// Runs the full diagnostic set for one surface. For an annulus domain the
// flux is accumulated over both boundary circles with their induced
// orientations; everything else is evaluated on the circle config.rho.
IdentityReport build_report(const Surface& surface, const ReportConfig& config);

nlohmann::ordered_json report_to_json(const IdentityReport& report);

}  // namespace cmc

#endif
