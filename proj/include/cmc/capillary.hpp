#ifndef CMC_CAPILLARY_HPP
#define CMC_CAPILLARY_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "cmc/boundary.hpp"
#include "cmc/identities.hpp"

namespace cmc {

// Ruled surface through the boundary curve that meets the base surface at
// a prescribed angle theta(t): ruling direction d = cos(theta) Y +
// sin(theta) N, support normal N2 = cos(theta) N - sin(theta) Y, support
// conormal Y2 = d. By construction <N1, N2> = cos(theta).
struct SupportSurface {
  std::vector<double> t, theta, ds_dt;
  std::vector<Vec3> d, N2, Y2;
  std::vector<double> angle_cos;  // <N1, N2> sampled from the frames

  int n() const { return static_cast<int>(t.size()); }
};

SupportSurface ruled_support(const BoundaryProfile& p,
                             const std::function<double(double)>& angle_fn);
SupportSurface ruled_support(const BoundaryProfile& p, double constant_angle);

// Geodesic torsion of the boundary curve as a curve in the support
// surface: -<dN2/ds, Y2>, with the derivative taken spectrally.
std::vector<double> torsion_in_support(const SupportSurface& s);

struct TorsionComparison {
  std::vector<double> t, tau_M, tau_S, angle_cos;
  double max_gap = 0.0;     // max |tau_M - tau_S|
  double angle_range = 0.0; // range of theta in radians
  double scale = 0.0;       // reference magnitude for gap tolerances
};

TorsionComparison torsion_comparison(const BoundaryProfile& p, const SupportSurface& s);

enum class TJVerdict {
  ConstantAngleAndEqualTorsion,
  VaryingAngleAndUnequalTorsion,
  Inconsistent,
};

const char* to_string(TJVerdict v);

// The two torsions agree exactly when the intersection angle is constant;
// any mixed outcome is flagged Inconsistent. Angles are treated as
// constant when their range is below 1e-8 rad.
TJVerdict tj_check(const TorsionComparison& c, double tol = 1e-6);

enum class CapillaryUmbilicity { UmbilicCertified, NonUmbilic };

const char* to_string(CapillaryUmbilicity u);

// For a constant-angle (capillary) configuration: the disc is totally
// umbilic exactly when the support torsion is constant along the contact
// line, and then that torsion vanishes. Requires a constant contact
// angle; cross-checks against classify on certification.
CapillaryUmbilicity capillary_umbilicity(const BoundaryProfile& p, const SupportSurface& s,
                                         double H, double tol = 1e-6);

// CSV with columns t, tau_M, tau_S, angle_cos.
void write_torsion_csv(std::ostream& os, const TorsionComparison& c);

}  // namespace cmc

#endif
