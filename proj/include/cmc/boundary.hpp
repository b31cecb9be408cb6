#ifndef CMC_BOUNDARY_HPP
#define CMC_BOUNDARY_HPP

#include <iosfwd>
#include <vector>

#include "cmc/numerics.hpp"
#include "cmc/surfaces.hpp"
#include "cmc/types.hpp"

namespace cmc {

// Orthonormal frame along a boundary curve: X the unit tangent, N the
// surface normal, Y = N x X the conormal.
struct DarbouxFrame {
  Vec3 X, Y, N;
};

// Frame at one jet for a tangent direction (a, b) in the parameter plane,
// i.e. X is a*f_x + b*f_y normalized.
DarbouxFrame darboux_frame(const Jet2& j, double a, double b);

// Sampled geometry of the circle |w| = rho, pulled back to the boundary
// coordinate z = -i log w in which x = t runs along the curve. Fields are
// indexed by the uniform parameter t_k = 2 pi k / n.
struct BoundaryProfile {
  double rho = 1.0;
  std::vector<double> t;
  std::vector<Vec3> gamma;
  std::vector<DarbouxFrame> frame;
  std::vector<double> nu2;      // <f_x, f_x> in the boundary coordinate
  std::vector<double> ds_dt;    // sqrt(nu2)
  std::vector<double> kappa_g;  // geodesic curvature
  std::vector<double> kappa_n;  // normal curvature
  std::vector<double> tau_g;    // geodesic torsion, from the normal's derivative
  std::vector<Complex> hopf;    // Hopf coefficient in the boundary coordinate

  int n() const { return static_cast<int>(t.size()); }
  double diameter() const;  // bounding-box diagonal of gamma
};

// Jet of the surface in the boundary coordinate at the point
// z = t - i log(rho); the single place where the disc/strip coordinate
// change is applied.
Jet2 strip_jet(const Surface& surface, double rho, double t);

// Samples the profile on n >= 64 uniform points. The parallel version is
// the default; the serial one is the reference implementation and must
// produce identical output.
BoundaryProfile boundary_profile(const Surface& surface, double rho, int n);
BoundaryProfile boundary_profile_serial(const Surface& surface, double rho, int n);

// CSV with columns t, x, y, z, nu2, ds_dt, kappa_g, kappa_n, tau_g.
void write_profile_csv(std::ostream& os, const BoundaryProfile& p);

}  // namespace cmc

#endif
