#ifndef CMC_HOPF_HPP
#define CMC_HOPF_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include "cmc/boundary.hpp"
#include "cmc/surfaces.hpp"
#include "cmc/types.hpp"

namespace cmc {

// Mean curvature H = <f_xx + f_yy, N> / (2 nu^2) of a conformal jet.
double mean_curvature(const Jet2& j);

// Hopf coefficient Q = <N, f_zz>
//                    = (<N, f_xx> - <N, f_yy>)/4 - i <N, f_xy>/2.
// Holomorphic in the parameter exactly when H is constant; its zeros are
// the umbilic points.
Complex hopf_coefficient(const Jet2& j);

// (kappa_plus, kappa_minus) = H +- 2|Q|/nu^2.
std::pair<double, double> principal_curvatures(const Jet2& j);

struct HopfSample {
  Complex z;
  Complex Q;
  double nu2;
  double H;
  double cr_residual;  // |dQ/dz_bar| by central differences
};

struct HopfField {
  std::vector<HopfSample> samples;
  int grid_n = 0;
  double h = 0.0;

  double cr_max() const;
};

// Uniform grid_n x grid_n lattice over the domain's bounding square,
// restricted to points a safe margin inside the domain.
std::vector<Complex> interior_grid(const Domain& d, int grid_n);

// Q, nu^2, H and the Cauchy-Riemann residual of Q on an interior grid.
// The parallel version is the default; the serial one is the reference.
HopfField hopf_field(const Surface& surface, int grid_n, double h = 1e-4);
HopfField hopf_field_serial(const Surface& surface, int grid_n, double h = 1e-4);

// max |dQ/dz_bar| over the interior grid; ~0 iff the surface is CMC.
double cr_residual(const Surface& surface, int grid_n, double h = 1e-4);

// max_t |Q - (kappa_n - H - i tau_g) nu^2 / 2| over a boundary profile,
// with Q in the boundary coordinate.
double boundary_hopf_identity(const BoundaryProfile& p, double H);

struct UmbilicScanResult {
  std::vector<Complex> points;   // grid points with |Q| below the threshold
  bool globally_umbilic = false; // max |Q| itself is negligible
  double q_max = 0.0;
  double threshold = 0.0;
};

UmbilicScanResult umbilic_scan(const Surface& surface, int grid_n, double tol = 1e-6);

// CSV with columns re(z), im(z), re(Q), im(Q), nu2, cr_residual.
void write_hopf_csv(std::ostream& os, const HopfField& field);

}  // namespace cmc

#endif
