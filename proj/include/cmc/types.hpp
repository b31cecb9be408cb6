#ifndef CMC_TYPES_HPP
#define CMC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cmc {

using Vec3 = Eigen::Vector3d;
using Complex = std::complex<double>;

// Second-order jet of a parameterized surface patch at one point:
// position, first and second partial derivatives with respect to the
// two real parameters.
struct Jet2 {
  Vec3 f, f_x, f_y, f_xx, f_xy, f_yy;
};

// Thrown when the first fundamental form degenerates (f_x x f_y ~ 0).
struct DegenerateImmersionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an induced metric factor vanishes inside the requested domain.
struct BranchPointError : std::runtime_error {
  Complex location;
  BranchPointError(const std::string& msg, Complex where)
      : std::runtime_error(msg), location(where) {}
};

// Pullback of a jet under a holomorphic change of parameter w = w(z).
// `j` is the jet in the w-parameter; `dw` and `d2w` are dw/dz and
// d^2w/dz^2 at the point. Returns the jet in the z-parameter. All sign
// bookkeeping for coordinate changes is centralized here.
Jet2 pullback_jet(const Jet2& j, Complex dw, Complex d2w);

}  // namespace cmc

#endif
