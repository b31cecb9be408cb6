#include "cmc/types.hpp"

namespace cmc {

Jet2 pullback_jet(const Jet2& j, Complex dw, Complex d2w) {
  // With w = u + iv holomorphic in z = x + iy, the Cauchy-Riemann
  // equations give u_x = Re dw, v_x = Im dw, u_y = -v_x, v_y = u_x,
  // and similarly for the second derivatives.
  const double a = dw.real(), b = dw.imag();
  const double c = d2w.real(), d = d2w.imag();

  Jet2 out;
  out.f = j.f;
  out.f_x = a * j.f_x + b * j.f_y;
  out.f_y = -b * j.f_x + a * j.f_y;
  out.f_xx = a * a * j.f_xx + 2.0 * a * b * j.f_xy + b * b * j.f_yy +
             c * j.f_x + d * j.f_y;
  out.f_xy = -a * b * j.f_xx + (a * a - b * b) * j.f_xy + a * b * j.f_yy -
             d * j.f_x + c * j.f_y;
  out.f_yy = b * b * j.f_xx - 2.0 * a * b * j.f_xy + a * a * j.f_yy -
             c * j.f_x - d * j.f_y;
  return out;
}

}  // namespace cmc
