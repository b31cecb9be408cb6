#ifndef CMC_SURFACES_HPP
#define CMC_SURFACES_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cmc/types.hpp"

namespace cmc {

// Complex polynomial with coefficients in ascending degree order.
struct Polynomial {
  std::vector<Complex> coeff;

  Complex operator()(Complex z) const;
  Polynomial derivative() const;
  Polynomial antiderivative() const;  // constant term zero
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial scaled(Complex s) const;
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
};

enum class DomainKind { Disc, Annulus };

struct Domain {
  DomainKind kind = DomainKind::Disc;
  double r_in = 0.0;
  double r_out = 1.0;

  // Small relative slack so that points generated on the boundary circle
  // are not rejected for one ulp of rounding.
  bool contains(Complex z, double slack = 1e-9) const;
};

// A conformally parameterized surface patch f: domain -> R^3. Orientation
// convention throughout: the unit normal is f_x x f_y normalized.
class Surface {
 public:
  virtual ~Surface() = default;

  // 2-jet at a domain point; throws std::domain_error outside the domain.
  virtual Jet2 jet(Complex z) const = 0;

  virtual Domain domain() const = 0;
  virtual double nominal_H() const = 0;
  virtual std::string kind_name() const = 0;

  // Plain-text configuration record (kind, parameters, domain,
  // orientation); see parse_descriptor for the inverse.
  virtual std::string descriptor() const = 0;

  bool disc_topology() const { return domain().kind == DomainKind::Disc; }

 protected:
  void require_inside(Complex z) const;
};

// Spherical cap of mean curvature H > 0 (sphere radius 1/H), parameterized
// over the disc of radius `domain_radius` <= 1 by scaled inverse
// stereographic projection. domain_radius = 1 gives a hemisphere.
std::unique_ptr<Surface> sphere_cap(double H, double domain_radius = 1.0);

// Flat unit disc in the z = 0 plane.
std::unique_ptr<Surface> plane_disc();

// Classical cubic minimal immersion
// (u - u^3/3 + u v^2, -(v - v^3/3 + u^2 v), u^2 - v^2) on the closed unit disc.
std::unique_ptr<Surface> enneper();

// Round cylinder of radius R about the z-axis, conformally parameterized
// over the annulus exp(-half_height) <= |w| <= exp(half_height); the unit
// circle |w| = 1 maps to the waist circle. Not a disc-type domain.
std::unique_ptr<Surface> cylinder_annulus(double R, double half_height = 0.5);

struct WeierstrassData {
  Polynomial fpoly;  // holomorphic weight
  Polynomial gpoly;  // Gauss map
};

// Minimal immersion f = Re int (fpoly (1 - gpoly^2)/2, i fpoly (1 + gpoly^2)/2,
// fpoly gpoly) dz with exact polynomial antiderivatives. Throws
// BranchPointError if the induced metric factor |fpoly|(1+|gpoly|^2)/2
// vanishes inside the requested domain.
std::unique_ptr<Surface> weierstrass_minimal(const WeierstrassData& data,
                                             double domain_radius = 1.0);

// Wraps an arbitrary point evaluator with finite-difference jets; the
// evaluator must be defined slightly beyond the domain circle (up to
// 2 * fd_h). Intended for externally supplied immersions and controls.
std::unique_ptr<Surface> evaluator_surface(std::function<Vec3(double, double)> eval,
                                           double domain_radius, double nominal_H,
                                           double fd_h = 1e-4);

// Parses a descriptor record produced by Surface::descriptor.
std::unique_ptr<Surface> parse_descriptor(const std::string& text);

}  // namespace cmc

#endif
