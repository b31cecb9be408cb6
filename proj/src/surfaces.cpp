#include "cmc/surfaces.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "cmc/numerics.hpp"

namespace cmc {

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (size_t i = coeff.size(); i-- > 0;) acc = acc * z + coeff[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Polynomial d;
  for (size_t i = 1; i < coeff.size(); ++i)
    d.coeff.push_back(static_cast<double>(i) * coeff[i]);
  return d;
}

Polynomial Polynomial::antiderivative() const {
  Polynomial a;
  a.coeff.push_back(0.0);
  for (size_t i = 0; i < coeff.size(); ++i)
    a.coeff.push_back(coeff[i] / static_cast<double>(i + 1));
  return a;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial p;
  if (coeff.empty() || other.coeff.empty()) return p;
  p.coeff.assign(coeff.size() + other.coeff.size() - 1, Complex(0.0));
  for (size_t i = 0; i < coeff.size(); ++i)
    for (size_t j = 0; j < other.coeff.size(); ++j)
      p.coeff[i + j] += coeff[i] * other.coeff[j];
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p;
  p.coeff.resize(std::max(coeff.size(), other.coeff.size()), Complex(0.0));
  for (size_t i = 0; i < coeff.size(); ++i) p.coeff[i] += coeff[i];
  for (size_t i = 0; i < other.coeff.size(); ++i) p.coeff[i] += other.coeff[i];
  return p;
}

Polynomial Polynomial::scaled(Complex s) const {
  Polynomial p = *this;
  for (auto& c : p.coeff) c *= s;
  return p;
}

bool Domain::contains(Complex z, double slack) const {
  const double r = std::abs(z);
  if (kind == DomainKind::Disc) return r <= r_out * (1.0 + slack);
  return r >= r_in * (1.0 - slack) && r <= r_out * (1.0 + slack);
}

void Surface::require_inside(Complex z) const {
  if (!domain().contains(z)) {
    std::ostringstream os;
    os << kind_name() << ": parameter point (" << z.real() << ", " << z.imag()
       << ") outside the domain";
    throw std::domain_error(os.str());
  }
}

namespace {

void format_real(std::ostream& os, double v) {
  os << std::setprecision(17) << v;
}

void format_complex(std::ostream& os, Complex c) {
  format_real(os, c.real());
  if (c.imag() != 0.0) {
    os << ',';
    format_real(os, c.imag());
  }
}

void format_poly(std::ostream& os, const char* key, const Polynomial& p) {
  os << key;
  for (const Complex& c : p.coeff) {
    os << ' ';
    format_complex(os, c);
  }
  os << '\n';
}

class SphereCap final : public Surface {
 public:
  SphereCap(double H, double domain_radius) : H_(H), rho_(domain_radius) {
    if (!(H > 0.0)) throw std::invalid_argument("sphere_cap: H must be positive");
    if (!(domain_radius > 0.0) || domain_radius > 1.0)
      throw std::invalid_argument("sphere_cap: domain radius must lie in (0, 1]");
  }

  Jet2 jet(Complex z) const override {
    require_inside(z);
    const Dual2 x = Dual2::var_x(z.real());
    const Dual2 y = Dual2::var_y(z.imag());
    const Dual2 inv = recip(1.0 + x * x + y * y);
    const double c = 1.0 / H_;
    return pack_jet(c * (2.0 * (x * inv)), c * (2.0 * (y * inv)),
                    c * ((x * x + y * y - 1.0) * inv));
  }

  Domain domain() const override { return {DomainKind::Disc, 0.0, rho_}; }
  double nominal_H() const override { return H_; }
  std::string kind_name() const override { return "sphere-cap"; }

  std::string descriptor() const override {
    std::ostringstream os;
    os << "surface sphere-cap\nH ";
    format_real(os, H_);
    os << "\ndomain-radius ";
    format_real(os, rho_);
    os << "\norientation fx-cross-fy\n";
    return os.str();
  }

 private:
  double H_, rho_;
};

class PlaneDisc final : public Surface {
 public:
  Jet2 jet(Complex z) const override {
    require_inside(z);
    Jet2 j;
    j.f = {z.real(), z.imag(), 0.0};
    j.f_x = {1.0, 0.0, 0.0};
    j.f_y = {0.0, 1.0, 0.0};
    j.f_xx = j.f_xy = j.f_yy = Vec3::Zero();
    return j;
  }

  Domain domain() const override { return {DomainKind::Disc, 0.0, 1.0}; }
  double nominal_H() const override { return 0.0; }
  std::string kind_name() const override { return "plane-disc"; }

  std::string descriptor() const override {
    return "surface plane-disc\ndomain-radius 1\norientation fx-cross-fy\n";
  }
};

class Enneper final : public Surface {
 public:
  Jet2 jet(Complex z) const override {
    require_inside(z);
    const Dual2 u = Dual2::var_x(z.real());
    const Dual2 v = Dual2::var_y(z.imag());
    return pack_jet(u - (u * u * u) / 3.0 + u * (v * v),
                    -(v - (v * v * v) / 3.0 + (u * u) * v), u * u - v * v);
  }

  Domain domain() const override { return {DomainKind::Disc, 0.0, 1.0}; }
  double nominal_H() const override { return 0.0; }
  std::string kind_name() const override { return "enneper"; }

  std::string descriptor() const override {
    return "surface enneper\ndomain-radius 1\norientation fx-cross-fy\n";
  }
};

class CylinderAnnulus final : public Surface {
 public:
  CylinderAnnulus(double R, double half_height) : R_(R), hh_(half_height) {
    if (!(R > 0.0)) throw std::invalid_argument("cylinder_annulus: R must be positive");
    if (!(half_height > 0.0))
      throw std::invalid_argument("cylinder_annulus: half height must be positive");
  }

  Jet2 jet(Complex w) const override {
    require_inside(w);
    // Strip coordinates z = -i log w, i.e. x = arg w, y = -log|w|; the
    // immersion is periodic in x for every R, so it is single-valued on
    // the annulus. The minus signs orient the normal toward the axis.
    const double x = std::arg(w);
    const double y = -0.5 * std::log(std::norm(w));
    const Dual2 xd = Dual2::var_x(x);
    const Dual2 yd = Dual2::var_y(y);
    const Jet2 strip = pack_jet(R_ * cos(xd), R_ * sin(xd), (-R_) * yd);
    const Complex dz = Complex(0.0, -1.0) / w;
    const Complex d2z = Complex(0.0, 1.0) / (w * w);
    return pullback_jet(strip, dz, d2z);
  }

  Domain domain() const override {
    return {DomainKind::Annulus, std::exp(-hh_), std::exp(hh_)};
  }
  double nominal_H() const override { return 1.0 / (2.0 * R_); }
  std::string kind_name() const override { return "cylinder-annulus"; }

  std::string descriptor() const override {
    std::ostringstream os;
    os << "surface cylinder-annulus\nR ";
    format_real(os, R_);
    os << "\nhalf-height ";
    format_real(os, hh_);
    os << "\norientation fx-cross-fy\n";
    return os.str();
  }

 private:
  double R_, hh_;
};

class WeierstrassMinimal final : public Surface {
 public:
  WeierstrassMinimal(const WeierstrassData& data, double domain_radius)
      : data_(data), rho_(domain_radius) {
    if (data.fpoly.coeff.empty())
      throw std::invalid_argument("weierstrass_minimal: empty weight polynomial");
    if (!(domain_radius > 0.0))
      throw std::invalid_argument("weierstrass_minimal: domain radius must be positive");

    const Polynomial g2 = data.gpoly * data.gpoly;
    phi_[0] = (data.fpoly + g2.scaled(-1.0) * data.fpoly).scaled(0.5);
    phi_[1] = (data.fpoly + g2 * data.fpoly).scaled(Complex(0.0, 0.5));
    phi_[2] = data.fpoly * data.gpoly;
    for (int i = 0; i < 3; ++i) {
      dphi_[i] = phi_[i].derivative();
      F_[i] = phi_[i].antiderivative();
    }
    check_metric();
  }

  Jet2 jet(Complex z) const override {
    require_inside(z);
    Jet2 j;
    for (int i = 0; i < 3; ++i) {
      const Complex Fv = F_[i](z);
      const Complex p = phi_[i](z);
      const Complex dp = dphi_[i](z);
      j.f[i] = Fv.real();
      j.f_x[i] = p.real();
      j.f_y[i] = -p.imag();
      j.f_xx[i] = dp.real();
      j.f_xy[i] = -dp.imag();
      j.f_yy[i] = -dp.real();
    }
    return j;
  }

  Domain domain() const override { return {DomainKind::Disc, 0.0, rho_}; }
  double nominal_H() const override { return 0.0; }
  std::string kind_name() const override { return "weierstrass-minimal"; }

  std::string descriptor() const override {
    std::ostringstream os;
    os << "surface weierstrass-minimal\n";
    format_poly(os, "fpoly", data_.fpoly);
    format_poly(os, "gpoly", data_.gpoly);
    os << "domain-radius ";
    format_real(os, rho_);
    os << "\norientation fx-cross-fy\n";
    return os.str();
  }

 private:
  double metric_factor(Complex z) const {
    return std::abs(data_.fpoly(z)) * (1.0 + std::norm(data_.gpoly(z))) * 0.5;
  }

  // Sampled scan of the induced metric factor over the closed domain;
  // rejects data whose conformal factor (nearly) vanishes inside it.
  void check_metric() const {
    double best = std::numeric_limits<double>::infinity(), worst = 0.0;
    Complex where = 0.0;
    for (int ir = 0; ir <= 64; ++ir) {
      const double r = rho_ * ir / 64.0;
      const int nth = ir == 0 ? 1 : 96;
      for (int it = 0; it < nth; ++it) {
        const Complex z = std::polar(r, two_pi * it / nth);
        const double m = metric_factor(z);
        if (m < best) {
          best = m;
          where = z;
        }
        worst = std::max(worst, m);
      }
    }
    if (best < 1e-4 * worst)
      throw BranchPointError("weierstrass_minimal: metric factor vanishes in domain", where);
  }

  WeierstrassData data_;
  double rho_;
  Polynomial phi_[3], dphi_[3], F_[3];
};

class EvaluatorSurface final : public Surface {
 public:
  EvaluatorSurface(std::function<Vec3(double, double)> eval, double domain_radius,
                   double nominal_H, double fd_h)
      : eval_(std::move(eval)), rho_(domain_radius), H_(nominal_H), h_(fd_h) {
    if (!eval_) throw std::invalid_argument("evaluator_surface: null evaluator");
    if (!(domain_radius > 0.0))
      throw std::invalid_argument("evaluator_surface: domain radius must be positive");
    if (!(fd_h > 0.0)) throw std::invalid_argument("evaluator_surface: step must be positive");
  }

  Jet2 jet(Complex z) const override {
    require_inside(z);
    return fd_jet(eval_, z, h_);
  }

  Domain domain() const override { return {DomainKind::Disc, 0.0, rho_}; }
  double nominal_H() const override { return H_; }
  std::string kind_name() const override { return "evaluator"; }

  std::string descriptor() const override {
    throw std::invalid_argument("evaluator surfaces have no serializable descriptor");
  }

 private:
  std::function<Vec3(double, double)> eval_;
  double rho_, H_, h_;
};

Complex parse_complex_token(const std::string& tok) {
  const size_t comma = tok.find(',');
  if (comma == std::string::npos) return Complex(std::stod(tok), 0.0);
  return Complex(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
}

}  // namespace

std::unique_ptr<Surface> sphere_cap(double H, double domain_radius) {
  return std::make_unique<SphereCap>(H, domain_radius);
}
std::unique_ptr<Surface> plane_disc() { return std::make_unique<PlaneDisc>(); }
std::unique_ptr<Surface> enneper() { return std::make_unique<Enneper>(); }
std::unique_ptr<Surface> cylinder_annulus(double R, double half_height) {
  return std::make_unique<CylinderAnnulus>(R, half_height);
}
std::unique_ptr<Surface> weierstrass_minimal(const WeierstrassData& data,
                                             double domain_radius) {
  return std::make_unique<WeierstrassMinimal>(data, domain_radius);
}
std::unique_ptr<Surface> evaluator_surface(std::function<Vec3(double, double)> eval,
                                           double domain_radius, double nominal_H,
                                           double fd_h) {
  return std::make_unique<EvaluatorSurface>(std::move(eval), domain_radius, nominal_H, fd_h);
}

std::unique_ptr<Surface> parse_descriptor(const std::string& text) {
  std::istringstream is(text);
  std::string line, kind, orientation = "fx-cross-fy";
  double H = 1.0, radius = 1.0, R = 1.0, half_height = 0.5;
  bool have_kind = false;
  WeierstrassData data;

  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "surface") {
      ls >> kind;
      have_kind = true;
    } else if (key == "H") {
      ls >> H;
    } else if (key == "domain-radius") {
      ls >> radius;
    } else if (key == "R") {
      ls >> R;
    } else if (key == "half-height") {
      ls >> half_height;
    } else if (key == "orientation") {
      ls >> orientation;
    } else if (key == "fpoly" || key == "gpoly") {
      Polynomial p;
      std::string tok;
      while (ls >> tok) p.coeff.push_back(parse_complex_token(tok));
      (key == "fpoly" ? data.fpoly : data.gpoly) = p;
    } else {
      throw std::invalid_argument("parse_descriptor: unknown key '" + key + "'");
    }
  }

  if (!have_kind) throw std::invalid_argument("parse_descriptor: missing 'surface' line");
  if (orientation != "fx-cross-fy")
    throw std::invalid_argument("parse_descriptor: unsupported orientation '" + orientation + "'");

  if (kind == "sphere-cap") return sphere_cap(H, radius);
  if (kind == "plane-disc") return plane_disc();
  if (kind == "enneper") return enneper();
  if (kind == "cylinder-annulus") return cylinder_annulus(R, half_height);
  if (kind == "weierstrass-minimal") return weierstrass_minimal(data, radius);
  throw std::invalid_argument("parse_descriptor: unknown surface kind '" + kind + "'");
}

}  // namespace cmc
