#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmc/hopf.hpp"
#include "cmc/numerics.hpp"
#include "cmc/surfaces.hpp"
#include "cmc/types.hpp"

using cmc::Complex;
using cmc::Domain;
using cmc::DomainKind;
using cmc::Jet2;
using cmc::Surface;
using cmc::Vec3;

namespace {

// Deterministic golden-angle spiral staying a safe margin inside the domain,
// so finite-difference probes never step outside.
std::vector<Complex> sample_points(const Domain& d, int m) {
  const double golden = 2.0 * cmc::two_pi / (1.0 + std::sqrt(5.0));
  std::vector<Complex> pts;
  pts.reserve(m);
  for (int k = 0; k < m; ++k) {
    const double u = (k + 0.5) / m;
    double r;
    if (d.kind == DomainKind::Disc) {
      r = 0.97 * d.r_out * std::sqrt(u);
    } else {
      r = 1.03 * d.r_in + u * (0.97 * d.r_out - 1.03 * d.r_in);
    }
    pts.push_back(std::polar(r, golden * k));
  }
  return pts;
}

struct NamedSurface {
  std::string name;
  std::unique_ptr<Surface> surface;
};

std::vector<NamedSurface> catalog() {
  std::vector<NamedSurface> list;
  list.push_back({"sphere-cap H=0.5", cmc::sphere_cap(0.5)});
  list.push_back({"sphere-cap H=1", cmc::sphere_cap(1.0)});
  list.push_back({"sphere-cap H=2 rho=0.7", cmc::sphere_cap(2.0, 0.7)});
  list.push_back({"plane-disc", cmc::plane_disc()});
  list.push_back({"enneper", cmc::enneper()});
  list.push_back({"cylinder R=1", cmc::cylinder_annulus(1.0)});
  list.push_back({"cylinder R=2.5 hh=0.35", cmc::cylinder_annulus(2.5, 0.35)});
  cmc::WeierstrassData linear{{{1.0}}, {{0.0, 1.0}}};
  list.push_back({"weierstrass g=z", cmc::weierstrass_minimal(linear)});
  cmc::WeierstrassData quadratic{{{1.0}}, {{0.0, 0.0, 1.0}}};
  list.push_back({"weierstrass g=z^2", cmc::weierstrass_minimal(quadratic)});
  cmc::WeierstrassData mixed{{{1.0, Complex(0.2, 0.1)}},
                             {{Complex(0.1, 0.0), Complex(0.0, 0.5), Complex(0.3, 0.0)}}};
  list.push_back({"weierstrass mixed", cmc::weierstrass_minimal(mixed)});
  return list;
}

double conformal_defect(const Jet2& j) {
  const double e = j.f_x.dot(j.f_x);
  const double g = j.f_y.dot(j.f_y);
  const double cross = j.f_x.dot(j.f_y);
  return std::max(std::abs(e - g), std::abs(cross)) / e;
}

double jet_gap(const Jet2& a, const Jet2& b) {
  double gap = 0.0;
  const std::pair<Vec3, Vec3> rows[] = {{a.f, b.f},     {a.f_x, b.f_x},
                                        {a.f_y, b.f_y}, {a.f_xx, b.f_xx},
                                        {a.f_xy, b.f_xy}, {a.f_yy, b.f_yy}};
  for (const auto& [u, v] : rows) gap = std::max(gap, (u - v).cwiseAbs().maxCoeff());
  return gap;
}

}  // namespace

TEST_CASE("catalog jets are conformal") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    double worst = 0.0;
    for (Complex z : sample_points(entry.surface->domain(), 100))
      worst = std::max(worst, conformal_defect(entry.surface->jet(z)));
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("analytic jets match finite differences") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const Surface& s = *entry.surface;
    auto eval = [&s](double x, double y) { return s.jet(Complex(x, y)).f; };
    double worst = 0.0;
    for (Complex z : sample_points(s.domain(), 12))
      worst = std::max(worst, jet_gap(s.jet(z), cmc::fd_jet(eval, z)));
    CHECK(worst < 2e-6);
  }
}

TEST_CASE("mean curvature matches the nominal value") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const double H = entry.surface->nominal_H();
    double worst = 0.0;
    for (Complex z : sample_points(entry.surface->domain(), 40))
      worst = std::max(worst, std::abs(cmc::mean_curvature(entry.surface->jet(z)) - H));
    CHECK(worst <= 1e-9 * (1.0 + std::abs(H)));
  }
}

TEST_CASE("cubic minimal surface pinned values") {
  auto s = cmc::enneper();
  const Jet2 at0 = s->jet(Complex(0.0, 0.0));
  CHECK(at0.f.norm() == 0.0);
  CHECK((at0.f_x - Vec3(1, 0, 0)).norm() < 1e-14);
  CHECK((at0.f_y - Vec3(0, -1, 0)).norm() < 1e-14);
  const auto [kp, km] = cmc::principal_curvatures(at0);
  CHECK(kp == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(km == doctest::Approx(-2.0).epsilon(1e-13));

  const Jet2 at1 = s->jet(Complex(1.0, 0.0));
  CHECK(at1.f_x.dot(at1.f_x) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK((at1.f_x - Vec3(0, 0, 2)).norm() < 1e-13);
  CHECK((at1.f_y - Vec3(0, -2, 0)).norm() < 1e-13);
  CHECK(s->nominal_H() == 0.0);
  CHECK(s->disc_topology());
}

TEST_CASE("sphere cap pinned values") {
  auto s = cmc::sphere_cap(1.0);
  const Jet2 at0 = s->jet(Complex(0.0, 0.0));
  CHECK((at0.f - Vec3(0, 0, -1)).norm() < 1e-14);
  CHECK((at0.f_x - Vec3(2, 0, 0)).norm() < 1e-14);
  CHECK((at0.f_y - Vec3(0, 2, 0)).norm() < 1e-14);
  CHECK(cmc::mean_curvature(at0) == doctest::Approx(1.0).epsilon(1e-13));

  // All image points sit on the sphere of radius 1/H about the origin.
  auto cap2 = cmc::sphere_cap(2.0);
  for (Complex z : sample_points(cap2->domain(), 25))
    CHECK(cap2->jet(z).f.norm() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("cylinder metric and curvature") {
  for (double R : {1.0, 2.5}) {
    CAPTURE(R);
    auto s = cmc::cylinder_annulus(R);
    CHECK(s->nominal_H() == doctest::Approx(1.0 / (2.0 * R)).epsilon(1e-15));
    CHECK_FALSE(s->disc_topology());
    for (Complex z : sample_points(s->domain(), 30)) {
      const Jet2 j = s->jet(z);
      // Conformal factor R/|w|, distance R from the axis.
      CHECK(j.f_x.dot(j.f_x) * std::norm(z) == doctest::Approx(R * R).epsilon(1e-12));
      CHECK(std::hypot(j.f.x(), j.f.y()) == doctest::Approx(R).epsilon(1e-13));
      CHECK(cmc::mean_curvature(j) == doctest::Approx(1.0 / (2.0 * R)).epsilon(1e-12));
    }
  }
}

TEST_CASE("linear gauss map reproduces half the cubic surface") {
  cmc::WeierstrassData linear{{{1.0}}, {{0.0, 1.0}}};
  auto w = cmc::weierstrass_minimal(linear);
  auto e = cmc::enneper();
  for (Complex z : sample_points(e->domain(), 10)) {
    Jet2 doubled = w->jet(z);
    doubled.f *= 2.0;
    doubled.f_x *= 2.0;
    doubled.f_y *= 2.0;
    doubled.f_xx *= 2.0;
    doubled.f_xy *= 2.0;
    doubled.f_yy *= 2.0;
    CHECK(jet_gap(doubled, e->jet(z)) < 1e-13);
  }
}

TEST_CASE("hopf coefficient of weierstrass surfaces is -f g'/2") {
  cmc::WeierstrassData quadratic{{{1.0}}, {{0.0, 0.0, 1.0}}};
  auto s = cmc::weierstrass_minimal(quadratic);
  for (Complex z : sample_points(s->domain(), 15)) {
    const Complex q = cmc::hopf_coefficient(s->jet(z));
    CHECK(std::abs(q - (-z)) < 1e-12);
  }

  cmc::WeierstrassData mixed{{{1.0, Complex(0.2, 0.1)}},
                             {{Complex(0.1, 0.0), Complex(0.0, 0.5), Complex(0.3, 0.0)}}};
  auto m = cmc::weierstrass_minimal(mixed);
  const cmc::Polynomial expected =
      mixed.fpoly * mixed.gpoly.derivative() * cmc::Polynomial{{-0.5}};
  for (Complex z : sample_points(m->domain(), 15)) {
    const Complex q = cmc::hopf_coefficient(m->jet(z));
    CHECK(std::abs(q - expected(z)) < 1e-12);
  }
}

TEST_CASE("degenerate weierstrass data is rejected") {
  // Weight vanishing at the origin collapses the metric there.
  cmc::WeierstrassData pinched{{{0.0, 1.0}}, {{0.0, 1.0}}};
  CHECK_THROWS_AS(cmc::weierstrass_minimal(pinched), cmc::BranchPointError);
  try {
    cmc::weierstrass_minimal(pinched);
  } catch (const cmc::BranchPointError& err) {
    CHECK(std::abs(err.location) < 0.1);
  }
}

TEST_CASE("descriptor round trip") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const std::string text = entry.surface->descriptor();
    auto parsed = cmc::parse_descriptor(text);
    CHECK(parsed->kind_name() == entry.surface->kind_name());
    const Domain a = entry.surface->domain();
    const Domain b = parsed->domain();
    CHECK(a.kind == b.kind);
    CHECK(a.r_in == doctest::Approx(b.r_in).epsilon(1e-15));
    CHECK(a.r_out == doctest::Approx(b.r_out).epsilon(1e-15));
    for (Complex z : sample_points(a, 3))
      CHECK(jet_gap(entry.surface->jet(z), parsed->jet(z)) < 1e-12);
  }

  CHECK_THROWS_AS(cmc::parse_descriptor("surface moebius\n"), std::invalid_argument);
  CHECK_THROWS_AS(cmc::parse_descriptor("surface enneper\nwibble 3\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      cmc::parse_descriptor("surface enneper\norientation fy-cross-fx\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(cmc::parse_descriptor("H 1\n"), std::invalid_argument);
}

TEST_CASE("evaluator surface wraps a point map") {
  auto reference = cmc::enneper();
  const Surface& ref = *reference;
  auto s = cmc::evaluator_surface(
      [&ref](double x, double y) { return ref.jet(Complex(x, y)).f; }, 0.9, 0.0);
  for (Complex z : sample_points(s->domain(), 10))
    CHECK(jet_gap(s->jet(z), ref.jet(z)) < 1e-5);
  CHECK_THROWS_AS(s->descriptor(), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(cmc::sphere_cap(0.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::sphere_cap(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::sphere_cap(1.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(cmc::sphere_cap(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::cylinder_annulus(0.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::cylinder_annulus(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::cylinder_annulus(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cmc::evaluator_surface(nullptr, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("points outside the domain are rejected") {
  auto e = cmc::enneper();
  CHECK_THROWS_AS(e->jet(Complex(1.5, 0.0)), std::domain_error);
  CHECK_NOTHROW(e->jet(Complex(1.0, 0.0)));  // boundary circle is allowed

  auto c = cmc::cylinder_annulus(1.0);
  const Domain d = c->domain();
  CHECK_THROWS_AS(c->jet(Complex(0.5 * d.r_in, 0.0)), std::domain_error);
  CHECK_THROWS_AS(c->jet(Complex(1.1 * d.r_out, 0.0)), std::domain_error);
  CHECK_NOTHROW(c->jet(Complex(d.r_out, 0.0)));
}
