#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <utility>
#include <vector>

#include "cmc/boundary.hpp"
#include "cmc/hopf.hpp"
#include "cmc/surfaces.hpp"

using cmc::Complex;

namespace {

cmc::WeierstrassData mixed_data() {
  return {{{1.0, Complex(0.2, 0.1)}},
          {{Complex(0.1, 0.0), Complex(0.0, 0.5), Complex(0.3, 0.0)}}};
}

std::vector<std::pair<std::unique_ptr<cmc::Surface>, double>> cases() {
  std::vector<std::pair<std::unique_ptr<cmc::Surface>, double>> list;
  list.emplace_back(cmc::enneper(), 1.0);
  list.emplace_back(cmc::sphere_cap(2.0, 0.7), 0.7);
  list.emplace_back(cmc::cylinder_annulus(1.0), 1.0);
  list.emplace_back(cmc::weierstrass_minimal(mixed_data()), 0.9);
  return list;
}

}  // namespace

TEST_CASE("parallel boundary profiles match the serial reference bitwise") {
  for (const auto& [s, rho] : cases()) {
    CAPTURE(s->kind_name());
    const auto par = cmc::boundary_profile(*s, rho, 256);
    const auto ser = cmc::boundary_profile_serial(*s, rho, 256);
    REQUIRE(par.n() == ser.n());
    for (int k = 0; k < par.n(); ++k) {
      CHECK(par.t[k] == ser.t[k]);
      CHECK((par.gamma[k] - ser.gamma[k]).norm() == 0.0);
      CHECK((par.frame[k].X - ser.frame[k].X).norm() == 0.0);
      CHECK((par.frame[k].Y - ser.frame[k].Y).norm() == 0.0);
      CHECK((par.frame[k].N - ser.frame[k].N).norm() == 0.0);
      CHECK(par.nu2[k] == ser.nu2[k]);
      CHECK(par.ds_dt[k] == ser.ds_dt[k]);
      CHECK(par.kappa_g[k] == ser.kappa_g[k]);
      CHECK(par.kappa_n[k] == ser.kappa_n[k]);
      CHECK(par.tau_g[k] == ser.tau_g[k]);
      CHECK(par.hopf[k] == ser.hopf[k]);
    }
  }
}

TEST_CASE("parallel hopf fields match the serial reference bitwise") {
  for (const auto& [s, rho] : cases()) {
    CAPTURE(s->kind_name());
    const auto par = cmc::hopf_field(*s, 24);
    const auto ser = cmc::hopf_field_serial(*s, 24);
    REQUIRE(par.samples.size() == ser.samples.size());
    for (size_t i = 0; i < par.samples.size(); ++i) {
      CHECK(par.samples[i].z == ser.samples[i].z);
      CHECK(par.samples[i].Q == ser.samples[i].Q);
      CHECK(par.samples[i].nu2 == ser.samples[i].nu2);
      CHECK(par.samples[i].H == ser.samples[i].H);
      CHECK(par.samples[i].cr_residual == ser.samples[i].cr_residual);
    }
  }
}
