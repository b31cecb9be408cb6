// Times the parallel kernels against their serial reference
// implementations on a couple of catalog surfaces.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cmc/boundary.hpp"
#include "cmc/hopf.hpp"
#include "cmc/surfaces.hpp"

namespace {

double best_of(int reps, const std::function<void()>& work) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    if (took.count() < best) best = took.count();
  }
  return best;
}

void row(const char* label, const std::function<void()>& serial,
         const std::function<void()>& parallel) {
  const double ts = best_of(3, serial);
  const double tp = best_of(3, parallel);
  std::printf("%-32s %10.2f ms %10.2f ms %8.2fx\n", label, ts, tp, ts / tp);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled: both columns run serial code\n");
#endif
  std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  const auto enn = cmc::enneper();
  const cmc::WeierstrassData data{
      cmc::Polynomial{{1.0, cmc::Complex(0.2, 0.1)}},
      cmc::Polynomial{{0.1, cmc::Complex(0.0, 0.5), 0.3}}};
  const auto wst = cmc::weierstrass_minimal(data);

  row("boundary profile, enneper",
      [&] { cmc::boundary_profile_serial(*enn, 1.0, 8192); },
      [&] { cmc::boundary_profile(*enn, 1.0, 8192); });
  row("boundary profile, weierstrass",
      [&] { cmc::boundary_profile_serial(*wst, 1.0, 8192); },
      [&] { cmc::boundary_profile(*wst, 1.0, 8192); });
  row("hopf field, enneper",
      [&] { cmc::hopf_field_serial(*enn, 96); },
      [&] { cmc::hopf_field(*enn, 96); });
  row("hopf field, weierstrass",
      [&] { cmc::hopf_field_serial(*wst, 96); },
      [&] { cmc::hopf_field(*wst, 96); });
  return 0;
}
