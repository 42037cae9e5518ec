#include "doctest.h"

#include <cmath>

#include "annuli/error.hpp"
#include "annuli/params.hpp"
#include "annuli/period.hpp"
#include "annuli/surface.hpp"
#include "oracles.hpp"

using namespace annuli;

TEST_CASE("diagonal closed form: per(-1,-1) = 1/sqrt(2)") {
  CHECK(std::fabs(per(-1.0, -1.0) - 1.0 / std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("per(-2,-0.5) lands inside the analytic bounds") {
  double v = per(-2.0, -0.5);
  CHECK(v > 1.0 / std::sqrt(3.0));
  CHECK(v < 1.0 / std::sqrt(1.5));
  CHECK(v == doctest::Approx(0.7223538471053271).epsilon(1e-12));
}

TEST_CASE("bounds hold on random W points") {
  int n = 0;
  while (n < 1000) {
    double r2 = oracles::uniform(-2.5, -0.02);
    double r1 = r2 - oracles::uniform(1e-3, 8.0);
    double v = per(r1, r2);
    double lo = 1.0 / std::sqrt(1 - r1 * r1 * r2);
    double hi = 1.0 / std::sqrt(1 - r1 * r2 * r2);
    CHECK(v >= lo - 1e-11);
    CHECK(v <= hi + 1e-11);
    CHECK(v > 0);
    CHECK(v < 1);
    ++n;
  }
}

TEST_CASE("per increases in r1 + r2 at fixed difference (sign check)") {
  for (int i = 0; i < 50; ++i) {
    double r2 = oracles::uniform(-1.4, -0.1);
    double r1 = r2 - oracles::uniform(0.05, 4.0);
    double h = 1e-5;
    double up = per(r1 + h, r2 + h);
    double dn = per(r1 - h, r2 - h);
    CHECK(up > dn);
  }
}

TEST_CASE("diagonal continuity with O(eps) error") {
  for (double r : {-0.7, -1.0, -1.3}) {
    double lim = 1.0 / std::sqrt(1 - r * r * r);
    double prev = 1;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      double err = std::fabs(per(r - eps, r + eps) - lim);
      CHECK(err < 10 * eps);
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("diagonal normal derivative of per") {
  for (double r : {-0.8, -1.1}) {
    double eps = 1e-4;
    double d = (per(r - eps + eps, r + eps) - per(r - eps - eps, r + eps)) / (2 * eps);
    double lim = 3 * r * r / (4 * std::pow(1 - r * r * r, 1.5));
    CHECK(d == doctest::Approx(lim).epsilon(1e-3));
  }
}

TEST_CASE("contour form of the closure indicator agrees with the Q-integral") {
  for (auto [r1, r2] : {std::pair{-2.0, -0.5}, {-1.2, -1.0}, {-3.4, -0.3}}) {
    SpectralParams sp = derive_spectral(r1, r2);
    WeierstrassData data = build_data(sp, 1.0);
    CHECK(data.kappa_contour() == doctest::Approx(per(r1, r2)).epsilon(1e-8));
  }
}

TEST_CASE("trace_level starts at r_c and keeps the residual small") {
  LevelCurve lc = trace_level(0.6, -0.5);
  CHECK(lc.r_c == doctest::Approx(std::cbrt(1 - 25.0 / 9.0)).epsilon(1e-12));
  CHECK(lc.r_c == doctest::Approx(-1.2114).epsilon(1e-4));
  REQUIRE(lc.points.size() > 5);
  double d_prev = 1;
  for (std::size_t i = 0; i < lc.points.size(); ++i) {
    const auto& p = lc.points[i];
    double d = p.r1 - p.r2;
    CHECK(d < d_prev);
    d_prev = d;
    if (i > 0) CHECK(std::fabs(p.per_residual) < 1e-9);
  }
  CHECK(lc.points.back().r1 - lc.points.back().r2 == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("level curve for c* crosses d = -8 at the frozen r2") {
  double rstar = -1.0781237870832208;
  double cstar = 1.0 / std::sqrt(1 - rstar * rstar * rstar);
  LevelPoint p = level_point_on_line(cstar, -8.0, 2 * std::cbrt(1 - 1 / (cstar * cstar)));
  CHECK(p.r2 == doctest::Approx(-0.222455).epsilon(5e-4));
  CHECK(p.r2 == doctest::Approx(-0.2224559005359641).epsilon(1e-9));
}

TEST_CASE("per rejects arguments outside W and its diagonal") {
  CHECK_THROWS_AS((void)per(-1.0, 0.5), Error);
  CHECK_THROWS_AS((void)trace_level(1.5, -1.0), Error);
  CHECK_THROWS_AS((void)trace_level(0.5, 1.0), Error);
}
