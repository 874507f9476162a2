#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nlperim/errors.hpp"
#include "nlperim/sweep.hpp"

using namespace nlperim;

namespace {
const QuadratureConfig kQuad{};

std::vector<SweepRecord> synthetic(const std::vector<double>& eps,
                                   const std::function<double(double)>& ratio, double ref) {
  std::vector<SweepRecord> out;
  for (const double e : eps) {
    SweepRecord r;
    r.epsilon = e;
    r.h = e / 8;
    r.ratio_j1 = ratio(e);
    r.ref_j1 = ref;
    out.push_back(r);
  }
  return out;
}
}  // namespace

TEST_CASE("extrapolation recovers exact affine data") {
  const auto recs = synthetic({0.25, 0.125, 0.0625, 0.03125},
                              [](double e) { return 4.0 + 0.3 * e; }, 4.0);
  const auto fit = extrapolate(recs, SweepChannel::J1);
  CHECK(fit.limit == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(fit.slope == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(fit.residual <= 1e-12);
  CHECK(fit.relative_error <= 1e-12);
}

TEST_CASE("extrapolation of constant data has zero slope") {
  const auto recs = synthetic({0.5, 0.25, 0.125}, [](double) { return 2.5; }, 2.5);
  const auto fit = extrapolate(recs, SweepChannel::J1);
  CHECK(fit.limit == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(std::abs(fit.slope) <= 1e-11);
}

TEST_CASE("a zero reference switches the error to absolute") {
  const auto recs = synthetic({0.5, 0.25, 0.125}, [](double e) { return 0.125 + e; }, 0.0);
  const auto fit = extrapolate(recs, SweepChannel::J1);
  CHECK(fit.relative_error == doctest::Approx(0.125).epsilon(1e-10));
}

TEST_CASE("extrapolation needs three distinct epsilons") {
  const auto two = synthetic({0.25, 0.125}, [](double e) { return e; }, 0.0);
  CHECK_THROWS_AS(extrapolate(two, SweepChannel::J1), InsufficientPoints);
  auto dup = synthetic({0.25, 0.25, 0.25}, [](double e) { return e; }, 0.0);
  CHECK_THROWS_AS(extrapolate(dup, SweepChannel::J1), InsufficientPoints);
}

TEST_CASE("halfspace sweep: record fields and the J1 trend") {
  const auto k = make_exponential(1.0, 2, 8.0);
  const ShapeSpec omega = ShapeSpec::box({-0.5, -0.5, 0}, {0.5, 0.5, 0});
  // asymptotic range: reach eps*R at most 1, so the affine error model holds
  const std::vector<double> eps = {0.125, 0.0625, 0.03125};
  const auto recs = run_sweep(ShapeSpec::halfspace(1, 0.0), omega, k, eps, 8, kQuad);
  REQUIRE(recs.size() == 3);
  const double c_k = compute_constants(k, kQuad).c_K;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].epsilon == eps[i]);
    CHECK(recs[i].h == doctest::Approx(eps[i] / 8));
    CHECK(recs[i].ref_j2 == 0.0);  // transversal: two boundary points
    CHECK(recs[i].ref_j1 == doctest::Approx(c_k).epsilon(1e-12));  // c_K * Per(H,U)
    CHECK(recs[i].ratio_j1 > 0.0);
    CHECK(recs[i].ratio_j1 < recs[i].ref_j1);  // boundary depletion from below
  }
  // the trend towards the reference is monotone in shrinking epsilon
  CHECK(recs[2].ratio_j1 > recs[1].ratio_j1);
  CHECK(recs[1].ratio_j1 > recs[0].ratio_j1);

  const auto fit = extrapolate(recs, SweepChannel::J1);
  CHECK(fit.relative_error <= 0.03);
}

TEST_CASE("sweep propagates the cell budget") {
  const auto k = make_exponential(1.0, 2, 8.0);
  const ShapeSpec omega = ShapeSpec::box({-0.5, -0.5, 0}, {0.5, 0.5, 0});
  CHECK_THROWS_AS(
      run_sweep(ShapeSpec::halfspace(1, 0.0), omega, k, {0.25, 0.125, 0.03125}, 8, kQuad, 1 << 14),
      BudgetExceeded);
}

TEST_CASE("resting window picks up the shared-face reference") {
  const auto k = make_exponential(1.0, 2, 8.0);
  const ShapeSpec omega = ShapeSpec::box({-0.5, 0.0, 0}, {0.5, 1.0, 0});
  const auto recs = run_sweep(ShapeSpec::halfspace(1, 0.0), omega, k, {0.25, 0.125, 0.0625}, 8,
                              kQuad);
  const double c_k = compute_constants(k, kQuad).c_K;
  for (const auto& r : recs) {
    CHECK(r.ref_j1 == 0.0);  // the halfspace boundary lies on the window face
    CHECK(r.ref_j2 == doctest::Approx(c_k).epsilon(1e-12));  // c_K * (face measure 1)
    CHECK(r.ratio_j1 == 0.0);  // the set does not meet the open window
    CHECK(r.ratio_j2 > 0.0);
  }
  const auto fit = extrapolate(recs, SweepChannel::J2);
  CHECK(fit.relative_error <= 0.06);
}

TEST_CASE("liminf probe: perturbed interfaces never beat the flat one") {
  const auto k = make_exponential(1.0, 2, 6.0);
  SUBCASE("zero amplitude is an exact tie") {
    const auto rows = liminf_probe(k, 0.0, {0.25, 0.125}, 8, kQuad);
    for (const auto& row : rows) CHECK(row.perturbed_ratio == row.flat_ratio);
  }
  SUBCASE("moderate wiggle costs energy at every epsilon") {
    const auto rows = liminf_probe(k, 0.5, {0.125, 0.0625}, 8, kQuad);
    for (const auto& row : rows) CHECK(row.perturbed_ratio > row.flat_ratio);
  }
  SUBCASE("large wiggle costs at least ten percent") {
    const auto rows = liminf_probe(k, 2.0, {0.125}, 8, kQuad);
    CHECK(rows[0].perturbed_ratio >= 1.1 * rows[0].flat_ratio);
  }
}

TEST_CASE("recovery family: constant transversal sets meet the gamma limit") {
  // ball strictly inside the unit square; full ratio fitted against c_K Per
  const auto k = make_exponential(1.0, 2, 6.0);
  const ShapeSpec omega = ShapeSpec::box({-0.5, -0.5, 0}, {0.5, 0.5, 0});
  const ShapeSpec ball = ShapeSpec::ball({0.0, 0.0, 0}, 0.25);
  const auto recs = run_sweep(ball, omega, k, {0.125, 0.0625, 0.03125}, 8, kQuad);
  const auto fit = extrapolate(recs, SweepChannel::Full);
  CHECK(fit.relative_error <= 0.05);
}
