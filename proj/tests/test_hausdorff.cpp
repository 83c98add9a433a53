#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmc/hausdorff.hpp"

using namespace tmc;

namespace {

SegmentSet segs(std::vector<std::complex<double>> pts) { return SegmentSet::from_points(pts, 0.0); }

SegmentSet random_set(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<std::complex<double>> pts;
  for (int i = 0; i <= n; ++i) pts.emplace_back(u(rng), u(rng));
  return segs(pts);
}

SegmentSet translated(SegmentSet s, std::complex<double> by) {
  for (auto& seg : s.segments) {
    seg.a += by;
    seg.b += by;
  }
  return s;
}

GroupElement g(CycNumber z, RootOfUnity u) { return {std::move(z), u}; }

}  // namespace

TEST_CASE("distance examples") {
  const SegmentSet unit = segs({0.0, 1.0});
  const auto self = hausdorff_distance(unit, unit, 1e-3);
  CHECK(self.value <= self.error);

  CHECK(hausdorff_distance(segs({0.0}), unit, 1e-3).value == doctest::Approx(1.0).epsilon(1e-12));
  const auto shifted = hausdorff_distance(unit, segs({{0, 1}, {1, 1}}), 1e-3);
  CHECK(shifted.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(shifted.error == doctest::Approx(5e-4));

  CHECK_THROWS_AS(hausdorff_distance(SegmentSet{}, unit, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(hausdorff_distance(unit, unit, 0.0), std::invalid_argument);
}

TEST_CASE("metric sanity on random sets") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const SegmentSet a = random_set(rng, 20), b = random_set(rng, 15);
    const auto ab = hausdorff_distance(a, b, 1e-3), ba = hausdorff_distance(b, a, 1e-3);
    CHECK(std::abs(ab.value - ba.value) <= 2 * ab.error);
    const auto aa = hausdorff_distance(a, a, 1e-3);
    CHECK(aa.value <= aa.error);
    const std::complex<double> shift(0.3, -1.7);
    const auto moved = hausdorff_distance(translated(a, shift), translated(b, shift), 1e-3);
    CHECK(std::abs(moved.value - ab.value) <= 2 * ab.error);
  }
}

TEST_CASE("serial reference agrees with the grid kernel") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const SegmentSet a = random_set(rng, 50), b = random_set(rng, 80);
    CHECK(hausdorff_distance(a, b, 1e-2).value == hausdorff_distance_serial(a, b, 1e-2).value);
  }
}

TEST_CASE("scaled prefix sets") {
  const DekkingCurve d(2, 3, 1);
  const SegmentSet s0 = scaled_prefix_set(d, 0);
  REQUIRE(s0.size() == 1);
  CHECK(std::abs(s0.segments[0].a) < 1e-12);
  CHECK(std::abs(s0.segments[0].b - 1.0) < 1e-12);

  const SegmentSet s1 = scaled_prefix_set(d, 1);
  REQUIRE(s1.size() == 4);
  const std::vector<std::complex<double>> gen{0.0, 1.0 / 3, {0.5, -std::sqrt(3.0) / 6}, 2.0 / 3, 1.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(s1.segments[i].b - gen[i + 1]) < 1e-12);

  for (std::uint64_t n = 0; n <= 6; ++n)
    CHECK(std::abs(scaled_prefix_set(d, n).segments.back().b - 1.0) < 1e-12);

  CHECK_THROWS_AS(scaled_prefix_set(DekkingCurve(3, 8, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(scaled_prefix_set(DekkingCurve(2, 12, 1), 1), std::invalid_argument);
  CHECK_THROWS_AS(scaled_prefix_set(DekkingCurve(2, 5, 1), 7), std::length_error);
  CHECK_THROWS_AS(scaled_prefix_set(d, 3, mpq_class(1, 1000000000000), 63), std::length_error);
}

TEST_CASE("Koch reference") {
  CHECK(koch_reference(0).size() == 1);
  const SegmentSet k1 = koch_reference(1);
  REQUIRE(k1.size() == 4);
  CHECK(std::abs(k1.segments[1].b - std::complex<double>(0.5, -std::sqrt(3.0) / 6)) < 1e-15);
  for (std::uint64_t n = 0; n <= 6; ++n) CHECK(koch_reference(n).size() == (1u << (2 * n)));
}

TEST_CASE("S_n of D_{2,3,1} is the Koch polyline") {
  for (std::uint64_t n = 0; n <= 6; ++n) {
    const auto d = hausdorff_distance(scaled_prefix_set(DekkingCurve(2, 3, 1), n), koch_reference(n), 1e-3);
    CHECK_MESSAGE(d.value <= d.error, "n=" << n);
  }
}

TEST_CASE("convergence rows respect the Cauchy bound") {
  const auto rows = convergence_report(DekkingCurve(2, 3, 1), 6);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].bound == 4.0);
  double expected = 4.0;
  for (const auto& row : rows) {
    CHECK(row.bound == doctest::Approx(expected));
    CHECK(row.tail_bound == doctest::Approx(expected * 1.5));
    CHECK(row.within_bound);
    CHECK_FALSE(row.koch.has_value());
    expected /= 3;
  }

  const auto rows32 = convergence_report(DekkingCurve(3, 2, 1), 10);
  REQUIRE(rows32.size() == 10);
  CHECK(rows32[0].bound == 3.0);
  for (const auto& row : rows32) CHECK_MESSAGE(row.within_bound, "n=" << row.n);

  ConvergenceOptions with_koch;
  with_koch.against_koch = true;
  for (const auto& row : convergence_report(DekkingCurve(2, 3, 1), 4, with_koch)) {
    REQUIRE(row.koch.has_value());
    CHECK(row.koch->value <= row.koch->error);
  }
  CHECK_THROWS_AS(convergence_report(DekkingCurve(2, 3, 1), 0), std::invalid_argument);
}

TEST_CASE("scaled prefixes stay away from the origin") {
  // 1 ∈ S_n, so d_H(S_n, {0}) >= 1
  const SegmentSet origin = segs({0.0});
  for (std::uint64_t n = 0; n <= 6; ++n) {
    const auto d = hausdorff_distance(scaled_prefix_set(DekkingCurve(2, 3, 1), n), origin, 1e-3);
    CHECK(d.value >= 1 - d.error);
  }
}

TEST_CASE("prefixes of the Ma-Holdener curve approach the Koch curve") {
  const TurtleCurve mh = thue_morse_curve(2, {g(1, RootOfUnity::one()), g(0, RootOfUnity(6, 1))});
  const auto cert = certify_main_result(mh, 200);
  const auto rows = shared_limit_report(cert, 5);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].prefix_length == 24 * ((1u << (2 * (i + 1))) / 6));
    if (i) CHECK(rows[i].distance.value < rows[i - 1].distance.value);
  }
  // and the last one is close to the classical polyline itself
  const auto last = rows.back();
  CHECK(last.distance.value < 0.05);
}
