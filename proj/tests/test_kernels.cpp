#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tmc/kernels.hpp"

using namespace tmc;

namespace {

SegmentSet random_set(std::mt19937_64& rng, int n, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<std::complex<double>> pts;
  for (int i = 0; i <= n; ++i) pts.emplace_back(u(rng), u(rng));
  return SegmentSet::from_points(pts, 0.0);
}

}  // namespace

TEST_CASE("point to segment distance") {
  const Segment s{0.0, 2.0};
  CHECK(point_segment_distance({1, 1}, s) == 1.0);
  CHECK(point_segment_distance({3, 0}, s) == 1.0);
  CHECK(point_segment_distance({-3, 4}, s) == 5.0);
  CHECK(point_segment_distance({1, 0}, s) == 0.0);
  CHECK(point_segment_distance({1, 1}, Segment{{1, 3}, {1, 3}}) == 2.0);
}

TEST_CASE("segment sampling spacing") {
  SegmentSet s = SegmentSet::from_points({0.0, 1.0, {1, 1}}, 0.0);
  const auto samples = sample_segments(s, 0.1);
  CHECK(samples.size() >= 22);
  for (double x : {0.0, 0.05, 0.5, 0.99}) {
    double best = 1e9;
    for (auto z : samples) best = std::min(best, std::abs(z - std::complex<double>(x, 0)));
    CHECK(best <= 0.05 + 1e-12);
  }
  CHECK_THROWS_AS(sample_segments(s, 0.0), std::invalid_argument);
}

TEST_CASE("embedding serial and parallel agree") {
  std::mt19937_64 rng(8);
  std::vector<CycNumber> pts;
  for (int i = 0; i < 400; ++i) pts.push_back(oracle::random_cyc(rng, 12, 4));
  const mpq_class width(1, 1000000000);
  const auto a = serial::embed_points(pts, width), b = parallel::embed_points(pts, width);
  REQUIRE(a.size() == b.size());
  std::size_t bad = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    bad += !(a[i].value == b[i].value && a[i].error == b[i].error && a[i].modulus.lower == b[i].modulus.lower &&
             a[i].modulus.upper == b[i].modulus.upper);
  CHECK(bad == 0);
}

TEST_CASE("directed distance: grid against exhaustive search") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    const SegmentSet a = random_set(rng, 30, 1.0 + i), target = random_set(rng, 1 + 7 * (i % 9), 2.0);
    const auto samples = sample_segments(a, 0.05);
    CHECK(serial::directed_distance(samples, target) == parallel::directed_distance(samples, target));
  }
  // a single point target (degenerate extent)
  const SegmentSet dot = SegmentSet::from_points({{0.25, 0.25}}, 0.0);
  const auto samples = sample_segments(random_set(rng, 10, 1.0), 0.05);
  CHECK(serial::directed_distance(samples, dot) == parallel::directed_distance(samples, dot));
  // collinear target
  const SegmentSet line = SegmentSet::from_points({0.0, 1.0, 2.0, 3.0}, 0.0);
  CHECK(serial::directed_distance(samples, line) == parallel::directed_distance(samples, line));
}

TEST_CASE("Dekking symbol counts") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 12}, {5, 7}}) {
    for (std::uint64_t n : {0, 1, 17, 1000, 123457}) {
      const auto a = serial::dekking_counts(p, q, n), b = parallel::dekking_counts(p, q, n);
      CHECK(a == b);
      const auto ref = oracle::digit_counts(p, q, n);
      std::size_t bad = 0;
      for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(p); ++x)
        for (std::uint64_t y = 0; y < static_cast<std::uint64_t>(q); ++y) bad += a[x * q + y] != ref[x][y];
      CHECK_MESSAGE(bad == 0, p << "," << q << " n=" << n);
    }
  }
}

TEST_CASE("first mismatch") {
  std::mt19937_64 rng(99);
  std::vector<CycNumber> lhs, rhs;
  const CycNumber scale = CycNumber(2) - root(3, 1);
  for (int i = 0; i < 500; ++i) {
    lhs.push_back(oracle::random_cyc(rng, 6));
    rhs.push_back(scale * lhs.back());
  }
  CHECK(serial::first_mismatch(lhs, rhs, scale) == 500);
  CHECK(parallel::first_mismatch(lhs, rhs, scale) == 500);
  for (std::size_t at : {0, 1, 137, 499}) {
    auto broken = rhs;
    broken[at] += CycNumber(mpq_class(1, 1000));
    if (at < 400) broken[499] += CycNumber(1);  // a later mismatch must not win
    CHECK(serial::first_mismatch(lhs, broken, scale) == at);
    CHECK(parallel::first_mismatch(lhs, broken, scale) == at);
  }
}
