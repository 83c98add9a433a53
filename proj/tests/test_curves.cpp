#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tmc/curves.hpp"

using namespace tmc;

TEST_CASE("Dekking curve parameters") {
  CHECK_THROWS_AS(DekkingCurve(2, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(DekkingCurve(1, 3, 1), std::invalid_argument);
  CHECK(DekkingCurve(2, 3, 4).k() == 1);
  CHECK(DekkingCurve(2, 3, -1).k() == 2);
  CHECK(DekkingCurve(2, 5, 3).name() == "D_{2,5,3}");
  CHECK(DekkingCurve(2, 3, 1).as_turtle().interpreter().is_absolute());
}

TEST_CASE("Dekking points") {
  const DekkingCurve d(2, 3, 1);
  CHECK(dekking_point(d, 1) == CycNumber(1));
  CHECK(dekking_point(d, 4) == CycNumber(3));
  CHECK(dekking_point(d, 0) == CycNumber(0));
  CHECK(dekking_point(DekkingCurve(3, 2, 1), 3) == CycNumber(1) - root(3, 1) + root(3, 2));
  // non-coprime parameters are fine for plain evaluation
  CHECK(dekking_point(DekkingCurve(2, 12, 1), 100) == oracle::dekking_sum(2, 12, 1, 100));
}

TEST_CASE("scan agrees with term-by-term summation") {
  for (auto [p, q, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 2, 1}, {2, 5, 3}, {3, 4, 1}}) {
    const DekkingCurve d(p, q, k);
    const auto pts = curve_points(d.as_turtle(), 300);
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n <= 300; n += 7) bad += !(pts[n] == oracle::dekking_sum(p, q, k, n));
    CHECK_MESSAGE(bad == 0, d.name());
  }
}

TEST_CASE("scaling info") {
  const ScalingInfo a = scaling_info(DekkingCurve(2, 3, 1));
  CHECK(a.big_q == 4);
  CHECK(a.r == CycNumber(3));
  CHECK(a.regular);
  CHECK(a.modulus.lower <= 3);
  CHECK(a.modulus.upper >= 3);

  const ScalingInfo b = scaling_info(DekkingCurve(3, 2, 1));
  CHECK(b.big_q == 3);
  CHECK(b.r == CycNumber(1) - root(3, 1) + root(3, 2));
  CHECK(b.r_norm == CycNumber(4));
  CHECK(b.regular);

  // regression constant: r = D_{2,5,1}(16) = 5
  const ScalingInfo c = scaling_info(DekkingCurve(2, 5, 1));
  CHECK(c.big_q == 16);
  CHECK(c.r == CycNumber(5));
  CHECK(c.regular);

  CHECK_FALSE(scaling_info(DekkingCurve(3, 8, 1)).regular);
  // |r| = 1 exactly is not regular
  const ScalingInfo edge = scaling_info(DekkingCurve(3, 10, 1));
  CHECK(edge.r_norm == CycNumber(1));
  CHECK_FALSE(edge.regular);

  CHECK_THROWS_AS(scaling_info(DekkingCurve(2, 12, 1)), std::invalid_argument);
}

TEST_CASE("the product formula matches direct summation") {
  for (auto [p, q, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 5, 2}, {3, 2, 1}, {3, 4, 3}, {2, 7, 2}}) {
    const DekkingCurve d(p, q, k);
    std::uint64_t n = 1;
    for (std::uint64_t j = 0; n <= 5000; ++j, n *= p)
      CHECK_MESSAGE(dekking_point_power(d, j) == oracle::dekking_sum(p, q, k, n), d.name() << " j=" << j);
  }
}

TEST_CASE("self-similarity D(Qn) = r D(n)") {
  for (auto [p, q, k] :
       std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 5, 1}, {3, 2, 1}, {2, 7, 2}, {2, 5, 3}}) {
    const DekkingCurve d(p, q, k);
    const ScalingInfo info = scaling_info(d);
    const auto pts = curve_points(d.as_turtle(), info.big_q * 1000);
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n <= 1000; ++n) bad += !(pts[info.big_q * n] == info.r * pts[n]);
    CHECK_MESSAGE(bad == 0, d.name());
  }
}

TEST_CASE("P_D is a homomorphism on symbols") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 2}}) {
    const DekkingCurve d(p, q, 1);
    std::size_t bad = 0;
    for (Symbol s = 0; s < p * q; ++s)
      for (Symbol t = 0; t < p * q; ++t) {
        auto [x1, y1] = decode_pair(s, q);
        auto [x2, y2] = decode_pair(t, q);
        const Symbol sum = encode_pair((x1 + x2) % p, (y1 + y2) % q, q);
        bad += !(d.step(sum) == d.step(s) * d.step(t));
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("Dekking steps are unit length") {
  for (auto [p, q, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 2, 1}, {2, 12, 5}}) {
    const auto t = DekkingCurve(p, q, k).as_turtle();
    for (const auto& img : t.interpreter().images()) {
      const CycNumber z = img.z;
      CHECK(z * z.conj() == CycNumber(1));
    }
  }
}

TEST_CASE("powers of Q on D_{2,3,1}") {
  const FastDekking fast(DekkingCurve(2, 3, 1));
  CycNumber expected(1);
  std::uint64_t n = 1;
  for (int e = 0; e <= 10; ++e, n *= 4, expected *= CycNumber(3)) CHECK(fast(n) == expected);
  CHECK(fast(7) == dekking_point(DekkingCurve(2, 3, 1), 7));
}

TEST_CASE("fast evaluation agrees with the scan up to 10^4") {
  for (auto [p, q, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 2, 1}}) {
    const DekkingCurve d(p, q, k);
    const FastDekking fast(d);
    const auto pts = curve_points(d.as_turtle(), 10000);
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n) bad += !(fast(n) == pts[n]);
    CHECK_MESSAGE(bad == 0, d.name());
  }
}

TEST_CASE("fast evaluation agrees with the digit-count oracle up to 10^9") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1000000000);
  for (auto [p, q, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {3, 2, 1}}) {
    const DekkingCurve d(p, q, k);
    const FastDekking fast(d);
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t n = dist(rng);
      bad += !(fast(n) == oracle::dekking_from_counts(p, q, k, n));
    }
    CHECK_MESSAGE(bad == 0, d.name());
  }
}

TEST_CASE("digit-count oracle matches a brute-force count") {
  // the oracle itself, against plain counting
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 5}}) {
    for (std::uint64_t n : {0, 1, 7, 64, 100, 999}) {
      const auto counts = oracle::digit_counts(p, q, n);
      std::vector<std::vector<std::uint64_t>> brute(p, std::vector<std::uint64_t>(q, 0));
      for (std::uint64_t i = 0; i < n; ++i) ++brute[oracle::tm_recurrence(p, i)][i % q];
      CHECK(counts == brute);
    }
  }
}

TEST_CASE("parallel symbol counts") {
  const DekkingCurve d(2, 5, 2);
  CHECK(dekking_point_by_counts(d, 12345) == dekking_point(d, 12345));
  CHECK(dekking_point_by_counts(DekkingCurve(2, 12, 1), 999) == oracle::dekking_sum(2, 12, 1, 999));
}

TEST_CASE("fast evaluation preconditions") {
  CHECK_THROWS_AS(FastDekking(DekkingCurve(2, 12, 1)), std::invalid_argument);
  CHECK_THROWS_AS(FastDekking(DekkingCurve(2, 31, 6)), std::invalid_argument);  // Q = 2^30 > table cap
}
