#include "tmc/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tmc/kernels.hpp"

namespace tmc {

namespace {

ApproxDistance combine(double ab, double ba, const SegmentSet& a, const SegmentSet& b, double resolution) {
  return {std::max(ab, ba), resolution / 2 + a.error_budget + b.error_budget};
}

void require_nonempty(const SegmentSet& a, const SegmentSet& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty segment set");
}

// Q^n, or nullopt past the cap.
std::optional<std::uint64_t> capped_power(std::uint64_t base, std::uint64_t n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

std::vector<CycNumber> scaled(std::vector<CycNumber> points, const CycNumber& factor) {
  if (!points.empty()) (void)(points[0] * factor);  // builds the shared context outside the loop
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) points[i] = points[i] * factor;
  return points;
}

double modulus_mid(const ModulusInterval& m) { return mpq_class((m.lower + m.upper) / 2).get_d(); }

}  // namespace

ApproxDistance hausdorff_distance(const SegmentSet& a, const SegmentSet& b, double resolution) {
  require_nonempty(a, b);
  const auto sa = sample_segments(a, resolution);
  const auto sb = sample_segments(b, resolution);
  return combine(parallel::directed_distance(sa, b), parallel::directed_distance(sb, a), a, b, resolution);
}

ApproxDistance hausdorff_distance_serial(const SegmentSet& a, const SegmentSet& b, double resolution) {
  require_nonempty(a, b);
  const auto sa = sample_segments(a, resolution);
  const auto sb = sample_segments(b, resolution);
  return combine(serial::directed_distance(sa, b), serial::directed_distance(sb, a), a, b, resolution);
}

SegmentSet scaled_prefix_set(const DekkingCurve& curve, std::uint64_t n, const mpq_class& width,
                             std::uint64_t segment_cap) {
  const ScalingInfo info = scaling_info(curve);
  if (!info.regular)
    throw std::invalid_argument(curve.name() + " is not regular: |r| in [" +
                                std::to_string(info.modulus.lower.get_d()) + ", " +
                                std::to_string(info.modulus.upper.get_d()) + "]");
  const auto steps = capped_power(info.big_q, n, segment_cap);
  if (!steps)
    throw std::length_error("scaled_prefix_set: Q^n = " + std::to_string(info.big_q) + "^" + std::to_string(n) +
                            " segments exceeds the cap of " + std::to_string(segment_cap));
  CycNumber factor(1);
  const CycNumber r_inv = info.r.inverse();
  for (std::uint64_t i = 0; i < n; ++i) factor *= r_inv;
  return polyline_from_points(scaled(curve_points(curve.as_turtle(), *steps), factor), width);
}

SegmentSet koch_reference(std::uint64_t n) {
  const double h = std::sqrt(3.0) / 6;
  const std::complex<double> apex(0.5, -h);
  // the four similarities of the generator 0, 1/3, apex, 2/3, 1
  const std::complex<double> down = std::polar(1.0 / 3, -M_PI / 3);
  const std::complex<double> up = std::polar(1.0 / 3, M_PI / 3);
  std::vector<std::complex<double>> pts{0.0, 1.0};
  for (std::uint64_t level = 0; level < n; ++level) {
    std::vector<std::complex<double>> next;
    next.reserve(4 * (pts.size() - 1) + 1);
    const auto emit = [&](auto&& map, bool first) {
      for (std::size_t i = first ? 0 : 1; i < pts.size(); ++i) next.push_back(map(pts[i]));
    };
    emit([](std::complex<double> z) { return z / 3.0; }, true);
    emit([&](std::complex<double> z) { return 1.0 / 3 + down * z; }, false);
    emit([&](std::complex<double> z) { return apex + up * z; }, false);
    emit([](std::complex<double> z) { return 2.0 / 3 + z / 3.0; }, false);
    pts = std::move(next);
  }
  return SegmentSet::from_points(pts, 1e-12);
}

std::vector<ConvergenceRow> convergence_report(const DekkingCurve& curve, std::uint64_t n_max,
                                               const ConvergenceOptions& options) {
  if (n_max == 0) throw std::invalid_argument("convergence_report: n_max must be >= 1");
  const ScalingInfo info = scaling_info(curve);
  const double r_abs = modulus_mid(info.modulus);
  const double q = static_cast<double>(info.big_q);

  std::vector<SegmentSet> levels;
  for (std::uint64_t n = 0; n <= n_max; ++n)
    levels.push_back(scaled_prefix_set(curve, n, options.width, options.segment_cap));

  std::vector<ConvergenceRow> rows;
  for (std::uint64_t n = 0; n < n_max; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.step_distance = hausdorff_distance(levels[n], levels[n + 1], options.resolution);
    row.bound = q * std::pow(r_abs, -static_cast<double>(n));
    row.tail_bound = row.bound / (1 - 1 / r_abs);
    row.within_bound = row.step_distance.value - row.step_distance.error <= row.bound;
    if (options.against_koch)
      row.koch = hausdorff_distance(levels[n], koch_reference(n), options.resolution);
    rows.push_back(row);
  }
  return rows;
}

std::vector<SharedLimitRow> shared_limit_report(const MainResultCertificate& cert, std::uint64_t n_max,
                                                double resolution, std::uint64_t segment_cap) {
  if (!cert.composite) throw std::invalid_argument("shared_limit_report: certificate has no composite witness");
  const SimilarityWitness& w = *cert.composite;
  const ScalingInfo& info = cert.target_scaling;
  const CycNumber r_inv = info.r.inverse();

  std::vector<SharedLimitRow> rows;
  CycNumber factor = w.c;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    factor *= r_inv;
    const auto q_n = capped_power(info.big_q, n, segment_cap);
    if (!q_n) throw std::length_error("shared_limit_report: level " + std::to_string(n) + " exceeds the cap");
    const std::uint64_t a_n = w.k1 * (*q_n / w.k2);
    if (a_n > segment_cap)
      throw std::length_error("shared_limit_report: prefix " + std::to_string(a_n) + " exceeds the cap");
    const SegmentSet lhs =
        polyline_from_points(scaled(curve_points(w.lhs, a_n), factor), mpq_class(1, 1000000000000));
    const SegmentSet rhs = scaled_prefix_set(cert.target, n, mpq_class(1, 1000000000000), segment_cap);
    rows.push_back({n, a_n, hausdorff_distance(lhs, rhs, resolution)});
  }
  return rows;
}

}  // namespace tmc
