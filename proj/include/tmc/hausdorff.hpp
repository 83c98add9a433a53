#pragma once

// Sampled Hausdorff distance between segment unions, the scaled prefix sets
// S_n = r^{-n} P(D[:Q^n]) of a regular Dekking curve, and the level-n Koch
// polyline used as a reference.

#include <cstdint>
#include <optional>
#include <vector>

#include "tmc/curves.hpp"
#include "tmc/similarity.hpp"
#include "tmc/turtle.hpp"

namespace tmc {

/// The true distance lies in [value - error, value + error].
struct ApproxDistance {
  double value = 0.0;
  double error = 0.0;
};

/// Samples each segment at spacing <= resolution and measures exact
/// point-to-segment distances against the other set.
/// error = resolution/2 + a.error_budget + b.error_budget.
ApproxDistance hausdorff_distance(const SegmentSet& a, const SegmentSet& b, double resolution);
ApproxDistance hausdorff_distance_serial(const SegmentSet& a, const SegmentSet& b, double resolution);

constexpr std::uint64_t kDefaultSegmentCap = 1ull << 24;

/// S_n: points D(0..Q^n) scaled exactly by r^{-n}, then embedded.
/// Throws std::invalid_argument for a non-regular curve and std::length_error
/// when Q^n exceeds segment_cap.
SegmentSet scaled_prefix_set(const DekkingCurve& curve, std::uint64_t n,
                             const mpq_class& width = mpq_class(1, 1000000000000),
                             std::uint64_t segment_cap = kDefaultSegmentCap);

/// Level-n Koch polyline on [0, 1], bump below the axis (middle vertex
/// 1/2 - i√3/6 at level 1). 4^n segments.
SegmentSet koch_reference(std::uint64_t n);

struct ConvergenceRow {
  std::uint64_t n = 0;
  ApproxDistance step_distance;  // d_H(S_n, S_{n+1})
  double bound = 0.0;            // |r|^{-n} Q
  double tail_bound = 0.0;       // |r|^{-n} Q / (1 - 1/|r|)
  bool within_bound = false;     // step_distance.value - error <= bound
  std::optional<ApproxDistance> koch;  // d_H(S_n, koch_reference(n)) when requested
};

struct ConvergenceOptions {
  double resolution = 1e-3;
  bool against_koch = false;
  mpq_class width = mpq_class(1, 1000000000000);
  std::uint64_t segment_cap = kDefaultSegmentCap;
};

/// Rows for n = 0..n_max-1. Requires n_max >= 1.
std::vector<ConvergenceRow> convergence_report(const DekkingCurve& curve, std::uint64_t n_max,
                                               const ConvergenceOptions& options = {});

struct SharedLimitRow {
  std::uint64_t n = 0;
  std::uint64_t prefix_length = 0;  // a_n = K1 · floor(Q^n / K2)
  ApproxDistance distance;          // d_H(c r^{-n} P(T[:a_n]), S_n of the target)
};

/// Uses the composite witness c·T(K1 m) = R(K2 m) of a certificate to put
/// prefixes of T on the scale of S_n for its target R, for n = 1..n_max.
std::vector<SharedLimitRow> shared_limit_report(const MainResultCertificate& cert, std::uint64_t n_max,
                                                double resolution = 1e-3,
                                                std::uint64_t segment_cap = kDefaultSegmentCap);

}  // namespace tmc
