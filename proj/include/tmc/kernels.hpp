#pragma once

// Data-parallel kernels. Every kernel in `parallel` has a plain serial
// counterpart in `serial` with identical results; the serial versions are the
// references used by tests and benchmarks.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "tmc/cyclotomic.hpp"
#include "tmc/turtle.hpp"

namespace tmc {

/// Sample points on every segment, spaced at most `resolution` apart
/// (endpoints included).
std::vector<std::complex<double>> sample_segments(const SegmentSet& set, double resolution);

/// Distance from a point to a closed segment.
double point_segment_distance(std::complex<double> x, const Segment& s);

namespace serial {

std::vector<Embedding> embed_points(std::span<const CycNumber> points, const mpq_class& width);

/// max over samples of the distance to the nearest segment of `target`,
/// by exhaustive search.
double directed_distance(std::span<const std::complex<double>> samples, const SegmentSet& target);

/// counts[s] = #{i < n : z_{p,q}(i) = s}.
std::vector<std::uint64_t> dekking_counts(std::uint64_t p, std::uint64_t q, std::uint64_t n);

/// Smallest i with scale·lhs[i] != rhs[i], or lhs.size() if none.
std::size_t first_mismatch(std::span<const CycNumber> lhs, std::span<const CycNumber> rhs,
                           const CycNumber& scale);

}  // namespace serial

namespace parallel {

std::vector<Embedding> embed_points(std::span<const CycNumber> points, const mpq_class& width);

/// Same result as serial::directed_distance using a uniform grid over the
/// target and an OpenMP max-reduction over samples.
double directed_distance(std::span<const std::complex<double>> samples, const SegmentSet& target);

std::vector<std::uint64_t> dekking_counts(std::uint64_t p, std::uint64_t q, std::uint64_t n);

std::size_t first_mismatch(std::span<const CycNumber> lhs, std::span<const CycNumber> rhs,
                           const CycNumber& scale);

}  // namespace parallel

}  // namespace tmc
