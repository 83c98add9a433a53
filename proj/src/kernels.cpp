#include "tmc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tmc/words.hpp"

namespace tmc {

std::vector<std::complex<double>> sample_segments(const SegmentSet& set, double resolution) {
  if (!(resolution > 0)) throw std::invalid_argument("sample_segments: resolution must be positive");
  std::vector<std::complex<double>> out;
  for (const Segment& s : set.segments) {
    const double len = std::abs(s.b - s.a);
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / resolution)));
    for (std::size_t k = 0; k <= pieces; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(pieces);
      out.push_back(s.a + t * (s.b - s.a));
    }
  }
  return out;
}

double point_segment_distance(std::complex<double> x, const Segment& s) {
  const std::complex<double> d = s.b - s.a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(x - s.a);
  double t = ((x.real() - s.a.real()) * d.real() + (x.imag() - s.a.imag()) * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(x - (s.a + t * d));
}

namespace serial {

std::vector<Embedding> embed_points(std::span<const CycNumber> points, const mpq_class& width) {
  std::vector<Embedding> out;
  out.reserve(points.size());
  for (const CycNumber& p : points) out.push_back(p.embed(width));
  return out;
}

double directed_distance(std::span<const std::complex<double>> samples, const SegmentSet& target) {
  if (target.empty()) throw std::invalid_argument("directed_distance: empty target");
  double worst = 0.0;
  for (const auto& x : samples) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& s : target.segments) best = std::min(best, point_segment_distance(x, s));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<std::uint64_t> dekking_counts(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  std::vector<std::uint64_t> counts(p * q, 0);
  for (std::uint64_t i = 0; i < n; ++i) ++counts[dekking_symbol(p, q, i)];
  return counts;
}

std::size_t first_mismatch(std::span<const CycNumber> lhs, std::span<const CycNumber> rhs,
                           const CycNumber& scale) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("first_mismatch: length mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!(scale * lhs[i] == rhs[i])) return i;
  return lhs.size();
}

}  // namespace serial

namespace parallel {

std::vector<Embedding> embed_points(std::span<const CycNumber> points, const mpq_class& width) {
  std::vector<Embedding> out(points.size());
  if (!points.empty()) points[0].embed(width);  // warm the basis cache
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[i] = points[i].embed(width);
  return out;
}

namespace {

// Uniform bucket grid over segment bounding boxes.
class SegmentGrid {
 public:
  explicit SegmentGrid(const SegmentSet& set) : set_(set) {
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x, total = 0.0;
    for (const Segment& s : set.segments) {
      min_x = std::min({min_x, s.a.real(), s.b.real()});
      max_x = std::max({max_x, s.a.real(), s.b.real()});
      min_y = std::min({min_y, s.a.imag(), s.b.imag()});
      max_y = std::max({max_y, s.a.imag(), s.b.imag()});
      total += std::abs(s.b - s.a);
    }
    const double n = static_cast<double>(set.size());
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    cell_ = std::max({total / n, diag / (2.0 * std::sqrt(n)), 1e-12});
    origin_ = {min_x, min_y};
    nx_ = static_cast<std::int64_t>((max_x - min_x) / cell_) + 1;
    ny_ = static_cast<std::int64_t>((max_y - min_y) / cell_) + 1;
    buckets_.resize(static_cast<std::size_t>(nx_ * ny_));
    for (std::size_t i = 0; i < set.segments.size(); ++i) {
      const Segment& s = set.segments[i];
      auto [x0, y0] = cell_of(std::min(s.a.real(), s.b.real()), std::min(s.a.imag(), s.b.imag()));
      auto [x1, y1] = cell_of(std::max(s.a.real(), s.b.real()), std::max(s.a.imag(), s.b.imag()));
      for (std::int64_t cx = clamp_x(x0); cx <= clamp_x(x1); ++cx)
        for (std::int64_t cy = clamp_y(y0); cy <= clamp_y(y1); ++cy)
          buckets_[static_cast<std::size_t>(cx * ny_ + cy)].push_back(static_cast<std::uint32_t>(i));
    }
  }

  double nearest(std::complex<double> x) const {
    auto [cx, cy] = cell_of(x.real(), x.imag());
    // Chebyshev distances from (cx, cy) to the nearest and farthest grid cell
    const std::int64_t gx = std::max<std::int64_t>({0, -cx, cx - (nx_ - 1)});
    const std::int64_t gy = std::max<std::int64_t>({0, -cy, cy - (ny_ - 1)});
    const std::int64_t first_ring = std::max(gx, gy);
    const std::int64_t last_ring = std::max({std::abs(cx), std::abs(cx - (nx_ - 1)), std::abs(cy),
                                             std::abs(cy - (ny_ - 1))});
    double best = std::numeric_limits<double>::infinity();
    // Ring k+1 lies at least k·cell away.
    for (std::int64_t k = first_ring; k <= last_ring; ++k) {
      const std::int64_t dx_lo = std::max(-k, -cx), dx_hi = std::min(k, nx_ - 1 - cx);
      const std::int64_t dy_lo = std::max(-k, -cy), dy_hi = std::min(k, ny_ - 1 - cy);
      for (std::int64_t dx = dx_lo; dx <= dx_hi; ++dx) {
        if (dx == -k || dx == k) {
          for (std::int64_t dy = dy_lo; dy <= dy_hi; ++dy) visit(cx + dx, cy + dy, x, best);
        } else {
          if (-k >= dy_lo) visit(cx + dx, cy - k, x, best);
          if (k != 0 && k <= dy_hi) visit(cx + dx, cy + k, x, best);
        }
      }
      if (best <= static_cast<double>(k) * cell_) break;
    }
    return best;
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(double x, double y) const {
    return {static_cast<std::int64_t>(std::floor((x - origin_.real()) / cell_)),
            static_cast<std::int64_t>(std::floor((y - origin_.imag()) / cell_))};
  }
  std::int64_t clamp_x(std::int64_t v) const { return std::clamp<std::int64_t>(v, 0, nx_ - 1); }
  std::int64_t clamp_y(std::int64_t v) const { return std::clamp<std::int64_t>(v, 0, ny_ - 1); }

  void visit(std::int64_t cx, std::int64_t cy, std::complex<double> x, double& best) const {
    if (cx < 0 || cy < 0 || cx >= nx_ || cy >= ny_) return;
    for (std::uint32_t i : buckets_[static_cast<std::size_t>(cx * ny_ + cy)])
      best = std::min(best, point_segment_distance(x, set_.segments[i]));
  }

  const SegmentSet& set_;
  double cell_ = 1.0;
  std::complex<double> origin_;
  std::int64_t nx_ = 1, ny_ = 1;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

}  // namespace

double directed_distance(std::span<const std::complex<double>> samples, const SegmentSet& target) {
  if (target.empty()) throw std::invalid_argument("directed_distance: empty target");
  const SegmentGrid grid(target);
  double worst = 0.0;
  const auto n = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 256) reduction(max : worst)
  for (std::int64_t i = 0; i < n; ++i) worst = std::max(worst, grid.nearest(samples[i]));
  return worst;
}

std::vector<std::uint64_t> dekking_counts(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  const std::size_t alphabet = p * q;
  std::vector<std::uint64_t> counts(alphabet, 0);
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(alphabet, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) ++local[dekking_symbol(p, q, static_cast<std::uint64_t>(i))];
#pragma omp critical
    for (std::size_t s = 0; s < alphabet; ++s) counts[s] += local[s];
  }
  return counts;
}

std::size_t first_mismatch(std::span<const CycNumber> lhs, std::span<const CycNumber> rhs,
                           const CycNumber& scale) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("first_mismatch: length mismatch");
  std::size_t first = lhs.size();
  const auto n = static_cast<std::int64_t>(lhs.size());
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i)
    if (!(scale * lhs[i] == rhs[i])) first = std::min(first, static_cast<std::size_t>(i));
  return first;
}

}  // namespace parallel

}  // namespace tmc
