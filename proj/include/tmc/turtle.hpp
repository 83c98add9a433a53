#pragma once

// The turtle group G = C x S^1, interpreter functions and turtle curves.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmc/cyclotomic.hpp"
#include "tmc/words.hpp"

namespace tmc {

/// (z, u): translate by z relative to the current heading, then turn by u.
struct GroupElement {
  CycNumber z;
  RootOfUnity u;

  static GroupElement identity() { return {CycNumber(), RootOfUnity::one()}; }

  /// (z1,u1) + (z2,u2) = (z1 + u1 z2, u1 u2).
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    return {a.z + b.z.rotated(a.u), a.u * b.u};
  }
  GroupElement& operator+=(const GroupElement& b) { return *this = *this + b; }
  /// (-z/u, 1/u).
  GroupElement inverse() const { return {-z.rotated(u.inverse()), u.inverse()}; }

  bool operator==(const GroupElement&) const = default;
  std::string to_string() const;
};

inline GroupElement g_add(const GroupElement& a, const GroupElement& b) { return a + b; }

/// τ: one group element per alphabet symbol.
class Interpreter {
 public:
  explicit Interpreter(std::vector<GroupElement> images);

  std::uint32_t alphabet_size() const { return static_cast<std::uint32_t>(images_.size()); }
  const GroupElement& operator[](Symbol a) const;
  const std::vector<GroupElement>& images() const { return images_; }
  /// True when no image turns the turtle.
  bool is_absolute() const;

  bool operator==(const Interpreter&) const = default;

 private:
  std::vector<GroupElement> images_;
};

/// S(w) = τ(w[0]) + τ(w[1]) + ...; S(ε) is the identity.
GroupElement s_word(const Interpreter& interp, const Word& w);
/// P = π1 ∘ S.
CycNumber p_word(const Interpreter& interp, const Word& w);
/// α = π2 ∘ S.
RootOfUnity alpha_word(const Interpreter& interp, const Word& w);

/// A sequence paired with an interpreter over the same alphabet.
class TurtleCurve {
 public:
  TurtleCurve(SequenceSpec spec, Interpreter interp);

  const SequenceSpec& spec() const { return spec_; }
  const Interpreter& interpreter() const { return interp_; }
  /// Largest step length max |P(a)|, as a certified upper bound.
  double max_step() const;

  bool operator==(const TurtleCurve&) const = default;
  std::string describe() const;

 private:
  SequenceSpec spec_;
  Interpreter interp_;
};

/// Incremental evaluation of T(0), T(1), ...; each advance costs one group
/// step. Not shareable; independent scans over one curve may run in parallel.
class CurveScan {
 public:
  explicit CurveScan(const TurtleCurve& curve);

  std::uint64_t index() const { return index_; }
  /// T(index()).
  const CycNumber& position() const { return position_; }
  /// Heading after index() steps.
  const RootOfUnity& heading() const { return heading_; }
  GroupElement state() const { return {position_, heading_}; }

  void advance();
  /// Advance until index() == n. Scans never move backwards.
  void advance_to(std::uint64_t n);

 private:
  const CycNumber& step_for(Symbol a);

  const TurtleCurve* curve_;
  std::uint64_t index_ = 0;
  CycNumber position_;
  RootOfUnity heading_;
  std::uint64_t heading_order_ = 1;  // every reachable heading is a power of ζ of this order
  std::uint64_t conductor_ = 1;      // common conductor of all positions
  // rotated_[a * heading_order_ + h] = τ(a).z · ζ^h, lifted to conductor_
  std::vector<std::optional<CycNumber>> rotated_;
};

/// T(n) = π1(Σ_{i<n} τ(σ(i))).
CycNumber curve_point(const TurtleCurve& curve, std::uint64_t n);
/// T(0), ..., T(n).
std::vector<CycNumber> curve_points(const TurtleCurve& curve, std::uint64_t n);

struct Segment {
  std::complex<double> a;
  std::complex<double> b;
};

/// Finite union of closed segments; every endpoint is within error_budget of
/// its exact position.
struct SegmentSet {
  std::vector<Segment> segments;
  double error_budget = 0.0;

  bool empty() const { return segments.empty(); }
  std::size_t size() const { return segments.size(); }
  /// Segments between consecutive points; a single point gives one
  /// degenerate segment.
  static SegmentSet from_points(const std::vector<std::complex<double>>& points, double error_budget);
};

/// The segments ℓ(T(i), T(i+1)) for i < n, endpoints certified within width.
/// Throws std::invalid_argument for n == 0.
SegmentSet polyline(const TurtleCurve& curve, std::uint64_t n,
                    const mpq_class& width = mpq_class(1, 1000000000000));

/// Embeds exact points with certified error < width (OpenMP kernel).
SegmentSet polyline_from_points(const std::vector<CycNumber>& points, const mpq_class& width);

}  // namespace tmc
