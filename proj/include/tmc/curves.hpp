#pragma once

// Thue-Morse turtle curves and Dekking curves D_{p,q,k}: the absolute curve
// over z_{p,q} whose step for (x, y) is ζ_p^x ζ_q^{ky}.

#include <cstdint>
#include <string>
#include <vector>

#include "tmc/arith.hpp"
#include "tmc/cyclotomic.hpp"
#include "tmc/turtle.hpp"

namespace tmc {

/// (t_p, τ) with τ given per symbol of Z/p.
TurtleCurve thue_morse_curve(std::uint64_t p, std::vector<GroupElement> images);

class DekkingCurve {
 public:
  /// Requires p, q >= 2 and gcd(k, q) = 1; k is kept modulo q.
  DekkingCurve(std::uint64_t p, std::uint64_t q, std::int64_t k);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t k() const { return k_; }
  bool coprime() const;

  /// P_D((x, y)) = ζ_p^x ζ_q^{ky}.
  RootOfUnity step(Symbol s) const;
  TurtleCurve as_turtle() const;
  std::string name() const;

  bool operator==(const DekkingCurve&) const = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint64_t k_;
};

struct ScalingInfo {
  std::uint64_t big_q = 0;  // Q = p^φ(q)
  CycNumber r;              // D(Q)
  CycNumber r_norm;         // |r|² = r·conj(r), exact
  bool regular = false;     // certified |r| > 1
  ModulusInterval modulus;  // enclosure of |r|
};

/// D(N) by scanning z_{p,q}; valid for any p, q.
CycNumber dekking_point(const DekkingCurve& curve, std::uint64_t n);

/// D(p^j) as the product Π_{l<j} Σ_{x<p} ζ_p^x ζ_q^{k x p^l}; costs j·p
/// multiplications instead of p^j steps.
CycNumber dekking_point_power(const DekkingCurve& curve, std::uint64_t j);

/// D(N) from parallel symbol counts: Σ_s #{i < N : z(i) = s} · P_D(s).
CycNumber dekking_point_by_counts(const DekkingCurve& curve, std::uint64_t n);

/// O(log N) evaluation through D(Qn + s) = r·D(n) + P_D(z(n))·D(s), s < Q.
/// Holds the table D(0..Q); build once and query many times.
class FastDekking {
 public:
  static constexpr std::uint64_t kMaxBlock = 1ull << 22;

  /// Requires gcd(p, q) = 1 and Q <= kMaxBlock.
  explicit FastDekking(const DekkingCurve& curve);

  CycNumber operator()(std::uint64_t n) const;
  std::uint64_t block() const { return big_q_; }
  const CycNumber& scaling_factor() const { return block_sums_.back(); }

 private:
  DekkingCurve curve_;
  std::uint64_t big_q_;
  std::vector<CycNumber> block_sums_;  // D(0), ..., D(Q)
};

CycNumber dekking_point_fast(const DekkingCurve& curve, std::uint64_t n);

/// Q, r = D(Q) and the certified regularity flag. Requires gcd(p, q) = 1.
ScalingInfo scaling_info(const DekkingCurve& curve);

}  // namespace tmc
