#pragma once

// Similarity witnesses c·lhs(k1·n) = rhs(k2·n) and the chain that relates a
// Thue-Morse turtle curve over t_2 to a regular Dekking curve:
//
//   T ~ B ~ D_{2, 2^b q, k2} ~ D_{2, q, k1}
//
// Every link is checked by exact evaluation up to a configurable depth.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmc/curves.hpp"
#include "tmc/turtle.hpp"

namespace tmc {

/// A violated theorem hypothesis, with a machine-readable reason.
class HypothesisError : public std::invalid_argument {
 public:
  enum class Reason {
    not_binary,             // needs p = 2
    trivial_heading,        // α_T(φ(0)) has no odd part: q = 1
    not_coprime,            // gcd(k, q) != 1
    equal_images,           // P_T(φ(0)) = P_T(φ(1)), or c0 = c1
    not_absolute,           // B is not of the form c_x ζ_q^{ky}
    not_regular,            // no regular target D_{2,q,k1}
    no_exponent,            // no d with k1 ≡ 2^d k2 (mod q)
    zero_constant,          // similarity constant vanished
  };

  HypothesisError(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

struct SimilarityWitness {
  CycNumber c;
  std::uint64_t k1;
  std::uint64_t k2;
  TurtleCurve lhs;
  TurtleCurve rhs;

  /// Validates c != 0 and positive strides.
  SimilarityWitness(CycNumber c, std::uint64_t k1, std::uint64_t k2, TurtleCurve lhs, TurtleCurve rhs);
};

struct WitnessReport {
  bool passed = false;
  std::uint64_t depth = 0;                     // n ranged over 0..depth
  std::optional<std::uint64_t> first_failure;  // smallest violating n
};

/// Exact check of c·lhs(k1·n) = rhs(k2·n) for 0 <= n <= n_max.
WitnessReport check_witness(const SimilarityWitness& w, std::uint64_t n_max);
/// Serial reference for check_witness.
WitnessReport check_witness_serial(const SimilarityWitness& w, std::uint64_t n_max);

SimilarityWitness identity_witness(const TurtleCurve& curve);
/// T1~T2 (c, k1, k2) and T2~T3 (d, m1, m2) give T1~T3 (cd, k1·m1, k2·m2).
/// Throws std::invalid_argument if the middle curves differ.
SimilarityWitness compose_witnesses(const SimilarityWitness& w1, const SimilarityWitness& w2);
/// T1~T2 (c, k1, k2) gives T2~T1 (1/c, k2, k1).
SimilarityWitness invert_witness(const SimilarityWitness& w);

struct AbsoluteLink {
  TurtleCurve curve;  // B = (z_{p,q}, κ), κ((x,y)) = P_T(φ(x)) ζ_q^{ky}
  SimilarityWitness witness;  // T(p·n) = B(n)
  std::uint64_t q;
  std::uint64_t k;
};

/// T = (t_p, τ) ~ B. The heading α_T(φ(0)) = ζ_q^k is read in lowest terms.
AbsoluteLink tmc_to_absolute(const TurtleCurve& tm_curve);

struct DekkingLink {
  DekkingCurve target;        // D_{2,q,k}
  SimilarityWitness witness;  // (2/(c0-c1))·B(q·n) = D(q·n)
  CycNumber c0;
  CycNumber c1;
};

/// B = (z_{2,q}, (x,y) ↦ c_x ζ_q^{ky}) ~ D_{2,q,k}.
DekkingLink absolute_to_dekking(const TurtleCurve& absolute_curve);

struct DekkingReduction {
  DekkingCurve reduced;       // R = D_{2,q,k1}
  SimilarityWitness witness;  // D(2^{d+b})·R(n) = D(2^{d+b}·n)
  std::uint64_t b;
  std::uint64_t d;
};

/// D = D_{2, q·2^b, k2} with q odd: finds the least d in 0..φ(q) with
/// k1 ≡ 2^d k2 (mod q).
DekkingReduction dekking_reduce(const DekkingCurve& curve, std::int64_t target_k1);

struct MainResultCertificate {
  std::uint64_t b = 0;
  std::uint64_t q = 0;
  std::uint64_t k2 = 0;
  std::uint64_t d = 0;
  std::uint64_t k1 = 0;
  CycNumber c0;
  CycNumber c1;
  std::vector<SimilarityWitness> chain;  // T~B, B~D, D~R
  std::vector<WitnessReport> reports;    // one per chain entry
  std::optional<SimilarityWitness> composite;  // T~R
  WitnessReport composite_report;
  DekkingCurve intermediate;  // D_{2, 2^b q, k2}
  DekkingCurve target;        // R = D_{2,q,k1}
  ScalingInfo target_scaling;
  bool koch = false;  // q = 3: the limit curve is the Koch curve

  bool verified() const;
};

/// Builds and checks the full chain for (t_2, τ). Hypothesis violations throw
/// HypothesisError; failed exact checks are reported, not thrown.
MainResultCertificate certify_main_result(const TurtleCurve& tm_curve, std::uint64_t n_max = 1000);

}  // namespace tmc
