#include "tmc/similarity.hpp"

#include <numeric>

#include "tmc/arith.hpp"
#include "tmc/kernels.hpp"

namespace tmc {

namespace {

// lhs(k·n) for n = 0..n_max, by one scan.
std::vector<CycNumber> strided_points(const TurtleCurve& curve, std::uint64_t stride, std::uint64_t n_max) {
  std::vector<CycNumber> out;
  out.reserve(n_max + 1);
  CurveScan scan(curve);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    scan.advance_to(n * stride);
    out.push_back(scan.position());
  }
  return out;
}

WitnessReport make_report(std::size_t mismatch, std::uint64_t n_max) {
  WitnessReport report;
  report.depth = n_max;
  report.passed = mismatch > n_max;
  if (!report.passed) report.first_failure = mismatch;
  return report;
}

std::uint64_t two_adic_valuation(std::uint64_t m) {
  std::uint64_t b = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++b;
  }
  return b;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

SimilarityWitness::SimilarityWitness(CycNumber c_, std::uint64_t k1_, std::uint64_t k2_, TurtleCurve lhs_,
                                     TurtleCurve rhs_)
    : c(std::move(c_)), k1(k1_), k2(k2_), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  if (c.is_zero()) throw std::invalid_argument("similarity witness: c must be nonzero");
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("similarity witness: strides must be positive");
}

WitnessReport check_witness(const SimilarityWitness& w, std::uint64_t n_max) {
  std::vector<CycNumber> lhs, rhs;
  // the two scans are independent
#pragma omp parallel sections
  {
#pragma omp section
    lhs = strided_points(w.lhs, w.k1, n_max);
#pragma omp section
    rhs = strided_points(w.rhs, w.k2, n_max);
  }
  return make_report(parallel::first_mismatch(lhs, rhs, w.c), n_max);
}

WitnessReport check_witness_serial(const SimilarityWitness& w, std::uint64_t n_max) {
  const auto lhs = strided_points(w.lhs, w.k1, n_max);
  const auto rhs = strided_points(w.rhs, w.k2, n_max);
  return make_report(serial::first_mismatch(lhs, rhs, w.c), n_max);
}

SimilarityWitness identity_witness(const TurtleCurve& curve) { return {CycNumber(1), 1, 1, curve, curve}; }

SimilarityWitness compose_witnesses(const SimilarityWitness& w1, const SimilarityWitness& w2) {
  if (!(w1.rhs == w2.lhs))
    throw std::invalid_argument("compose: middle curves differ: " + w1.rhs.describe() + " vs " +
                                w2.lhs.describe());
  return {w1.c * w2.c, w1.k1 * w2.k1, w1.k2 * w2.k2, w1.lhs, w2.rhs};
}

SimilarityWitness invert_witness(const SimilarityWitness& w) { return {w.c.inverse(), w.k2, w.k1, w.rhs, w.lhs}; }

AbsoluteLink tmc_to_absolute(const TurtleCurve& tm_curve) {
  const SequenceSpec& spec = tm_curve.spec();
  if (spec.kind != SequenceSpec::Kind::thue_morse)
    throw std::invalid_argument("T->B needs a Thue-Morse curve, got " + spec.name());
  const std::uint64_t p = spec.p;
  const Interpreter& tau = tm_curve.interpreter();
  const UniformMorphism phi = thue_morse_morphism(p);

  // α is the same on every φ(x): each image permutes the alphabet.
  const RootOfUnity heading = alpha_word(tau, phi.image(0));
  const std::uint64_t q = heading.order();
  const std::uint64_t k = heading.exponent();
  if (q == 1)
    throw HypothesisError(HypothesisError::Reason::trivial_heading,
                          "alpha_T(phi(0)) = 1, so q = 1: the curve has no rotating block heading");
  if (std::gcd(k, q) != 1)
    throw HypothesisError(HypothesisError::Reason::not_coprime,
                          "gcd(k, q) != 1 for k=" + str(k) + ", q=" + str(q));

  std::vector<CycNumber> block(p);
  for (Symbol x = 0; x < p; ++x) block[x] = p_word(tau, phi.image(x));

  std::vector<GroupElement> kappa;
  kappa.reserve(p * q);
  for (Symbol s = 0; s < p * q; ++s) {
    auto [x, y] = decode_pair(s, q);
    kappa.push_back({block[x].rotated(RootOfUnity(q, static_cast<std::int64_t>(mul_mod(k, y, q)))),
                     RootOfUnity::one()});
  }
  TurtleCurve b(SequenceSpec::dekking(p, q), Interpreter(std::move(kappa)));
  SimilarityWitness w(CycNumber(1), p, 1, tm_curve, b);
  return {std::move(b), std::move(w), q, k};
}

DekkingLink absolute_to_dekking(const TurtleCurve& absolute_curve) {
  const SequenceSpec& spec = absolute_curve.spec();
  if (spec.kind != SequenceSpec::Kind::dekking)
    throw std::invalid_argument("B->D needs a curve over a Dekking sequence, got " + spec.name());
  if (spec.p != 2)
    throw HypothesisError(HypothesisError::Reason::not_binary,
                          "B->D works only with p = 2, got p=" + str(spec.p));
  const Interpreter& kappa = absolute_curve.interpreter();
  if (!kappa.is_absolute())
    throw HypothesisError(HypothesisError::Reason::not_absolute, "B->D needs an absolute curve");
  const std::uint64_t q = spec.q;
  const CycNumber c0 = kappa[encode_pair(0, 0, q)].z;
  const CycNumber c1 = kappa[encode_pair(1, 0, q)].z;
  if (c0 == c1)
    throw HypothesisError(HypothesisError::Reason::equal_images, "B->D needs c0 != c1, both are " +
                                                                     c0.to_string());

  // ζ_q^k from whichever of c0, c1 is nonzero
  const Symbol x_ref = c0.is_zero() ? 1 : 0;
  const CycNumber& c_ref = x_ref == 0 ? c0 : c1;
  const auto ratio = (kappa[encode_pair(x_ref, 1, q)].z / c_ref).as_root_of_unity();
  if (!ratio || q % ratio->order() != 0)
    throw HypothesisError(HypothesisError::Reason::not_absolute,
                          "B->D: kappa((x,1)) / kappa((x,0)) is not a q-th root of unity");
  const std::uint64_t k = ratio->exponent() * (q / ratio->order());
  if (std::gcd(k, q) != 1)
    throw HypothesisError(HypothesisError::Reason::not_coprime,
                          "B->D: gcd(k, q) != 1 for k=" + str(k) + ", q=" + str(q));

  for (Symbol s = 0; s < 2 * q; ++s) {
    auto [x, y] = decode_pair(s, q);
    const CycNumber expected = (x == 0 ? c0 : c1).rotated(RootOfUnity(q, static_cast<std::int64_t>(mul_mod(k, y, q))));
    if (!(kappa[s].z == expected))
      throw HypothesisError(HypothesisError::Reason::not_absolute,
                            "B->D: step for " + spec.format_symbol(s) + " is not c_x zeta_q^(ky)");
  }

  DekkingCurve d(2, q, static_cast<std::int64_t>(k));
  SimilarityWitness w(CycNumber(2) / (c0 - c1), q, q, absolute_curve, d.as_turtle());
  return {d, std::move(w), c0, c1};
}

DekkingReduction dekking_reduce(const DekkingCurve& curve, std::int64_t target_k1) {
  if (curve.p() != 2)
    throw HypothesisError(HypothesisError::Reason::not_binary,
                          "D->D needs p = 2, got " + curve.name());
  const std::uint64_t b = two_adic_valuation(curve.q());
  const std::uint64_t q = curve.q() >> b;
  if (q == 1)
    throw HypothesisError(HypothesisError::Reason::trivial_heading,
                          "D->D: " + curve.name() + " has no odd part (q = 1)");
  const std::uint64_t k1 = static_cast<std::uint64_t>(mod_floor(target_k1, static_cast<std::int64_t>(q)));
  if (std::gcd(k1, q) != 1)
    throw HypothesisError(HypothesisError::Reason::not_coprime,
                          "D->D: gcd(k1, q) != 1 for k1=" + str(k1) + ", q=" + str(q));

  const std::uint64_t k2 = curve.k() % q;
  std::optional<std::uint64_t> d;
  for (std::uint64_t e = 0; e <= totient(q); ++e)
    if (mul_mod(pow_mod(2, e, q), k2, q) == k1) {
      d = e;
      break;
    }
  if (!d)
    throw HypothesisError(HypothesisError::Reason::no_exponent,
                          "D->D: no d in 0..phi(" + str(q) + ") with " + str(k1) + " = 2^d * " + str(k2) +
                              " (mod " + str(q) + ")");

  const CycNumber c = dekking_point_power(curve, *d + b);
  if (c.is_zero())
    throw HypothesisError(HypothesisError::Reason::zero_constant,
                          "D->D: D(2^" + str(*d + b) + ") = 0 for " + curve.name());
  DekkingCurve reduced(2, q, static_cast<std::int64_t>(k1));
  SimilarityWitness w(c, 1, checked_pow(2, *d + b), reduced.as_turtle(), curve.as_turtle());
  return {reduced, std::move(w), b, *d};
}

bool MainResultCertificate::verified() const {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return composite.has_value() && composite_report.passed && target_scaling.regular;
}

MainResultCertificate certify_main_result(const TurtleCurve& tm_curve, std::uint64_t n_max) {
  const SequenceSpec& spec = tm_curve.spec();
  if (spec.kind != SequenceSpec::Kind::thue_morse || spec.p != 2)
    throw HypothesisError(HypothesisError::Reason::not_binary,
                          "main result needs a curve over t_2, got " + spec.name());
  const Interpreter& tau = tm_curve.interpreter();
  const UniformMorphism phi = thue_morse_morphism(2);

  const RootOfUnity heading = alpha_word(tau, phi.image(0));
  const std::uint64_t m = heading.order();
  const std::uint64_t b = two_adic_valuation(m);
  const std::uint64_t q = m >> b;
  if (q == 1)
    throw HypothesisError(HypothesisError::Reason::trivial_heading,
                          "alpha_T(phi(0)) = " + heading.to_string() + " has order " + str(m) +
                              ", a power of 2: q = 1");
  const std::uint64_t k2 = heading.exponent();
  if (std::gcd(k2, q) != 1)
    throw HypothesisError(HypothesisError::Reason::not_coprime,
                          "gcd(k2, q) != 1 for k2=" + str(k2) + ", q=" + str(q));
  const CycNumber c0 = p_word(tau, phi.image(0));
  const CycNumber c1 = p_word(tau, phi.image(1));
  if (c0 == c1)
    throw HypothesisError(HypothesisError::Reason::equal_images,
                          "P_T(phi(0)) = P_T(phi(1)) = " + c0.to_string());

  // smallest d whose target D_{2,q,2^d k2} is regular
  std::optional<std::uint64_t> chosen_k1;
  std::optional<ScalingInfo> scaling;
  const std::uint64_t phi_q = totient(q);
  for (std::uint64_t d = 0; d <= phi_q && !chosen_k1; ++d) {
    const std::uint64_t k1 = mul_mod(pow_mod(2, d, q), k2, q);
    ScalingInfo info = scaling_info(DekkingCurve(2, q, static_cast<std::int64_t>(k1)));
    if (info.regular) {
      chosen_k1 = k1;
      scaling = std::move(info);
    }
  }
  if (!chosen_k1)
    throw HypothesisError(HypothesisError::Reason::not_regular,
                          "no regular D_{2," + str(q) + ",k1} with k1 = 2^d * " + str(k2) + " (mod " + str(q) + ")");

  AbsoluteLink to_b = tmc_to_absolute(tm_curve);
  DekkingLink to_d = absolute_to_dekking(to_b.curve);
  DekkingReduction to_r = dekking_reduce(to_d.target, static_cast<std::int64_t>(*chosen_k1));

  MainResultCertificate cert{.b = b,
                             .q = q,
                             .k2 = k2,
                             .d = to_r.d,
                             .k1 = *chosen_k1,
                             .c0 = c0,
                             .c1 = c1,
                             .chain = {},
                             .reports = {},
                             .composite = std::nullopt,
                             .composite_report = {},
                             .intermediate = to_d.target,
                             .target = to_r.reduced,
                             .target_scaling = *scaling,
                             .koch = q == 3};
  cert.chain.push_back(to_b.witness);
  cert.chain.push_back(to_d.witness);
  cert.chain.push_back(invert_witness(to_r.witness));
  for (const auto& w : cert.chain) cert.reports.push_back(check_witness(w, n_max));
  cert.composite = compose_witnesses(compose_witnesses(cert.chain[0], cert.chain[1]), cert.chain[2]);
  cert.composite_report = check_witness(*cert.composite, n_max);
  return cert;
}

}  // namespace tmc
