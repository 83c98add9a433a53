#include "tmc/curves.hpp"

#include <numeric>
#include <stdexcept>

#include "tmc/kernels.hpp"

namespace tmc {

TurtleCurve thue_morse_curve(std::uint64_t p, std::vector<GroupElement> images) {
  return TurtleCurve(SequenceSpec::thue_morse(p), Interpreter(std::move(images)));
}

DekkingCurve::DekkingCurve(std::uint64_t p, std::uint64_t q, std::int64_t k) : p_(p), q_(q) {
  if (p < 2 || q < 2) throw std::invalid_argument("Dekking curve: p and q must be >= 2");
  k_ = static_cast<std::uint64_t>(mod_floor(k, static_cast<std::int64_t>(q)));
  if (std::gcd(k_, q_) != 1)
    throw std::invalid_argument("Dekking curve: gcd(k, q) must be 1 (k=" + std::to_string(k) +
                                ", q=" + std::to_string(q) + ")");
}

bool DekkingCurve::coprime() const { return std::gcd(p_, q_) == 1; }

RootOfUnity DekkingCurve::step(Symbol s) const {
  auto [x, y] = decode_pair(s, q_);
  return RootOfUnity(p_, x) * RootOfUnity(q_, static_cast<std::int64_t>(mul_mod(k_, y, q_)));
}

TurtleCurve DekkingCurve::as_turtle() const {
  std::vector<GroupElement> images;
  for (Symbol s = 0; s < p_ * q_; ++s) images.push_back({to_cyc(step(s)), RootOfUnity::one()});
  return TurtleCurve(SequenceSpec::dekking(p_, q_), Interpreter(std::move(images)));
}

std::string DekkingCurve::name() const {
  return "D_{" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(k_) + "}";
}

CycNumber dekking_point(const DekkingCurve& curve, std::uint64_t n) {
  return curve_point(curve.as_turtle(), n);
}

CycNumber dekking_point_power(const DekkingCurve& curve, std::uint64_t j) {
  const std::uint64_t p = curve.p(), q = curve.q();
  CycNumber value(1);
  std::uint64_t stride = curve.k();  // k·p^l mod q
  for (std::uint64_t l = 0; l < j; ++l) {
    CycNumber factor;
    for (std::uint64_t x = 0; x < p; ++x)
      factor += to_cyc(RootOfUnity(p, x) * RootOfUnity(q, mul_mod(stride, x, q)));
    value *= factor;
    stride = mul_mod(stride, p, q);
  }
  return value;
}

CycNumber dekking_point_by_counts(const DekkingCurve& curve, std::uint64_t n) {
  const auto counts = parallel::dekking_counts(curve.p(), curve.q(), n);
  const std::uint64_t m = std::lcm(curve.p(), curve.q());
  CycNumber total = CycNumber().lifted(m);
  for (Symbol s = 0; s < counts.size(); ++s)
    if (counts[s] != 0) total += mpq_class(mpz_class(std::to_string(counts[s]))) * to_cyc(curve.step(s));
  return total;
}

FastDekking::FastDekking(const DekkingCurve& curve) : curve_(curve) {
  if (!curve.coprime())
    throw std::invalid_argument("fast Dekking evaluation needs gcd(p, q) = 1 for " + curve.name());
  big_q_ = checked_pow(curve.p(), totient(curve.q()));
  if (big_q_ > kMaxBlock)
    throw std::invalid_argument("fast Dekking evaluation: block Q=" + std::to_string(big_q_) +
                                " exceeds the table limit");
  block_sums_ = curve_points(curve.as_turtle(), big_q_);
}

CycNumber FastDekking::operator()(std::uint64_t n) const {
  std::vector<std::uint64_t> digits;
  for (std::uint64_t v = n; v > 0; v /= big_q_) digits.push_back(v % big_q_);
  const CycNumber& r = scaling_factor();
  CycNumber value = CycNumber().lifted(block_sums_.front().conductor());
  std::uint64_t prefix = 0;  // the value of the digits consumed so far
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const RootOfUnity head = curve_.step(dekking_symbol(curve_.p(), curve_.q(), prefix));
    value = r * value + block_sums_[*it].rotated(head);
    prefix = prefix * big_q_ + *it;
  }
  return value;
}

CycNumber dekking_point_fast(const DekkingCurve& curve, std::uint64_t n) { return FastDekking(curve)(n); }

ScalingInfo scaling_info(const DekkingCurve& curve) {
  if (!curve.coprime())
    throw std::invalid_argument("scaling factor needs gcd(p, q) = 1 for " + curve.name());
  ScalingInfo info;
  info.big_q = checked_pow(curve.p(), totient(curve.q()));
  info.r = dekking_point_power(curve, totient(curve.q()));
  info.r_norm = info.r * info.r.conj();
  info.regular = (info.r_norm - CycNumber(1)).real_sign() > 0;
  info.modulus = info.r.embed(mpq_class(1, 1000000000000)).modulus;
  return info;
}

}  // namespace tmc
