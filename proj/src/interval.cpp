#include "tmc/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tmc {

void MpInterval::init() {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

MpInterval::MpInterval(mpfr_prec_t prec) : prec_(prec) { init(); }

MpInterval::MpInterval(const mpq_class& value, mpfr_prec_t prec) : prec_(prec) {
  init();
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

MpInterval::MpInterval(const MpInterval& other) : prec_(other.prec_) {
  init();
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

MpInterval::MpInterval(MpInterval&& other) noexcept : prec_(other.prec_) {
  init();
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

MpInterval& MpInterval::operator=(const MpInterval& other) {
  if (this != &other) {
    MpInterval copy(other);
    *this = std::move(copy);
  }
  return *this;
}

MpInterval& MpInterval::operator=(MpInterval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

MpInterval::~MpInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

namespace {

// Angle 2πj/m enclosed as [lo, hi] using a directed enclosure of π.
void turn_angle(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
  mpq_class frac(2 * j, m);
  mpfr_t pi;
  mpfr_init2(pi, prec);
  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_mul_q(lo, pi, frac.get_mpq_t(), MPFR_RNDD);
  mpfr_const_pi(pi, MPFR_RNDU);
  mpfr_mul_q(hi, pi, frac.get_mpq_t(), MPFR_RNDU);
  mpfr_clear(pi);
}

using TrigFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Enclosure of f over a tiny angle interval that holds no extremum of f.
MpInterval monotone_image(TrigFn f, mpfr_srcptr a, mpfr_srcptr b, mpfr_prec_t prec) {
  MpInterval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  auto lo = const_cast<mpfr_ptr>(out.lo());
  auto hi = const_cast<mpfr_ptr>(out.hi());
  f(lo, a, MPFR_RNDD);
  f(t, b, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  f(hi, a, MPFR_RNDU);
  f(t, b, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

}  // namespace

MpInterval MpInterval::cos_turn(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec) {
  if (m == 0) throw std::invalid_argument("cos_turn: m must be positive");
  j %= m;
  // Exact values at multiples of a quarter turn; elsewhere the enclosure of
  // the angle is far narrower than the distance to any extremum of cos.
  if ((4 * j) % m == 0) {
    static const int quarter_cos[4] = {1, 0, -1, 0};
    return MpInterval(mpq_class(quarter_cos[(4 * j) / m]), prec);
  }
  mpfr_t a, b;
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  turn_angle(j, m, prec, a, b);
  MpInterval out = monotone_image(mpfr_cos, a, b, prec);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
  return out;
}

MpInterval MpInterval::sin_turn(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec) {
  if (m == 0) throw std::invalid_argument("sin_turn: m must be positive");
  j %= m;
  if ((4 * j) % m == 0) {
    static const int quarter_sin[4] = {0, 1, 0, -1};
    return MpInterval(mpq_class(quarter_sin[(4 * j) / m]), prec);
  }
  mpfr_t a, b;
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  turn_angle(j, m, prec, a, b);
  MpInterval out = monotone_image(mpfr_sin, a, b, prec);
  mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
  return out;
}

mpq_class MpInterval::lo_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class MpInterval::hi_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

bool MpInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

int MpInterval::certain_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

MpInterval& MpInterval::operator+=(const MpInterval& rhs) {
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

MpInterval& MpInterval::operator-=(const MpInterval& rhs) {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t);
  mpfr_clear(t);
  return *this;
}

MpInterval operator*(const MpInterval& a, const MpInterval& b) {
  const mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  MpInterval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr ends_a[2] = {a.lo_, a.hi_};
  mpfr_srcptr ends_b[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto ea : ends_a) {
    for (auto eb : ends_b) {
      if (first) {
        mpfr_mul(out.lo_, ea, eb, MPFR_RNDD);
        mpfr_mul(out.hi_, ea, eb, MPFR_RNDU);
        first = false;
        continue;
      }
      mpfr_mul(t, ea, eb, MPFR_RNDD);
      mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, ea, eb, MPFR_RNDU);
      mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    }
  }
  mpfr_clear(t);
  return out;
}

MpInterval MpInterval::square() const {
  MpInterval out(prec_);
  if (contains_zero()) {
    mpfr_set_zero(out.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sqr(out.hi_, lo_, MPFR_RNDU);
    mpfr_sqr(t, hi_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return out;
  }
  const bool positive = mpfr_sgn(lo_) > 0;
  mpfr_sqr(out.lo_, positive ? lo_ : hi_, MPFR_RNDD);
  mpfr_sqr(out.hi_, positive ? hi_ : lo_, MPFR_RNDU);
  return out;
}

MpInterval MpInterval::sqrt() const {
  MpInterval out(prec_);
  if (mpfr_sgn(lo_) > 0) mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  if (mpfr_sgn(hi_) > 0) mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

}  // namespace tmc
