#pragma once

// Closed real intervals with MPFR endpoints and outward (directed) rounding.
// Endpoints are dyadic rationals, so they convert to mpq_class exactly.

#include <gmpxx.h>
#include <mpfr.h>

namespace tmc {

class MpInterval {
 public:
  explicit MpInterval(mpfr_prec_t prec);
  MpInterval(const mpq_class& value, mpfr_prec_t prec);
  MpInterval(const MpInterval& other);
  MpInterval(MpInterval&& other) noexcept;
  MpInterval& operator=(const MpInterval& other);
  MpInterval& operator=(MpInterval&& other) noexcept;
  ~MpInterval();

  /// cos(2πj/m) and sin(2πj/m) enclosures.
  static MpInterval cos_turn(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec);
  static MpInterval sin_turn(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  mpq_class width() const { return hi_q() - lo_q(); }
  bool contains_zero() const;
  /// -1 / +1 when the interval excludes zero, 0 otherwise.
  int certain_sign() const;

  MpInterval& operator+=(const MpInterval& rhs);
  MpInterval& operator-=(const MpInterval& rhs);
  friend MpInterval operator+(MpInterval a, const MpInterval& b) { return a += b; }
  friend MpInterval operator-(MpInterval a, const MpInterval& b) { return a -= b; }
  friend MpInterval operator*(const MpInterval& a, const MpInterval& b);
  MpInterval square() const;
  /// Square root of the nonnegative part.
  MpInterval sqrt() const;

 private:
  void init();

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace tmc
