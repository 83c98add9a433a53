#pragma once

// Exact arithmetic in cyclotomic fields Q(ζ_m).
//
// A CycNumber stores its conductor m and φ(m) rational coefficients over the
// power basis 1, ζ_m, ..., ζ_m^{φ(m)-1}, always reduced modulo Φ_m, so two
// values with the same conductor are equal iff their coefficients are equal.
// Binary operations lift both operands to lcm(m_a, m_b); the minimal
// conductor is only recovered by an explicit normalize().

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tmc {

/// ζ_m^e with gcd(m, e) divided out, so (order, exponent) is canonical.
/// The trivial root is (1, 0).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::uint64_t m, std::int64_t e);

  static RootOfUnity one() { return {}; }

  std::uint64_t order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }

  RootOfUnity operator*(const RootOfUnity& rhs) const;
  RootOfUnity& operator*=(const RootOfUnity& rhs) { return *this = *this * rhs; }
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;
  bool is_one() const { return order_ == 1; }

  bool operator==(const RootOfUnity&) const = default;
  std::string to_string() const;

 private:
  std::uint64_t order_ = 1;
  std::uint64_t exponent_ = 0;
};

/// Certified bounds lower <= |x| <= upper.
struct ModulusInterval {
  mpq_class lower;
  mpq_class upper;

  mpq_class width() const { return upper - lower; }
};

class CycNumber;

/// A floating approximation of a CycNumber with a rigorous error bound.
struct Embedding {
  std::complex<double> value;
  /// |value - exact| <= error.
  double error = 0.0;
  ModulusInterval modulus;
};

class CycNumber {
 public:
  /// Zero.
  CycNumber();
  CycNumber(const mpq_class& rational);  // NOLINT: implicit by design of the field API
  CycNumber(long value) : CycNumber(mpq_class(value)) {}  // NOLINT
  CycNumber(int value) : CycNumber(mpq_class(value)) {}  // NOLINT
  /// Coefficients over the power basis of Q(ζ_m); reduced on construction.
  CycNumber(std::uint64_t conductor, std::vector<mpq_class> coefficients);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational if it lies in Q.
  std::optional<mpq_class> as_rational() const;
  /// Value as a root of unity if it is one.
  std::optional<RootOfUnity> as_root_of_unity() const;

  /// Same value expressed over Q(ζ_M); M must be a multiple of conductor().
  CycNumber lifted(std::uint64_t m) const;
  /// Same value over the smallest conductor whose field contains it.
  CycNumber normalized() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b);

  /// Multiplication by a root of unity (cheap permutation-and-reduce).
  CycNumber rotated(const RootOfUnity& u) const;
  /// Exact inverse via the extended Euclidean algorithm against Φ_m.
  /// Throws std::domain_error on zero.
  CycNumber inverse() const;
  /// Complex conjugate (ζ ↦ ζ^{-1}).
  CycNumber conj() const;
  /// Galois automorphism ζ_m ↦ ζ_m^j, gcd(j, m) = 1.
  CycNumber galois(std::uint64_t j) const;

  /// Certified embedding into C; width > 0 is the required bound on both the
  /// floating error and the modulus-interval width.
  Embedding embed(const mpq_class& width = mpq_class(1, 1000000000000)) const;
  /// Sign of a real-valued number, certified by interval refinement.
  /// Throws std::domain_error if the value is not real.
  int real_sign() const;

  /// Field equality (operands are lifted to a common conductor).
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// Text form in the literal grammar "a + b*z(m,e) + ...".
  std::string to_string() const;

 private:
  std::uint64_t conductor_;
  std::vector<mpq_class> coeffs_;
};

/// ζ_m^e. Throws std::invalid_argument for m == 0.
CycNumber root(std::uint64_t m, std::int64_t e);
CycNumber to_cyc(const RootOfUnity& u);

/// Literal parser for the grammar used by to_string and the CLI:
///   literal := term (('+'|'-') term)*
///   term    := rational | rational '*' 'z(' m ',' e ')' | 'z(' m ',' e ')'
/// Throws std::invalid_argument on malformed input.
CycNumber parse_cyc(const std::string& text);

}  // namespace tmc
