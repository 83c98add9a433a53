#include "tmc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "tmc/arith.hpp"
#include "tmc/interval.hpp"

namespace tmc {

namespace {

using IntPoly = std::vector<std::int64_t>;  // low degree first
using QPoly = std::vector<mpq_class>;

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw std::overflow_error("cyclotomic: integer table overflow");
  return acc;
}

// Exact division of a monic-divisor integer polynomial.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t c = num[i + dn];  // den is monic
    quot[i] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i + k] = checked_mul_add(num[i + k], -c, den[k]);
  }
  return quot;
}

struct BasisEmbedding {
  std::vector<MpInterval> cos;
  std::vector<MpInterval> sin;
};

// Per-conductor tables. Immutable after construction except for the lazily
// filled embedding cache, which has its own lock.
class Context {
 public:
  explicit Context(std::uint64_t m);

  static const Context& get(std::uint64_t m);

  std::uint64_t m;
  std::size_t phi;
  IntPoly cyclo;                    // Φ_m, monic, degree phi
  std::vector<IntPoly> power_rows;  // power_rows[e] = x^e mod Φ_m, e < m

  const BasisEmbedding& embedding(mpfr_prec_t prec) const;

 private:
  mutable std::mutex embed_mutex_;
  mutable std::map<mpfr_prec_t, std::unique_ptr<BasisEmbedding>> embed_cache_;
};

IntPoly cyclotomic_polynomial(std::uint64_t m) {
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint64_t d : divisors(m)) {
    if (d == m) continue;
    num = divide_exact(num, Context::get(d).cyclo);
  }
  return num;
}

Context::Context(std::uint64_t m_) : m(m_), phi(totient(m_)), cyclo(cyclotomic_polynomial(m_)) {
  power_rows.assign(m, IntPoly(phi, 0));
  IntPoly cur(phi, 0);
  cur[0] = 1;
  for (std::uint64_t e = 0; e < m; ++e) {
    power_rows[e] = cur;
    // cur *= x, then eliminate x^phi using Φ_m monic.
    std::int64_t top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] = checked_mul_add(cur[i], -top, cyclo[i]);
  }
}

const Context& Context::get(std::uint64_t m) {
  static std::shared_mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<Context>> registry;
  {
    std::shared_lock lock(mutex);
    auto it = registry.find(m);
    if (it != registry.end()) return *it->second;
  }
  // Build outside the lock: construction recurses into get() for divisors.
  auto ctx = std::make_unique<Context>(m);
  std::unique_lock lock(mutex);
  auto [it, inserted] = registry.emplace(m, std::move(ctx));
  return *it->second;
}

const BasisEmbedding& Context::embedding(mpfr_prec_t prec) const {
  std::lock_guard lock(embed_mutex_);
  auto& slot = embed_cache_[prec];
  if (!slot) {
    slot = std::make_unique<BasisEmbedding>();
    for (std::size_t j = 0; j < phi; ++j) {
      slot->cos.push_back(MpInterval::cos_turn(j, m, prec));
      slot->sin.push_back(MpInterval::sin_turn(j, m, prec));
    }
  }
  return *slot;
}

// Reduce a dense exponent-indexed accumulator (length m) to the power basis.
std::vector<mpq_class> reduce_dense(const Context& ctx, const std::vector<mpq_class>& dense) {
  std::vector<mpq_class> out(ctx.phi);
  for (std::uint64_t e = 0; e < ctx.m; ++e) {
    if (sgn(dense[e]) == 0) continue;
    if (e < ctx.phi) {
      out[e] += dense[e];
      continue;
    }
    const IntPoly& row = ctx.power_rows[e];
    for (std::size_t k = 0; k < ctx.phi; ++k)
      if (row[k] != 0) out[k] += dense[e] * row[k];
  }
  return out;
}

// ---- polynomial helpers over Q for the extended Euclidean inverse ----

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Returns quotient; num becomes the remainder.
QPoly poly_divmod(QPoly& num, const QPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  QPoly quot(num.size() - den.size() + 1);
  const mpq_class& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    mpq_class c = num[i + den.size() - 1] / lead;
    quot[i] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= c * den[k];
  }
  trim(num);
  trim(quot);
  return quot;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

// ------------------------------------------------------------ RootOfUnity

RootOfUnity::RootOfUnity(std::uint64_t m, std::int64_t e) {
  if (m == 0) throw std::invalid_argument("root of unity: order must be positive");
  auto r = static_cast<std::uint64_t>(mod_floor(e, static_cast<std::int64_t>(m)));
  std::uint64_t g = std::gcd(m, r);  // gcd(m, 0) = m
  order_ = m / g;
  exponent_ = r / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const {
  std::uint64_t l = lcm_u(order_, rhs.order_);
  std::uint64_t e = (exponent_ * (l / order_) + rhs.exponent_ * (l / rhs.order_)) % l;
  return RootOfUnity(l, static_cast<std::int64_t>(e));
}

RootOfUnity RootOfUnity::inverse() const {
  return RootOfUnity(order_, -static_cast<std::int64_t>(exponent_));
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  auto m = static_cast<std::int64_t>(order_);
  auto e = static_cast<std::int64_t>(
      mul_mod(exponent_, static_cast<std::uint64_t>(mod_floor(k, m)), order_));
  return RootOfUnity(order_, e);
}

std::string RootOfUnity::to_string() const {
  if (order_ == 1) return "1";
  if (order_ == 2) return "-1";
  return std::to_string(exponent_) + "/" + std::to_string(order_);
}

// -------------------------------------------------------------- CycNumber

CycNumber::CycNumber() : conductor_(1), coeffs_(1) {}

CycNumber::CycNumber(const mpq_class& rational) : conductor_(1), coeffs_{rational} {}

CycNumber::CycNumber(std::uint64_t conductor, std::vector<mpq_class> coefficients)
    : conductor_(conductor) {
  if (conductor == 0) throw std::invalid_argument("CycNumber: conductor must be positive");
  const Context& ctx = Context::get(conductor);
  if (coefficients.size() <= ctx.phi) {
    coefficients.resize(ctx.phi);
    coeffs_ = std::move(coefficients);
    return;
  }
  // Longer inputs are read as exponents of ζ_m (mod m) and reduced.
  std::vector<mpq_class> dense(ctx.m);
  for (std::size_t e = 0; e < coefficients.size(); ++e) dense[e % ctx.m] += coefficients[e];
  coeffs_ = reduce_dense(ctx, dense);
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool CycNumber::is_rational() const { return normalized().conductor_ == 1; }

std::optional<mpq_class> CycNumber::as_rational() const {
  CycNumber n = normalized();
  if (n.conductor_ != 1) return std::nullopt;
  return n.coeffs_[0];
}

std::optional<RootOfUnity> CycNumber::as_root_of_unity() const {
  CycNumber n = normalized();
  const std::uint64_t l = lcm_u(2, n.conductor_);
  for (std::uint64_t e = 0; e < l; ++e)
    if (root(l, static_cast<std::int64_t>(e)) == n) return RootOfUnity(l, static_cast<std::int64_t>(e));
  return std::nullopt;
}

CycNumber CycNumber::lifted(std::uint64_t m) const {
  if (m == conductor_) return *this;
  if (m == 0 || m % conductor_ != 0)
    throw std::invalid_argument("CycNumber::lifted: target is not a multiple of the conductor");
  const Context& ctx = Context::get(m);
  const std::uint64_t step = m / conductor_;
  std::vector<mpq_class> dense(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) dense[(j * step) % m] += coeffs_[j];
  CycNumber out;
  out.conductor_ = m;
  out.coeffs_ = reduce_dense(ctx, dense);
  return out;
}

CycNumber CycNumber::normalized() const {
  if (is_zero()) return CycNumber();
  const std::uint64_t m = conductor_;
  for (std::uint64_t d : divisors(m)) {
    if (d == m) return *this;
    // Fixed by Gal(Q(ζ_m)/Q(ζ_d)) = {σ_j : j ≡ 1 mod d}?
    bool fixed = true;
    for (std::uint64_t j = 1 + d; j < m && fixed; j += d)
      if (std::gcd(j, m) == 1 && !(galois(j) == *this)) fixed = false;
    if (!fixed) continue;
    // Solve lift_d(x) = *this by Gaussian elimination.
    const std::size_t rows = coeffs_.size();
    const std::size_t cols = totient(d);
    std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1));
    for (std::size_t i = 0; i < cols; ++i) {
      std::vector<mpq_class> unit(cols);
      unit[i] = 1;
      CycNumber col = CycNumber(d, unit).lifted(m);
      for (std::size_t r = 0; r < rows; ++r) mat[r][i] = col.coeffs_[r];
    }
    for (std::size_t r = 0; r < rows; ++r) mat[r][cols] = coeffs_[r];
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col_row(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t sel = pivot_row;
      while (sel < rows && sgn(mat[sel][c]) == 0) ++sel;
      if (sel == rows) throw std::logic_error("normalize: singular lift matrix");
      std::swap(mat[sel], mat[pivot_row]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row || sgn(mat[r][c]) == 0) continue;
        mpq_class f = mat[r][c] / mat[pivot_row][c];
        for (std::size_t k = c; k <= cols; ++k) mat[r][k] -= f * mat[pivot_row][k];
      }
      pivot_col_row[c] = pivot_row++;
    }
    std::vector<mpq_class> x(cols);
    for (std::size_t c = 0; c < cols; ++c)
      x[c] = mat[pivot_col_row[c]][cols] / mat[pivot_col_row[c]][c];
    return CycNumber(d, std::move(x));
  }
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  if (rhs.conductor_ != conductor_) {
    const std::uint64_t l = lcm_u(conductor_, rhs.conductor_);
    *this = lifted(l);
    return *this += rhs.lifted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const std::uint64_t l = lcm_u(a.conductor_, b.conductor_);
    return a.lifted(l) * b.lifted(l);
  }
  const Context& ctx = Context::get(a.conductor_);
  if (ctx.m == 1) return CycNumber(a.coeffs_[0] * b.coeffs_[0]);
  std::vector<mpq_class> dense(ctx.m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      dense[(i + j) % ctx.m] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycNumber out;
  out.conductor_ = ctx.m;
  out.coeffs_ = reduce_dense(ctx, dense);
  return out;
}

CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

CycNumber CycNumber::rotated(const RootOfUnity& u) const {
  if (u.is_one()) return *this;
  const std::uint64_t l = lcm_u(conductor_, u.order());
  CycNumber base = lifted(l);
  const Context& ctx = Context::get(l);
  const std::uint64_t shift = u.exponent() * (l / u.order());
  std::vector<mpq_class> dense(l);
  for (std::size_t j = 0; j < base.coeffs_.size(); ++j) dense[(j + shift) % l] = base.coeffs_[j];
  base.coeffs_ = reduce_dense(ctx, dense);
  return base;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber::inverse: division by zero");
  const Context& ctx = Context::get(conductor_);
  QPoly modulus(ctx.cyclo.begin(), ctx.cyclo.end());
  QPoly r0 = modulus;
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly quot = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly next = poly_sub(s0, poly_mul(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r1 is a nonzero constant because Φ_m is irreducible.
  const mpq_class c = r1.at(0);
  for (auto& v : s1) v /= c;
  poly_divmod(s1, modulus);
  s1.resize(ctx.phi);
  return CycNumber(conductor_, std::move(s1));
}

CycNumber CycNumber::galois(std::uint64_t j) const {
  if (std::gcd(j, conductor_) != 1)
    throw std::invalid_argument("galois: exponent must be coprime to the conductor");
  const Context& ctx = Context::get(conductor_);
  std::vector<mpq_class> dense(ctx.m);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) dense[mul_mod(e, j, ctx.m)] += coeffs_[e];
  CycNumber out;
  out.conductor_ = conductor_;
  out.coeffs_ = reduce_dense(ctx, dense);
  return out;
}

CycNumber CycNumber::conj() const { return conductor_ <= 2 ? *this : galois(conductor_ - 1); }

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t l = lcm_u(a.conductor_, b.conductor_);
  return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

namespace {

struct ComplexEnclosure {
  MpInterval re;
  MpInterval im;
};

ComplexEnclosure enclose(const CycNumber& a, mpfr_prec_t prec) {
  const Context& ctx = Context::get(a.conductor());
  const BasisEmbedding& basis = ctx.embedding(prec);
  ComplexEnclosure out{MpInterval(prec), MpInterval(prec)};
  const auto& coeffs = a.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (sgn(coeffs[j]) == 0) continue;
    MpInterval c(coeffs[j], prec);
    out.re += c * basis.cos[j];
    out.im += c * basis.sin[j];
  }
  return out;
}

// max(hi - d, d - lo) rounded up, where d is the double nearest the midpoint.
double nearest_with_error(const MpInterval& iv, double& err) {
  mpfr_t mid, t;
  mpfr_init2(mid, iv.precision() + 1);
  mpfr_init2(t, iv.precision() + 64);
  mpfr_add(mid, iv.lo(), iv.hi(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  double d = mpfr_get_d(mid, MPFR_RNDN);
  mpfr_set_d(t, d, MPFR_RNDN);
  mpfr_sub(t, iv.hi(), t, MPFR_RNDU);
  double e1 = mpfr_get_d(t, MPFR_RNDU);
  mpfr_set_d(t, d, MPFR_RNDN);
  mpfr_sub(t, t, iv.lo(), MPFR_RNDU);
  double e2 = mpfr_get_d(t, MPFR_RNDU);
  err = std::max({e1, e2, 0.0});
  mpfr_clear(mid);
  mpfr_clear(t);
  return d;
}

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 1 << 14;

}  // namespace

Embedding CycNumber::embed(const mpq_class& width) const {
  if (sgn(width) <= 0) throw std::invalid_argument("embed: width must be positive");
  const double width_d = width.get_d();
  for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
    ComplexEnclosure enc = enclose(*this, prec);
    double err_re = 0, err_im = 0;
    Embedding out;
    out.value = {nearest_with_error(enc.re, err_re), nearest_with_error(enc.im, err_im)};
    // Round the sum up by one ulp to stay an upper bound.
    out.error = std::nextafter(err_re + err_im, std::numeric_limits<double>::infinity());
    MpInterval mod = (enc.re.square() + enc.im.square()).sqrt();
    out.modulus = {mod.lo_q(), mod.hi_q()};
    if (out.error < width_d && out.modulus.width() < width) return out;
  }
  throw std::runtime_error("embed: width " + width.get_str() +
                           " is below what a double can certify for this value");
}

int CycNumber::real_sign() const {
  if (is_zero()) return 0;
  if (!(conj() == *this)) throw std::domain_error("real_sign: value is not real");
  for (mpfr_prec_t prec = kStartPrecision; prec <= (1 << 16); prec *= 2) {
    int s = enclose(*this, prec).re.certain_sign();
    if (s != 0) return s;
  }
  throw std::runtime_error("real_sign: could not separate value from zero");
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpq_class& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << "z(" << conductor_ << ',' << j << ')';
    }
  }
  if (first) return "0";
  return os.str();
}

CycNumber root(std::uint64_t m, std::int64_t e) {
  if (m == 0) throw std::invalid_argument("root: order must be positive");
  return to_cyc(RootOfUnity(m, e));
}

CycNumber to_cyc(const RootOfUnity& u) {
  std::vector<mpq_class> dense(u.exponent() + 1);
  dense[u.exponent()] = 1;
  return CycNumber(u.order(), std::move(dense));
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& text) : s_(text) {}

  CycNumber parse() {
    skip();
    if (pos_ == s_.size()) fail("empty literal");
    CycNumber total;
    bool negative = false;
    if (peek('+') || peek('-')) negative = s_[pos_++] == '-';
    total += signed_term(negative);
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      if (!(peek('+') || peek('-'))) fail("expected '+' or '-'");
      negative = s_[pos_++] == '-';
      total += signed_term(negative);
    }
    return total;
  }

 private:
  CycNumber signed_term(bool negative) {
    skip();
    CycNumber t = term();
    return negative ? -t : t;
  }

  CycNumber term() {
    if (peek('z')) return root_literal();
    mpq_class coef = rational();
    skip();
    if (peek('*')) {
      ++pos_;
      skip();
      return coef * root_literal();
    }
    return coef;
  }

  CycNumber root_literal() {
    expect('z');
    expect('(');
    std::int64_t m = integer();
    expect(',');
    std::int64_t e = integer();
    expect(')');
    if (m <= 0) fail("root order must be positive");
    return root(static_cast<std::uint64_t>(m), e);
  }

  mpq_class rational() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
      ++pos_;
    std::string tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok.front() == '/' || tok.back() == '/' ||
        std::count(tok.begin(), tok.end(), '/') > 1)
      fail("malformed rational");
    mpq_class q;
    if (q.set_str(tok, 10) != 0) fail("malformed rational");
    if (tok.find('/') != std::string::npos && sgn(q.get_den()) == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  std::int64_t integer() {
    skip();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 18) fail("malformed integer");
    std::int64_t v = std::stoll(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cyclotomic literal '" + s_ + "': " + why + " at offset " +
                                std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNumber parse_cyc(const std::string& text) { return LiteralParser(text).parse(); }

}  // namespace tmc
