#pragma once

// Words over finite alphabets, uniform morphisms and the three sequence
// families used throughout the library: generalized Thue-Morse t_p, the
// periodic sequence f_q and the Dekking sequence z_{p,q}.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tmc {

/// Index into an alphabet. Product symbols (x, y) over Z/p x Z/q are
/// encoded as x * q + y.
using Symbol = std::uint32_t;

class Word {
 public:
  explicit Word(std::uint32_t alphabet_size);
  Word(std::uint32_t alphabet_size, std::vector<Symbol> symbols);

  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  void push_back(Symbol s);
  void append(const Word& other);
  void truncate(std::size_t len);

  /// Concatenation u ⁀ v. Alphabets must agree.
  friend Word operator+(Word u, const Word& v) {
    u.append(v);
    return u;
  }
  bool operator==(const Word&) const = default;

 private:
  std::uint32_t alphabet_size_;
  std::vector<Symbol> symbols_;
};

/// A k-uniform substitution: every symbol maps to a word of length exactly k.
class UniformMorphism {
 public:
  UniformMorphism(std::uint32_t alphabet_size, std::vector<Word> images);

  std::uint32_t alphabet_size() const { return alphabet_size_; }
  std::uint64_t arity() const { return arity_; }
  const Word& image(Symbol a) const;

  Word apply(const Word& w) const;
  /// m^power; the identity morphism for power 0.
  UniformMorphism power(unsigned exponent) const;
  bool prolongable_on(Symbol a) const;

  bool operator==(const UniformMorphism&) const = default;

 private:
  std::uint32_t alphabet_size_;
  std::uint64_t arity_;
  std::vector<Word> images_;
};

/// First `len` symbols of the fixed point m^ω(seed). Memory ≈ 4·len bytes.
/// Throws std::invalid_argument for arity < 2 or a non-prolongable seed.
Word fixed_point_prefix(const UniformMorphism& m, Symbol seed, std::uint64_t len);

/// Base-p digit sum s_p(n).
std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n);
/// t_p(n) = s_p(n) mod p.
Symbol tm_symbol(std::uint64_t p, std::uint64_t n);
/// f_q(n) = n mod q.
Symbol periodic_symbol(std::uint64_t q, std::uint64_t n);
/// z_{p,q}(n) encoded as t_p(n)·q + (n mod q).
Symbol dekking_symbol(std::uint64_t p, std::uint64_t q, std::uint64_t n);

inline Symbol encode_pair(Symbol x, Symbol y, std::uint64_t q) {
  return static_cast<Symbol>(x * q + y);
}
inline std::pair<Symbol, Symbol> decode_pair(Symbol s, std::uint64_t q) {
  return {static_cast<Symbol>(s / q), static_cast<Symbol>(s % q)};
}

/// φ(a) = a, a+1, ..., a+(p-1) over Z/p.
UniformMorphism thue_morse_morphism(std::uint64_t p);
/// δ(a) = (a + f_q(j)) for j < Q, Q = p^φ(q). Requires gcd(p, q) = 1.
UniformMorphism delta_morphism(std::uint64_t p, std::uint64_t q);
/// μ = φ^{φ(q)}, Q-uniform on Z/p. Requires gcd(p, q) = 1.
UniformMorphism mu_morphism(std::uint64_t p, std::uint64_t q);
/// λ((x,y))[j] = (μ(x)[j], δ(y)[j]) on Z/p x Z/q. Requires gcd(p, q) = 1.
UniformMorphism lambda_morphism(std::uint64_t p, std::uint64_t q);

/// Descriptor of one of the three sequence families.
struct SequenceSpec {
  enum class Kind { thue_morse, periodic, dekking };

  Kind kind;
  std::uint64_t p = 0;
  std::uint64_t q = 0;

  static SequenceSpec thue_morse(std::uint64_t p);
  static SequenceSpec periodic(std::uint64_t q);
  static SequenceSpec dekking(std::uint64_t p, std::uint64_t q);

  std::uint32_t alphabet_size() const;
  Symbol at(std::uint64_t n) const;
  /// The first `len` symbols, computed from the closed form.
  Word prefix(std::uint64_t len) const;
  /// Human-readable symbol: "x" or "(x,y)" for product symbols.
  std::string format_symbol(Symbol s) const;
  std::string name() const;

  bool operator==(const SequenceSpec&) const = default;
};

}  // namespace tmc
