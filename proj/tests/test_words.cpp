#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>

#include "listings.hpp"
#include "oracles.hpp"
#include "tmc/words.hpp"

using namespace tmc;

namespace {

Word word(std::uint32_t alphabet, std::vector<Symbol> s) { return Word(alphabet, std::move(s)); }

std::vector<Symbol> first(const Word& w) { return {w.symbols().begin(), w.symbols().end()}; }

std::vector<std::pair<std::uint64_t, std::uint64_t>> coprime_pairs() { return {{2, 3}, {2, 5}, {3, 2}, {2, 7}}; }

}  // namespace

TEST_CASE("t_p against the printed listings") {
  for (std::size_t n = 0; n < listings::t2.size(); ++n) CHECK(tm_symbol(2, n) == listings::t2[n]);
  for (std::size_t n = 0; n < listings::t3.size(); ++n) CHECK(tm_symbol(3, n) == listings::t3[n]);
  for (std::size_t n = 0; n < listings::t4.size(); ++n) CHECK(tm_symbol(4, n) == listings::t4[n]);
  for (std::size_t n = 0; n < listings::t5.size(); ++n) CHECK(tm_symbol(5, n) == listings::t5[n]);
  CHECK(tm_symbol(3, 4) == 2);
  CHECK(tm_symbol(5, 0) == 0);
  CHECK_THROWS_AS(tm_symbol(1, 3), std::invalid_argument);
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(2, 7) == 3);
  CHECK(digit_sum(10, 0) == 0);
  CHECK(digit_sum(3, 10) == 2);
  CHECK_THROWS_AS(digit_sum(0, 5), std::invalid_argument);
}

TEST_CASE("periodic and dekking symbols") {
  CHECK(periodic_symbol(3, 7) == 1);
  CHECK(periodic_symbol(5, 0) == 0);
  CHECK(periodic_symbol(2, 9) == 1);
  CHECK_THROWS_AS(periodic_symbol(1, 9), std::invalid_argument);

  const auto z23 = SequenceSpec::dekking(2, 3);
  for (std::size_t n = 0; n < listings::z23.size(); ++n) CHECK(z23.format_symbol(z23.at(n)) == listings::z23[n]);
  const auto z25 = SequenceSpec::dekking(2, 5);
  for (std::size_t n = 0; n < listings::z25.size(); ++n) CHECK(z25.format_symbol(z25.at(n)) == listings::z25[n]);
  const auto z32 = SequenceSpec::dekking(3, 2);
  for (std::size_t n = 0; n < listings::z32.size(); ++n) CHECK(z32.format_symbol(z32.at(n)) == listings::z32[n]);

  CHECK(decode_pair(dekking_symbol(3, 2, 2), 2) == std::pair<Symbol, Symbol>{2, 0});
  CHECK(dekking_symbol(2, 5, 0) == encode_pair(0, 0, 5));
  CHECK_THROWS_AS(dekking_symbol(2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dekking_symbol(1, 3, 0), std::invalid_argument);
}

TEST_CASE("word invariants") {
  Word w(3);
  CHECK(w.empty());
  w.push_back(2);
  CHECK_THROWS_AS(w.push_back(3), std::invalid_argument);
  CHECK_THROWS_AS(Word(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(w.append(Word(2, {0})), std::invalid_argument);
  CHECK(first(word(3, {0, 1}) + word(3, {2})) == std::vector<Symbol>{0, 1, 2});
}

TEST_CASE("Thue-Morse morphism") {
  const auto phi2 = thue_morse_morphism(2);
  CHECK(phi2.image(0) == word(2, {0, 1}));
  CHECK(phi2.image(1) == word(2, {1, 0}));
  CHECK(phi2.arity() == 2);
  const auto phi3 = thue_morse_morphism(3);
  CHECK(phi3.image(0) == word(3, {0, 1, 2}));
  CHECK(phi3.image(1) == word(3, {1, 2, 0}));
  CHECK(phi3.image(2) == word(3, {2, 0, 1}));
  CHECK_THROWS_AS(thue_morse_morphism(1), std::invalid_argument);
}

TEST_CASE("non-uniform images are rejected") {
  CHECK_THROWS_AS(UniformMorphism(2, {word(2, {0, 1}), word(2, {1})}), std::invalid_argument);
  CHECK_THROWS_AS(UniformMorphism(2, {word(2, {0, 1})}), std::invalid_argument);
}

TEST_CASE("delta, mu and lambda") {
  const auto d23 = delta_morphism(2, 3);
  CHECK(d23.arity() == 4);
  CHECK(d23.image(0) == word(3, {0, 1, 2, 0}));
  CHECK(d23.image(1) == word(3, {1, 2, 0, 1}));
  CHECK(delta_morphism(3, 2).image(0) == word(2, {0, 1, 0}));

  CHECK(mu_morphism(2, 3).image(0) == word(2, {0, 1, 1, 0}));
  CHECK(mu_morphism(2, 3).image(1) == word(2, {1, 0, 0, 1}));
  CHECK(mu_morphism(3, 2) == thue_morse_morphism(3));

  const auto l23 = lambda_morphism(2, 3);
  CHECK(l23.image(encode_pair(0, 0, 3)) ==
        word(6, {encode_pair(0, 0, 3), encode_pair(1, 1, 3), encode_pair(1, 2, 3), encode_pair(0, 0, 3)}));
  const auto l32 = lambda_morphism(3, 2);
  CHECK(l32.image(0) == word(6, {encode_pair(0, 0, 2), encode_pair(1, 1, 2), encode_pair(2, 0, 2)}));

  CHECK_THROWS_AS(delta_morphism(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(mu_morphism(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(lambda_morphism(2, 2), std::invalid_argument);
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(thue_morse_morphism(2), 0, 8) == word(2, {0, 1, 1, 0, 1, 0, 0, 1}));
  CHECK(fixed_point_prefix(thue_morse_morphism(2), 0, 0).empty());

  const auto z = fixed_point_prefix(lambda_morphism(2, 3), encode_pair(0, 0, 3), 12);
  const auto spec = SequenceSpec::dekking(2, 3);
  for (std::size_t n = 0; n < 12; ++n) CHECK(spec.format_symbol(z[n]) == listings::z23[n]);

  // 0 -> 10 is not prolongable on 0
  const UniformMorphism swap(2, {word(2, {1, 0}), word(2, {0, 1})});
  CHECK_THROWS_AS(fixed_point_prefix(swap, 0, 4), std::invalid_argument);
  const UniformMorphism unary(2, {word(2, {0}), word(2, {1})});
  CHECK_THROWS_AS(fixed_point_prefix(unary, 0, 4), std::invalid_argument);
}

TEST_CASE("recurrence and morphism agree for t_p") {
  for (std::uint64_t p : {2, 3, 4, 5}) {
    const Word w = fixed_point_prefix(thue_morse_morphism(p), 0, 10000);
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n < 10000; ++n) {
      bad += w[n] != tm_symbol(p, n);
      bad += oracle::tm_recurrence(p, n) != tm_symbol(p, n);
    }
    CHECK_MESSAGE(bad == 0, "p=" << p);
  }
}

TEST_CASE("fixed points are recurrent in the arity") {
  // m^ω[mk + r] = image(m^ω[m])[r]
  std::vector<std::pair<UniformMorphism, Symbol>> cases;
  for (std::uint64_t p : {2, 3, 5}) cases.emplace_back(thue_morse_morphism(p), 0);
  for (auto [p, q] : coprime_pairs()) {
    cases.emplace_back(delta_morphism(p, q), 0);
    cases.emplace_back(mu_morphism(p, q), 0);
    cases.emplace_back(lambda_morphism(p, q), 0);
  }
  for (const auto& [m, seed] : cases) {
    const std::uint64_t k = m.arity();
    const Word w = fixed_point_prefix(m, seed, 1000 * k);
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i)
      for (std::uint64_t r = 0; r < k; ++r) bad += w[i * k + r] != m.image(w[i])[r];
    CHECK_MESSAGE(bad == 0, "arity " << k << " alphabet " << m.alphabet_size());
  }
}

TEST_CASE("t_p splits over base-p blocks") {
  for (std::uint64_t p : {2, 3, 5}) {
    std::size_t bad = 0;
    std::uint64_t block = 1;
    for (int k = 1; k <= 4; ++k) {
      block *= p;
      for (std::uint64_t m = 0; m < 200; ++m)
        for (std::uint64_t r = 0; r < block; ++r)
          bad += tm_symbol(p, m * block + r) != (tm_symbol(p, m) + tm_symbol(p, r)) % p;
    }
    CHECK_MESSAGE(bad == 0, "p=" << p);
  }
}

TEST_CASE("digit sum is congruent to t_p") {
  for (std::uint64_t p : {2, 3, 10}) {
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n < 10000; ++n) bad += digit_sum(p, n) % p != tm_symbol(p, n);
    CHECK(bad == 0);
  }
}

TEST_CASE("delta, mu and lambda generate f_q, t_p and z_{p,q}") {
  for (auto [p, q] : coprime_pairs()) {
    const Word d = fixed_point_prefix(delta_morphism(p, q), 0, 10000);
    const Word m = fixed_point_prefix(mu_morphism(p, q), 0, 10000);
    const Word l = fixed_point_prefix(lambda_morphism(p, q), 0, 10000);
    std::size_t bad = 0;
    for (std::uint64_t n = 0; n < 10000; ++n) {
      bad += d[n] != n % q;
      bad += m[n] != oracle::tm_recurrence(p, n);
      bad += l[n] != encode_pair(oracle::tm_recurrence(p, n), static_cast<Symbol>(n % q), q);
    }
    CHECK_MESSAGE(bad == 0, "p=" << p << " q=" << q);
  }
}

TEST_CASE("sequence specs") {
  CHECK_THROWS_AS(SequenceSpec::thue_morse(1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::periodic(0), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::dekking(2, 1), std::invalid_argument);
  CHECK(SequenceSpec::dekking(2, 3).alphabet_size() == 6);
  CHECK(SequenceSpec::thue_morse(2).name() == "t_2");
  CHECK(SequenceSpec::dekking(2, 3).name() == "z_{2,3}");
  CHECK(SequenceSpec::periodic(4).prefix(6) == word(4, {0, 1, 2, 3, 0, 1}));
  // non-coprime Dekking sequences exist, they just have no morphism
  CHECK(SequenceSpec::dekking(2, 12).at(13) == encode_pair(1, 1, 12));
}
