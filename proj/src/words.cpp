#include "tmc/words.hpp"

#include <numeric>
#include <stdexcept>

#include "tmc/arith.hpp"

namespace tmc {

namespace {

void require_base(std::uint64_t v, const char* what) {
  if (v < 2) throw std::invalid_argument(std::string(what) + " must be >= 2");
}

void require_coprime(std::uint64_t p, std::uint64_t q) {
  require_base(p, "p");
  require_base(q, "q");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("gcd(p, q) must be 1 for p=" + std::to_string(p) +
                                ", q=" + std::to_string(q));
}

std::uint32_t checked_alphabet(std::uint64_t size) {
  if (size == 0 || size > (1ull << 31)) throw std::invalid_argument("alphabet size out of range");
  return static_cast<std::uint32_t>(size);
}

}  // namespace

Word::Word(std::uint32_t alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size == 0) throw std::invalid_argument("Word: alphabet size must be positive");
}

Word::Word(std::uint32_t alphabet_size, std::vector<Symbol> symbols)
    : Word(alphabet_size) {
  for (Symbol s : symbols)
    if (s >= alphabet_size_) throw std::invalid_argument("Word: symbol outside alphabet");
  symbols_ = std::move(symbols);
}

void Word::push_back(Symbol s) {
  if (s >= alphabet_size_) throw std::invalid_argument("Word: symbol outside alphabet");
  symbols_.push_back(s);
}

void Word::append(const Word& other) {
  if (other.alphabet_size_ != alphabet_size_)
    throw std::invalid_argument("Word: concatenation across alphabets");
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void Word::truncate(std::size_t len) {
  if (len < symbols_.size()) symbols_.resize(len);
}

UniformMorphism::UniformMorphism(std::uint32_t alphabet_size, std::vector<Word> images)
    : alphabet_size_(alphabet_size), arity_(0), images_(std::move(images)) {
  if (alphabet_size_ == 0) throw std::invalid_argument("morphism: empty alphabet");
  if (images_.size() != alphabet_size_)
    throw std::invalid_argument("morphism: need one image per symbol");
  arity_ = images_.front().size();
  for (const Word& w : images_) {
    if (w.alphabet_size() != alphabet_size_)
      throw std::invalid_argument("morphism: image over a different alphabet");
    if (w.size() != arity_) throw std::invalid_argument("morphism: images must share one length");
  }
}

const Word& UniformMorphism::image(Symbol a) const {
  if (a >= alphabet_size_) throw std::out_of_range("morphism: symbol outside alphabet");
  return images_[a];
}

Word UniformMorphism::apply(const Word& w) const {
  if (w.alphabet_size() != alphabet_size_)
    throw std::invalid_argument("morphism: word over a different alphabet");
  std::vector<Symbol> out;
  out.reserve(w.size() * arity_);
  for (Symbol s : w.symbols()) {
    auto img = images_[s].symbols();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(alphabet_size_, std::move(out));
}

UniformMorphism UniformMorphism::power(unsigned exponent) const {
  std::vector<Word> images;
  images.reserve(alphabet_size_);
  for (Symbol a = 0; a < alphabet_size_; ++a) {
    Word w(alphabet_size_, {a});
    for (unsigned i = 0; i < exponent; ++i) w = apply(w);
    images.push_back(std::move(w));
  }
  return UniformMorphism(alphabet_size_, std::move(images));
}

bool UniformMorphism::prolongable_on(Symbol a) const {
  return a < alphabet_size_ && arity_ >= 1 && images_[a][0] == a;
}

Word fixed_point_prefix(const UniformMorphism& m, Symbol seed, std::uint64_t len) {
  if (m.arity() < 2) throw std::invalid_argument("fixed_point_prefix: arity must be >= 2");
  if (!m.prolongable_on(seed))
    throw std::invalid_argument("fixed_point_prefix: morphism is not prolongable on seed");
  Word w(m.alphabet_size(), {seed});
  while (w.size() < len) {
    // Only the first ceil(len / k) symbols influence the first len symbols.
    std::uint64_t needed = (len + m.arity() - 1) / m.arity();
    Word head = w;
    head.truncate(needed);
    w = m.apply(head);
  }
  w.truncate(len);
  return w;
}

std::uint64_t digit_sum(std::uint64_t p, std::uint64_t n) {
  require_base(p, "p");
  std::uint64_t s = 0;
  while (n > 0) {
    s += n % p;
    n /= p;
  }
  return s;
}

Symbol tm_symbol(std::uint64_t p, std::uint64_t n) {
  return static_cast<Symbol>(digit_sum(p, n) % p);
}

Symbol periodic_symbol(std::uint64_t q, std::uint64_t n) {
  require_base(q, "q");
  return static_cast<Symbol>(n % q);
}

Symbol dekking_symbol(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  require_base(q, "q");
  return encode_pair(tm_symbol(p, n), periodic_symbol(q, n), q);
}

UniformMorphism thue_morse_morphism(std::uint64_t p) {
  require_base(p, "p");
  auto size = checked_alphabet(p);
  std::vector<Word> images;
  for (Symbol a = 0; a < size; ++a) {
    std::vector<Symbol> img(size);
    for (Symbol j = 0; j < size; ++j) img[j] = (a + j) % size;
    images.emplace_back(size, std::move(img));
  }
  return UniformMorphism(size, std::move(images));
}

UniformMorphism delta_morphism(std::uint64_t p, std::uint64_t q) {
  require_coprime(p, q);
  const std::uint64_t big_q = checked_pow(p, totient(q));
  auto size = checked_alphabet(q);
  std::vector<Word> images;
  for (Symbol a = 0; a < size; ++a) {
    std::vector<Symbol> img(big_q);
    for (std::uint64_t j = 0; j < big_q; ++j) img[j] = static_cast<Symbol>((a + j % q) % q);
    images.emplace_back(size, std::move(img));
  }
  return UniformMorphism(size, std::move(images));
}

UniformMorphism mu_morphism(std::uint64_t p, std::uint64_t q) {
  require_coprime(p, q);
  return thue_morse_morphism(p).power(static_cast<unsigned>(totient(q)));
}

UniformMorphism lambda_morphism(std::uint64_t p, std::uint64_t q) {
  const UniformMorphism mu = mu_morphism(p, q);
  const UniformMorphism delta = delta_morphism(p, q);
  auto size = checked_alphabet(p * q);
  std::vector<Word> images;
  for (Symbol s = 0; s < size; ++s) {
    auto [x, y] = decode_pair(s, q);
    const Word& mx = mu.image(x);
    const Word& dy = delta.image(y);
    std::vector<Symbol> img(mu.arity());
    for (std::size_t j = 0; j < img.size(); ++j) img[j] = encode_pair(mx[j], dy[j], q);
    images.emplace_back(size, std::move(img));
  }
  return UniformMorphism(size, std::move(images));
}

SequenceSpec SequenceSpec::thue_morse(std::uint64_t p) {
  require_base(p, "p");
  return {Kind::thue_morse, p, 0};
}

SequenceSpec SequenceSpec::periodic(std::uint64_t q) {
  require_base(q, "q");
  return {Kind::periodic, 0, q};
}

SequenceSpec SequenceSpec::dekking(std::uint64_t p, std::uint64_t q) {
  require_base(p, "p");
  require_base(q, "q");
  return {Kind::dekking, p, q};
}

std::uint32_t SequenceSpec::alphabet_size() const {
  switch (kind) {
    case Kind::thue_morse: return checked_alphabet(p);
    case Kind::periodic: return checked_alphabet(q);
    case Kind::dekking: return checked_alphabet(p * q);
  }
  return 0;
}

Symbol SequenceSpec::at(std::uint64_t n) const {
  switch (kind) {
    case Kind::thue_morse: return tm_symbol(p, n);
    case Kind::periodic: return periodic_symbol(q, n);
    case Kind::dekking: return dekking_symbol(p, q, n);
  }
  return 0;
}

Word SequenceSpec::prefix(std::uint64_t len) const {
  std::vector<Symbol> out(len);
  for (std::uint64_t n = 0; n < len; ++n) out[n] = at(n);
  return Word(alphabet_size(), std::move(out));
}

std::string SequenceSpec::format_symbol(Symbol s) const {
  if (kind != Kind::dekking) return std::to_string(s);
  auto [x, y] = decode_pair(s, q);
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string SequenceSpec::name() const {
  switch (kind) {
    case Kind::thue_morse: return "t_" + std::to_string(p);
    case Kind::periodic: return "f_" + std::to_string(q);
    case Kind::dekking: return "z_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  }
  return {};
}

}  // namespace tmc
