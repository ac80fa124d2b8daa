#include "ncalg/word.hpp"

#include <algorithm>

#include "ncalg/error.hpp"

namespace ncalg {

Word::Word(std::initializer_list<Letter> letters)
    : letters_(letters.begin(), letters.end()) {}

Word::Word(std::span<const Letter> letters)
    : letters_(letters.begin(), letters.end()) {}

Word Word::power(Letter letter, std::size_t exponent) {
  Word w;
  w.letters_.assign(exponent, static_cast<char>(letter));
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  return w;
}

std::size_t Word::find(const Word& factor, std::size_t from) const {
  return letters_.find(factor.letters_, from);
}

bool Word::starts_with(const Word& w) const {
  return letters_.size() >= w.letters_.size() &&
         letters_.compare(0, w.letters_.size(), w.letters_) == 0;
}

bool Word::ends_with(const Word& w) const {
  return letters_.size() >= w.letters_.size() &&
         letters_.compare(letters_.size() - w.letters_.size(), w.letters_.size(),
                          w.letters_) == 0;
}

MonomialOrder::MonomialOrder(std::size_t ngens) {
  if (ngens > kMaxGenerators)
    throw Error(ErrorKind::InvalidArgument,
                "at most " + std::to_string(kMaxGenerators) + " generators");
  n_ = static_cast<std::uint8_t>(ngens);
  for (std::size_t i = 0; i < ngens; ++i) rank_[i] = static_cast<std::uint8_t>(i);
}

MonomialOrder MonomialOrder::from_precedence(std::span<const Letter> precedence) {
  MonomialOrder ord(precedence.size());
  std::array<bool, kMaxGenerators> seen{};
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    Letter g = precedence[i];
    if (g >= precedence.size() || seen[g])
      throw Error(ErrorKind::InvalidArgument,
                  "order must be a permutation of the generators");
    seen[g] = true;
    ord.rank_[g] = static_cast<std::uint8_t>(i);
  }
  return ord;
}

std::array<Letter, kMaxGenerators> MonomialOrder::precedence() const {
  std::array<Letter, kMaxGenerators> out{};
  for (std::size_t g = 0; g < n_; ++g) out[rank_[g]] = static_cast<Letter>(g);
  return out;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) {
      // Smaller rank means larger letter.
      return rank_[v[i]] <=> rank_[u[i]];
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace ncalg
