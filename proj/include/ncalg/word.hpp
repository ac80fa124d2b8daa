#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace ncalg {

using Letter = std::uint8_t;

inline constexpr std::size_t kMaxGenerators = 32;

/// A monomial of the free algebra: a flat sequence of 0-based generator
/// indices. The empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);
  static Word power(Letter letter, std::size_t exponent);

  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  /// Position of the leftmost occurrence of `factor` at or after `from`,
  /// or npos.
  std::size_t find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor) != npos; }
  bool starts_with(const Word& w) const;
  bool ends_with(const Word& w) const;

  Word& operator*=(const Word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  Word& push_back(Letter letter) {
    letters_.push_back(static_cast<char>(letter));
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Raw key view; two words are equal iff their keys are equal.
  std::string_view key() const noexcept { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order on indices, only for associative containers.
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

  static constexpr std::size_t npos = std::string::npos;

 private:
  std::string letters_;
};

/// Degree-lexicographic order: by degree, then left to right by letter
/// precedence. Default precedence makes generator 0 the largest.
class MonomialOrder {
 public:
  MonomialOrder() : MonomialOrder(0) {}
  explicit MonomialOrder(std::size_t ngens);
  /// `precedence` lists generators from largest to smallest.
  static MonomialOrder from_precedence(std::span<const Letter> precedence);

  std::size_t ngens() const noexcept { return n_; }
  /// Generators from largest to smallest.
  std::array<Letter, kMaxGenerators> precedence() const;
  unsigned rank(Letter letter) const { return rank_[letter]; }

  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool greater(const Word& u, const Word& v) const { return compare(u, v) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::uint8_t n_ = 0;
  // rank_[g] == 0 for the largest generator.
  std::array<std::uint8_t, kMaxGenerators> rank_{};
};

/// Comparator placing larger words first.
struct DescendingWords {
  MonomialOrder order;
  bool operator()(const Word& a, const Word& b) const { return order.greater(a, b); }
};

}  // namespace ncalg

template <>
struct std::hash<ncalg::Word> {
  std::size_t operator()(const ncalg::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.key());
  }
};
