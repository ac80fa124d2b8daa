#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

struct CompletionOptions {
  /// Stop after the first degree that pushes the basis past this size;
  /// 0 means unlimited.
  std::size_t max_elements = 0;
};

/// Occurrence of a leading word inside a word.
struct Reducer {
  std::size_t element;
  std::size_t position;
};

struct NormalWordList {
  std::vector<Word> words;  // descending
  bool certified = true;    // false when the degree exceeds the certified range
};

/// Degree-truncated reduced Groebner basis of a homogeneous two-sided ideal.
/// Elements are monic and sorted by degree, then by leading word descending.
class GroebnerBasis {
 public:
  GroebnerBasis(FieldSpec field, MonomialOrder order, std::size_t degree_bound);

  const FieldSpec& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::span<const NcPoly> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::vector<Word> leading_words() const;

  std::size_t degree_bound() const noexcept { return degree_bound_; }
  /// Every obstruction of degree <= certified_degree() has been resolved.
  std::size_t certified_degree() const noexcept { return certified_degree_; }
  bool complete_to_bound() const noexcept { return certified_degree_ >= degree_bound_; }
  /// No obstruction of any degree remains: the basis is the full reduced
  /// Groebner basis of the ideal.
  bool is_finite() const noexcept { return finite_; }

  /// Leftmost occurrence of a leading word; at most one leading word can
  /// start at a given position because the basis is reduced.
  std::optional<Reducer> find_reducer(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_reducer(w).has_value(); }

  /// Repeatedly rewrites the largest reducible term at its leftmost match.
  NcPoly normal_form(const NcPoly& f) const;

  NormalWordList normal_words(std::size_t d) const;
  /// Counts of normal words in degrees 0..D. Throws IncompleteBasis if D
  /// exceeds the certified degree.
  std::vector<std::size_t> hilbert_coeffs(std::size_t D) const;

 private:
  friend GroebnerBasis complete(const Presentation&, std::size_t, CompletionOptions);

  void add(NcPoly g);
  void sort_elements();

  FieldSpec field_;
  MonomialOrder order_;
  std::vector<NcPoly> elements_;
  std::unordered_map<Word, std::size_t> lead_index_;
  std::vector<std::size_t> lead_lengths_;  // distinct, descending
  std::size_t degree_bound_;
  std::size_t certified_degree_ = 0;
  bool finite_ = false;
};

/// Truncated Buchberger completion processing obstructions degree by degree.
/// Requires D >= the largest relation degree.
GroebnerBasis complete(const Presentation& p, std::size_t D,
                       CompletionOptions options = {});

/// dim A_d by exact rank of the span of all u*r*v in V^d, without any
/// rewriting. Independent check on hilbert_coeffs.
std::size_t graded_dim_oracle(const Presentation& p, std::size_t d);

}  // namespace ncalg
