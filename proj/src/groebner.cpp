#include "ncalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ncalg {

GroebnerBasis::GroebnerBasis(FieldSpec field, MonomialOrder order,
                             std::size_t degree_bound)
    : field_(field), order_(order), degree_bound_(degree_bound) {}

std::vector<Word> GroebnerBasis::leading_words() const {
  std::vector<Word> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_word());
  return out;
}

void GroebnerBasis::add(NcPoly g) {
  const std::size_t len = g.leading_word().size();
  lead_index_.emplace(g.leading_word(), elements_.size());
  elements_.push_back(std::move(g));
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), len) == lead_lengths_.end()) {
    lead_lengths_.push_back(len);
    std::sort(lead_lengths_.begin(), lead_lengths_.end(), std::greater<>());
  }
}

void GroebnerBasis::sort_elements() {
  std::sort(elements_.begin(), elements_.end(), [this](const NcPoly& a, const NcPoly& b) {
    const Word& u = a.leading_word();
    const Word& v = b.leading_word();
    if (u.size() != v.size()) return u.size() < v.size();
    return order_.greater(u, v);
  });
  lead_index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    lead_index_.emplace(elements_[i].leading_word(), i);
}

std::optional<Reducer> GroebnerBasis::find_reducer(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t len : lead_lengths_) {
      if (pos + len > w.size()) continue;
      auto it = lead_index_.find(w.subword(pos, len));
      if (it != lead_index_.end()) return Reducer{it->second, pos};
    }
  return std::nullopt;
}

NcPoly GroebnerBasis::normal_form(const NcPoly& f) const {
  if (!(f.field() == field_))
    throw Error(ErrorKind::MixedFields, "normal form over a different field");
  if (!(f.order() == order_))
    throw Error(ErrorKind::DimensionMismatch, "normal form over a different order");
  std::map<Word, Scalar, DescendingWords> work(DescendingWords{order_});
  for (const auto& t : f.terms()) work.emplace(t.word, t.coeff);
  std::vector<Term> result;
  while (!work.empty()) {
    auto top = work.begin();
    Word w = top->first;
    Scalar c = std::move(top->second);
    work.erase(top);
    auto red = find_reducer(w);
    if (!red) {
      result.push_back(Term{std::move(w), std::move(c)});
      continue;
    }
    const NcPoly& g = elements_[red->element];
    const std::size_t glen = g.leading_word().size();
    const Word left = w.prefix(red->position);
    const Word right = w.suffix(w.size() - red->position - glen);
    // w -> w - left*g*right; the leading term cancels exactly.
    for (const auto& t : g.terms().subspan(1)) {
      Word u = left * t.word * right;
      Scalar delta = -(c * t.coeff);
      auto [it, inserted] = work.try_emplace(std::move(u), delta);
      if (!inserted) {
        it->second += delta;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return NcPoly::from_terms(field_, order_, std::move(result));
}

NormalWordList GroebnerBasis::normal_words(std::size_t d) const {
  std::vector<Word> level{Word{}};
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (std::size_t g = 0; g < order_.ngens(); ++g) {
        Word v = w;
        v.push_back(static_cast<Letter>(g));
        // The prefix is normal, so only suffixes can match a leading word.
        bool normal = true;
        for (std::size_t len : lead_lengths_)
          if (len <= v.size() && lead_index_.count(v.suffix(len))) {
            normal = false;
            break;
          }
        if (normal) next.push_back(std::move(v));
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  std::sort(level.begin(), level.end(), DescendingWords{order_});
  return NormalWordList{std::move(level), d <= certified_degree_ || finite_};
}

std::vector<std::size_t> GroebnerBasis::hilbert_coeffs(std::size_t D) const {
  if (D > certified_degree_ && !finite_)
    throw Error(ErrorKind::IncompleteBasis,
                "Hilbert coefficients requested to degree " + std::to_string(D) +
                    " but the basis is certified only to degree " +
                    std::to_string(certified_degree_));
  std::vector<std::size_t> coeffs;
  std::vector<Word> level{Word{}};
  coeffs.push_back(1);
  for (std::size_t k = 1; k <= D; ++k) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (std::size_t g = 0; g < order_.ngens(); ++g) {
        Word v = w;
        v.push_back(static_cast<Letter>(g));
        bool normal = true;
        for (std::size_t len : lead_lengths_)
          if (len <= v.size() && lead_index_.count(v.suffix(len))) {
            normal = false;
            break;
          }
        if (normal) next.push_back(std::move(v));
      }
    level = std::move(next);
    coeffs.push_back(level.size());
  }
  return coeffs;
}

namespace {

struct Obstruction {
  std::size_t left;   // element whose leading word is u*w
  std::size_t right;  // element whose leading word is w*v
  std::size_t overlap;
};

// Gauss-Jordan elimination among same-degree candidates whose terms are
// already normal with respect to all lower-degree leading words.
std::vector<NcPoly> interreduce(std::vector<NcPoly> candidates) {
  std::vector<NcPoly> rows;
  std::unordered_map<Word, std::size_t> pivot_of;
  for (auto& cand : candidates) {
    NcPoly v = std::move(cand);
    bool changed = true;
    while (changed && !v.is_zero()) {
      changed = false;
      for (const auto& t : v.terms()) {
        auto it = pivot_of.find(t.word);
        if (it == pivot_of.end()) continue;
        Scalar c = -t.coeff;
        v.add_multiple(c, Word{}, rows[it->second], Word{});
        changed = true;
        break;
      }
    }
    if (v.is_zero()) continue;
    v = v.monic();
    const Word lead = v.leading_word();
    for (auto& r : rows) {
      Scalar c = r.coefficient(lead);
      if (!c.is_zero()) r.add_multiple(-c, Word{}, v, Word{});
    }
    pivot_of.emplace(lead, rows.size());
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

namespace {

// g_a v - u g_b where lead(g_a) = u w and lead(g_b) = w v.
NcPoly s_polynomial(const std::vector<NcPoly>& elems, const Obstruction& ob) {
  const NcPoly& ga = elems[ob.left];
  const NcPoly& gb = elems[ob.right];
  const Word& la = ga.leading_word();
  const Word& lb = gb.leading_word();
  const Word u = la.prefix(la.size() - ob.overlap);
  const Word v = lb.suffix(lb.size() - ob.overlap);
  NcPoly s = ga.sandwich(Word{}, v);
  s.add_multiple(-ga.field().one(), u, gb, Word{});
  return s;
}

// Normal forms against a fixed basis, built right to left from memoized
// products letter * normal word. Keeps the work polynomial in the number of
// normal words instead of the number of intermediate words.
class CachedReducer {
 public:
  explicit CachedReducer(const GroebnerBasis& gb) : gb_(gb) {}

  NcPoly normal_form(const NcPoly& f) {
    std::vector<Term> acc;
    for (const auto& t : f.terms()) accumulate(acc, t.coeff, reduce_word(t.word));
    return NcPoly::from_terms(gb_.field(), gb_.order(), std::move(acc));
  }

 private:
  static void accumulate(std::vector<Term>& acc, const Scalar& c, const NcPoly& f) {
    for (const auto& t : f.terms()) acc.push_back(Term{t.word, c * t.coeff});
  }

  NcPoly reduce_word(const Word& w) {
    // Start from the longest normal suffix.
    std::size_t start = w.size();
    while (start > 0 && gb_.is_normal(w.suffix(w.size() - start + 1))) --start;
    NcPoly cur = NcPoly::monomial(gb_.field(), gb_.order(), w.suffix(w.size() - start));
    for (std::size_t i = start; i-- > 0;) {
      std::vector<Term> next;
      for (const auto& t : cur.terms()) accumulate(next, t.coeff, left_product(w[i], t.word));
      cur = NcPoly::from_terms(gb_.field(), gb_.order(), std::move(next));
    }
    return cur;
  }

  // Normal form of g * n for a normal word n; any match sits at position 0.
  const NcPoly& left_product(Letter g, const Word& n) {
    Word w;
    w.push_back(g);
    w = w * n;
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    NcPoly out;
    if (auto red = gb_.find_reducer(w)) {
      const NcPoly& e = gb_.elements()[red->element];
      const Word right = w.suffix(w.size() - red->position - e.leading_word().size());
      const Word left = w.prefix(red->position);
      std::vector<Term> acc;
      for (const auto& t : e.terms().subspan(1))
        accumulate(acc, -t.coeff, reduce_word(left * t.word * right));
      out = NcPoly::from_terms(gb_.field(), gb_.order(), std::move(acc));
    } else {
      out = NcPoly::monomial(gb_.field(), gb_.order(), w);
    }
    return memo_.emplace(std::move(w), std::move(out)).first->second;
  }

  const GroebnerBasis& gb_;
  std::unordered_map<Word, NcPoly> memo_;
};

}  // namespace

GroebnerBasis complete(const Presentation& input, std::size_t D,
                       CompletionOptions options) {
  Presentation p = input;
  p.validate();
  if (p.max_relation_degree() > D)
    throw Error(ErrorKind::InvalidArgument,
                "degree bound " + std::to_string(D) +
                    " is below the largest relation degree " +
                    std::to_string(p.max_relation_degree()));

  GroebnerBasis gb(p.field, p.order, D);
  std::map<std::size_t, std::vector<Obstruction>> pending;
  std::map<std::size_t, std::vector<Obstruction>> beyond;

  auto record_overlaps = [&](std::size_t idx) {
    const auto& elems = gb.elements_;
    for (std::size_t other = 0; other <= idx; ++other) {
      // Both orientations: (new, old) and (old, new); once when other == idx.
      for (int orient = 0; orient < (other == idx ? 1 : 2); ++orient) {
        const std::size_t a = orient == 0 ? idx : other;
        const std::size_t b = orient == 0 ? other : idx;
        const Word& la = elems[a].leading_word();
        const Word& lb = elems[b].leading_word();
        const std::size_t maxl = std::min(la.size(), lb.size());
        for (std::size_t l = 1; l < maxl; ++l) {
          if (la.key().substr(la.size() - l) != lb.key().substr(0, l)) continue;
          const std::size_t deg = la.size() + lb.size() - l;
          (deg > D ? beyond : pending)[deg].push_back(Obstruction{a, b, l});
        }
      }
    }
  };

  std::map<std::size_t, std::vector<const NcPoly*>> by_degree;
  for (const auto& r : p.relations) by_degree[r.degree()].push_back(&r);

  std::size_t certified = D;
  for (std::size_t d = 1; d <= D; ++d) {
    std::vector<NcPoly> candidates;
    CachedReducer cached(gb);
    for (const NcPoly* r : by_degree[d]) {
      NcPoly nf = cached.normal_form(*r);
      if (!nf.is_zero()) candidates.push_back(std::move(nf));
    }
    for (const auto& ob : pending[d]) {
      NcPoly nf = cached.normal_form(s_polynomial(gb.elements_, ob));
      if (!nf.is_zero()) candidates.push_back(std::move(nf));
    }
    pending.erase(d);
    for (auto& g : interreduce(std::move(candidates))) {
      gb.add(std::move(g));
      record_overlaps(gb.elements_.size() - 1);
    }
    if (options.max_elements && gb.size() > options.max_elements && d < D) {
      certified = d;
      break;
    }
  }
  gb.certified_degree_ = certified;
  // Every element has degree <= D, so the basis is the whole reduced basis
  // once the finitely many remaining overlaps also resolve.
  bool finite = certified == D;
  CachedReducer cached(gb);
  for (auto it = beyond.begin(); finite && it != beyond.end(); ++it)
    for (const auto& ob : it->second)
      if (!cached.normal_form(s_polynomial(gb.elements_, ob)).is_zero()) {
        finite = false;
        break;
      }
  gb.finite_ = finite;
  gb.sort_elements();
  return gb;
}

namespace {

using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;

std::uint64_t word_index(const Word& w, std::size_t n) {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < w.size(); ++i) idx = idx * n + w[i];
  return idx;
}

Word index_word(std::uint64_t idx, std::size_t len, std::size_t n) {
  std::vector<Letter> letters(len);
  for (std::size_t i = len; i-- > 0;) {
    letters[i] = static_cast<Letter>(idx % n);
    idx /= n;
  }
  return Word(std::span<const Letter>(letters));
}

// Incremental echelon form keyed by the smallest coordinate of each row.
class SparseEchelon {
 public:
  void insert(SparseVec v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        Scalar inv = v.front().second.inverse();
        for (auto& [i, c] : v) c *= inv;
        rows_.emplace(v.front().first, std::move(v));
        return;
      }
      v = axpy(v, it->second, -v.front().second);
    }
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static SparseVec axpy(const SparseVec& a, const SparseVec& b, const Scalar& c) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, b[j].second * c);
        ++j;
      } else {
        Scalar s = a[i].second + b[j].second * c;
        if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<std::uint64_t, SparseVec> rows_;
};

}  // namespace

std::size_t graded_dim_oracle(const Presentation& input, std::size_t d) {
  Presentation p = input;
  p.validate();
  const std::size_t n = p.ngens();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= n;
  SparseEchelon echelon;
  for (const auto& r : p.relations) {
    const std::size_t e = r.degree();
    if (e > d) continue;
    const std::size_t rest = d - e;
    for (std::size_t a = 0; a <= rest; ++a) {
      const std::size_t b = rest - a;
      std::uint64_t nu = 1, nv = 1;
      for (std::size_t i = 0; i < a; ++i) nu *= n;
      for (std::size_t i = 0; i < b; ++i) nv *= n;
      for (std::uint64_t ui = 0; ui < nu; ++ui) {
        const Word u = index_word(ui, a, n);
        for (std::uint64_t vi = 0; vi < nv; ++vi) {
          const Word v = index_word(vi, b, n);
          SparseVec vec;
          vec.reserve(r.size());
          for (const auto& t : r.terms())
            vec.emplace_back(word_index(u * t.word * v, n), t.coeff);
          std::sort(vec.begin(), vec.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
          echelon.insert(std::move(vec));
        }
      }
    }
  }
  return static_cast<std::size_t>(total - echelon.rank());
}

}  // namespace ncalg
