#include "ncalg/ncpoly.hpp"

#include <algorithm>
#include <map>

namespace ncalg {

namespace {

// Merges b*c (already descending) into a.
std::vector<Term> merge_scaled(const std::vector<Term>& a, std::span<const Term> b,
                               const Scalar* c, const Word* left,
                               const Word* right, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto make_b = [&](std::size_t k) {
    Term t = b[k];
    if (left) t.word = *left * t.word;
    if (right) t.word *= *right;
    if (c) t.coeff *= *c;
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = make_b(j);
    if (i == a.size()) {
      out.push_back(std::move(tb));
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].word, tb.word);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      Scalar s = a[i].coeff + tb.coeff;
      if (!s.is_zero()) out.push_back(Term{a[i].word, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NcPoly NcPoly::constant(FieldSpec field, MonomialOrder order, const Scalar& c) {
  return monomial(field, order, Word{}, c);
}

NcPoly NcPoly::monomial(FieldSpec field, MonomialOrder order, Word word) {
  return monomial(field, order, std::move(word), field.one());
}

NcPoly NcPoly::monomial(FieldSpec field, MonomialOrder order, Word word,
                        const Scalar& c) {
  NcPoly p(field, order);
  if (!(c.field() == field)) throw Error(ErrorKind::MixedFields, "coefficient field");
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(word), c});
  return p;
}

NcPoly NcPoly::from_terms(FieldSpec field, MonomialOrder order,
                          std::vector<Term> terms) {
  std::map<Word, Scalar, DescendingWords> acc(DescendingWords{order});
  for (auto& t : terms) {
    if (!(t.coeff.field() == field))
      throw Error(ErrorKind::MixedFields, "coefficient field");
    auto [it, inserted] = acc.try_emplace(std::move(t.word), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  NcPoly p(field, order);
  for (auto& [w, c] : acc)
    if (!c.is_zero()) p.terms_.push_back(Term{w, c});
  return p;
}

const Term& NcPoly::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

Scalar NcPoly::coefficient(const Word& w) const {
  for (const auto& t : terms_)
    if (t.word == w) return t.coeff;
  return field_.zero();
}

std::size_t NcPoly::degree() const {
  return terms_.empty() ? 0 : terms_.front().word.degree();
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().word.degree() == terms_.back().word.degree();
}

NcPoly NcPoly::homogeneous_part(std::size_t d) const {
  NcPoly p(field_, order_);
  for (const auto& t : terms_)
    if (t.word.degree() == d) p.terms_.push_back(t);
  return p;
}

NcPoly NcPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly p(field_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.word, t.coeff * c});
  return p;
}

NcPoly NcPoly::sandwich(const Word& left, const Word& right) const {
  NcPoly p(field_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{left * t.word * right, t.coeff});
  return p;
}

NcPoly NcPoly::operator-() const { return scaled(-field_.one()); }

void NcPoly::check_compatible(const NcPoly& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(ErrorKind::MixedFields,
                "polynomials over " + field_.name() + " and " + rhs.field_.name());
  if (!(order_ == rhs.order_))
    throw Error(ErrorKind::DimensionMismatch,
                "polynomials over different generator sets or orders");
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  check_compatible(rhs);
  terms_ = merge_scaled(terms_, rhs.terms_, nullptr, nullptr, nullptr, order_);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  check_compatible(rhs);
  Scalar m = -field_.one();
  terms_ = merge_scaled(terms_, rhs.terms_, &m, nullptr, nullptr, order_);
  return *this;
}

NcPoly& NcPoly::add_multiple(const Scalar& c, const Word& left, const NcPoly& g,
                             const Word& right) {
  check_compatible(g);
  if (c.is_zero()) return *this;
  terms_ = merge_scaled(terms_, g.terms_, &c, left.empty() ? nullptr : &left,
                        right.empty() ? nullptr : &right, order_);
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back(Term{s.word * t.word, s.coeff * t.coeff});
  return NcPoly::from_terms(a.field_, a.order_, std::move(terms));
}

LinearSub::LinearSub(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols())
    throw Error(ErrorKind::DimensionMismatch, "substitution matrix must be square");
}

LinearSub LinearSub::identity(FieldSpec field, std::size_t n) {
  return LinearSub(Matrix::identity(field, n));
}

LinearSub LinearSub::from_images(std::span<const NcPoly> images) {
  if (images.empty()) throw Error(ErrorKind::DimensionMismatch, "no images");
  const std::size_t n = images.size();
  Matrix m(images[0].field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (images[j].ngens() != n)
      throw Error(ErrorKind::DimensionMismatch, "image over wrong generator count");
    for (const auto& t : images[j].terms()) {
      if (t.word.degree() != 1)
        throw Error(ErrorKind::InvalidArgument, "substitution images must be linear");
      m(t.word[0], j) = t.coeff;
    }
  }
  return LinearSub(std::move(m));
}

bool LinearSub::is_invertible() const { return !matrix_.determinant().is_zero(); }

LinearSub LinearSub::inverse() const { return LinearSub(matrix_.inverse()); }

LinearSub LinearSub::after(const LinearSub& first) const {
  return LinearSub(matrix_ * first.matrix_);
}

NcPoly apply_sub(const NcPoly& f, const LinearSub& s) {
  const std::size_t n = f.ngens();
  if (s.ngens() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "substitution on " + std::to_string(s.ngens()) +
                    " generators applied to a polynomial on " + std::to_string(n));
  if (!(s.field() == f.field()))
    throw Error(ErrorKind::MixedFields, "substitution over a different field");
  const Matrix& m = s.matrix();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    // Expand the product of images letter by letter.
    std::vector<Term> partial{Term{Word{}, t.coeff}};
    for (std::size_t pos = 0; pos < t.word.size(); ++pos) {
      const Letter g = t.word[pos];
      std::vector<Term> next;
      next.reserve(partial.size() * n);
      for (const auto& p : partial)
        for (std::size_t i = 0; i < n; ++i) {
          const Scalar& c = m(i, g);
          if (c.is_zero()) continue;
          Word w = p.word;
          w.push_back(static_cast<Letter>(i));
          next.push_back(Term{std::move(w), p.coeff * c});
        }
      partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(std::move(p));
  }
  return NcPoly::from_terms(f.field(), f.order(), std::move(out));
}

namespace {

Word rotate_left(const Word& w) {
  if (w.size() <= 1) return w;
  return w.suffix(w.size() - 1).push_back(w.front());
}

}  // namespace

NcPoly cyclic_shift(const NcPoly& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{rotate_left(t.word), t.coeff});
  return NcPoly::from_terms(f.field(), f.order(), std::move(out));
}

NcPoly cyclize(const NcPoly& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.word.empty()) {
      out.push_back(t);  // constants kept so the map stays onto
      continue;
    }
    Word w = t.word;
    for (std::size_t k = 0; k < t.word.size(); ++k) {
      w = rotate_left(w);
      out.push_back(Term{w, t.coeff});
    }
  }
  return NcPoly::from_terms(f.field(), f.order(), std::move(out));
}

NcPoly cyclic_derivative(const NcPoly& f, Letter j) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (!t.word.empty() && t.word.front() == j)
      out.push_back(Term{t.word.suffix(t.word.size() - 1), t.coeff});
  return NcPoly::from_terms(f.field(), f.order(), std::move(out));
}

bool is_cyclically_invariant(const NcPoly& f) { return cyclic_shift(f) == f; }

std::vector<NcPoly> span_basis(std::span<const NcPoly> polys) {
  if (polys.empty()) return {};
  const FieldSpec field = polys[0].field();
  const MonomialOrder order = polys[0].order();
  std::map<Word, std::size_t, DescendingWords> columns(DescendingWords{order});
  for (const auto& p : polys) {
    if (!(p.field() == field) || !(p.order() == order))
      throw Error(ErrorKind::MixedFields, "span of incompatible polynomials");
    for (const auto& t : p.terms()) columns.emplace(t.word, 0);
  }
  std::vector<Word> words;
  for (auto& [w, idx] : columns) {
    idx = words.size();
    words.push_back(w);
  }
  Matrix m(field, polys.size(), words.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& t : polys[i].terms()) m(i, columns.at(t.word)) = t.coeff;
  RowEchelon e = row_reduce(m);
  std::vector<NcPoly> basis;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < words.size(); ++j)
      if (!e.reduced(i, j).is_zero()) terms.push_back(Term{words[j], e.reduced(i, j)});
    basis.push_back(NcPoly::from_terms(field, order, std::move(terms)));
  }
  return basis;
}

bool same_span(std::span<const NcPoly> a, std::span<const NcPoly> b) {
  return span_basis(a) == span_basis(b);
}

std::size_t span_dim(std::span<const NcPoly> polys) { return span_basis(polys).size(); }

}  // namespace ncalg
