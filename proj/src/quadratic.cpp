#include "ncalg/quadratic.hpp"

#include <unordered_map>

namespace ncalg {

namespace {

Word word_of_index(std::size_t index, std::size_t n, std::size_t d) {
  std::vector<Letter> letters(d);
  for (std::size_t i = d; i-- > 0;) {
    letters[i] = static_cast<Letter>(index % n);
    index /= n;
  }
  return Word(std::span<const Letter>(letters));
}

std::size_t index_of_word(const Word& w, std::size_t n) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < w.size(); ++i) index = index * n + w[i];
  return index;
}

// Rank of the family of maps generator -> (u -> x_i u or u x_i) from A_1 to
// Hom(A_2, A_3), stacked as rows.
std::size_t multiplication_rank(const GroebnerBasis& gb, std::size_t n, bool left) {
  const auto deg2 = gb.normal_words(2).words;
  const auto deg3 = gb.normal_words(3).words;
  Matrix m(gb.field(), n, deg2.size() * deg3.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Word xi{static_cast<Letter>(i)};
    for (std::size_t j = 0; j < deg2.size(); ++j) {
      const Word product = left ? xi * deg2[j] : deg2[j] * xi;
      const NcPoly nf = gb.normal_form(NcPoly::monomial(gb.field(), gb.order(), product));
      const auto coords = normal_coordinates(nf, deg3);
      for (std::size_t c = 0; c < coords.size(); ++c)
        m(i, j * deg3.size() + c) = coords[c];
    }
  }
  return rank(m);
}

}  // namespace

QuadraticAlgebra::QuadraticAlgebra(Presentation base) : base_(std::move(base)) {
  base_.validate();
  for (const auto& r : base_.relations)
    if (r.degree() != 2)
      throw Error(ErrorKind::InvalidArgument, "quadratic algebra needs degree-2 relations");
  base_.relations = span_basis(base_.relations);
}

QuadraticAlgebra dual_algebra(const QuadraticAlgebra& a) {
  const Presentation& p = a.presentation();
  const std::size_t n = p.ngens();
  const std::size_t cols = n * n;
  Matrix coeffs(p.field, p.relations.size(), cols);
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    for (const auto& t : p.relations[i].terms()) coeffs(i, index_of_word(t.word, n)) = t.coeff;

  Matrix perp = p.relations.empty() ? Matrix::identity(p.field, cols) : nullspace(coeffs);
  Presentation dual = p;
  dual.relations.clear();
  for (std::size_t i = 0; i < perp.rows(); ++i) {
    NcPoly r = p.zero();
    for (std::size_t j = 0; j < cols; ++j)
      if (!perp(i, j).is_zero())
        r += NcPoly::monomial(p.field, p.order, word_of_index(j, n, 2), perp(i, j));
    dual.relations.push_back(std::move(r));
  }
  return QuadraticAlgebra(std::move(dual));
}

std::vector<long long> series_pairing(const std::vector<std::size_t>& ha,
                                      const std::vector<std::size_t>& hb) {
  const std::size_t len = std::min(ha.size(), hb.size());
  std::vector<long long> out(len, 0);
  for (std::size_t k = 0; k < len; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      const long long term = static_cast<long long>(ha[i]) * static_cast<long long>(hb[k - i]);
      out[k] += (i % 2 == 0) ? term : -term;
    }
  return out;
}

std::optional<std::size_t> koszul_defect(const QuadraticAlgebra& a, std::size_t D) {
  const std::size_t bound = std::max<std::size_t>(D, 2);
  const auto ha = complete(a.presentation(), bound).hilbert_coeffs(D);
  const auto hb = complete(dual_algebra(a).presentation(), bound).hilbert_coeffs(D);
  const auto prod = series_pairing(ha, hb);
  for (std::size_t k = 0; k < prod.size(); ++k)
    if (prod[k] != (k == 0 ? 1 : 0)) return k;
  return std::nullopt;
}

Deg3aReport deg3a_criterion(const QuadraticAlgebra& a) {
  const QuadraticAlgebra dual = dual_algebra(a);
  const GroebnerBasis gb = complete(dual.presentation(), 4);
  const auto h = gb.hilbert_coeffs(4);
  const std::size_t n = a.ngens();
  Deg3aReport report;
  report.dual4_zero = h[4] == 0;
  report.dual3_dim = h[3];
  report.no_dual_degree1_left_annihilator = h[1] == n && multiplication_rank(gb, n, true) == n;
  report.no_dual_degree1_right_annihilator = h[1] == n && multiplication_rank(gb, n, false) == n;
  return report;
}

std::size_t right_annihilator_dim(const QuadraticAlgebra& a, std::size_t d) {
  return right_annihilator_dim(complete(a.presentation(), std::max<std::size_t>(d + 1, 2)), d);
}

std::size_t right_annihilator_dim(const GroebnerBasis& gb, std::size_t d) {
  const auto source = gb.normal_words(d);
  const auto target = gb.normal_words(d + 1);
  if (!source.certified || !target.certified)
    throw Error(ErrorKind::IncompleteBasis, "basis not certified to degree " + std::to_string(d + 1));
  const std::size_t n = gb.order().ngens();
  const std::size_t width = target.words.size();
  Matrix m(gb.field(), source.words.size(), n * width);
  for (std::size_t u = 0; u < source.words.size(); ++u)
    for (std::size_t i = 0; i < n; ++i) {
      const Word product = Word{static_cast<Letter>(i)} * source.words[u];
      const NcPoly nf = gb.normal_form(NcPoly::monomial(gb.field(), gb.order(), product));
      const auto coords = normal_coordinates(nf, target.words);
      for (std::size_t c = 0; c < width; ++c) m(u, i * width + c) = coords[c];
    }
  return source.words.size() - rank(m);
}

std::vector<Scalar> normal_coordinates(const NcPoly& reduced, const std::vector<Word>& basis) {
  std::unordered_map<Word, std::size_t> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], i);
  std::vector<Scalar> out(basis.size(), reduced.field().zero());
  for (const auto& t : reduced.terms()) {
    auto it = where.find(t.word);
    if (it == where.end())
      throw Error(ErrorKind::InvalidArgument, "term outside the normal-word basis");
    out[it->second] = t.coeff;
  }
  return out;
}

}  // namespace ncalg
