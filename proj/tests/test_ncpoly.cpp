#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncalg/linalg.hpp"
#include "ncalg/ncpoly.hpp"
#include "ncalg/presentation.hpp"

using namespace ncalg;
using testing_support::poly;

namespace {

const Presentation kQ = Presentation::free_xyz(FieldSpec::rationals());
const Presentation kQw = Presentation::free_xyz(FieldSpec::rationals_with_theta());

}  // namespace

TEST_CASE("word order is degree-lexicographic with x > y > z") {
  const MonomialOrder ord(3);
  CHECK(ord.compare(Word{0, 1}, Word{2, 2}) > 0);
  CHECK(ord.compare(Word{0}, Word{1, 2}) < 0);
  CHECK(ord.compare(Word{1, 2}, Word{1, 2}) == 0);
  const auto rels = testing_support::polys(
      kQ, {"yz - zx + zy + zz", "xx - zx + zy + zz", "xy - yy - zx + zz"});
  std::vector<Word> leads;
  for (const auto& r : rels) leads.push_back(r.leading_word());
  std::sort(leads.begin(), leads.end(), DescendingWords{ord});
  CHECK(leads == std::vector<Word>{Word{0, 0}, Word{0, 1}, Word{1, 2}});
}

TEST_CASE("custom precedence") {
  const std::array<Letter, 3> prec{2, 1, 0};
  const auto ord = MonomialOrder::from_precedence(prec);
  CHECK(ord.greater(Word{2}, Word{0}));
  CHECK(ord.precedence()[0] == 2);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(poly(kQ, "x*y + y*x") - poly(kQ, "y*x") == poly(kQ, "x*y"));
  CHECK(poly(kQ, "x") * poly(kQ, "y*z") == poly(kQ, "x*y*z"));
  CHECK(poly(kQ, "(x + y)*(x - y)") == poly(kQ, "xx - xy + yx - yy"));
  CHECK(poly(kQ, "x+y") * poly(kQ, "x-y") == poly(kQ, "xx - xy + yx - yy"));
  CHECK((poly(kQ, "x - x")).is_zero());
  const auto f = poly(kQ, "3*yz + 2*xx");
  CHECK(f.leading_word() == Word{0, 0});
  CHECK(f.monic() == poly(kQ, "xx + 3/2*yz"));
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK_FALSE(poly(kQ, "xx + y").is_homogeneous());
}

TEST_CASE("identity substitution") {
  const auto f = poly(kQw, "x*y + w*y*x + z*z");
  CHECK(apply_sub(f, LinearSub::identity(kQw.field, 3)) == f);
}

TEST_CASE("substitution composition") {
  const auto F = kQw.field;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_sub = [&] {
    Matrix m(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = F.from_int(d(rng)) + F.from_int(d(rng)) * F.theta();
    return LinearSub(m);
  };
  const auto f = poly(kQw, "x*y*z - 2*z*z*x + w*y*y");
  for (int i = 0; i < 10; ++i) {
    const auto s1 = random_sub(), s2 = random_sub();
    CHECK(apply_sub(apply_sub(f, s1), s2) == apply_sub(f, s2.after(s1)));
    if (s1.is_invertible()) CHECK(apply_sub(apply_sub(f, s1), s1.inverse()) == f);
  }
}

TEST_CASE("cyclic operations") {
  CHECK(cyclic_shift(poly(kQ, "xyz")) == poly(kQ, "yzx"));
  CHECK(cyclic_shift(kQ.constant(kQ.field.one())) == kQ.constant(kQ.field.one()));
  CHECK(cyclic_shift(poly(kQ, "x")) == poly(kQ, "x"));
  CHECK(cyclize(poly(kQ, "xxxx")) == poly(kQ, "4*xxxx"));
  CHECK(cyclize(poly(kQ, "xxy")) == poly(kQ, "xxy + xyx + yxx"));
  CHECK(cyclize(poly(kQ, "xyz")) == poly(kQ, "xyz + yzx + zxy"));
  CHECK(cyclic_derivative(poly(kQ, "xyz"), 0) == poly(kQ, "yz"));
  CHECK(cyclic_derivative(poly(kQ, "xyz"), 1).is_zero());
  CHECK(cyclic_derivative(cyclize(poly(kQ, "xxy")), 0) == poly(kQ, "xy + yx"));
  CHECK(is_cyclically_invariant(cyclize(poly(kQ, "xxy"))));
  CHECK_FALSE(is_cyclically_invariant(poly(kQ, "xxy")));
  CHECK(is_cyclically_invariant(
      poly(kQ, "xxx + yyy + zzz") + cyclize(poly(kQ, "xyz")) + cyclize(poly(kQ, "xzy"))));
}

TEST_CASE("cyclize is invariant and commutes with substitution") {
  const auto F = kQ.field;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int i = 0; i < 10; ++i) {
    Matrix m(F, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = F.from_int(d(rng));
    const LinearSub s(m);
    const auto f = poly(kQ, "xyz - 2*xxy + zzy");
    const auto cf = cyclize(f);
    CHECK(is_cyclically_invariant(cf));
    CHECK(is_cyclically_invariant(apply_sub(cf, s)));
    CHECK(apply_sub(cf, s) == cyclize(apply_sub(f, s)));
  }
}

TEST_CASE("span utilities") {
  const auto a = testing_support::polys(kQ, {"xx + yy", "xx - yy"});
  const auto b = testing_support::polys(kQ, {"xx", "yy"});
  CHECK(same_span(a, b));
  CHECK(span_dim(testing_support::polys(kQ, {"xx", "2*xx", "yz"})) == 2);
  const auto basis = span_basis(a);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == poly(kQ, "xx"));
}

TEST_CASE("root substitution transports Sklyanin relation spaces") {
  const auto F = kQw.field;
  const Scalar w = F.theta();
  const Scalar p = F.from_int(1), q = F.from_int(2), r = F.from_int(5);
  auto rels = [&](const Scalar& a, const Scalar& b, const Scalar& c) {
    std::vector<NcPoly> out;
    for (auto [u, v, s] : {std::array<Letter, 3>{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}) {
      out.push_back(kQw.zero()
                        .add_multiple(a, Word{u, v}, kQw.constant(F.one()), Word{})
                        .add_multiple(b, Word{v, u}, kQw.constant(F.one()), Word{})
                        .add_multiple(c, Word{s, s}, kQw.constant(F.one()), Word{}));
    }
    return out;
  };
  // x -> x+y+z, y -> x+w y+w^2 z, z -> x+w^2 y+w z
  Matrix m(F, 3, 3);
  const Scalar w2 = w * w;
  const Scalar cols[3][3] = {{F.one(), F.one(), F.one()}, {F.one(), w, w2}, {F.one(), w2, w}};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = cols[j][i];
  std::vector<NcPoly> moved;
  for (const auto& f : rels(p, q, r)) moved.push_back(apply_sub(f, LinearSub(m)));
  CHECK(same_span(moved, rels(w2 * p + w * q + r, w * p + w2 * q + r, p + q + r)));

  Matrix d = Matrix::identity(F, 3);
  d(2, 2) = w2;
  moved.clear();
  for (const auto& f : rels(p, q, r)) moved.push_back(apply_sub(f, LinearSub(d)));
  CHECK(same_span(moved, rels(p, q, w * r)));
}
