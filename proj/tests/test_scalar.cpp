#include <doctest.h>

#include <random>

#include "ncalg/scalar.hpp"
#include "oracles.hpp"

using namespace ncalg;

TEST_CASE("theta arithmetic in Q(w)") {
  const auto f = FieldSpec::rationals_with_theta();
  const Scalar w = f.theta();
  CHECK(w.pow(3).is_one());
  CHECK_FALSE(w.is_one());
  CHECK(w.inverse() == w * w);
  CHECK(w * w == -f.one() - w);
  CHECK((f.one() + w) * (-w) == f.one());
  CHECK(w.to_string() == "w");
  CHECK((-w).to_string() == "-w");
  CHECK((f.from_int(3) * w * w).to_string() == "-3-3*w");
}

TEST_CASE("rational arithmetic") {
  const auto f = FieldSpec::rationals();
  const Scalar a = f.from_int(3) / f.from_int(6);
  CHECK(a.to_string() == "1/2");
  CHECK((a + a).is_one());
  CHECK_THROWS_AS(f.zero().inverse(), Error);
  CHECK_THROWS_AS(f.theta(), Error);
}

TEST_CASE("prime field inverses agree with a brute-force scan") {
  for (std::uint32_t p : {5u, 7u, 31u, 101u}) {
    const auto f = FieldSpec::prime(p);
    for (std::uint32_t a = 1; a < p; ++a)
      CHECK(f.from_int(a).inverse().residue() == oracle::inverse_by_scan(p, a));
  }
  CHECK(FieldSpec::prime(31).from_int(5).inverse().residue() == 25);
}

TEST_CASE("primitive cube roots") {
  CHECK(primitive_cube_root(FieldSpec::prime(31)).residue() ==
        oracle::nontrivial_cube_roots(31).front());
  CHECK(primitive_cube_root(FieldSpec::prime(31)).residue() == 5);
  CHECK_FALSE(FieldSpec::prime(5).has_theta());
  CHECK(oracle::nontrivial_cube_roots(5).empty());
  try {
    primitive_cube_root(FieldSpec::prime(5));
    FAIL("expected NoCubeRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCubeRoot);
  }
  for (std::uint32_t p : {7u, 13u, 19u, 31u, 37u}) {
    CHECK(FieldSpec::prime(p).has_theta() == !oracle::nontrivial_cube_roots(p).empty());
    CHECK(FieldSpec::prime(p).theta().pow(3).is_one());
  }
}

TEST_CASE("characteristic three and non-primes are rejected") {
  try {
    FieldSpec::prime(3);
    FAIL("expected CharThree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharThree);
  }
  CHECK_THROWS_AS(FieldSpec::prime(15), Error);
}

TEST_CASE("mixing fields is an error") {
  const Scalar a = FieldSpec::rationals().one();
  const Scalar b = FieldSpec::prime(7).one();
  try {
    (void)(a + b);
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFields);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-9, 9);
  for (const auto& f : {FieldSpec::rationals_with_theta(), FieldSpec::prime(31)}) {
    const Scalar w = f.theta();
    auto draw = [&] {
      return f.from_int(small(rng)) + f.from_int(small(rng)) * w +
             f.from_int(small(rng)) / f.from_int(1 + std::abs(small(rng)));
    };
    for (int i = 0; i < 200; ++i) {
      const Scalar a = draw(), b = draw(), c = draw();
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}
