#include "ncalg/potential.hpp"

namespace ncalg {

namespace {

constexpr Letter X = 0, Y = 1, Z = 2;

NcPoly mono(const FieldSpec& f, std::initializer_list<Letter> w, const Scalar& c) {
  return NcPoly::monomial(f, MonomialOrder(3), Word(w), c);
}

}  // namespace

Potential::Potential(NcPoly value) : value_(std::move(value)) {
  if (!is_cyclically_invariant(value_))
    throw Error(ErrorKind::InvalidArgument, "potential is not cyclically invariant");
}

PotentialRelations relations_from_potential(const Potential& f) {
  PotentialRelations out;
  for (std::size_t j = 0; j < f.value().ngens(); ++j) {
    NcPoly d = cyclic_derivative(f.value(), static_cast<Letter>(j));
    if (d.is_zero())
      out.dropped.push_back(static_cast<Letter>(j));
    else
      out.relations.push_back(std::move(d));
  }
  return out;
}

Presentation potential_presentation(const Potential& f,
                                    std::vector<std::string> generators) {
  if (generators.size() != f.value().ngens())
    throw Error(ErrorKind::DimensionMismatch, "generator names do not match potential");
  Presentation p;
  p.field = f.value().field();
  p.order = f.value().order();
  p.generators = std::move(generators);
  p.relations = relations_from_potential(f).relations;
  p.validate();
  return p;
}

Potential sklyanin_potential(const Scalar& p, const Scalar& q, const Scalar& r) {
  const FieldSpec f = p.field();
  NcPoly v = mono(f, {X, X, X}, r) + mono(f, {Y, Y, Y}, r) + mono(f, {Z, Z, Z}, r);
  v += cyclize(mono(f, {X, Y, Z}, p));
  v += cyclize(mono(f, {X, Z, Y}, q));
  return Potential(std::move(v));
}

Potential chain_potential(const Scalar& alpha, const Scalar& gamma) {
  const FieldSpec f = alpha.field();
  const Scalar one = f.one();
  NcPoly v = mono(f, {X, X, X}, one);
  v -= cyclize(mono(f, {X, Y, Z}, one));
  v += cyclize(mono(f, {Y, Y, Z}, one));
  v += cyclize(mono(f, {Y, Z, Z}, alpha));
  v -= mono(f, {Z, Z, Z}, gamma - alpha * alpha);
  return Potential(std::move(v));
}

std::vector<NcPoly> chain_relations(const Scalar& alpha, const Scalar& gamma) {
  const FieldSpec f = alpha.field();
  const Scalar one = f.one();
  return {
      mono(f, {X, X}, one) - mono(f, {Z, X}, one) + mono(f, {Z, Y}, one) +
          mono(f, {Z, Z}, alpha),
      mono(f, {X, Y}, one) - mono(f, {Y, Y}, one) - mono(f, {Z, X}, alpha) +
          mono(f, {Z, Z}, gamma),
      mono(f, {Y, Z}, one) - mono(f, {Z, X}, one) + mono(f, {Z, Y}, one) +
          mono(f, {Z, Z}, alpha),
  };
}

}  // namespace ncalg
