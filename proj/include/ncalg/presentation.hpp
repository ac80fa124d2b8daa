#pragma once

#include <string>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// Finitely presented graded algebra: generators plus homogeneous relations.
struct Presentation {
  FieldSpec field;
  std::vector<std::string> generators;
  MonomialOrder order;
  std::vector<NcPoly> relations;

  std::size_t ngens() const { return generators.size(); }

  /// Free algebra on the given generator names, default order.
  static Presentation free(FieldSpec field, std::vector<std::string> generators);
  /// Free algebra on x, y, z.
  static Presentation free_xyz(FieldSpec field);

  NcPoly zero() const { return NcPoly(field, order); }
  NcPoly gen(Letter g) const { return NcPoly::monomial(field, order, Word{g}); }
  NcPoly constant(const Scalar& c) const { return NcPoly::constant(field, order, c); }

  /// Drops zero relations; throws HomogeneityError for inhomogeneous or
  /// constant ones.
  void validate();

  std::size_t max_relation_degree() const;
};

}  // namespace ncalg
