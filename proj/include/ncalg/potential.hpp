#pragma once

#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// A cyclically invariant element of the free algebra.
class Potential {
 public:
  /// Throws InvalidArgument unless cyclic_shift(value) == value.
  explicit Potential(NcPoly value);

  const NcPoly& value() const noexcept { return value_; }

 private:
  NcPoly value_;
};

struct PotentialRelations {
  std::vector<NcPoly> relations;   // nonzero derivatives, generator order
  std::vector<Letter> dropped;     // generators whose derivative vanished
};

/// The derivatives dF/dx_j, one per generator, zero ones dropped.
PotentialRelations relations_from_potential(const Potential& f);

/// Presentation of the potential algebra on the given generators.
Presentation potential_presentation(const Potential& f,
                                    std::vector<std::string> generators);

/// r(x^3 + y^3 + z^3) + p (xyz)^cyc + q (xzy)^cyc on generators x, y, z.
/// The cubes stay uncyclized, so dF/dx = r xx + p yz + q zy.
Potential sklyanin_potential(const Scalar& p, const Scalar& q, const Scalar& r);

/// x^3 - (xyz)^cyc + (yyz)^cyc + alpha (yzz)^cyc - (gamma - alpha^2) z^3,
/// whose derivatives span
///   xx - zx + zy + alpha zz,  xy - yy - alpha zx + gamma zz,
///   yz - zx + zy + alpha zz.
Potential chain_potential(const Scalar& alpha, const Scalar& gamma);

/// The three relations above, in that order.
std::vector<NcPoly> chain_relations(const Scalar& alpha, const Scalar& gamma);

}  // namespace ncalg
