#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncalg/groebner.hpp"

namespace ncalg {

/// Presentation whose relations are quadratic and linearly independent.
class QuadraticAlgebra {
 public:
  /// Validates, rejects non-quadratic relations and replaces the relation
  /// list with the reduced echelon basis of its span.
  explicit QuadraticAlgebra(Presentation base);

  const Presentation& presentation() const noexcept { return base_; }
  std::size_t ngens() const { return base_.ngens(); }
  std::size_t rdim() const { return base_.relations.size(); }

 private:
  Presentation base_;
};

/// A(V, R^perp) for the pairing b(u, v) = [u == v] on degree-2 monomials.
QuadraticAlgebra dual_algebra(const QuadraticAlgebra& a);

/// Coefficients of H_A(-t) H_B(t) through the shorter length.
std::vector<long long> series_pairing(const std::vector<std::size_t>& ha,
                                      const std::vector<std::size_t>& hb);

/// Smallest k <= D with a nonzero t^k coefficient in H_A(-t) H_{A!}(t) - 1.
std::optional<std::size_t> koszul_defect(const QuadraticAlgebra& a, std::size_t D);

struct Deg3aReport {
  bool dual4_zero = false;
  std::size_t dual3_dim = 0;
  /// w A!_2 != 0 for every nonzero w in A!_1.
  bool no_dual_degree1_left_annihilator = false;
  /// A!_2 w != 0 for every nonzero w in A!_1.
  bool no_dual_degree1_right_annihilator = false;

  bool all_hold() const {
    return dual4_zero && dual3_dim == 1 && no_dual_degree1_left_annihilator &&
           no_dual_degree1_right_annihilator;
  }
};

Deg3aReport deg3a_criterion(const QuadraticAlgebra& a);

/// dim {u in A_d : x_i u = 0 for every generator x_i}.
std::size_t right_annihilator_dim(const QuadraticAlgebra& a, std::size_t d);
/// Same, against a basis certified to degree d + 1.
std::size_t right_annihilator_dim(const GroebnerBasis& gb, std::size_t d);

/// Coordinates of a normal form in the given normal-word basis.
std::vector<Scalar> normal_coordinates(const NcPoly& reduced,
                                       const std::vector<Word>& basis);

}  // namespace ncalg
