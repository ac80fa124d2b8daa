#include "ncalg/presentation.hpp"

#include <algorithm>

namespace ncalg {

Presentation Presentation::free(FieldSpec field, std::vector<std::string> generators) {
  Presentation p;
  p.field = field;
  p.order = MonomialOrder(generators.size());
  p.generators = std::move(generators);
  return p;
}

Presentation Presentation::free_xyz(FieldSpec field) {
  return free(field, {"x", "y", "z"});
}

void Presentation::validate() {
  std::erase_if(relations, [](const NcPoly& r) { return r.is_zero(); });
  for (const auto& r : relations) {
    if (!(r.field() == field))
      throw Error(ErrorKind::MixedFields, "relation over a different field");
    if (!(r.order() == order))
      throw Error(ErrorKind::DimensionMismatch, "relation over a different generator set");
    if (!r.is_homogeneous())
      throw Error(ErrorKind::HomogeneityError, "relation is not homogeneous");
    if (r.degree() == 0)
      throw Error(ErrorKind::HomogeneityError, "relation has degree 0");
  }
}

std::size_t Presentation::max_relation_degree() const {
  std::size_t d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree());
  return d;
}

}  // namespace ncalg
