#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// "Q", "Q(w)" or "GF(p)". GF(3) raises CharThree.
FieldSpec parse_field(std::string_view text);

/// Integer, num/den, a+b*w and any +, -, *, /, ^ combination of those.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

/// Polynomial over the generators of `context`. Juxtaposed names multiply;
/// w is the cube root of unity when the field has one.
NcPoly parse_poly(std::string_view text, const Presentation& context);

std::string render_word(const Word& w, const std::vector<std::string>& names);
std::string render_poly(const NcPoly& f, const std::vector<std::string>& names);

/// Contents of a presentation file.
struct PresentationFile {
  Presentation presentation;
  std::optional<NcPoly> potential;
  std::vector<std::string> warnings;
};

/// Line-oriented grammar:
///   field Q | Q(w) | GF(p)
///   gens x y z
///   order z > y > x        (optional, default: declaration order)
///   rel <poly>             (any number)
///   potential <poly>       (instead of rel lines)
/// with # starting a comment.
PresentationFile parse_presentation(std::string_view text);

/// Renders relations with rel lines; reparses to an equal presentation.
std::string render_presentation(const Presentation& p);

}  // namespace ncalg
