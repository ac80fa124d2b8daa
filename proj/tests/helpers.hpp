#pragma once

#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ncalg/text.hpp"

namespace testing_support {

inline ncalg::NcPoly poly(const ncalg::Presentation& p, const std::string& text) {
  return ncalg::parse_poly(text, p);
}

inline std::vector<ncalg::NcPoly> polys(const ncalg::Presentation& p,
                                        const std::vector<std::string>& texts) {
  std::vector<ncalg::NcPoly> out;
  for (const auto& t : texts) out.push_back(poly(p, t));
  return out;
}

inline std::string corpus_path(const std::string& name) {
  return std::string(NCALG_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ncalg::Presentation corpus(const std::string& name) {
  return ncalg::parse_presentation(read_file(corpus_path(name))).presentation;
}

inline std::vector<std::string> corpus_names() {
  return {"free.alg",           "sklyanin_1_0_0.alg", "sklyanin_0_0_1.alg",
          "dege2_1_w_2.alg",    "quantum_1_1_0.alg",  "quantum_1_m2_0.alg",
          "sklyanin_1_2_1.alg", "sklyanin_1_w_1.alg", "w.alg",
          "w_dual.alg"};
}

inline std::vector<std::string> render_all(std::span<const ncalg::NcPoly> fs,
                                           const ncalg::Presentation& p) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(ncalg::render_poly(f, p.generators));
  return out;
}

}  // namespace testing_support
