#include "ncalg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncalg/groebner.hpp"
#include "ncalg/quadratic.hpp"
#include "ncalg/sklyanin.hpp"
#include "ncalg/text.hpp"

namespace ncalg {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kXyz{"x", "y", "z"};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PresentationFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json polys_json(std::span<const NcPoly> polys, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(render_poly(f, names));
  return out;
}

Json triple_json(const ParamTriple& t) {
  return Json{{"p", t.p.to_string()}, {"q", t.q.to_string()}, {"r", t.r.to_string()}};
}

Json warnings_json(const PresentationFile& file) {
  Json w = Json::array();
  for (const auto& s : file.warnings) w.push_back(s);
  return w;
}

Json cmd_gb(const std::string& path, std::size_t deg) {
  const auto file = load(path);
  const auto& p = file.presentation;
  const GroebnerBasis gb = complete(p, deg);
  Json elems = Json::array();
  for (const auto& g : gb.elements())
    elems.push_back(Json{{"lead", render_word(g.leading_word(), p.generators)},
                         {"poly", render_poly(g, p.generators)}});
  return Json{{"gb", std::move(elems)},
              {"complete", gb.complete_to_bound()},
              {"degree_bound", deg},
              {"finite", gb.is_finite()},
              {"warnings", warnings_json(file)}};
}

Json cmd_hilbert(const std::string& path, std::size_t deg) {
  const auto file = load(path);
  const std::size_t bound = std::max(deg, file.presentation.max_relation_degree());
  return Json{{"hilbert", complete(file.presentation, bound).hilbert_coeffs(deg)}};
}

Json cmd_oracle(const std::string& path, std::size_t deg) {
  const auto file = load(path);
  Json dims = Json::array();
  for (std::size_t d = 0; d <= deg; ++d) dims.push_back(graded_dim_oracle(file.presentation, d));
  return Json{{"oracle", std::move(dims)}};
}

Json cmd_dual(const std::string& path) {
  const auto file = load(path);
  const QuadraticAlgebra a(file.presentation);
  const QuadraticAlgebra dual = dual_algebra(a);
  return Json{{"dual", polys_json(dual.presentation().relations, a.presentation().generators)},
              {"rdim", dual.rdim()},
              {"presentation", render_presentation(dual.presentation())}};
}

Json cmd_koszul(const std::string& path, std::size_t deg) {
  const auto file = load(path);
  const QuadraticAlgebra a(file.presentation);
  const std::size_t bound = std::max<std::size_t>(deg, 2);
  const auto defect = koszul_defect(a, bound);
  const auto report = deg3a_criterion(a);
  const GroebnerBasis gb = complete(a.presentation(), bound);
  Json ann = Json::array();
  for (std::size_t d = 0; d + 1 <= bound; ++d) ann.push_back(right_annihilator_dim(gb, d));
  return Json{{"defect", defect ? Json(*defect) : Json(nullptr)},
              {"degree_bound", bound},
              {"deg3a",
               Json{{"dual4_zero", report.dual4_zero},
                    {"dual3_dim", report.dual3_dim},
                    {"no_dual_degree1_left_annihilator", report.no_dual_degree1_left_annihilator},
                    {"no_dual_degree1_right_annihilator", report.no_dual_degree1_right_annihilator}}},
              {"right_annihilator_dims", std::move(ann)}};
}

ParamTriple parse_triple(const std::vector<std::string>& v, std::size_t at, const FieldSpec& f) {
  return {parse_scalar(v.at(at), f), parse_scalar(v.at(at + 1), f), parse_scalar(v.at(at + 2), f)};
}

Json class_json(const SklyaninClass& c) {
  Json params = Json::object();
  if (c.alpha) params["alpha"] = c.alpha->to_string();
  if (c.a) params["a"] = c.a->to_string();
  if (c.b) params["b"] = c.b->to_string();
  Json trace = Json::array();
  for (const auto& s : c.trace) trace.push_back(s);
  return Json{{"class", to_string(c.tag)},
              {"params", std::move(params)},
              {"representative", triple_json(c.representative)},
              {"witness", matrix_json(c.witness.matrix())},
              {"trace", std::move(trace)}};
}

Json cmd_sklyanin(const std::string& action, const std::vector<std::string>& values,
                  const FieldSpec& f, std::size_t kmax) {
  auto need = [&](std::size_t n) {
    if (values.size() != n)
      throw Error(ErrorKind::ParseError, "sklyanin " + action + " expects " + std::to_string(n) +
                                             " scalar arguments, got " +
                                             std::to_string(values.size()));
  };
  if (action == "classify") {
    need(3);
    return class_json(classify(parse_triple(values, 0, f)));
  }
  if (action == "iso") {
    need(6);
    const auto d = are_isomorphic(parse_triple(values, 0, f), parse_triple(values, 3, f));
    Json reason = Json::array();
    for (const auto& s : d.reason) reason.push_back(s);
    return Json{{"isomorphic", d.isomorphic},
                {"reason", std::move(reason)},
                {"witness", d.witness ? matrix_json(d.witness->matrix()) : Json(nullptr)}};
  }
  if (action == "orbit") {
    need(2);
    Json pts = Json::array();
    for (const auto& pt : iso_group_orbit(parse_scalar(values[0], f), parse_scalar(values[1], f)))
      pts.push_back(Json::array({pt.a.to_string(), pt.b.to_string()}));
    return Json{{"orbit", std::move(pts)}};
  }
  if (action == "chain") {
    need(2);
    const auto c = substitution_chain(parse_scalar(values[0], f), parse_scalar(values[1], f));
    Json subs = Json::array();
    for (const auto& s : c.subs) subs.push_back(matrix_json(s.matrix()));
    Json leads = Json::array();
    for (const auto& w : c.leading_words) leads.push_back(render_word(w, kXyz));
    return Json{{"a_prime", c.a_prime.to_string()},
                {"b_prime", c.b_prime.to_string()},
                {"alpha", c.alpha.to_string()},
                {"gamma", c.gamma.to_string()},
                {"alpha_formula", c.alpha_formula.to_string()},
                {"gamma_formula", c.gamma_formula.to_string()},
                {"leading_words", std::move(leads)},
                {"relations", polys_json(c.transported, kXyz)},
                {"matches_chain_relations", c.matches_chain_relations},
                {"subs", std::move(subs)},
                {"witness", matrix_json(c.composite.matrix())}};
  }
  if (action == "recursion") {
    need(2);
    Json states = Json::array();
    for (const auto& s : pik_recursion(parse_scalar(values[0], f), parse_scalar(values[1], f), kmax))
      states.push_back(Json{{"k", s.k},
                            {"a", s.a_k.to_string()},
                            {"b", s.b_k.to_string()},
                            {"outcome", to_string(s.outcome)}});
    return Json{{"states", std::move(states)}};
  }
  throw Error(ErrorKind::ParseError, "unknown sklyanin action '" + action + "'");
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& detail) {
  err << Json{{"error", Json{{"kind", kind}, {"detail", detail}}}}.dump() << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noncommutative Groebner bases and Sklyanin algebras", "ncalg"};
  app.require_subcommand(1);
  std::string file;
  std::size_t deg = 8;

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis up to --deg");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients");
  auto* dual = app.add_subcommand("dual", "quadratic dual algebra");
  auto* koszul = app.add_subcommand("koszul", "Koszul defect and deg3a hypotheses");
  auto* oracle = app.add_subcommand("oracle", "graded dimensions by brute-force linear algebra");
  for (auto* sub : {gb, hilbert, dual, koszul, oracle})
    sub->add_option("file", file, "presentation file")->required();
  for (auto* sub : {gb, hilbert, koszul, oracle})
    sub->add_option("--deg", deg, "degree bound")->capture_default_str();

  auto* sk = app.add_subcommand("sklyanin", "Sklyanin algebra operations");
  std::string action;
  std::vector<std::string> values;
  std::string field_text = "Q(w)";
  std::size_t kmax = 8;
  sk->add_option("action", action, "classify | iso | orbit | chain | recursion")
      ->required()
      ->check(CLI::IsMember({"classify", "iso", "orbit", "chain", "recursion"}));
  sk->add_option("values", values, "scalar arguments");
  sk->add_option("--field", field_text, "Q, Q(w) or GF(p)")->capture_default_str();
  sk->add_option("--kmax", kmax, "last k for recursion")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what());
    return 2;
  }

  try {
    Json result;
    if (*gb) result = cmd_gb(file, deg);
    else if (*hilbert) result = cmd_hilbert(file, deg);
    else if (*dual) result = cmd_dual(file);
    else if (*koszul) result = cmd_koszul(file, deg);
    else if (*oracle) result = cmd_oracle(file, deg);
    else result = cmd_sklyanin(action, values, parse_field(field_text), kmax);
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    emit_error(err, std::string(to_string(e.kind())), e.what());
    return e.is_parse_error() ? 2 : 1;
  } catch (const IoError& e) {
    emit_error(err, "IOError", e.what());
    return 1;
  } catch (const std::logic_error& e) {
    emit_error(err, "InternalError", e.what());
    return 1;
  }
}

}  // namespace ncalg
