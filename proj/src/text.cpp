#include "ncalg/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ncalg/potential.hpp"

namespace ncalg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string located(std::size_t line, std::size_t column, const std::string& detail) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail;
}

// Recursive descent over one polynomial expression.
class ExprParser {
 public:
  ExprParser(std::string_view text, const Presentation& ctx, std::size_t line, std::size_t col0)
      : text_(text), ctx_(ctx), line_(line), col0_(col0) {}

  NcPoly parse_all() {
    skip_ws();
    if (at_end()) fail(pos_, "empty expression");
    NcPoly v = expr();
    skip_ws();
    if (!at_end()) fail(pos_, std::string("unexpected '") + peek() + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw ParseError(line_, col0_ + pos, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_primary() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c) || c == '(';
  }

  NcPoly expr() {
    NcPoly v = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      skip_ws();
      NcPoly rhs = term();
      if (c == '+') v += rhs; else v -= rhs;
    }
  }

  NcPoly term() {
    NcPoly v = factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        skip_ws();
        v = v * factor();
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        skip_ws();
        NcPoly d = factor();
        if (d.is_zero()) fail(at, "division by zero");
        if (d.degree() != 0) fail(at, "division by a non-constant");
        v = v * d.leading().coeff.inverse();
      } else if (starts_primary()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  NcPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    NcPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    unsigned long e = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(at, "expected an exponent");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned long>(peek() - '0');
      if (e > 1000) fail(at, "exponent too large");
      ++pos_;
    }
    NcPoly out = ctx_.constant(ctx_.field.one());
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  NcPoly primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NcPoly v = expr();
      skip_ws();
      if (peek() != ')') fail(pos_, "expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return ctx_.constant(ctx_.field.from_mpz(n));
    }
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) ++pos_;
      return identifier_run(start, text_.substr(start, pos_ - start));
    }
    if (at_end()) fail(pos_, "unexpected end of expression");
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  // Splits a run like "xyz" into declared generator names, longest first.
  NcPoly identifier_run(std::size_t start, std::string_view run) {
    NcPoly v = ctx_.constant(ctx_.field.one());
    std::size_t i = 0;
    while (i < run.size()) {
      std::size_t best = 0;
      Letter letter = 0;
      for (std::size_t g = 0; g < ctx_.generators.size(); ++g) {
        const std::string& name = ctx_.generators[g];
        if (name.size() > best && run.substr(i, name.size()) == name) {
          best = name.size();
          letter = static_cast<Letter>(g);
        }
      }
      if (best > 0) {
        v = v * ctx_.gen(letter);
        i += best;
        continue;
      }
      if (run[i] == 'w') {
        if (!ctx_.field.has_theta())
          throw Error(ErrorKind::UnknownGenerator,
                      located(line_, col0_ + start + i, "w is not available over " + ctx_.field.name()));
        v = v * ctx_.field.theta();
        ++i;
        continue;
      }
      throw Error(ErrorKind::UnknownGenerator,
                  located(line_, col0_ + start + i,
                          "unknown generator in '" + std::string(run.substr(i)) + "'"));
    }
    return v;
  }

  std::string_view text_;
  const Presentation& ctx_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

bool compound(const std::string& coeff) {
  return coeff.find_first_of("+-", 1) != std::string::npos;
}

struct PendingPoly {
  std::size_t line;
  std::size_t column;
  std::string text;
  bool potential;
};

}  // namespace

FieldSpec parse_field(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "Q") return FieldSpec::rationals();
  if (t == "Q(w)") return FieldSpec::rationals_with_theta();
  if (t.size() > 4 && t.substr(0, 3) == "GF(" && t.back() == ')') {
    const std::string_view digits = t.substr(3, t.size() - 4);
    if (!digits.empty() && digits.size() <= 9 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto p = std::stoull(std::string(digits));
      if (p == 3) throw Error(ErrorKind::CharThree, "characteristic 3 is not supported");
      return FieldSpec::prime(p);
    }
  }
  throw Error(ErrorKind::ParseError, "unknown field '" + std::string(t) + "'");
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  const Presentation none = Presentation::free(field, {});
  const NcPoly v = ExprParser(text, none, 1, 1).parse_all();
  return v.is_zero() ? field.zero() : v.leading().coeff;
}

NcPoly parse_poly(std::string_view text, const Presentation& context) {
  return ExprParser(text, context, 1, 1).parse_all();
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  const bool short_names = std::all_of(names.begin(), names.end(),
                                       [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !short_names) out += '*';
    out += names.at(w[i]);
  }
  return out;
}

std::string render_poly(const NcPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    const std::string c = t.coeff.to_string();
    std::string piece;
    if (t.word.empty())
      piece = compound(c) ? "(" + c + ")" : c;
    else if (t.coeff.is_one())
      piece = render_word(t.word, names);
    else if ((-t.coeff).is_one())
      piece = "-" + render_word(t.word, names);
    else
      piece = (compound(c) ? "(" + c + ")" : c) + "*" + render_word(t.word, names);
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

PresentationFile parse_presentation(std::string_view text) {
  std::optional<FieldSpec> field;
  std::optional<std::vector<std::string>> gens;
  std::optional<std::pair<std::size_t, std::vector<std::string>>> order_line;
  std::vector<PendingPoly> polys;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != raw.npos) raw = raw.substr(0, hash);

    std::size_t k = 0;
    while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
    if (k == raw.size()) continue;
    std::size_t kend = k;
    while (kend < raw.size() && !std::isspace(static_cast<unsigned char>(raw[kend]))) ++kend;
    const std::string_view keyword = raw.substr(k, kend - k);
    std::size_t astart = kend;
    while (astart < raw.size() && std::isspace(static_cast<unsigned char>(raw[astart]))) ++astart;
    const std::string_view arg = trim(raw.substr(astart));
    const std::size_t acol = astart + 1;

    if (keyword == "field") {
      if (field) throw ParseError(line_no, k + 1, "duplicate field line");
      try {
        field = parse_field(arg);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::CharThree)
          throw Error(ErrorKind::CharThree, located(line_no, acol, e.what()));
        throw ParseError(line_no, acol, e.what());
      }
    } else if (keyword == "gens") {
      if (gens) throw ParseError(line_no, k + 1, "duplicate gens line");
      std::vector<std::string> names;
      std::set<std::string> seen;
      std::size_t i = 0;
      while (i < arg.size()) {
        if (std::isspace(static_cast<unsigned char>(arg[i]))) {
          ++i;
          continue;
        }
        const std::size_t s = i;
        if (!is_ident_start(arg[i])) throw ParseError(line_no, acol + i, "expected a generator name");
        while (i < arg.size() && is_ident_char(arg[i])) ++i;
        if (i < arg.size() && !std::isspace(static_cast<unsigned char>(arg[i])))
          throw ParseError(line_no, acol + i, "unexpected character in generator list");
        std::string name(arg.substr(s, i - s));
        if (!seen.insert(name).second)
          throw ParseError(line_no, acol + s, "duplicate generator '" + name + "'");
        names.push_back(std::move(name));
      }
      if (names.empty()) throw ParseError(line_no, acol, "no generators");
      if (names.size() > kMaxGenerators) throw ParseError(line_no, acol, "too many generators");
      gens = std::move(names);
    } else if (keyword == "order") {
      if (order_line) throw ParseError(line_no, k + 1, "duplicate order line");
      std::vector<std::string> names;
      std::size_t i = 0;
      while (i <= arg.size()) {
        const std::size_t gt = arg.find('>', i);
        const std::string_view piece =
            trim(arg.substr(i, gt == arg.npos ? arg.npos : gt - i));
        if (piece.empty()) throw ParseError(line_no, acol + i, "expected a generator name");
        names.emplace_back(piece);
        if (gt == arg.npos) break;
        i = gt + 1;
      }
      order_line = std::pair{line_no, std::move(names)};
    } else if (keyword == "rel" || keyword == "potential") {
      if (arg.empty()) throw ParseError(line_no, acol, "missing polynomial");
      polys.push_back({line_no, acol, std::string(arg), keyword == "potential"});
    } else {
      throw ParseError(line_no, k + 1, "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  if (!gens) throw ParseError(line_no, 1, "missing gens line");
  PresentationFile out;
  out.presentation = Presentation::free(field.value_or(FieldSpec::rationals()), *gens);
  Presentation& p = out.presentation;
  if (p.field.has_theta())
    for (const auto& g : p.generators)
      if (g == "w") throw ParseError(line_no, 1, "w is reserved over " + p.field.name());

  if (order_line) {
    const auto& [oline, names] = *order_line;
    std::vector<Letter> precedence;
    for (const auto& n : names) {
      const auto it = std::find(p.generators.begin(), p.generators.end(), n);
      if (it == p.generators.end())
        throw Error(ErrorKind::UnknownGenerator, located(oline, 1, "unknown generator '" + n + "' in order"));
      const auto letter = static_cast<Letter>(it - p.generators.begin());
      if (std::find(precedence.begin(), precedence.end(), letter) != precedence.end())
        throw ParseError(oline, 1, "generator '" + n + "' repeated in order");
      precedence.push_back(letter);
    }
    if (precedence.size() != p.ngens())
      throw ParseError(oline, 1, "order must list every generator");
    p.order = MonomialOrder::from_precedence(precedence);
  }

  const bool has_potential =
      std::any_of(polys.begin(), polys.end(), [](const PendingPoly& q) { return q.potential; });
  if (has_potential) {
    const auto count = std::count_if(polys.begin(), polys.end(),
                                     [](const PendingPoly& q) { return q.potential; });
    if (count != static_cast<long>(polys.size()) || count > 1) {
      const auto& bad = polys.back();
      throw ParseError(bad.line, 1, "a file holds either one potential or rel lines");
    }
  }

  for (const auto& pending : polys) {
    NcPoly f = ExprParser(pending.text, p, pending.line, pending.column).parse_all();
    if (f.is_zero()) {
      out.warnings.push_back("line " + std::to_string(pending.line) + ": zero polynomial ignored");
      continue;
    }
    if (!f.is_homogeneous())
      throw Error(ErrorKind::HomogeneityError,
                  located(pending.line, pending.column, "polynomial is not homogeneous"));
    if (f.degree() == 0)
      throw Error(ErrorKind::HomogeneityError,
                  located(pending.line, pending.column, "polynomial has degree 0"));
    if (!pending.potential) {
      p.relations.push_back(std::move(f));
      continue;
    }
    if (!is_cyclically_invariant(f))
      throw ParseError(pending.line, pending.column, "potential is not cyclically invariant");
    auto derived = relations_from_potential(Potential(f));
    for (Letter g : derived.dropped)
      out.warnings.push_back("derivative by " + p.generators[g] + " vanishes and is dropped");
    p.relations = std::move(derived.relations);
    out.potential = std::move(f);
  }
  p.validate();
  return out;
}

std::string render_presentation(const Presentation& p) {
  std::string out = "field " + p.field.name() + "\ngens";
  for (const auto& g : p.generators) out += " " + g;
  out += "\n";
  if (!(p.order == MonomialOrder(p.ngens()))) {
    const auto prec = p.order.precedence();
    out += "order";
    for (std::size_t i = 0; i < p.ngens(); ++i)
      out += (i == 0 ? " " : " > ") + p.generators[prec[i]];
    out += "\n";
  }
  for (const auto& r : p.relations) out += "rel " + render_poly(r, p.generators) + "\n";
  return out;
}

}  // namespace ncalg
