#include "ncalg/sklyanin.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "ncalg/potential.hpp"

namespace ncalg {

namespace {

constexpr Letter X = 0, Y = 1, Z = 2;

using Column = std::array<Scalar, 3>;

NcPoly mono(const FieldSpec& f, std::initializer_list<Letter> w, const Scalar& c) {
  return NcPoly::monomial(f, MonomialOrder(3), Word(w), c);
}

Scalar cube(const Scalar& s) { return s * s * s; }

// Column j lists the coefficients of x, y, z in the image of generator j.
LinearSub sub_from_columns(const FieldSpec& f, const std::array<Column, 3>& cols) {
  Matrix m(f, 3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = cols[j][i];
  return LinearSub(std::move(m));
}

LinearSub diagonal(const FieldSpec& f, const Scalar& dx, const Scalar& dy, const Scalar& dz) {
  const Scalar o = f.zero();
  return sub_from_columns(f, {Column{dx, o, o}, Column{o, dy, o}, Column{o, o, dz}});
}

LinearSub swap_xy(const FieldSpec& f) {
  const Scalar o = f.zero(), l = f.one();
  return sub_from_columns(f, {Column{o, l, o}, Column{l, o, o}, Column{o, o, l}});
}

void require_transport(const LinearSub& s, const ParamTriple& from, const ParamTriple& to,
                       const char* what) {
  if (!transports(s, from, to))
    throw std::logic_error(std::string(what) + ": substitution does not transport relations");
}

std::string triple_text(const ParamTriple& t) {
  return "(" + t.p.to_string() + ", " + t.q.to_string() + ", " + t.r.to_string() + ")";
}

// Applies root1_sub until r equals target; at most two extra steps.
TripleSub root1_until(TripleSub state, const Scalar& target) {
  for (int i = 0; i < 3; ++i) {
    if (state.triple.r == target) return state;
    TripleSub next = root1_sub(state.triple);
    state = {next.triple, next.sub.after(state.sub)};
  }
  throw std::logic_error("root1 cycle does not reach the requested r");
}

TripleSub then(const TripleSub& first, const TripleSub& second) {
  return {second.triple, second.sub.after(first.sub)};
}

std::string pair_key(const Scalar& a, const Scalar& b) {
  return a.to_string() + "," + b.to_string();
}

// Group helpers over Q(w): projective 3x3 matrices acting on (a, b, 1).
Matrix normalized(Matrix m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) {
        const Scalar inv = m(i, j).inverse();
        for (std::size_t u = 0; u < 3; ++u)
          for (std::size_t v = 0; v < 3; ++v) m(u, v) *= inv;
        return m;
      }
  throw std::logic_error("zero matrix in group closure");
}

std::string matrix_key(const Matrix& m) {
  std::string key;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) key += m(i, j).to_string() + ";";
  return key;
}

std::string probe_key(const Matrix& m, const Scalar& a, const Scalar& b) {
  const FieldSpec& f = a.field();
  std::array<Scalar, 3> v{f.zero(), f.zero(), f.zero()};
  const std::array<Scalar, 3> in{a, b, f.one()};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) v[i] += m(i, j) * in[j];
  for (const auto& c : v)
    if (!c.is_zero()) {
      const Scalar inv = c.inverse();
      return (v[0] * inv).to_string() + ":" + (v[1] * inv).to_string() + ":" +
             (v[2] * inv).to_string();
    }
  throw std::logic_error("probe maps to zero");
}

GroupInvariants invariants_from_table(const std::vector<std::vector<std::size_t>>& table,
                                      std::size_t identity) {
  const std::size_t n = table.size();
  GroupInvariants out;
  out.order = n;
  for (std::size_t g = 0; g < n; ++g) {
    bool central = true;
    for (std::size_t h = 0; h < n && central; ++h) central = table[g][h] == table[h][g];
    if (central) ++out.center_order;
    std::size_t order = 1;
    for (std::size_t power = g; power != identity; power = table[power][g]) ++order;
    ++out.element_orders[order];
  }
  return out;
}

}  // namespace

ParamTriple make_triple(const FieldSpec& field, long p, long q, long r) {
  return {field.from_int(p), field.from_int(q), field.from_int(r)};
}

std::vector<NcPoly> sklyanin_relations(const ParamTriple& t) {
  const FieldSpec& f = t.field();
  return {
      mono(f, {Y, Z}, t.p) + mono(f, {Z, Y}, t.q) + mono(f, {X, X}, t.r),
      mono(f, {Z, X}, t.p) + mono(f, {X, Z}, t.q) + mono(f, {Y, Y}, t.r),
      mono(f, {X, Y}, t.p) + mono(f, {Y, X}, t.q) + mono(f, {Z, Z}, t.r),
  };
}

Presentation sklyanin_presentation(const ParamTriple& t) {
  Presentation p = Presentation::free_xyz(t.field());
  p.relations = sklyanin_relations(t);
  p.validate();
  return p;
}

bool transports(const LinearSub& s, const ParamTriple& from, const ParamTriple& to) {
  if (!s.is_invertible()) return false;
  std::vector<NcPoly> moved;
  for (const auto& rel : sklyanin_relations(from)) moved.push_back(apply_sub(rel, s));
  return same_span(moved, sklyanin_relations(to));
}

bool is_degenerate(const ParamTriple& t) {
  const bool at_most_one = (t.p * t.q).is_zero() && (t.p * t.r).is_zero() && (t.q * t.r).is_zero();
  const bool equal_cubes = cube(t.p) == cube(t.q) && cube(t.q) == cube(t.r);
  return at_most_one || equal_cubes;
}

bool in_m0(const ParamTriple& t) { return !is_degenerate(t); }

bool in_m1(const ParamTriple& t) {
  return in_m0(t) && !t.r.is_zero() && !(t.p.is_zero() && t.q.is_zero()) &&
         !(cube(t.p + t.q) + cube(t.r)).is_zero();
}

bool in_m2(const ParamTriple& t) { return in_m0(t) && !in_m1(t); }

bool in_m(const Scalar& a, const Scalar& b) {
  const FieldSpec& f = a.field();
  return !(a.is_zero() && b.is_zero()) && !(cube(a + b) + f.one()).is_zero() &&
         !(cube(a).is_one() && cube(b).is_one());
}

std::string to_string(SklyaninTag tag) {
  switch (tag) {
    case SklyaninTag::FreeAlgebra: return "FreeAlgebra";
    case SklyaninTag::MonoXY: return "MonoXY";
    case SklyaninTag::MonoXX: return "MonoXX";
    case SklyaninTag::QuantumPoly: return "QuantumPoly";
    case SklyaninTag::GenericM1: return "GenericM1";
  }
  return "?";
}

std::string to_string(PiOutcome outcome) {
  switch (outcome) {
    case PiOutcome::Continue: return "Continue";
    case PiOutcome::Sigma: return "Sigma";
    case PiOutcome::RankAnomaly: return "RankAnomaly";
  }
  return "?";
}

TripleSub root1_sub(const ParamTriple& t) {
  const FieldSpec& f = t.field();
  const Scalar w = f.theta();
  TripleSub out{{t.p, t.q, w * t.r}, diagonal(f, f.one(), f.one(), w * w)};
  require_transport(out.sub, t, out.triple, "root1");
  return out;
}

TripleSub root2_sub(const ParamTriple& t, std::optional<Scalar> root) {
  const FieldSpec& f = t.field();
  const Scalar c = root ? *root : f.theta();
  if (!cube(c).is_one() || c.is_one())
    throw Error(ErrorKind::InvalidArgument, "root must be a primitive cube root of unity");
  const Scalar c2 = c * c, l = f.one();
  TripleSub out{{c2 * t.p + c * t.q + t.r, c * t.p + c2 * t.q + t.r, t.p + t.q + t.r},
                sub_from_columns(f, {Column{l, l, l}, Column{l, c, c2}, Column{l, c2, c}})};
  require_transport(out.sub, t, out.triple, "root2");
  return out;
}

SklyaninClass classify(const ParamTriple& t) {
  const FieldSpec& f = t.field();
  const Scalar w = f.theta();
  const Scalar zero = f.zero(), one = f.one();
  SklyaninClass out;
  out.witness = LinearSub::identity(f, 3);
  out.trace.push_back("input " + triple_text(t));

  if (t.p.is_zero() && t.q.is_zero() && t.r.is_zero()) {
    out.tag = SklyaninTag::FreeAlgebra;
    out.representative = t;
    out.trace.push_back("all parameters vanish");
    return out;
  }

  if (is_degenerate(t)) {
    TripleSub state{t, out.witness};
    if (t.r.is_zero() && (t.p.is_zero() || t.q.is_zero())) {
      out.tag = SklyaninTag::MonoXY;
      if (t.p.is_zero()) {
        state = then(state, {{t.q, t.p, t.r}, swap_xy(f)});
        out.trace.push_back("swap x and y");
      }
    } else if (t.p.is_zero() && t.q.is_zero()) {
      out.tag = SklyaninTag::MonoXX;
    } else {
      const ParamTriple u = t.scaled(t.p.inverse());
      state.triple = u;
      out.trace.push_back("scale to " + triple_text(u));
      if (u.q.is_one()) {
        out.tag = SklyaninTag::MonoXX;
        state = root1_until(state, one);
        state = then(state, root2_sub(state.triple));
      } else {
        out.tag = SklyaninTag::MonoXY;
        const Scalar q2 = u.q * u.q;
        state = root1_until(state, q2);
        state = then(state, root2_sub(state.triple, q2));
        state = then(state, {{state.triple.q, state.triple.p, state.triple.r}, swap_xy(f)});
      }
      out.trace.push_back("root substitutions reach " + triple_text(state.triple));
    }
    out.representative = out.tag == SklyaninTag::MonoXY ? ParamTriple{one, zero, zero}
                                                        : ParamTriple{zero, zero, one};
    out.witness = state.sub;
    require_transport(out.witness, t, out.representative, "classify");
    return out;
  }

  if (in_m2(t)) {
    out.tag = SklyaninTag::QuantumPoly;
    TripleSub state{t, out.witness};
    if (!t.r.is_zero()) {
      const Scalar rinv = t.r.inverse();
      state.triple = t.scaled(rinv);
      state = root1_until(state, -(state.triple.p + state.triple.q));
      out.trace.push_back("root1 gives " + triple_text(state.triple));
      state = then(state, root2_sub(state.triple));
      out.trace.push_back("root2 gives " + triple_text(state.triple));
    }
    const Scalar alpha = -(state.triple.q / state.triple.p);
    out.alpha = alpha;
    out.representative = {one, -alpha, zero};
    out.witness = state.sub;
    if (!t.r.is_zero()) {
      const Scalar closed = w * (t.p - w * w * t.q) / (t.p - w * t.q);
      out.trace.push_back(closed == alpha ? "alpha agrees with the closed form"
                                          : "alpha differs from the closed form");
    }
    require_transport(out.witness, t, out.representative, "classify");
    return out;
  }

  out.tag = SklyaninTag::GenericM1;
  const Scalar rinv = t.r.inverse();
  out.a = t.p * rinv;
  out.b = t.q * rinv;
  out.representative = {*out.a, *out.b, one};
  out.trace.push_back("normalize r = 1");
  return out;
}

ChainInput prepare_chain_input(const ParamTriple& t) {
  if (!in_m1(t)) throw Error(ErrorKind::PreconditionViolated, "triple is not in M1");
  const FieldSpec& f = t.field();
  TripleSub state{t.scaled(t.r.inverse()), LinearSub::identity(f, 3)};
  if ((state.triple.p + state.triple.q).is_zero()) {
    state = then(state, root2_sub(state.triple));
    state.triple = state.triple.scaled(state.triple.r.inverse());
    if ((state.triple.p + state.triple.q).is_zero())
      throw Error(ErrorKind::PreconditionViolated, "p + q stays zero after root2");
  }
  require_transport(state.sub, t, state.triple, "prepare_chain_input");
  return {state.triple.p, state.triple.q, state.sub};
}

ChainResult substitution_chain(const Scalar& a, const Scalar& b) {
  const FieldSpec& f = a.field();
  const Scalar w = f.theta();
  const Scalar w2 = w * w, one = f.one(), zero = f.zero();
  const ParamTriple start{a, b, one};
  if (!in_m1(start)) throw Error(ErrorKind::PreconditionViolated, "(a, b, 1) is not in M1");
  const Scalar s = a + b;
  if (s.is_zero()) throw Error(ErrorKind::PreconditionViolated, "a + b = 0");
  if (cube(a) == cube(b)) throw Error(ErrorKind::PreconditionViolated, "a^3 = b^3");

  ChainResult out;
  const Scalar s2 = s * s, s3 = s2 * s;
  out.a_prime = f.from_int(3) * s2 * ((w - one) * a + (w2 - one) * b) / (s3 + one);
  out.b_prime = f.from_int(3) * s2 * ((w2 - one) * a + (w - one) * b) / (s3 + one);
  const Scalar& A = out.a_prime;
  const Scalar& B = out.b_prime;
  if ((A * B * (A - B) * (A + B)).is_zero())
    throw Error(ErrorKind::PreconditionViolated, "a'b'(a'-b')(a'+b') = 0");

  const Scalar sum = A + B, diff = A - B;
  const Scalar diff3 = diff * diff * diff;
  out.subs = {
      sub_from_columns(f, {Column{-(s.inverse()), zero, zero}, Column{zero, one, zero},
                           Column{zero, zero, one}}),
      sub_from_columns(f, {Column{one, one, one}, Column{one, w2, w}, Column{one, w, w2}}),
      sub_from_columns(f, {Column{A / sum, zero, zero}, Column{B / sum, one, -one},
                           Column{zero, zero, one}}),
      sub_from_columns(
          f, {Column{one, -(diff / A), (sum * sum + A * A * B) / diff3},
              Column{zero, diff / A, -((sum * sum + A * B * B) / diff3)},
              Column{zero, zero, -(sum / (diff * diff))}}),
  };

  auto transport = [&](const LinearSub& sub) {
    std::vector<NcPoly> moved;
    for (const auto& rel : sklyanin_relations(start)) moved.push_back(apply_sub(rel, sub));
    return moved;
  };

  const LinearSub two_steps = out.subs[1].after(out.subs[0]);
  {
    const NcPoly lin = mono(f, {X}, one) + mono(f, {Y}, one) + mono(f, {Z}, one);
    NcPoly g = lin * lin * lin;
    g += cyclize(mono(f, {X, Y, Z}, A));
    g += cyclize(mono(f, {X, Z, Y}, B));
    out.g_stage_matches =
        same_span(transport(two_steps), relations_from_potential(Potential(g)).relations);
  }

  out.composite = out.subs[3].after(out.subs[2].after(two_steps));
  out.transported = span_basis(transport(out.composite));
  for (const auto& rel : out.transported) out.leading_words.push_back(rel.leading_word());

  out.alpha = zero;
  out.gamma = zero;
  for (const auto& rel : out.transported) {
    if (rel.leading_word() == Word{X, X}) out.alpha = rel.coefficient(Word{Z, Z});
    if (rel.leading_word() == Word{X, Y}) out.gamma = rel.coefficient(Word{Z, Z});
  }
  const auto expected = chain_relations(out.alpha, out.gamma);
  out.matches_chain_relations = out.transported == span_basis(expected);
  out.matches_chain_potential = same_span(
      out.transported, relations_from_potential(chain_potential(out.alpha, out.gamma)).relations);

  const Scalar d4 = diff3 * diff;
  out.alpha_formula = -((sum * sum * sum + A * B * (A * A + B * B)) / d4);
  const Scalar A2 = A * A, B2 = B * B, AB = A * B;
  const Scalar numerator =
      sum.pow(4) * (A2 - AB + B2) + AB * sum.pow(3) * (f.from_int(2) * A2 + f.from_int(2) * B2 -
                                                      f.from_int(3) * AB) +
      A2 * B2 * (A2 * A2 + B2 * B2 + A2 * B2 - A2 * AB - AB * B2);
  out.gamma_formula = -(numerator / (d4 * d4));
  return out;
}

std::vector<PiState> pik_recursion(const Scalar& alpha, const Scalar& gamma, std::size_t kmax) {
  const FieldSpec& f = alpha.field();
  const Scalar one = f.one();
  std::vector<PiState> states;
  Scalar ak = f.zero(), bk = f.zero();
  for (std::size_t k = 0; k <= kmax; ++k) {
    Matrix m(f, 3, 3);
    m(0, 0) = -one;      m(0, 1) = one;      m(0, 2) = bk + alpha;
    m(1, 0) = alpha;     m(1, 1) = bk - ak;  m(1, 2) = -gamma;
    m(2, 0) = ak - one;  m(2, 1) = one;      m(2, 2) = alpha;
    Matrix left(f, 3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      left(i, 0) = m(i, 0);
      left(i, 1) = m(i, 1);
    }
    if (rank(left) < 2) {
      states.push_back({k, ak, bk, PiOutcome::Sigma});
      break;
    }
    if (rank(m) == 3) {
      states.push_back({k, ak, bk, PiOutcome::RankAnomaly});
      break;
    }
    states.push_back({k, ak, bk, PiOutcome::Continue});
    const Matrix kernel = nullspace(m);
    const Scalar inv = kernel(0, 2).inverse();
    ak = kernel(0, 0) * inv;
    bk = kernel(0, 1) * inv;
  }
  return states;
}

std::vector<Word> expected_normal_words(NormalCase c, std::size_t d) {
  std::vector<Word> out;
  auto zy_prefix = [](std::size_t zs, std::size_t ys) {
    return Word::power(Z, zs) * Word::power(Y, ys);
  };
  for (std::size_t tail = 0; tail <= d; ++tail) {
    Word w;
    if (tail > 0) {
      w.push_back(X);
      for (std::size_t i = 1; i < tail; ++i) {
        const bool in_z_block = !c.finite_case || i <= c.k + 1;
        w.push_back(in_z_block ? Z : Y);
      }
    }
    const std::size_t rest = d - tail;
    for (std::size_t zs = 0; zs <= rest; ++zs) out.push_back(zy_prefix(zs, rest - zs) * w);
  }
  std::sort(out.begin(), out.end(), DescendingWords{MonomialOrder(3)});
  return out;
}

std::vector<OrbitPoint> iso_group_orbit(const Scalar& a, const Scalar& b) {
  const FieldSpec& f = a.field();
  const Scalar w = f.theta();
  const Scalar one = f.one();
  if (!in_m(a, b)) throw Error(ErrorKind::PreconditionViolated, "(a, b) is not in M");
  const LinearSub g1 = diagonal(f, one, one, w);

  std::vector<OrbitPoint> orbit{{a, b, LinearSub::identity(f, 3)}};
  std::unordered_map<std::string, std::size_t> seen{{pair_key(a, b), 0}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const OrbitPoint cur = orbit[head];
    std::vector<OrbitPoint> next;
    next.push_back({w * cur.a, w * cur.b, g1.after(cur.sub)});
    const Scalar den = cur.a + cur.b + one;
    if (den.is_zero())
      throw Error(ErrorKind::DegenerateDenominator,
                  "a + b + 1 = 0 after " + std::to_string(orbit.size()) + " orbit points");
    const TripleSub moved = root2_sub({cur.a, cur.b, one}, w * w);
    const Scalar inv = moved.triple.r.inverse();
    next.push_back({moved.triple.p * inv, moved.triple.q * inv, moved.sub.after(cur.sub)});
    for (auto& pt : next) {
      if (!seen.emplace(pair_key(pt.a, pt.b), orbit.size()).second) continue;
      if (!in_m(pt.a, pt.b)) throw std::logic_error("orbit left M");
      orbit.push_back(std::move(pt));
      if (orbit.size() > 24) throw std::logic_error("orbit exceeds 24 points");
    }
  }
  return orbit;
}

std::vector<std::pair<Scalar, Scalar>> orbit_formula_list(const Scalar& a, const Scalar& b,
                                                          OrbitFormula variant) {
  const FieldSpec& f = a.field();
  const Scalar w = f.theta();
  const std::array<Scalar, 3> pw{f.one(), w, w * w};
  std::vector<std::pair<Scalar, Scalar>> out;
  for (std::size_t j = 0; j < 3; ++j) out.emplace_back(pw[j] * a, pw[j] * b);
  for (std::size_t j = 0; j < 3; ++j) out.emplace_back(pw[j] * b, pw[j] * a);
  std::array<std::size_t, 3> perm{0, 1, 2};
  for (std::size_t n = 0; n < 3; ++n) {
    const Scalar den = a + b + pw[n];
    if (den.is_zero()) throw Error(ErrorKind::DegenerateDenominator, "a + b + w^n = 0");
    do {
      const auto [j, k, m] = perm;
      const Scalar& c = pw[variant == OrbitFormula::Listed ? m : (m + n) % 3];
      out.emplace_back((pw[j] * a + pw[k] * b + c) / den, (pw[k] * a + pw[j] * b + c) / den);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

GroupInvariants group_invariants() {
  const FieldSpec f = FieldSpec::rationals_with_theta();
  const Scalar w = f.theta(), w2 = w * w, one = f.one();
  Matrix g1(f, 3, 3), g2(f, 3, 3);
  g1(0, 0) = w;  g1(1, 1) = w;  g1(2, 2) = one;
  g2(0, 0) = w;  g2(0, 1) = w2; g2(0, 2) = one;
  g2(1, 0) = w2; g2(1, 1) = w;  g2(1, 2) = one;
  g2(2, 0) = one; g2(2, 1) = one; g2(2, 2) = one;
  const std::array<Matrix, 2> gens{g1, g2};

  // Two probes: a clash on either means the probe is not generic enough.
  const std::array<std::pair<Scalar, Scalar>, 2> probes{
      std::pair{f.from_int(2) / f.from_int(7), f.from_int(5) / f.from_int(11)},
      std::pair{f.from_int(-3) / f.from_int(13), f.from_int(17) / f.from_int(4)}};

  std::vector<Matrix> elements{Matrix::identity(f, 3)};
  std::unordered_map<std::string, std::size_t> index{{matrix_key(elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto& g : gens) {
      Matrix m = normalized(g * elements[head]);
      if (index.emplace(matrix_key(m), elements.size()).second) elements.push_back(std::move(m));
      if (elements.size() > 1000) throw std::logic_error("group closure does not terminate");
    }

  for (const auto& [pa, pb] : probes) {
    std::unordered_map<std::string, std::size_t> images;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (!images.emplace(probe_key(elements[i], pa, pb), i).second)
        throw Error(ErrorKind::ProbeCollision, "two group elements agree on a probe point");
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = index.at(matrix_key(normalized(elements[i] * elements[j])));
  return invariants_from_table(table, 0);
}

GroupInvariants sl2_f3_invariants() {
  using M2 = std::array<int, 4>;
  std::vector<M2> elements;
  for (int code = 0; code < 81; ++code) {
    const M2 m{code % 3, code / 3 % 3, code / 9 % 3, code / 27 % 3};
    if (((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1) elements.push_back(m);
  }
  auto mul = [](const M2& x, const M2& y) {
    return M2{(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
              (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
  };
  const std::size_t n = elements.size();
  std::size_t identity = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (elements[i] == M2{1, 0, 0, 1}) identity = i;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = static_cast<std::size_t>(
          std::find(elements.begin(), elements.end(), mul(elements[i], elements[j])) -
          elements.begin());
  return invariants_from_table(table, identity);
}

IsoDecision are_isomorphic(const ParamTriple& t1, const ParamTriple& t2) {
  if (!(t1.field() == t2.field()))
    throw Error(ErrorKind::MixedFields, "triples over different fields");
  const SklyaninClass c1 = classify(t1);
  const SklyaninClass c2 = classify(t2);
  IsoDecision out;
  out.reason.push_back("first: " + to_string(c1.tag));
  out.reason.push_back("second: " + to_string(c2.tag));
  const auto degenerate = [](SklyaninTag t) {
    return t == SklyaninTag::FreeAlgebra || t == SklyaninTag::MonoXY || t == SklyaninTag::MonoXX;
  };
  const LinearSub back = c2.witness.inverse();

  if (degenerate(c1.tag) || degenerate(c2.tag)) {
    out.isomorphic = c1.tag == c2.tag;
    out.reason.push_back(out.isomorphic ? "same degenerate class"
                                        : "different classes, one or both degenerate");
    if (out.isomorphic) out.witness = back.after(c1.witness);
  } else if (c1.tag != c2.tag) {
    out.reason.push_back("M2 and M1 algebras are never isomorphic");
  } else if (c1.tag == SklyaninTag::QuantumPoly) {
    const Scalar& al = *c1.alpha;
    const Scalar& be = *c2.alpha;
    if (al == be) {
      out.isomorphic = true;
      out.reason.push_back("equal alpha");
      out.witness = back.after(c1.witness);
    } else if ((al * be).is_one()) {
      out.isomorphic = true;
      out.reason.push_back("alpha * beta = 1, swap x and y");
      out.witness = back.after(swap_xy(t1.field()).after(c1.witness));
    } else {
      out.reason.push_back("alpha != beta and alpha * beta != 1");
    }
  } else {
    const auto orbit = iso_group_orbit(*c1.a, *c1.b);
    out.reason.push_back("orbit of (" + c1.a->to_string() + ", " + c1.b->to_string() +
                         ") has " + std::to_string(orbit.size()) + " points");
    for (const auto& pt : orbit)
      if (pt.a == *c2.a && pt.b == *c2.b) {
        out.isomorphic = true;
        out.witness = back.after(pt.sub.after(c1.witness));
        break;
      }
    out.reason.push_back(out.isomorphic ? "second pair lies in the orbit"
                                        : "second pair is not in the orbit");
  }
  if (out.witness) require_transport(*out.witness, t1, t2, "are_isomorphic");
  return out;
}

std::size_t one_dim_representation_count(const ParamTriple& t) {
  if (t.field().kind() != FieldKind::PrimeField)
    throw Error(ErrorKind::InvalidArgument, "brute force needs a prime field");
  const std::uint64_t p = t.field().characteristic();
  const std::uint64_t s = (t.p + t.q).residue();
  const std::uint64_t r = t.r.residue();
  std::size_t count = 0;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        if ((s * a % p * b + r * c % p * c) % p == 0 &&
            (s * b % p * c + r * a % p * a) % p == 0 &&
            (s * a % p * c + r * b % p * b) % p == 0)
          ++count;
  return count;
}

}  // namespace ncalg
