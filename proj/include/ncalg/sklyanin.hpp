#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/presentation.hpp"

namespace ncalg {

/// Parameters of Q^{p,q,r}: relations pyz+qzy+rxx, pzx+qxz+ryy, pxy+qyx+rzz.
struct ParamTriple {
  Scalar p;
  Scalar q;
  Scalar r;

  const FieldSpec& field() const { return p.field(); }
  ParamTriple scaled(const Scalar& c) const { return {p * c, q * c, r * c}; }
  friend bool operator==(const ParamTriple&, const ParamTriple&) = default;
};

/// Builds a triple from small integers.
ParamTriple make_triple(const FieldSpec& field, long p, long q, long r);

std::vector<NcPoly> sklyanin_relations(const ParamTriple& t);
Presentation sklyanin_presentation(const ParamTriple& t);

/// span(apply_sub(relations(from), s)) == span(relations(to)).
bool transports(const LinearSub& s, const ParamTriple& from, const ParamTriple& to);

bool is_degenerate(const ParamTriple& t);
bool in_m0(const ParamTriple& t);
bool in_m1(const ParamTriple& t);
bool in_m2(const ParamTriple& t);
/// (a, b) != (0, 0), (a+b)^3 + 1 != 0, (a^3 - 1, b^3 - 1) != (0, 0).
bool in_m(const Scalar& a, const Scalar& b);

enum class SklyaninTag { FreeAlgebra, MonoXY, MonoXX, QuantumPoly, GenericM1 };
std::string to_string(SklyaninTag tag);

struct SklyaninClass {
  SklyaninTag tag = SklyaninTag::FreeAlgebra;
  std::optional<Scalar> alpha;  // QuantumPoly
  std::optional<Scalar> a;      // GenericM1
  std::optional<Scalar> b;      // GenericM1
  /// (0,0,0), (1,0,0), (0,0,1), (1,-alpha,0) or (a,b,1).
  ParamTriple representative;
  /// Transports the input relations onto those of the representative.
  LinearSub witness;
  std::vector<std::string> trace;
};

/// Throws NoCubeRoot when the field lacks w.
SklyaninClass classify(const ParamTriple& t);

struct TripleSub {
  ParamTriple triple;
  LinearSub sub;
};

/// (p, q, r) -> (p, q, w r) via z -> w^2 z.
TripleSub root1_sub(const ParamTriple& t);
/// (p, q, r) -> (c^2 p + c q + r, c p + c^2 q + r, p + q + r) via
/// x -> x+y+z, y -> x+c y+c^2 z, z -> x+c^2 y+c z, where c is the given
/// primitive cube root (default w).
TripleSub root2_sub(const ParamTriple& t, std::optional<Scalar> root = std::nullopt);

struct ChainResult {
  std::vector<LinearSub> subs;  // the four steps in application order
  LinearSub composite;
  Scalar a_prime;
  Scalar b_prime;
  Scalar alpha;
  Scalar gamma;
  Scalar alpha_formula;
  Scalar gamma_formula;
  std::vector<NcPoly> transported;  // reduced echelon basis
  std::vector<Word> leading_words;
  bool g_stage_matches = false;   // after two steps: span of dG_{a',b'}
  bool matches_chain_relations = false;
  bool matches_chain_potential = false;

  bool alpha_matches_formula() const { return alpha == alpha_formula; }
  bool gamma_matches_formula() const { return gamma == gamma_formula; }
};

/// Runs the four linear substitutions on Q^{a,b,1}. Throws
/// PreconditionViolated unless (a,b,1) is in M1 with a+b != 0, a^3 != b^3.
ChainResult substitution_chain(const Scalar& a, const Scalar& b);

/// Normalizes an M1 triple to (a, b, 1), applying root2_sub first when
/// p + q = 0. Returns the pair and the substitution used.
struct ChainInput {
  Scalar a;
  Scalar b;
  LinearSub sub;  // transports the triple onto (a, b, 1)
};
ChainInput prepare_chain_input(const ParamTriple& t);

enum class PiOutcome { Continue, Sigma, RankAnomaly };
std::string to_string(PiOutcome outcome);

struct PiState {
  std::size_t k;
  Scalar a_k;
  Scalar b_k;
  PiOutcome outcome;  // result of the step from k to k+1
};

/// States k = 0..kmax, stopping early on Sigma or RankAnomaly.
std::vector<PiState> pik_recursion(const Scalar& alpha, const Scalar& gamma,
                                   std::size_t kmax);

struct NormalCase {
  bool finite_case = false;  // false: Case 1; true: Case 2 with index k
  std::size_t k = 0;
  static NormalCase case1() { return {}; }
  static NormalCase case2(std::size_t k) { return {true, k}; }
};

/// Degree-d normal words predicted for the chain algebra, descending.
std::vector<Word> expected_normal_words(NormalCase c, std::size_t d);

struct OrbitPoint {
  Scalar a;
  Scalar b;
  LinearSub sub;  // transports Q^{a0,b0,1} onto Q^{a,b,1}
};

/// Closure of (a, b) under (a,b) -> (w a, w b) and
/// (a,b) -> ((w a + w^2 b + 1)/(a+b+1), (w^2 a + w b + 1)/(a+b+1)).
/// Throws PreconditionViolated outside M, DegenerateDenominator if a
/// denominator vanishes.
std::vector<OrbitPoint> iso_group_orbit(const Scalar& a, const Scalar& b);

/// Variants of the explicit orbit list. Listed uses the constant w^m in
/// ((w^j a + w^k b + w^m) / (a+b+w^n), ...); Shifted uses w^(m+n), which is
/// what composing the two generators produces.
enum class OrbitFormula { Listed, Shifted };

/// The 24 pairs of the explicit orbit list, possibly with repeats.
std::vector<std::pair<Scalar, Scalar>> orbit_formula_list(
    const Scalar& a, const Scalar& b, OrbitFormula variant = OrbitFormula::Listed);

struct GroupInvariants {
  std::size_t order = 0;
  std::size_t center_order = 0;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::size_t max_element_order() const {
    return element_orders.empty() ? 0 : element_orders.rbegin()->first;
  }
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Invariants of the group generated by the two orbit maps, over Q(w).
GroupInvariants group_invariants();
GroupInvariants sl2_f3_invariants();

struct IsoDecision {
  bool isomorphic = false;
  std::vector<std::string> reason;
  std::optional<LinearSub> witness;  // transports T1 onto T2
};

IsoDecision are_isomorphic(const ParamTriple& t1, const ParamTriple& t2);

/// Number of (a, b, c) in GF(p)^3 with (p+q)ab = -rc^2, (p+q)bc = -ra^2,
/// (p+q)ac = -rb^2. Prime fields only.
std::size_t one_dim_representation_count(const ParamTriple& t);

}  // namespace ncalg
