#pragma once
// Executable exact checks.  Every check builds both sides of a commutative
// diagram (or scalar identity) from the library and compares them as exact
// matrices; a check passes iff the residual of every comparison is zero.

#include "pd/power.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pd {

enum class Status { pass, fail, skip };
const char* status_name(Status s);

using Params = std::vector<std::pair<std::string, std::string>>;
using Witnesses = std::vector<std::pair<std::string, Rat>>;

struct CheckResult {
  std::string id;
  Params params;
  Status status = Status::pass;
  Witnesses witnesses;
  std::string residual = "0";  // max |numerator| of LHS - RHS over all comparisons
  std::string reason;          // failing comparison, skip hypothesis, or a note on a pass
  double ms = 0;
};

// Accumulates the comparisons of one check.
class Probe {
 public:
  // Exact comparison of two morphisms (objects must agree too).
  void eq(const std::string& what, const Mor& lhs, const Mor& rhs);
  // Exact comparison of two scalars.
  void eq(const std::string& what, const Rat& lhs, const Rat& rhs);
  // A morphism that must be invertible; the residual is its rank deficiency.
  void invertible(const std::string& what, const Mor& m);
  void witness(const std::string& name, const Rat& value);
  void skip(const std::string& reason);
  // Informational text reported with a passing result.
  void note(const std::string& text);
  bool skipped() const { return skip_; }
  CheckResult finish(std::string id, Params params) const;

 private:
  void record(const std::string& what, const mpz_class& r);
  mpz_class worst_ = 0;
  bool mismatch_ = false;
  bool skip_ = false;
  std::string reason_;
  std::string note_;
  Witnesses witnesses_;
};

// c with m == c * base, if such a scalar exists (base must be nonzero).
std::optional<Rat> scalar_multiple(const Mor& m, const Mor& base);

// The object a check is run on.
struct Subject {
  Model model = Model::plain;
  std::size_t even = 0, odd = 0;
  Flavor flavor = Flavor::alt;
  bool conjugated = false;  // pairing replaced by a change of basis
  Obj v;
  Params params() const;
};
// conj_seed: when set, V carries a random even invertible pairing.
Subject make_subject(Model m, std::size_t even, std::size_t odd, Flavor f,
                     std::optional<std::uint64_t> conj_seed = std::nullopt);

// Runs body under a fresh Probe, timing it.  CapExceeded becomes a skip; any
// other exception becomes a failure carrying its message.
CheckResult run_check(const std::string& id, const Params& params,
                      const std::function<void(Probe&)>& body);

// ---- power-algebra checks -------------------------------------------------
CheckResult check_rank_formula(const Subject& s, std::size_t k);
CheckResult check_key_lemma(const Subject& s, std::size_t i, std::size_t g);
CheckResult check_key_steps(const Subject& s, std::size_t m);
CheckResult check_theorem(const Subject& s, std::size_t g, std::size_t i, int part);
CheckResult check_corollary_ct(const Subject& s, std::size_t g);
CheckResult check_p2(const Subject& s, std::size_t g, std::size_t i);
CheckResult check_formal_hypotheses(const Subject& s, std::size_t g, std::size_t i);
CheckResult check_fdp_corollaries(const Subject& s, std::size_t g, std::size_t i);
CheckResult check_antiderivation(const Subject& s, std::size_t j, std::size_t l);
CheckResult check_mixed_antiderivation(const Subject& s, std::size_t i, std::size_t j,
                                       std::size_t k, std::size_t l);
CheckResult check_algebra_adjunction(const Subject& s, std::size_t i, std::size_t j);
CheckResult check_algebra_composition(const Subject& s, std::size_t i, std::size_t j,
                                      std::size_t k);
CheckResult check_mixed_adjunction(const Subject& s, std::size_t i, std::size_t j,
                                   std::size_t k, std::size_t l);
CheckResult check_mixed_composition(const Subject& s, std::size_t i, std::size_t j,
                                    std::size_t k, std::size_t l, std::size_t m,
                                    std::size_t n);
CheckResult check_graded_algebra(const Subject& s, std::size_t i, std::size_t j, std::size_t k);
CheckResult check_iota_methods(const Subject& s, std::size_t i, std::size_t j);
CheckResult check_dual_pair(const Subject& s, std::size_t k);
CheckResult check_mixed_pinned(const Subject& s, std::size_t m);

// Theorem constants as functions of r = rank(V).
struct DualityConstants {
  Rat mu_sx, mu_xs;  // for (S, X, Y) = (A_i, A_{g-i}, A_g)
  Rat lambda;        // lambda_{S,X} = lambda_{X,S} = lambda_{S^v,X^v} = lambda_{X^v,S^v}
};
DualityConstants duality_constants(Flavor f, const Rat& r, std::size_t g, std::size_t i);

// ---- structural checks on seeded random objects and morphisms -------------
// Each family is one check id; `sample` selects the random instance.
const std::vector<std::string>& structural_families();
CheckResult check_structural(const std::string& family, Model m, std::uint64_t seed,
                             std::size_t sample);

// Negative control: an identity deliberately corrupted by a factor of 2.
CheckResult check_self_test();

}  // namespace pd
