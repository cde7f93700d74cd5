#pragma once

// Obtaining partial weight enumerators without the embedded tables:
// exhaustive derivation at small moduli, disjoint-support candidate search,
// and solving for unknown coefficients against linear constraints.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "liftenum/codes.hpp"
#include "liftenum/enumpoly.hpp"
#include "liftenum/transforms.hpp"

namespace liftenum {

/// Monomials x^{wt(u)} y^{wt(v)} z^{n-|u|-|v|} realized by pairs u in C_i,
/// v in the dual of C_j, with disjoint supports and nonzero reductions mod p.
struct CandidateSupport {
  VarLayout layout;
  int n = 0;
  std::set<Monomial> patterns;

  bool empty() const noexcept { return patterns.empty(); }
  bool contains(const Monomial& m) const { return patterns.count(m) != 0; }
};

/// D_{i,j} from the exhaustive enumerator A_{i+j,0}, walked down j times with
/// down_A. Throws BudgetExceeded when p^{(i+j)k} > budget.
Enumerator derive_D_from_bruteforce(const LiftedCodeFamily& family, int i, int j,
                                    std::uint64_t budget = kDefaultBudget, int threads = 1);

/// Exact candidate set for D_{i,j} (i, j >= 1). Enumerates the smaller of
/// C_i and the dual of C_j, groups its words by support, and solves for the
/// other side's words inside each support complement.
CandidateSupport disjoint_support_candidates(const LiftedCodeFamily& family, int i, int j,
                                             std::uint64_t budget = kDefaultBudget);

/// A linear condition on A_{i+j,0}, hence on the unknown seed coefficients.
struct LinearConstraint {
  enum class Kind { CoefficientEquals, ForbiddenMonomialClass };

  Kind kind = Kind::CoefficientEquals;
  Monomial target;
  Rational value = 0;
  std::function<bool(const Monomial&)> forbidden;
  std::string label;

  static LinearConstraint coefficient_equals(const Monomial& m, const Rational& v, std::string label);
  static LinearConstraint forbidden_class(std::function<bool(const Monomial&)> pred, std::string label);

  /// True when this constraint pins the coefficient of `m`.
  bool constrains(const Monomial& m) const;
};

/// Over Z_4: every monomial whose Euclidean weight n_0 + 4 n_1 is not
/// divisible by 8 has coefficient zero. UnsupportedAlphabet unless p=2, m=2.
std::vector<LinearConstraint> euclidean_type2_constraints(int p, int m);

/// Pins A_{s,0} to a known enumerator: every known coefficient, and zero on
/// every monomial the known enumerator lacks.
std::vector<LinearConstraint> match_constraints(const Enumerator& known);

/// Solves for D_{i,j} = sum_t c_t t over the candidate monomials t so that
/// A_{i+j,0}, computed by the pipeline from `known_lower` (diagonals below
/// i+j) and the unknown seed, meets every constraint. Exact over Q.
/// Throws Underdetermined or Inconsistent, and NotIntegral for a
/// non-integral solution.
Enumerator solve_unknown_coefficients(const LiftedCodeFamily& family, int i, int j, const CandidateSupport& support,
                                      const std::vector<LinearConstraint>& constraints, const DTable& known_lower);

}  // namespace liftenum
