#include "liftenum/discovery.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "liftenum/error.hpp"

namespace liftenum {

Enumerator derive_D_from_bruteforce(const LiftedCodeFamily& family, int i, int j, std::uint64_t budget,
                                    int threads) {
  if (i < 0 || j < 0) throw Error(ErrorCode::PreconditionViolated, "negative index");
  const int s = i + j;
  if (s == 0) return Enumerator::z_power(VarLayout{0, 0}, family.length());
  const auto ctx = TransformContext::for_family(family);
  Enumerator a = from_compositions(enumerate_compositions(generator_matrix(family, s), budget, threads),
                                   VarLayout{s, 0});
  for (int step = 0; step < j; ++step) a = down_A(a, ctx);
  return extract_partial(a, i, j);
}

namespace {

using Mask = std::uint64_t;

struct SideWords {
  // Distinct supports of words with nonzero reduction, with the
  // compositions seen on each support.
  std::unordered_map<Mask, std::vector<Composition>> by_support;
};

SideWords collect_side(const CodeMatrix& g, std::uint64_t budget) {
  require_within_budget(g, budget);
  SideWords out;
  const int p = g.ring.p();
  for_each_codeword(g, [&](const std::vector<Residue>& w) {
    Mask mask = 0;
    bool unit = false;
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] != 0) mask |= Mask{1} << c;
      unit = unit || (w[c] % p != 0);
    }
    if (!unit) return;
    auto& comps = out.by_support[mask];
    Composition comp = composition(Codeword{g.ring, w});
    if (std::find(comps.begin(), comps.end(), comp) == comps.end()) comps.push_back(std::move(comp));
  });
  return out;
}

}  // namespace

CandidateSupport disjoint_support_candidates(const LiftedCodeFamily& family, int i, int j, std::uint64_t budget) {
  if (i < 1 || j < 1) throw Error(ErrorCode::PreconditionViolated, "candidate search needs i, j >= 1");
  const int n = family.length();
  if (n > 64) throw Error(ErrorCode::UnsupportedLength, "support masks hold at most 64 positions");
  const CodeMatrix code = generator_matrix(family, i);
  const CodeMatrix dual = dual_matrix(generator_matrix(family, j));
  CandidateSupport out{VarLayout{i, j}, n, {}};

  // Enumerate the smaller side; solve for the other inside complements.
  const bool enumerate_code = code.size() <= dual.size();
  const CodeMatrix& listed = enumerate_code ? code : dual;
  const CodeMatrix& solved = enumerate_code ? dual : code;
  const SideWords side = collect_side(listed, budget);

  for (const auto& [mask, comps] : side.by_support) {
    std::vector<int> allowed;
    for (int c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) allowed.push_back(c);
    }
    std::vector<Composition> partners;
    for (const Codeword& w : shortened_words(solved, allowed, budget)) {
      if (!w.reduction_is_nonzero()) continue;
      Composition comp = composition(w);
      if (std::find(partners.begin(), partners.end(), comp) == partners.end()) partners.push_back(std::move(comp));
    }
    for (const auto& a : comps) {
      for (const auto& b : partners) {
        const Composition& u = enumerate_code ? a : b;
        const Composition& v = enumerate_code ? b : a;
        Monomial mono;
        mono[0] = static_cast<std::uint8_t>(n - u.support_size() - v.support_size());
        for (int t = 0; t < i; ++t) mono[out.layout.x_slot(t)] = static_cast<std::uint8_t>(u.counts[t]);
        for (int t = 0; t < j; ++t) mono[out.layout.y_slot(t)] = static_cast<std::uint8_t>(v.counts[t]);
        out.patterns.insert(mono);
      }
    }
  }
  return out;
}

LinearConstraint LinearConstraint::coefficient_equals(const Monomial& m, const Rational& v, std::string label) {
  LinearConstraint c;
  c.kind = Kind::CoefficientEquals;
  c.target = m;
  c.value = v;
  c.label = std::move(label);
  return c;
}

LinearConstraint LinearConstraint::forbidden_class(std::function<bool(const Monomial&)> pred, std::string label) {
  LinearConstraint c;
  c.kind = Kind::ForbiddenMonomialClass;
  c.forbidden = std::move(pred);
  c.label = std::move(label);
  return c;
}

bool LinearConstraint::constrains(const Monomial& m) const {
  return kind == Kind::CoefficientEquals ? m == target : forbidden(m);
}

std::vector<LinearConstraint> euclidean_type2_constraints(int p, int m) {
  if (p != 2 || m != 2) throw Error(ErrorCode::UnsupportedAlphabet, "Euclidean weights are defined here for Z_4 only");
  return {LinearConstraint::forbidden_class(
      [](const Monomial& mono) { return (mono[1] + 4 * mono[2]) % 8 != 0; },
      "Euclidean weight divisible by 8")};
}

std::vector<LinearConstraint> match_constraints(const Enumerator& known) {
  std::vector<LinearConstraint> out;
  for (const auto& [mono, c] : known.sorted_terms()) {
    out.push_back(LinearConstraint::coefficient_equals(mono, c, "known coefficient"));
  }
  out.push_back(LinearConstraint::forbidden_class([known](const Monomial& mono) { return known.coefficient(mono) == 0; },
                                                  "absent from known enumerator"));
  return out;
}

namespace {

struct LinearSystem {
  std::vector<std::vector<Rational>> rows;  // coefficients then right-hand side
  std::vector<std::string> labels;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<Rational>>& rows, int unknowns) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t pr = r;
    while (pr < rows.size() && sgn(rows[pr][c]) == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[r], rows[pr]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t t = 0; t < rows[i].size(); ++t) rows[i][t] -= f * rows[r][t];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Enumerator solve_unknown_coefficients(const LiftedCodeFamily& family, int i, int j, const CandidateSupport& support,
                                      const std::vector<LinearConstraint>& constraints, const DTable& known_lower) {
  const auto ctx = TransformContext::for_family(family);
  const int n = family.length();
  const VarLayout layout{i, j};
  if (i < 1 || !(support.layout == layout)) {
    throw Error(ErrorCode::PreconditionViolated, "solver needs i >= 1 and a candidate set for the same (i, j)");
  }
  const std::vector<Monomial> unknowns(support.patterns.begin(), support.patterns.end());
  if (unknowns.empty()) return Enumerator(layout, n);

  const int s = i + j;
  const auto lower = pipeline(known_lower, ctx, s - 1);
  const Enumerator& a_prev = lower.back();
  // A_{s,0} = fixed + sum_t c_t * basis[t].
  Enumerator fixed = shift_into_next(a_prev);
  const VarLayout below{s - 1, 0};
  Enumerator d_prev0 = s - 1 >= 1 ? a_prev - shift_into_next(lower[s - 2]) : Enumerator(below, n);
  if (j >= 1) fixed += boundary_up_D(d_prev0, Enumerator(VarLayout{s - 1, 1}, n), ctx);

  std::vector<Enumerator> basis;
  basis.reserve(unknowns.size());
  for (const auto& t : unknowns) {
    Enumerator d(layout, n);
    d.add_term(t, 1);
    if (j >= 1) {
      while (d.layout().y_count > 1) d = up_D(d, ctx);
      d = boundary_up_D(Enumerator(below, n), d, ctx);
    }
    basis.push_back(std::move(d));
  }

  // Every monomial that can carry a nonzero coefficient.
  std::set<Monomial> universe;
  for (const auto& [m, c] : fixed.terms()) universe.insert(m);
  for (const auto& b : basis) {
    for (const auto& [m, c] : b.terms()) universe.insert(m);
  }

  const int k = static_cast<int>(unknowns.size());
  LinearSystem sys;
  auto add_equation = [&](const Monomial& m, const Rational& value, const std::string& label) {
    std::vector<Rational> row(k + 1);
    for (int t = 0; t < k; ++t) row[t] = basis[t].coefficient(m);
    row[k] = value - fixed.coefficient(m);
    sys.rows.push_back(std::move(row));
    sys.labels.push_back(label);
  };
  for (const auto& con : constraints) {
    if (con.kind == LinearConstraint::Kind::CoefficientEquals) {
      add_equation(con.target, con.value, con.label);
    } else {
      for (const auto& m : universe) {
        if (con.forbidden(m)) add_equation(m, 0, con.label);
      }
    }
  }

  auto rows = sys.rows;
  const auto pivots = row_reduce(rows, k);
  std::vector<std::string> residuals;
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (sgn(rows[r][k]) != 0) residuals.push_back(rows[r][k].get_str());
  }
  if (!residuals.empty()) {
    std::ostringstream os;
    os << residuals.size() << " of " << sys.rows.size() << " constraint equations violated; residuals:";
    for (std::size_t t = 0; t < std::min<std::size_t>(residuals.size(), 8); ++t) os << ' ' << residuals[t];
    throw Error(ErrorCode::Inconsistent, os.str());
  }
  if (static_cast<int>(pivots.size()) < k) {
    throw Error(ErrorCode::Underdetermined, "rank deficit " + std::to_string(k - static_cast<int>(pivots.size())) +
                                                " over " + std::to_string(k) + " unknowns");
  }
  Enumerator out(layout, n);
  for (int t = 0; t < k; ++t) out.add_term(unknowns[pivots[t]], rows[t][k]);
  return assert_integral(out, "solved D_{" + std::to_string(i) + "," + std::to_string(j) + "}");
}

}  // namespace liftenum
