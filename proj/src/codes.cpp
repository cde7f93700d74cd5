#include "liftenum/codes.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "liftenum/error.hpp"

namespace liftenum {

Integer CodeMatrix::size() const {
  Integer s;
  mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(ring.q()), static_cast<unsigned long>(rank()));
  return s;
}

int Codeword::hamming_weight() const noexcept {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](Residue r) { return r != 0; }));
}

bool Codeword::reduction_is_nonzero() const noexcept {
  return std::any_of(entries.begin(), entries.end(), [&](Residue r) { return r % ring.p() != 0; });
}

Composition composition(const Codeword& c) {
  Composition out;
  out.counts.assign(c.ring.m(), 0);
  for (Residue r : c.entries) {
    const int v = c.ring.valuation(r);
    if (v == c.ring.m()) {
      ++out.zeros;
    } else {
      ++out.counts[v];
    }
  }
  return out;
}

// --- Families --------------------------------------------------------------

Residue LiftedCodeFamily::extension_coefficient(int m) const {
  if (m < 1 || m > precision_) {
    throw Error(ErrorCode::InvalidModulus, "exponent " + std::to_string(m) + " outside the supported tower");
  }
  return ModulusContext(p_, m).reduce(extension_);
}

RingPolynomial LiftedCodeFamily::generator_polynomial(int m) const {
  if (m < 1 || m > precision_) {
    throw Error(ErrorCode::InvalidModulus, "exponent " + std::to_string(m) + " outside the supported tower");
  }
  const ModulusContext ring(p_, m);
  return hensel_lift(RingPolynomial::x_pow_minus_one(ring, cyclic_length_), generator_, cofactor_, m).g;
}

namespace {

// Gram matrix of the cyclic part and the row sums, both over Z_{p^K}.
struct CyclicGram {
  ResidueMatrix gram;
  std::vector<Residue> row_sums;
};

CyclicGram cyclic_gram(const RingPolynomial& g, int cyclic_length) {
  const ModulusContext& ring = g.ring();
  const int k = cyclic_length - g.degree();
  ResidueMatrix rows = ResidueMatrix::Zero(k, cyclic_length);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= g.degree(); ++j) rows(i, i + j) = g.coeff(j);
  }
  CyclicGram out{ResidueMatrix::Zero(k, k), std::vector<Residue>(k, 0)};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < cyclic_length; ++j) out.row_sums[i] = ring.add(out.row_sums[i], rows(i, j));
    for (int l = 0; l < k; ++l) {
      Residue acc = 0;
      for (int j = 0; j < cyclic_length; ++j) acc = ring.add(acc, ring.mul(rows(i, j), rows(l, j)));
      out.gram(i, l) = acc;
    }
  }
  return out;
}

bool extension_makes_self_orthogonal(const CyclicGram& cg, Residue e, const ModulusContext& ring) {
  const Residue e2 = ring.mul(e, e);
  const auto k = static_cast<int>(cg.row_sums.size());
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      const Residue v = ring.add(ring.reduce(cg.gram(i, l)),
                                 ring.mul(e2, ring.mul(ring.reduce(cg.row_sums[i]), ring.reduce(cg.row_sums[l]))));
      if (v != 0) return false;
    }
  }
  return true;
}

// Digit-by-digit search for e in Z_{p^K} making every level self-orthogonal.
bool search_extension(const CyclicGram& cg, int p, int level, int precision, Residue e, Residue pk,
                      Residue& found) {
  if (level > precision) {
    found = e;
    return true;
  }
  const ModulusContext ring(p, level);
  std::vector<Residue> digits;
  if (level == 1) {
    digits.push_back(p - 1);
    for (int d = 1; d < p - 1; ++d) digits.push_back(d);
  } else {
    for (int d = 0; d < p; ++d) digits.push_back(d);
  }
  for (Residue d : digits) {
    const Residue cand = e + d * pk;
    if (extension_makes_self_orthogonal(cg, cand, ring) &&
        search_extension(cg, p, level + 1, precision, cand, pk * p, found)) {
      return true;
    }
  }
  return false;
}

}  // namespace

LiftedCodeFamily build_family(const CustomFamilySpec& spec) {
  const auto factors = factor_xn_minus_1(spec.p, spec.cyclic_length);
  const ModulusContext field(spec.p, 1);
  if (spec.generator_factors.empty()) throw Error(ErrorCode::PreconditionViolated, "no generator factor selected");
  RingPolynomial gen = RingPolynomial::monomial(field, 0);
  std::vector<bool> used(factors.size(), false);
  for (int idx : spec.generator_factors) {
    if (idx < 0 || idx >= static_cast<int>(factors.size()) || used[idx]) {
      throw Error(ErrorCode::PreconditionViolated, "bad generator factor index " + std::to_string(idx));
    }
    used[idx] = true;
    gen = gen * factors[idx];
  }
  RingPolynomial cof = RingPolynomial::monomial(field, 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!used[i]) cof = cof * factors[i];
  }

  LiftedCodeFamily fam;
  fam.name_ = spec.name;
  fam.p_ = spec.p;
  fam.cyclic_length_ = spec.cyclic_length;
  fam.generator_ = gen;
  fam.cofactor_ = cof;
  fam.precision_ = ModulusContext::max_tower_exponent(spec.p);
  fam.self_dual_ = spec.self_dual;
  const int n = spec.cyclic_length + 1;
  if (spec.self_dual && 2 * fam.rank() != n) {
    throw Error(ErrorCode::SelfDualityFailed, "rank " + std::to_string(fam.rank()) + " is not half the length");
  }

  const ModulusContext top(spec.p, fam.precision_);
  if (spec.extension) {
    fam.extension_ = top.reduce(*spec.extension);
    if (spec.self_dual) {
      const auto cg = cyclic_gram(fam.generator_polynomial(fam.precision_), spec.cyclic_length);
      for (int m = 1; m <= fam.precision_; ++m) {
        if (!extension_makes_self_orthogonal(cg, fam.extension_, ModulusContext(spec.p, m))) {
          // Keep only the levels that work.
          fam.precision_ = m - 1;
          break;
        }
      }
      if (fam.precision_ < 1) throw Error(ErrorCode::SelfDualityFailed, "given extension is not self-dual mod p");
    }
  } else if (spec.self_dual) {
    const auto cg = cyclic_gram(fam.generator_polynomial(fam.precision_), spec.cyclic_length);
    Residue found = 0;
    if (!search_extension(cg, spec.p, 1, fam.precision_, 0, 1, found)) {
      throw Error(ErrorCode::SelfDualityFailed, "no extension coefficient gives G*G^T = 0 for " + spec.name);
    }
    fam.extension_ = found;
  } else {
    fam.extension_ = top.reduce(-1);
  }
  return fam;
}

LiftedCodeFamily build_family(const std::string& name) {
  CustomFamilySpec spec;
  spec.name = name;
  if (name == "qr24-2") {
    spec.p = 2;
    spec.cyclic_length = 23;
  } else if (name == "qr24-3") {
    spec.p = 3;
    spec.cyclic_length = 23;
  } else if (name == "octacode") {
    spec.p = 2;
    spec.cyclic_length = 7;
  } else {
    throw Error(ErrorCode::UnknownTable, "unknown family '" + name + "'");
  }
  // The first factor of degree (N-1)/2 in canonical order.
  const auto factors = factor_xn_minus_1(spec.p, spec.cyclic_length);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() == (spec.cyclic_length - 1) / 2) {
      spec.generator_factors = {static_cast<int>(i)};
      break;
    }
  }
  return build_family(spec);
}

CodeMatrix generator_matrix(const LiftedCodeFamily& family, int m) {
  const RingPolynomial g = family.generator_polynomial(m);
  const ModulusContext& ring = g.ring();
  const int k = family.rank();
  const int big_n = family.cyclic_length();
  const Residue e = family.extension_coefficient(m);
  CodeMatrix out{ring, ResidueMatrix::Zero(k, big_n + 1)};
  for (int i = 0; i < k; ++i) {
    Residue sum = 0;
    for (int j = 0; j <= g.degree(); ++j) {
      out.rows(i, i + j) = g.coeff(j);
      sum = ring.add(sum, g.coeff(j));
    }
    out.rows(i, big_n) = ring.mul(e, sum);
  }
  return out;
}

CodeMatrix reduce(const CodeMatrix& g, int m) {
  const ModulusContext ring = g.ring.with_exponent(m);
  if (m > g.ring.m()) throw Error(ErrorCode::InvalidModulus, "cannot reduce to a larger exponent");
  CodeMatrix out{ring, g.rows};
  out.rows = out.rows.unaryExpr([&](Residue r) { return ring.reduce(r); });
  return out;
}

ResidueMatrix gram(const CodeMatrix& a, const CodeMatrix& b) {
  if (!(a.ring == b.ring) || a.length() != b.length()) throw Error(ErrorCode::LayoutMismatch, "gram: shape mismatch");
  ResidueMatrix out(a.rank(), b.rank());
  for (int i = 0; i < a.rank(); ++i) {
    for (int l = 0; l < b.rank(); ++l) {
      Residue acc = 0;
      for (int j = 0; j < a.length(); ++j) acc = a.ring.add(acc, a.ring.mul(a.rows(i, j), b.rows(l, j)));
      out(i, l) = acc;
    }
  }
  return out;
}

StandardForm standard_form(const CodeMatrix& g) {
  const ModulusContext& ring = g.ring;
  const int k = g.rank();
  const int n = g.length();
  ResidueMatrix m = g.rows;
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  for (int r = 0; r < k; ++r) {
    int prow = -1, pcol = -1;
    for (int c = r; c < n && prow < 0; ++c) {
      for (int i = r; i < k; ++i) {
        if (ring.is_unit(m(i, c))) {
          prow = i;
          pcol = c;
          break;
        }
      }
    }
    if (prow < 0) throw Error(ErrorCode::NotFreeCode, "no unit pivot available in row " + std::to_string(r));
    m.row(r).swap(m.row(prow));
    m.col(r).swap(m.col(pcol));
    std::swap(order[r], order[pcol]);
    const Residue inv = ring.inverse(m(r, r));
    m.row(r) = m.row(r).unaryExpr([&](Residue v) { return ring.mul(v, inv); });
    for (int i = 0; i < k; ++i) {
      if (i == r || m(i, r) == 0) continue;
      const Residue f = m(i, r);
      for (int j = 0; j < n; ++j) m(i, j) = ring.sub(m(i, j), ring.mul(f, m(r, j)));
    }
  }
  return {CodeMatrix{ring, std::move(m)}, std::move(order)};
}

CodeMatrix dual_matrix(const CodeMatrix& g) {
  const StandardForm sf = standard_form(g);
  const ModulusContext& ring = g.ring;
  const int k = g.rank();
  const int n = g.length();
  ResidueMatrix h = ResidueMatrix::Zero(n - k, n);
  for (int i = 0; i < n - k; ++i) {
    for (int j = 0; j < k; ++j) h(i, sf.column_order[j]) = ring.neg(sf.matrix.rows(j, k + i));
    h(i, sf.column_order[k + i]) = 1;
  }
  return {ring, std::move(h)};
}

void require_within_budget(const CodeMatrix& g, std::uint64_t budget) {
  const Integer size = g.size();
  if (size > Integer(std::to_string(budget))) {
    throw BudgetExceeded(size.get_str(), "enumeration needs " + size.get_str() + " words, budget is " +
                                             std::to_string(budget));
  }
}

namespace {

// Packs a composition into 6-bit fields: slot v (0..m, m = zeros).
bool packable(const ModulusContext& ring, int n) { return (ring.m() + 1) * 6 <= 64 && n < 64; }

Composition unpack(std::uint64_t key, int m) {
  Composition c;
  c.counts.resize(m);
  for (int v = 0; v < m; ++v) c.counts[v] = static_cast<int>((key >> (6 * v)) & 63);
  c.zeros = static_cast<int>((key >> (6 * m)) & 63);
  return c;
}

void enumerate_partition(const CodeMatrix& g, int part, int parts, std::unordered_map<std::uint64_t, std::uint64_t>& hist) {
  const ModulusContext& ring = g.ring;
  const int k = g.rank();
  const int n = g.length();
  const Residue q = ring.q();
  // Per-residue field increment.
  std::vector<std::uint64_t> inc(static_cast<std::size_t>(q));
  for (Residue r = 0; r < q; ++r) inc[r] = std::uint64_t{1} << (6 * ring.valuation(r));

  // The top message digit is fixed per partition; the remaining k-1 digits
  // run in odometer order.
  const int low = k - 1;
  std::vector<Residue> word(n, 0);
  for (Residue top = part; top < q; top += parts) {
    for (int j = 0; j < n; ++j) word[j] = ring.mul(top, g.rows(low, j));
    std::vector<Residue> digits(std::max(low, 0), 0);
    while (true) {
      std::uint64_t key = 0;
      for (int j = 0; j < n; ++j) key += inc[word[j]];
      ++hist[key];
      int d = 0;
      for (; d < low; ++d) {
        const auto row = g.rows.row(d);
        for (int j = 0; j < n; ++j) {
          Residue v = word[j] + row(j);
          word[j] = v >= q ? v - q : v;
        }
        if (++digits[d] < q) break;
        digits[d] = 0;
      }
      if (d == low) break;
    }
  }
}

}  // namespace

CompositionCounts enumerate_compositions(const CodeMatrix& g, std::uint64_t budget, int threads) {
  require_within_budget(g, budget);
  const ModulusContext& ring = g.ring;
  const int m = ring.m();
  CompositionCounts out;
  if (g.rank() == 0) {
    Composition zero;
    zero.counts.assign(m, 0);
    zero.zeros = g.length();
    out[zero] = 1;
    return out;
  }
  if (!packable(ring, g.length())) {
    for_each_codeword(g, [&](const std::vector<Residue>& w) { ++out[composition(Codeword{ring, w})]; });
    return out;
  }
  threads = std::max(1, std::min<int>(threads, static_cast<int>(ring.q())));
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> hists(threads);
  if (threads == 1) {
    enumerate_partition(g, 0, 1, hists[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back([&, t] { enumerate_partition(g, t, threads, hists[t]); });
    for (auto& th : pool) th.join();
  }
  for (const auto& h : hists) {
    for (const auto& [key, count] : h) out[unpack(key, m)] += count;
  }
  return out;
}

namespace {

struct KernelGenerators {
  std::vector<std::vector<Residue>> rows;  // message-space vectors
  std::vector<Residue> orders;
};

// Left kernel {x : x*M = 0} of a k x c matrix over Z_{p^m}, via diagonal
// reduction with tracked row operations.
KernelGenerators left_kernel(const ResidueMatrix& m_in, const ModulusContext& ring) {
  const int k = static_cast<int>(m_in.rows());
  const int c = static_cast<int>(m_in.cols());
  ResidueMatrix m = m_in;
  ResidueMatrix u = ResidueMatrix::Identity(k, k);
  std::vector<int> vals;
  int t = 0;
  for (; t < std::min(k, c); ++t) {
    int best = ring.m(), bi = -1, bj = -1;
    for (int i = t; i < k; ++i) {
      for (int j = t; j < c; ++j) {
        const int v = ring.valuation(m(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    m.row(t).swap(m.row(bi));
    u.row(t).swap(u.row(bi));
    m.col(t).swap(m.col(bj));
    const Residue pa = ring.power_of_p(best);
    const Residue unit = ring.inverse(m(t, t) / pa);
    m.row(t) = m.row(t).unaryExpr([&](Residue x) { return ring.mul(x, unit); });
    u.row(t) = u.row(t).unaryExpr([&](Residue x) { return ring.mul(x, unit); });
    for (int i = t + 1; i < k; ++i) {
      if (m(i, t) == 0) continue;
      const Residue f = m(i, t) / pa;
      for (int j = 0; j < c; ++j) m(i, j) = ring.sub(m(i, j), ring.mul(f, m(t, j)));
      for (int j = 0; j < k; ++j) u(i, j) = ring.sub(u(i, j), ring.mul(f, u(t, j)));
    }
    // Column operations clear the rest of row t without touching u.
    for (int j = t + 1; j < c; ++j) m(t, j) = 0;
    vals.push_back(best);
  }
  KernelGenerators out;
  for (int i = 0; i < k; ++i) {
    const int a = i < t ? vals[i] : ring.m();
    if (a == 0) continue;
    const Residue scale = ring.power_of_p(ring.m() - a);
    std::vector<Residue> row(k);
    for (int j = 0; j < k; ++j) row[j] = ring.mul(u(i, j), scale);
    out.rows.push_back(std::move(row));
    Residue order = 1;
    for (int e = 0; e < a; ++e) order *= ring.p();
    out.orders.push_back(order);
  }
  return out;
}

}  // namespace

std::vector<Codeword> shortened_words(const CodeMatrix& g, const std::vector<int>& allowed_support,
                                      std::uint64_t budget) {
  const ModulusContext& ring = g.ring;
  const int k = g.rank();
  const int n = g.length();
  std::vector<bool> allowed(n, false);
  for (int j : allowed_support) {
    if (j < 0 || j >= n) throw Error(ErrorCode::PreconditionViolated, "support position out of range");
    allowed[j] = true;
  }
  std::vector<int> forced;
  for (int j = 0; j < n; ++j) {
    if (!allowed[j]) forced.push_back(j);
  }
  ResidueMatrix sub(k, static_cast<int>(forced.size()));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < static_cast<int>(forced.size()); ++c) sub(i, c) = g.rows(i, forced[c]);
  }
  const KernelGenerators ker = left_kernel(sub, ring);

  Integer total = 1;
  for (Residue o : ker.orders) total *= static_cast<unsigned long>(o);
  if (total > Integer(std::to_string(budget))) {
    throw BudgetExceeded(total.get_str(), "shortened code has " + total.get_str() + " words");
  }
  // Codeword images of the kernel generators.
  std::vector<std::vector<Residue>> gens;
  for (const auto& msg : ker.rows) {
    std::vector<Residue> w(n, 0);
    for (int i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      for (int j = 0; j < n; ++j) w[j] = ring.add(w[j], ring.mul(msg[i], g.rows(i, j)));
    }
    gens.push_back(std::move(w));
  }
  std::vector<Codeword> out;
  out.reserve(total.get_ui());
  std::vector<Residue> word(n, 0);
  std::vector<Residue> digits(gens.size(), 0);
  while (true) {
    out.push_back(Codeword{ring, word});
    std::size_t d = 0;
    for (; d < gens.size(); ++d) {
      for (int j = 0; j < n; ++j) word[j] = ring.add(word[j], gens[d][j]);
      if (++digits[d] < ker.orders[d]) break;
      digits[d] = 0;
    }
    if (d == gens.size()) break;
  }
  return out;
}

int min_weight_nonzero_reduction(const CodeMatrix& g, std::uint64_t budget) {
  require_within_budget(g, budget);
  const int p = g.ring.p();
  int best = -1;
  for_each_codeword(g, [&](const std::vector<Residue>& w) {
    bool unit = false;
    int wt = 0;
    for (Residue r : w) {
      wt += r != 0;
      unit = unit || (r % p != 0);
    }
    if (unit && (best < 0 || wt < best)) best = wt;
  });
  return best;
}

}  // namespace liftenum
