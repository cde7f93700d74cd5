#include "liftenum/ringpoly.hpp"

#include <algorithm>
#include <sstream>

#include "liftenum/error.hpp"

namespace liftenum {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModulusContext::ModulusContext(int p, int m) : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidModulus, "p=" + std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidModulus, "exponent must be positive");
  constexpr __int128 kLimit = static_cast<__int128>(1) << 62;
  __int128 q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q >= kLimit) {
      throw Error(ErrorCode::InvalidModulus,
                  std::to_string(p) + "^" + std::to_string(m) + " exceeds the 62-bit residue range");
    }
  }
  q_ = static_cast<Residue>(q);
}

Residue ModulusContext::inverse(Residue a) const {
  a = reduce(a);
  if (a % p_ == 0) throw Error(ErrorCode::DivisorNotMonicUnit, std::to_string(a) + " is not a unit");
  // Extended Euclid on (a, q).
  __int128 old_r = a, r = q_, old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    std::swap(old_r, r);
    r -= quot * old_r;
    std::swap(old_s, s);
    s -= quot * old_s;
  }
  return reduce(old_s);
}

int ModulusContext::valuation(Residue a) const noexcept {
  a = reduce(a);
  if (a == 0) return m_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Residue ModulusContext::power_of_p(int e) const noexcept {
  if (e >= m_) return 0;
  Residue r = 1;
  for (int i = 0; i < e; ++i) r *= p_;
  return r;
}

int ModulusContext::max_tower_exponent(int p) {
  int m = 0;
  std::int64_t q = 1;
  while (q * p < (std::int64_t{1} << 30)) {
    q *= p;
    ++m;
  }
  return m;
}

RingPolynomial::RingPolynomial(ModulusContext ring, std::vector<Residue> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = ring_.reduce(c);
  trim();
}

RingPolynomial RingPolynomial::from_integers(ModulusContext ring, const std::vector<std::int64_t>& coeffs) {
  return RingPolynomial(ring, std::vector<Residue>(coeffs.begin(), coeffs.end()));
}

RingPolynomial RingPolynomial::x_pow_minus_one(ModulusContext ring, int n) {
  std::vector<Residue> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return RingPolynomial(ring, std::move(c));
}

RingPolynomial RingPolynomial::monomial(ModulusContext ring, int degree, Residue coeff) {
  std::vector<Residue> c(static_cast<std::size_t>(degree) + 1, 0);
  c[degree] = coeff;
  return RingPolynomial(ring, std::move(c));
}

void RingPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RingPolynomial RingPolynomial::reduce_to(int m) const {
  if (m > ring_.m()) throw Error(ErrorCode::InvalidModulus, "cannot reduce to a larger exponent");
  return RingPolynomial(ring_.with_exponent(m), coeffs_);
}

RingPolynomial RingPolynomial::embed_in(ModulusContext ring) const {
  if (ring.p() != ring_.p()) throw Error(ErrorCode::InvalidModulus, "prime mismatch");
  return RingPolynomial(ring, coeffs_);
}

RingPolynomial RingPolynomial::scaled(Residue c) const {
  std::vector<Residue> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = ring_.mul(coeffs_[i], ring_.reduce(c));
  return RingPolynomial(ring_, std::move(out));
}

RingPolynomial RingPolynomial::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Residue> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return RingPolynomial(ring_, std::move(out));
}

std::string RingPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs_[i] != 1 || i == 0) os << coeffs_[i];
    if (i > 0) os << (coeffs_[i] != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

namespace {

void require_same_ring(const RingPolynomial& f, const RingPolynomial& g) {
  if (!(f.ring() == g.ring())) throw Error(ErrorCode::InvalidModulus, "operands live in different rings");
}

}  // namespace

RingPolynomial operator+(const RingPolynomial& f, const RingPolynomial& g) {
  require_same_ring(f, g);
  const auto& r = f.ring();
  std::vector<Residue> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
  return RingPolynomial(r, std::move(out));
}

RingPolynomial operator-(const RingPolynomial& f, const RingPolynomial& g) {
  require_same_ring(f, g);
  const auto& r = f.ring();
  std::vector<Residue> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.sub(f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
  return RingPolynomial(r, std::move(out));
}

RingPolynomial operator*(const RingPolynomial& f, const RingPolynomial& g) {
  require_same_ring(f, g);
  const auto& r = f.ring();
  if (f.is_zero() || g.is_zero()) return RingPolynomial(r);
  std::vector<Residue> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      out[i + j] = r.add(out[i + j], r.mul(f.coeffs()[i], g.coeffs()[j]));
    }
  }
  return RingPolynomial(r, std::move(out));
}

DivMod divmod(const RingPolynomial& f, const RingPolynomial& g) {
  require_same_ring(f, g);
  const auto& r = f.ring();
  if (g.is_zero() || !r.is_unit(g.leading())) {
    throw Error(ErrorCode::DivisorNotMonicUnit, "divisor leading coefficient is not a unit");
  }
  const Residue lead_inv = r.inverse(g.leading());
  std::vector<Residue> rem = f.coeffs();
  const int dg = g.degree();
  std::vector<Residue> quot(rem.size() > static_cast<std::size_t>(dg) ? rem.size() - dg : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
    const Residue c = r.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] = r.sub(rem[i - dg + j], r.mul(c, g.coeffs()[j]));
  }
  return {RingPolynomial(r, std::move(quot)), RingPolynomial(r, std::move(rem))};
}

Bezout xgcd_mod_p(const RingPolynomial& g, const RingPolynomial& h) {
  const auto& r = g.ring();
  if (r.m() != 1) throw Error(ErrorCode::ContextNotPrimeField, "xgcd requires coefficients in Z_p");
  require_same_ring(g, h);
  RingPolynomial old_r = g, cur_r = h;
  RingPolynomial old_a = RingPolynomial::monomial(r, 0), cur_a(r);
  RingPolynomial old_b(r), cur_b = RingPolynomial::monomial(r, 0);
  while (!cur_r.is_zero()) {
    auto [q, rem] = divmod(old_r, cur_r);
    old_r = std::exchange(cur_r, rem);
    old_a = std::exchange(cur_a, old_a - q * cur_a);
    old_b = std::exchange(cur_b, old_b - q * cur_b);
  }
  if (old_r.is_zero()) return {old_a, old_b, old_r};
  const Residue inv = r.inverse(old_r.leading());
  return {old_a.scaled(inv), old_b.scaled(inv), old_r.scaled(inv)};
}

namespace {

bool coefficient_order_less(const RingPolynomial& a, const RingPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::vector<RingPolynomial> factor_xn_minus_1(int p, int n, std::int64_t search_budget) {
  if (n < 1 || n % p == 0) {
    throw Error(ErrorCode::UnsupportedLength, "n=" + std::to_string(n) + " must be positive and prime to p");
  }
  const ModulusContext field(p, 1);
  RingPolynomial rest = RingPolynomial::x_pow_minus_one(field, n);
  std::vector<RingPolynomial> factors;
  // Trial division by monic candidates of increasing degree; the first
  // divisor found at each degree is irreducible because all smaller factors
  // were already removed.
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) {
      count *= p;
      if (count > search_budget) {
        throw Error(ErrorCode::UnsupportedLength,
                    "factor search over degree " + std::to_string(d) + " exceeds budget");
      }
    }
    for (std::int64_t idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
      std::vector<Residue> c(static_cast<std::size_t>(d) + 1);
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = v % p;
        v /= p;
      }
      c[d] = 1;
      RingPolynomial cand(field, std::move(c));
      auto [q, rem] = divmod(rest, cand);
      if (rem.is_zero()) {
        factors.push_back(cand);
        rest = q;
      }
    }
  }
  if (rest.degree() > 0) factors.push_back(rest);
  std::sort(factors.begin(), factors.end(), coefficient_order_less);
  return factors;
}

HenselPair hensel_lift(const RingPolynomial& f, const RingPolynomial& g1, const RingPolynomial& h1, int target_m) {
  const int p = g1.ring().p();
  if (g1.ring().m() != 1 || h1.ring().m() != 1) {
    throw Error(ErrorCode::ContextNotPrimeField, "Hensel seeds must be factors over Z_p");
  }
  if (f.ring().p() != p || f.ring().m() < target_m || !f.is_monic()) {
    throw Error(ErrorCode::PreconditionViolated, "f must be monic over Z_{p^M} with M >= target_m");
  }
  if (!(f.reduce_to(1) == g1 * h1)) throw Error(ErrorCode::PreconditionViolated, "f != g1*h1 (mod p)");
  if (!g1.is_monic()) throw Error(ErrorCode::PreconditionViolated, "g1 must be monic");
  const Bezout bz = xgcd_mod_p(g1, h1);
  if (bz.gcd.degree() != 0) throw Error(ErrorCode::NotCoprime, "factors share a common divisor mod p");
  if (target_m == 1) return {g1, h1};

  const ModulusContext target = f.ring().with_exponent(target_m);
  const RingPolynomial ft = f.reduce_to(target_m);
  RingPolynomial g = g1.embed_in(target);
  RingPolynomial h = h1.embed_in(target);
  const ModulusContext field = g1.ring();
  Residue pt = 1;
  for (int t = 1; t < target_m; ++t) {
    pt *= p;
    const RingPolynomial diff = ft - g * h;
    std::vector<Residue> e(diff.coeffs().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (diff.coeffs()[i] / pt) % p;
    const RingPolynomial err(field, std::move(e));
    auto [quot, dg] = divmod(bz.b * err, g1);
    const RingPolynomial dh = bz.a * err + quot * h1;
    g = g + dg.embed_in(target).scaled(pt);
    h = h + dh.embed_in(target).scaled(pt);
  }
  return {g, h};
}

}  // namespace liftenum
