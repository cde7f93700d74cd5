#pragma once

// Arithmetic in Z/p^m and in (Z/p^m)[x], plus the two tools needed to build
// lifted cyclic codes: factoring x^n - 1 over Z_p and Hensel lifting a
// coprime factorization to Z_{p^m}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liftenum {

using Residue = std::int64_t;

bool is_prime(std::int64_t n);

/// The ring Z/p^m. Residues are kept in [0, q).
class ModulusContext {
 public:
  /// Throws InvalidModulus unless p is prime, m >= 1 and p^m < 2^62.
  ModulusContext(int p, int m);

  int p() const noexcept { return p_; }
  int m() const noexcept { return m_; }
  Residue q() const noexcept { return q_; }

  Residue reduce(__int128 v) const noexcept {
    auto r = static_cast<Residue>(v % q_);
    return r < 0 ? r + q_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(static_cast<__int128>(a) + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(static_cast<__int128>(a) - b); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(static_cast<__int128>(a) * b); }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : q_ - a; }

  bool is_unit(Residue a) const noexcept { return reduce(a) % p_ != 0; }
  /// Throws DivisorNotMonicUnit for non-units.
  Residue inverse(Residue a) const;

  /// p-adic valuation of a residue; the zero residue reports m (the slot
  /// used for n_infinity in compositions).
  int valuation(Residue a) const noexcept;

  /// p^e as a residue of this ring (0 when e >= m).
  Residue power_of_p(int e) const noexcept;

  /// Same prime, different exponent.
  ModulusContext with_exponent(int m) const { return ModulusContext(p_, m); }

  /// Largest exponent m with p^m < 2^30; the precision cap used for towers.
  static int max_tower_exponent(int p);

  friend bool operator==(const ModulusContext& a, const ModulusContext& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

 private:
  int p_;
  int m_;
  Residue q_;
};

/// Polynomial over Z/p^m, coefficients stored lowest degree first.
class RingPolynomial {
 public:
  explicit RingPolynomial(ModulusContext ring) : ring_(ring) {}
  RingPolynomial(ModulusContext ring, std::vector<Residue> coeffs);
  /// Coefficients given as arbitrary integers, reduced into [0, q).
  static RingPolynomial from_integers(ModulusContext ring, const std::vector<std::int64_t>& coeffs);
  static RingPolynomial x_pow_minus_one(ModulusContext ring, int n);
  static RingPolynomial monomial(ModulusContext ring, int degree, Residue coeff = 1);

  const ModulusContext& ring() const noexcept { return ring_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Residue coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }

  /// Reduce coefficients modulo p^m for m no larger than the current exponent.
  RingPolynomial reduce_to(int m) const;
  /// Reinterpret coefficients (as integers in [0, q)) in a larger ring.
  RingPolynomial embed_in(ModulusContext ring) const;

  RingPolynomial scaled(Residue c) const;
  RingPolynomial shifted(int k) const;  // multiply by x^k

  std::string to_string() const;

  friend bool operator==(const RingPolynomial& a, const RingPolynomial& b) noexcept {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  ModulusContext ring_;
  std::vector<Residue> coeffs_;
};

RingPolynomial operator+(const RingPolynomial& f, const RingPolynomial& g);
RingPolynomial operator-(const RingPolynomial& f, const RingPolynomial& g);
RingPolynomial operator*(const RingPolynomial& f, const RingPolynomial& g);

struct DivMod {
  RingPolynomial quotient;
  RingPolynomial remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g. The leading
/// coefficient of g must be a unit.
DivMod divmod(const RingPolynomial& f, const RingPolynomial& g);

struct Bezout {
  RingPolynomial a;
  RingPolynomial b;
  RingPolynomial gcd;  // monic, or zero when both inputs are zero
};

/// a*g + b*h = gcd(g, h) over the field Z_p. Requires m == 1.
Bezout xgcd_mod_p(const RingPolynomial& g, const RingPolynomial& h);

/// Monic irreducible factors of x^n - 1 over Z_p, sorted by degree and then
/// by coefficient sequence read from the leading coefficient down.
/// `search_budget` caps the number of trial divisors per degree.
std::vector<RingPolynomial> factor_xn_minus_1(int p, int n, std::int64_t search_budget = std::int64_t{1} << 22);

struct HenselPair {
  RingPolynomial g;
  RingPolynomial h;
};

/// Lifts f = g1*h1 (mod p) to f = g*h (mod p^target_m) with g = g1, h = h1
/// (mod p) and g monic of the same degree. f must be monic and live in a ring
/// with exponent >= target_m; g1, h1 live in Z_p and must be coprime.
HenselPair hensel_lift(const RingPolynomial& f, const RingPolynomial& g1, const RingPolynomial& h1, int target_m);

}  // namespace liftenum
