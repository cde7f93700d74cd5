#pragma once

// Sparse homogeneous polynomials with exact rational coefficients in the
// variable groups z, x_0..x_{m-1}, y_0..y_{l-1}. Every weight enumerator
// A_{m,l} and partial enumerator D_{i,j} is held in this form.
//
// Slot convention: slot 0 is z, slots 1..m are x_0..x_{m-1}, slots
// m+1..m+l are y_0..y_{l-1}.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liftenum/composition.hpp"

namespace liftenum {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxSlots = 16;

enum class Naming {
  Canonical,  // z, x0, x1, ..., y0, y1, ...
  Display,    // z, u, v, w, x, y, t, s assigned in slot order
};

struct VarLayout {
  int x_count = 0;
  int y_count = 0;

  int slots() const noexcept { return 1 + x_count + y_count; }
  static constexpr int z_slot() noexcept { return 0; }
  int x_slot(int i) const noexcept { return 1 + i; }
  int y_slot(int j) const noexcept { return 1 + x_count + j; }

  /// Throws LayoutMismatch when the layout needs more than kMaxSlots slots,
  /// or when Display naming is asked for more than eight slots.
  std::vector<std::string> names(Naming naming = Naming::Canonical) const;
  void validate() const;

  friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

/// Dense exponent vector over kMaxSlots slots.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  std::uint8_t operator[](int slot) const noexcept { return e_[slot]; }
  std::uint8_t& operator[](int slot) noexcept { return e_[slot]; }

  int degree() const noexcept {
    int d = 0;
    for (auto v : e_) d += v;
    return d;
  }

  std::size_t hash() const noexcept {
    std::uint64_t a, b;
    std::memcpy(&a, e_.data(), 8);
    std::memcpy(&b, e_.data() + 8, 8);
    std::uint64_t h = a * 0x9E3779B97F4A7C15ULL;
    h ^= (b + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2)) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  Monomial& operator+=(const Monomial& o) noexcept {
    for (int i = 0; i < kMaxSlots; ++i) e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
    return *this;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.e_ < b.e_; }

 private:
  std::array<std::uint8_t, kMaxSlots> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Builds a monomial from exponents listed in slot order.
Monomial make_monomial(std::initializer_list<int> exps);
Monomial make_monomial(const std::vector<int>& exps);

using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

/// A homogeneous polynomial of fixed degree over a fixed layout.
class Enumerator {
 public:
  Enumerator(VarLayout layout, int degree);

  /// z^n in the given layout.
  static Enumerator z_power(VarLayout layout, int degree);

  const VarLayout& layout() const noexcept { return layout_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * mono; drops the term if it cancels. Throws LayoutMismatch if
  /// the monomial is not homogeneous of the enumerator's degree or uses
  /// slots outside the layout.
  void add_term(const Monomial& mono, const Rational& c);
  Rational coefficient(const Monomial& mono) const;

  /// Terms in canonical order: exponent vectors compared slot by slot
  /// (z first), larger exponents first.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  Rational coefficient_sum() const;
  bool is_integral() const;
  bool has_negative() const;

  Enumerator& operator+=(const Enumerator& o);
  Enumerator& operator-=(const Enumerator& o);
  Enumerator& operator*=(const Rational& c);

  friend bool operator==(const Enumerator& a, const Enumerator& b);

 private:
  friend Enumerator from_terms_unchecked(VarLayout, int, TermMap&&);
  void require_compatible(const Enumerator& o) const;

  VarLayout layout_;
  int degree_;
  TermMap terms_;
};

Enumerator operator+(Enumerator a, const Enumerator& b);
Enumerator operator-(Enumerator a, const Enumerator& b);
Enumerator operator*(Enumerator a, const Rational& c);
Enumerator operator*(const Rational& c, Enumerator a);

/// Polynomial product; layouts must agree, the degree is the sum.
Enumerator multiply(const Enumerator& a, const Enumerator& b);

/// Symmetrized weight enumerator from composition counts: the coefficient of
/// x_0^{n_0}...x_{m-1}^{n_{m-1}} z^{n_inf} is the count. The layout must be
/// (m, 0) with m = counts.size() of every composition.
Enumerator from_compositions(const std::map<Composition, std::uint64_t>& counts, VarLayout layout);

/// A homogeneous linear form in the target variables: sum of coeff * slot.
/// A nonzero `constant` makes the assignment non-linear and is rejected.
struct LinearForm {
  std::vector<std::pair<int, Rational>> terms;
  Rational constant = 0;

  static LinearForm var(int slot, const Rational& c = 1) { return LinearForm{{{slot, c}}, 0}; }
  LinearForm& plus(int slot, const Rational& c) {
    terms.emplace_back(slot, c);
    return *this;
  }
};

/// One linear form per source slot.
using Assignment = std::vector<LinearForm>;

/// Substitutes every source variable by its linear form, expands exactly and
/// multiplies the result by `scale`. Degree is preserved.
Enumerator substitute_linear(const Enumerator& p, const Assignment& assignment, VarLayout target,
                             const Rational& scale = 1);

/// Renames variables into a larger layout: x_i -> x_{i + x_offset},
/// y_j -> y_{j + y_offset}.
Enumerator reindex(const Enumerator& p, VarLayout target, int x_offset, int y_offset);

/// Sum of exactly those terms with a positive exponent on every slot in
/// `required_slots`.
Enumerator extract_divisible(const Enumerator& p, const std::vector<int>& required_slots);

/// Throws NotIntegral unless every coefficient is an integer.
const Enumerator& assert_integral(const Enumerator& p, const std::string& what = "enumerator");

/// Univariate image under slot -> t^{powers[slot]}.
struct UnivariatePolynomial {
  std::map<int, Rational> coeffs;  // exponent -> coefficient, no zeros

  Rational sum() const;
  /// Smallest exponent > 0 with a nonzero coefficient; -1 if none.
  int min_positive_exponent() const;
  Rational coefficient(int e) const;
};

UnivariatePolynomial specialize(const Enumerator& p, const std::vector<int>& powers);

// --- Serialization ---------------------------------------------------------

/// One term per line, `<sign><coef>*z^a*x0^b*...*y0^c*...`, every slot
/// listed, canonical order; the zero polynomial prints as `0`.
std::string to_text(const Enumerator& p);

/// Parses a sum of terms such as `759*z^16*x0^8 - 2*x0^4*y0^4`, or with
/// Display naming `759*z^16*u^8`. Juxtaposition and `*` both multiply;
/// omitted slots have exponent 0. The degree is taken from the first term
/// unless `degree` is given (needed for `0`).
Enumerator parse_enumerator(const std::string& text, VarLayout layout, Naming naming = Naming::Canonical,
                            int degree = -1);

/// {"vars": [...], "degree": n, "terms": [{"coef": "...", "exps": [...]}]}
/// with terms in canonical order. Returned as compact JSON text.
std::string to_json(const Enumerator& p);
Enumerator from_json(const std::string& json_text);

std::string to_string(const Rational& r);

}  // namespace liftenum
