#pragma once

// Lifted extended cyclic codes over Z_{p^m}: the quadratic-residue towers of
// length 24 and the Octacode tower, generator and dual matrices, and
// exhaustive enumeration of compositions.

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftenum/composition.hpp"
#include "liftenum/enumpoly.hpp"
#include "liftenum/ringpoly.hpp"

namespace liftenum {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using ResidueMatrix = DenseMatrix<Residue>;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

/// Rows of `rows` generate a free code over `ring` (rows are independent).
struct CodeMatrix {
  ModulusContext ring;
  ResidueMatrix rows;

  int length() const noexcept { return static_cast<int>(rows.cols()); }
  int rank() const noexcept { return static_cast<int>(rows.rows()); }
  /// q^rank as an exact integer.
  Integer size() const;
};

struct Codeword {
  ModulusContext ring;
  std::vector<Residue> entries;

  int hamming_weight() const noexcept;
  bool reduction_is_nonzero() const noexcept;
};

Composition composition(const Codeword& c);

struct CustomFamilySpec {
  std::string name = "custom";
  int p = 2;
  int cyclic_length = 7;
  /// Indices into factor_xn_minus_1(p, cyclic_length); their product is the
  /// generator polynomial over Z_p.
  std::vector<int> generator_factors;
  /// Extension coordinate coefficient; searched when absent.
  std::optional<Residue> extension;
  bool self_dual = true;
};

/// A tower of codes C_1, C_2, ... with C_{m+1} reducing onto C_m.
/// C_m is the extended cyclic code generated by the Hensel lift of a fixed
/// generator polynomial, with extension coordinate e * (sum of entries).
class LiftedCodeFamily {
 public:
  const std::string& name() const noexcept { return name_; }
  int p() const noexcept { return p_; }
  int length() const noexcept { return cyclic_length_ + 1; }
  int cyclic_length() const noexcept { return cyclic_length_; }
  int rank() const noexcept { return cyclic_length_ - generator_.degree(); }
  bool self_dual() const noexcept { return self_dual_; }
  const RingPolynomial& base_factor() const noexcept { return generator_; }
  const RingPolynomial& cofactor() const noexcept { return cofactor_; }
  /// Largest supported modulus exponent.
  int max_exponent() const noexcept { return precision_; }
  /// The extension coefficient reduced to Z_{p^m}; reductions are coherent.
  Residue extension_coefficient(int m) const;
  /// The Hensel-lifted cyclic generator polynomial over Z_{p^m}.
  RingPolynomial generator_polynomial(int m) const;

 private:
  friend LiftedCodeFamily build_family(const CustomFamilySpec&);

  std::string name_;
  int p_ = 2;
  int cyclic_length_ = 0;
  RingPolynomial generator_{ModulusContext(2, 1)};
  RingPolynomial cofactor_{ModulusContext(2, 1)};
  Residue extension_ = 0;  // modulo p^precision_
  int precision_ = 1;
  bool self_dual_ = false;
};

/// Built-in families: "qr24-2", "qr24-3", "octacode". Throws UnknownTable
/// for other names.
LiftedCodeFamily build_family(const std::string& name);
/// Throws SelfDualityFailed when a self-dual family admits no extension
/// coefficient.
LiftedCodeFamily build_family(const CustomFamilySpec& spec);

/// k x n generator over Z_{p^m}: cyclic shifts of the lifted generator
/// polynomial plus the extension column.
CodeMatrix generator_matrix(const LiftedCodeFamily& family, int m);

/// Entrywise reduction to a smaller exponent.
CodeMatrix reduce(const CodeMatrix& g, int m);

/// A * B^T over the common ring.
ResidueMatrix gram(const CodeMatrix& a, const CodeMatrix& b);

struct StandardForm {
  /// [I_k | A] with columns listed in `column_order` order.
  CodeMatrix matrix;
  /// column_order[j] is the original column placed at position j.
  std::vector<int> column_order;
};

/// Unit row operations plus column permutation. Throws NotFreeCode.
StandardForm standard_form(const CodeMatrix& g);

/// (n-k) x n generator of the dual code, in original column order.
CodeMatrix dual_matrix(const CodeMatrix& g);

using CompositionCounts = std::map<Composition, std::uint64_t>;

/// Exhaustive composition histogram of the row span. Throws BudgetExceeded
/// when q^k > budget. `threads` partitions the message space; the result
/// does not depend on it.
CompositionCounts enumerate_compositions(const CodeMatrix& g, std::uint64_t budget = kDefaultBudget,
                                         int threads = 1);

/// All codewords vanishing outside `allowed_support`.
std::vector<Codeword> shortened_words(const CodeMatrix& g, const std::vector<int>& allowed_support,
                                      std::uint64_t budget = kDefaultBudget);

/// Minimum Hamming weight over codewords with nonzero reduction mod p.
int min_weight_nonzero_reduction(const CodeMatrix& g, std::uint64_t budget = kDefaultBudget);

/// Throws BudgetExceeded when the row span of g is larger than `budget`.
void require_within_budget(const CodeMatrix& g, std::uint64_t budget);

/// Calls visit(entries) for every word of the row span in odometer order.
/// `entries` is a std::vector<Residue> reused between calls.
template <typename Visitor>
void for_each_codeword(const CodeMatrix& g, Visitor&& visit) {
  const int k = g.rank();
  const int n = g.length();
  const Residue q = g.ring.q();
  std::vector<Residue> word(n, 0);
  std::vector<Residue> digits(k, 0);
  while (true) {
    visit(static_cast<const std::vector<Residue>&>(word));
    int d = 0;
    for (; d < k; ++d) {
      for (int j = 0; j < n; ++j) {
        Residue v = word[j] + g.rows(d, j);
        word[j] = v >= q ? v - q : v;
      }
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
    if (d == k) break;
  }
}

}  // namespace liftenum
