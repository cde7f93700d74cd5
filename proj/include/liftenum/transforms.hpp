#pragma once

// Disjoint weight enumerators A_{m,l} and partial weight enumerators D_{i,j}.
//
// A_{m,l} lives in layout (m, l): x_0..x_{m-1} track a word of C_m by
// valuation class, y_0..y_{l-1} a word of the dual of C_l, z the common
// zeros. A_{m,0} is the symmetrized weight enumerator of C_m and A_{0,m} that
// of its dual. D_{i,j} is the part of A_{i,j} divisible by x_0 (i > 0) and
// y_0 (j > 0).

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liftenum/enumpoly.hpp"

namespace liftenum {

class LiftedCodeFamily;

struct TransformContext {
  int p = 2;
  int n = 0;
  int k = 0;
  Integer c1_size;      // p^k
  Integer c1dual_size;  // p^(n-k)

  TransformContext(int p, int n, int k);
  static TransformContext for_family(const LiftedCodeFamily& family);
};

/// A_{m,l+1} -> A_{m+1,l}: x_i -> p x_i, y_l -> z - x_m,
/// z -> z + (p-1) x_m, divided by |C_1^perp|.
Enumerator up_A(const Enumerator& a, const TransformContext& ctx);

/// A_{m+1,l} -> A_{m,l+1}: x_m -> z - y_l, y_j -> p y_j,
/// z -> z + (p-1) y_l, divided by |C_1|.
Enumerator down_A(const Enumerator& a, const TransformContext& ctx);

/// D_{m,l+1} -> D_{m+1,l}; needs m >= 1 and l >= 1, otherwise
/// PreconditionViolated (use the boundary transforms).
Enumerator up_D(const Enumerator& d, const TransformContext& ctx);

/// D_{m+1,l} -> D_{m,l+1}; needs m >= 1 and l >= 1.
Enumerator down_D(const Enumerator& d, const TransformContext& ctx);

/// (D_{m,0}, D_{m,1}) -> D_{m+1,0} for m >= 1.
Enumerator boundary_up_D(const Enumerator& d_m0, const Enumerator& d_m1, const TransformContext& ctx);

/// (D_{0,l}, D_{1,l}) -> D_{0,l+1} for l >= 1.
Enumerator boundary_down_D(const Enumerator& d_0l, const Enumerator& d_1l, const TransformContext& ctx);

/// A_{m+1,0} -> A_{m,0}: the contribution of the subcode pC, i.e. the terms
/// without x_0 with x_{i+1} renamed to x_i.
Enumerator project_subcode(const Enumerator& a);

/// A_{m,0}(x_0..x_{m-1}; z) viewed as A_{m,0}(x_1..x_m; z) in layout (m+1, 0).
Enumerator shift_into_next(const Enumerator& a);

/// The partial enumerator D_{i,j} read off A_{m,l} (i <= m, j <= l): terms
/// with x_0..x_{m-i-1} absent and x_{m-i} present (if i > 0), likewise for y,
/// renamed down into layout (i, j).
Enumerator extract_partial(const Enumerator& a, int i, int j);

/// x <-> y exchange: layout (m, l) -> (l, m).
Enumerator swap_groups(const Enumerator& a);

/// Seeds for the pipeline: at most one D_{i,j} per diagonal s = i + j, plus
/// a cutoff diagonal from which on all partial enumerators vanish.
class DTable {
 public:
  DTable(int n, int cutoff);

  int length() const noexcept { return n_; }
  int cutoff() const noexcept { return cutoff_; }
  const std::map<std::pair<int, int>, Enumerator>& seeds() const noexcept { return seeds_; }

  /// Throws LayoutMismatch unless the seed has layout (i, j) and degree n, or
  /// PreconditionViolated if diagonal i + j already has a seed.
  void set_seed(int i, int j, Enumerator d);
  /// The seed on diagonal s (zero-filled past the cutoff). Throws MissingSeed.
  std::pair<std::pair<int, int>, Enumerator> diagonal_seed(int s) const;

 private:
  int n_;
  int cutoff_;
  std::map<std::pair<int, int>, Enumerator> seeds_;
};

/// Memoizing derivation of any D_{i,j} from a DTable, and assembly of A_{m,l}.
/// Not thread-safe (it caches).
class PartialEnumerators {
 public:
  PartialEnumerators(DTable table, TransformContext ctx);

  const DTable& table() const noexcept { return table_; }
  const TransformContext& context() const noexcept { return ctx_; }

  const Enumerator& D(int i, int j);
  /// Sum of D_{i,j}(x_{m-i}..x_{m-1}; y_{l-j}..y_{l-1}; z) over i <= m, j <= l.
  Enumerator assemble_A(int m, int l);

 private:
  DTable table_;
  TransformContext ctx_;
  std::map<std::pair<int, int>, Enumerator> cache_;
};

/// Runs the three-step recursion: for s = 2..M move the diagonal-s seed to
/// D_{s-1,1} with up_D, combine with D_{s-1,0} into D_{s,0}, and add it to
/// the shifted A_{s-1,0}. Returns A_{0,0}, ..., A_{M,0}. Every output is
/// checked for integral nonnegative coefficients; a failure raises
/// PipelineError naming the stage.
std::vector<Enumerator> pipeline(const DTable& table, const TransformContext& ctx, int max_m);

/// Sum of D_{i,j} embedded in layout (m, l) as in assemble_A.
Enumerator embed_partial(const Enumerator& d, int m, int l);

}  // namespace liftenum
