#include "liftenum/transforms.hpp"

#include "liftenum/codes.hpp"
#include "liftenum/error.hpp"

namespace liftenum {

namespace {

Integer int_pow(int base, int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

void require_degree(const Enumerator& e, const TransformContext& ctx) {
  if (e.degree() != ctx.n) {
    throw Error(ErrorCode::LayoutMismatch,
                "enumerator degree " + std::to_string(e.degree()) + " does not match length " + std::to_string(ctx.n));
  }
}

}  // namespace

TransformContext::TransformContext(int p_, int n_, int k_)
    : p(p_), n(n_), k(k_), c1_size(int_pow(p_, k_)), c1dual_size(int_pow(p_, n_ - k_)) {}

TransformContext TransformContext::for_family(const LiftedCodeFamily& family) {
  return TransformContext(family.p(), family.length(), family.rank());
}

Enumerator up_A(const Enumerator& a, const TransformContext& ctx) {
  require_degree(a, ctx);
  const VarLayout src = a.layout();
  if (src.y_count < 1) throw Error(ErrorCode::LayoutMismatch, "up_A needs at least one y variable");
  const int m = src.x_count;
  const int l = src.y_count - 1;
  const VarLayout dst{m + 1, l};
  Assignment asg(src.slots());
  asg[0] = LinearForm::var(0).plus(dst.x_slot(m), ctx.p - 1);
  for (int i = 0; i < m; ++i) asg[src.x_slot(i)] = LinearForm::var(dst.x_slot(i), ctx.p);
  for (int j = 0; j < l; ++j) asg[src.y_slot(j)] = LinearForm::var(dst.y_slot(j));
  asg[src.y_slot(l)] = LinearForm::var(0).plus(dst.x_slot(m), -1);
  return substitute_linear(a, asg, dst, Rational(1, 1) / Rational(ctx.c1dual_size));
}

Enumerator down_A(const Enumerator& a, const TransformContext& ctx) {
  require_degree(a, ctx);
  const VarLayout src = a.layout();
  if (src.x_count < 1) throw Error(ErrorCode::LayoutMismatch, "down_A needs at least one x variable");
  const int m = src.x_count - 1;
  const int l = src.y_count;
  const VarLayout dst{m, l + 1};
  Assignment asg(src.slots());
  asg[0] = LinearForm::var(0).plus(dst.y_slot(l), ctx.p - 1);
  for (int i = 0; i < m; ++i) asg[src.x_slot(i)] = LinearForm::var(dst.x_slot(i));
  asg[src.x_slot(m)] = LinearForm::var(0).plus(dst.y_slot(l), -1);
  for (int j = 0; j < l; ++j) asg[src.y_slot(j)] = LinearForm::var(dst.y_slot(j), ctx.p);
  return substitute_linear(a, asg, dst, Rational(1, 1) / Rational(ctx.c1_size));
}

Enumerator up_D(const Enumerator& d, const TransformContext& ctx) {
  if (d.layout().x_count < 1 || d.layout().y_count < 2) {
    throw Error(ErrorCode::PreconditionViolated, "up_D maps D_{m,l+1} to D_{m+1,l} only for m, l >= 1");
  }
  return up_A(d, ctx);
}

Enumerator down_D(const Enumerator& d, const TransformContext& ctx) {
  if (d.layout().x_count < 2 || d.layout().y_count < 1) {
    throw Error(ErrorCode::PreconditionViolated, "down_D maps D_{m+1,l} to D_{m,l+1} only for m, l >= 1");
  }
  return down_A(d, ctx);
}

Enumerator boundary_up_D(const Enumerator& d_m0, const Enumerator& d_m1, const TransformContext& ctx) {
  const int m = d_m0.layout().x_count;
  if (m < 1) throw Error(ErrorCode::PreconditionViolated, "boundary_up_D needs m >= 1");
  if (!(d_m0.layout() == VarLayout{m, 0}) || !(d_m1.layout() == VarLayout{m, 1})) {
    throw Error(ErrorCode::LayoutMismatch, "boundary_up_D expects layouts (m,0) and (m,1)");
  }
  Enumerator combined = reindex(d_m0, VarLayout{m, 1}, 0, 0);
  combined += d_m1;
  return up_A(combined, ctx);
}

Enumerator boundary_down_D(const Enumerator& d_0l, const Enumerator& d_1l, const TransformContext& ctx) {
  const int l = d_0l.layout().y_count;
  if (l < 1) throw Error(ErrorCode::PreconditionViolated, "boundary_down_D needs l >= 1");
  if (!(d_0l.layout() == VarLayout{0, l}) || !(d_1l.layout() == VarLayout{1, l})) {
    throw Error(ErrorCode::LayoutMismatch, "boundary_down_D expects layouts (0,l) and (1,l)");
  }
  Enumerator combined = reindex(d_0l, VarLayout{1, l}, 0, 0);
  combined += d_1l;
  return down_A(combined, ctx);
}

Enumerator project_subcode(const Enumerator& a) {
  const VarLayout src = a.layout();
  if (src.x_count < 1 || src.y_count != 0) throw Error(ErrorCode::LayoutMismatch, "project_subcode needs (m+1,0)");
  const int m = src.x_count - 1;
  Enumerator out(VarLayout{m, 0}, a.degree());
  for (const auto& [mono, c] : a.terms()) {
    if (mono[src.x_slot(0)] != 0) continue;
    Monomial t;
    t[0] = mono[0];
    for (int i = 0; i < m; ++i) t[1 + i] = mono[src.x_slot(i + 1)];
    out.add_term(t, c);
  }
  return out;
}

Enumerator shift_into_next(const Enumerator& a) {
  const VarLayout src = a.layout();
  if (src.y_count != 0) throw Error(ErrorCode::LayoutMismatch, "shift_into_next needs an (m,0) layout");
  return reindex(a, VarLayout{src.x_count + 1, 0}, 1, 0);
}

Enumerator extract_partial(const Enumerator& a, int i, int j) {
  const VarLayout src = a.layout();
  const int m = src.x_count;
  const int l = src.y_count;
  if (i < 0 || j < 0 || i > m || j > l) throw Error(ErrorCode::LayoutMismatch, "extract_partial index out of range");
  const VarLayout dst{i, j};
  Enumerator out(dst, a.degree());
  for (const auto& [mono, c] : a.terms()) {
    bool keep = true;
    for (int t = 0; t < m - i && keep; ++t) keep = mono[src.x_slot(t)] == 0;
    for (int t = 0; t < l - j && keep; ++t) keep = mono[src.y_slot(t)] == 0;
    if (keep && i > 0) keep = mono[src.x_slot(m - i)] > 0;
    if (keep && j > 0) keep = mono[src.y_slot(l - j)] > 0;
    if (!keep) continue;
    Monomial t;
    t[0] = mono[0];
    for (int s = 0; s < i; ++s) t[dst.x_slot(s)] = mono[src.x_slot(m - i + s)];
    for (int s = 0; s < j; ++s) t[dst.y_slot(s)] = mono[src.y_slot(l - j + s)];
    out.add_term(t, c);
  }
  return out;
}

Enumerator swap_groups(const Enumerator& a) {
  const VarLayout src = a.layout();
  const VarLayout dst{src.y_count, src.x_count};
  Enumerator out(dst, a.degree());
  for (const auto& [mono, c] : a.terms()) {
    Monomial t;
    t[0] = mono[0];
    for (int i = 0; i < src.x_count; ++i) t[dst.y_slot(i)] = mono[src.x_slot(i)];
    for (int j = 0; j < src.y_count; ++j) t[dst.x_slot(j)] = mono[src.y_slot(j)];
    out.add_term(t, c);
  }
  return out;
}

Enumerator embed_partial(const Enumerator& d, int m, int l) {
  const int i = d.layout().x_count;
  const int j = d.layout().y_count;
  return reindex(d, VarLayout{m, l}, m - i, l - j);
}

// --- DTable ----------------------------------------------------------------

DTable::DTable(int n, int cutoff) : n_(n), cutoff_(cutoff) {}

void DTable::set_seed(int i, int j, Enumerator d) {
  if (!(d.layout() == VarLayout{i, j}) || d.degree() != n_) {
    throw Error(ErrorCode::LayoutMismatch, "seed D_{" + std::to_string(i) + "," + std::to_string(j) +
                                               "} has the wrong layout or degree");
  }
  for (const auto& [key, v] : seeds_) {
    if (key.first + key.second == i + j && key != std::make_pair(i, j)) {
      throw Error(ErrorCode::PreconditionViolated, "diagonal " + std::to_string(i + j) + " already seeded");
    }
  }
  seeds_.insert_or_assign({i, j}, std::move(d));
}

std::pair<std::pair<int, int>, Enumerator> DTable::diagonal_seed(int s) const {
  for (const auto& [key, v] : seeds_) {
    if (key.first + key.second == s) return {key, v};
  }
  if (s >= cutoff_) {
    const int i = (s + 1) / 2;
    const int j = s / 2;
    return {{i, j}, Enumerator(VarLayout{i, j}, n_)};
  }
  throw Error(ErrorCode::MissingSeed, "no partial enumerator seeded on diagonal " + std::to_string(s));
}

// --- PartialEnumerators ----------------------------------------------------

PartialEnumerators::PartialEnumerators(DTable table, TransformContext ctx)
    : table_(std::move(table)), ctx_(std::move(ctx)) {
  if (table_.length() != ctx_.n) throw Error(ErrorCode::LayoutMismatch, "table length does not match context");
}

const Enumerator& PartialEnumerators::D(int i, int j) {
  if (i < 0 || j < 0) throw Error(ErrorCode::PreconditionViolated, "negative index");
  if (auto it = cache_.find({i, j}); it != cache_.end()) return it->second;
  const int s = i + j;
  auto store = [&](Enumerator e) -> const Enumerator& {
    return cache_.insert_or_assign({i, j}, std::move(e)).first->second;
  };
  if (s == 0) {
    auto [key, seed] = table_.diagonal_seed(0);
    return store(std::move(seed));
  }
  if (i >= 1 && j >= 1) {
    auto [key, seed] = table_.diagonal_seed(s);
    const auto [a, b] = key;
    if (a == i && b == j) return store(std::move(seed));
    if (a < 1 || b < 1) {
      throw Error(ErrorCode::MissingSeed, "diagonal " + std::to_string(s) + " is seeded off the interior");
    }
    // Walk along the diagonal one step from the neighbour closer to the seed.
    if (i > a) return store(up_D(D(i - 1, j + 1), ctx_));
    return store(down_D(D(i + 1, j - 1), ctx_));
  }
  if (j == 0) {
    if (i == 1) {
      auto [key, seed] = table_.diagonal_seed(1);
      if (key != std::make_pair(1, 0)) throw Error(ErrorCode::MissingSeed, "diagonal 1 must be seeded with D_{1,0}");
      return store(std::move(seed));
    }
    return store(boundary_up_D(D(i - 1, 0), D(i - 1, 1), ctx_));
  }
  // i == 0
  if (j == 1) {
    const Enumerator a10 = embed_partial(D(0, 0), 1, 0) + D(1, 0);
    return store(extract_partial(down_A(a10, ctx_), 0, 1));
  }
  return store(boundary_down_D(D(0, j - 1), D(1, j - 1), ctx_));
}

Enumerator PartialEnumerators::assemble_A(int m, int l) {
  Enumerator out(VarLayout{m, l}, ctx_.n);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= l; ++j) out += embed_partial(D(i, j), m, l);
  }
  return out;
}

// --- Pipeline ----------------------------------------------------------------

namespace {

void check_stage(const Enumerator& a, int s) {
  for (const auto& [mono, c] : a.terms()) {
    if (c.get_den() != 1) {
      throw PipelineError(ErrorCode::NotIntegral, s, "A_{" + std::to_string(s) + ",0} has coefficient " + c.get_str());
    }
    if (sgn(c) < 0) {
      throw PipelineError(ErrorCode::NegativeCoefficient, s,
                          "A_{" + std::to_string(s) + ",0} has coefficient " + c.get_str());
    }
  }
}

}  // namespace

std::vector<Enumerator> pipeline(const DTable& table, const TransformContext& ctx, int max_m) {
  if (table.length() != ctx.n) throw Error(ErrorCode::LayoutMismatch, "table length does not match context");
  std::vector<Enumerator> out;
  auto [k00, d00] = table.diagonal_seed(0);
  out.push_back(d00);
  if (max_m < 1) return out;
  auto [k10, d10] = table.diagonal_seed(1);
  if (k10 != std::make_pair(1, 0)) throw Error(ErrorCode::MissingSeed, "diagonal 1 must be seeded with D_{1,0}");
  Enumerator d_prev0 = d10;
  out.push_back(shift_into_next(out.back()) + d_prev0);
  check_stage(out.back(), 1);
  for (int s = 2; s <= max_m; ++s) {
    auto [key, seed] = table.diagonal_seed(s);
    if (key.first < 1 || key.second < 1) {
      throw Error(ErrorCode::MissingSeed, "diagonal " + std::to_string(s) + " must be seeded with i, j >= 1");
    }
    // Step 1: D_{i,j} -> D_{s-1,1}.
    Enumerator d = std::move(seed);
    while (d.layout().y_count > 1) d = up_D(d, ctx);
    // Step 2: D_{s,0} from D_{s-1,0} and D_{s-1,1}.
    Enumerator d_s0 = boundary_up_D(d_prev0, d, ctx);
    // Step 3: A_{s,0} = A_{s-1,0}(x_1..x_s) + D_{s,0}.
    out.push_back(shift_into_next(out.back()) + d_s0);
    check_stage(out.back(), s);
    d_prev0 = std::move(d_s0);
  }
  return out;
}

}  // namespace liftenum
