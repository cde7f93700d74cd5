#include "liftenum/enumpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "liftenum/error.hpp"

namespace liftenum {

namespace {

constexpr const char* kDisplayNames[] = {"z", "u", "v", "w", "x", "y", "t", "s"};

}  // namespace

void VarLayout::validate() const {
  if (x_count < 0 || y_count < 0 || slots() > kMaxSlots) {
    throw Error(ErrorCode::LayoutMismatch, "layout (" + std::to_string(x_count) + "," + std::to_string(y_count) +
                                               ") needs more than " + std::to_string(kMaxSlots) + " slots");
  }
}

std::vector<std::string> VarLayout::names(Naming naming) const {
  validate();
  std::vector<std::string> out;
  out.reserve(slots());
  if (naming == Naming::Display) {
    if (slots() > 8) throw Error(ErrorCode::LayoutMismatch, "display naming covers at most eight variables");
    for (int s = 0; s < slots(); ++s) out.emplace_back(kDisplayNames[s]);
    return out;
  }
  out.emplace_back("z");
  for (int i = 0; i < x_count; ++i) out.push_back("x" + std::to_string(i));
  for (int j = 0; j < y_count; ++j) out.push_back("y" + std::to_string(j));
  return out;
}

Monomial make_monomial(std::initializer_list<int> exps) { return make_monomial(std::vector<int>(exps)); }

Monomial make_monomial(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxSlots)) throw Error(ErrorCode::LayoutMismatch, "too many slots");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw Error(ErrorCode::LayoutMismatch, "exponent out of range");
    m[static_cast<int>(i)] = static_cast<std::uint8_t>(exps[i]);
  }
  return m;
}

std::string to_string(const Rational& r) { return r.get_str(); }

// --- Enumerator ------------------------------------------------------------

Enumerator::Enumerator(VarLayout layout, int degree) : layout_(layout), degree_(degree) {
  layout_.validate();
  if (degree < 0 || degree > 255) throw Error(ErrorCode::LayoutMismatch, "degree out of range");
}

Enumerator Enumerator::z_power(VarLayout layout, int degree) {
  Enumerator e(layout, degree);
  Monomial m;
  m[0] = static_cast<std::uint8_t>(degree);
  e.terms_.emplace(m, 1);
  return e;
}

Enumerator from_terms_unchecked(VarLayout layout, int degree, TermMap&& terms) {
  Enumerator e(layout, degree);
  e.terms_ = std::move(terms);
  for (auto it = e.terms_.begin(); it != e.terms_.end();) {
    if (sgn(it->second) == 0) {
      it = e.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return e;
}

void Enumerator::add_term(const Monomial& mono, const Rational& c) {
  if (mono.degree() != degree_) {
    throw Error(ErrorCode::LayoutMismatch, "term of degree " + std::to_string(mono.degree()) +
                                               " in enumerator of degree " + std::to_string(degree_));
  }
  for (int s = layout_.slots(); s < kMaxSlots; ++s) {
    if (mono[s] != 0) throw Error(ErrorCode::LayoutMismatch, "term uses a slot outside the layout");
  }
  if (sgn(c) == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(mono, v);
  if (!inserted) {
    it->second += v;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Enumerator::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Monomial, Rational>> Enumerator::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
  return out;
}

Rational Enumerator::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

bool Enumerator::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

bool Enumerator::has_negative() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) < 0; });
}

void Enumerator::require_compatible(const Enumerator& o) const {
  if (!(layout_ == o.layout_) || degree_ != o.degree_) {
    throw Error(ErrorCode::LayoutMismatch, "operands have different layouts or degrees");
  }
}

Enumerator& Enumerator::operator+=(const Enumerator& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Enumerator& Enumerator::operator-=(const Enumerator& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

Enumerator& Enumerator::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational f = c;
  f.canonicalize();
  for (auto& [m, v] : terms_) v *= f;
  return *this;
}

bool operator==(const Enumerator& a, const Enumerator& b) {
  if (!(a.layout_ == b.layout_) || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

Enumerator operator+(Enumerator a, const Enumerator& b) { return a += b; }
Enumerator operator-(Enumerator a, const Enumerator& b) { return a -= b; }
Enumerator operator*(Enumerator a, const Rational& c) { return a *= c; }
Enumerator operator*(const Rational& c, Enumerator a) { return a *= c; }

Enumerator multiply(const Enumerator& a, const Enumerator& b) {
  if (!(a.layout() == b.layout())) throw Error(ErrorCode::LayoutMismatch, "multiply: layouts differ");
  TermMap out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      m += mb;
      out[m] += ca * cb;
    }
  }
  return from_terms_unchecked(a.layout(), a.degree() + b.degree(), std::move(out));
}

Enumerator from_compositions(const std::map<Composition, std::uint64_t>& counts, VarLayout layout) {
  if (layout.y_count != 0) throw Error(ErrorCode::LayoutMismatch, "compositions fill an (m,0) layout");
  int degree = -1;
  TermMap terms;
  for (const auto& [comp, count] : counts) {
    if (static_cast<int>(comp.counts.size()) != layout.x_count) {
      throw Error(ErrorCode::LayoutMismatch, "composition has " + std::to_string(comp.counts.size()) +
                                                 " valuation classes, layout has " + std::to_string(layout.x_count));
    }
    if (degree < 0) degree = comp.length();
    if (comp.length() != degree) throw Error(ErrorCode::LayoutMismatch, "compositions of different lengths");
    Monomial m;
    m[0] = static_cast<std::uint8_t>(comp.zeros);
    for (int i = 0; i < layout.x_count; ++i) m[layout.x_slot(i)] = static_cast<std::uint8_t>(comp.counts[i]);
    Integer c;
    mpz_import(c.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
    terms[m] += Rational(c);
  }
  return from_terms_unchecked(layout, std::max(degree, 0), std::move(terms));
}

// --- Substitution ----------------------------------------------------------

namespace {

using SparseTerms = std::vector<std::pair<Monomial, Rational>>;

SparseTerms multiply_sparse(const SparseTerms& a, const SparseTerms& b) {
  TermMap acc;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      m += mb;
      acc[m] += ca * cb;
    }
  }
  SparseTerms out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (sgn(c) != 0) out.emplace_back(m, std::move(c));
  }
  return out;
}

}  // namespace

Enumerator substitute_linear(const Enumerator& p, const Assignment& assignment, VarLayout target,
                             const Rational& scale) {
  target.validate();
  const VarLayout& src = p.layout();
  if (static_cast<int>(assignment.size()) != src.slots()) {
    throw Error(ErrorCode::LayoutMismatch, "assignment must cover every source variable");
  }
  enum class Kind { Zero, Single, Multi };
  std::vector<Kind> kind(src.slots());
  std::vector<int> single_slot(src.slots(), -1);
  std::vector<Rational> single_coeff(src.slots());
  std::vector<int> multi_slots;
  for (int s = 0; s < src.slots(); ++s) {
    const LinearForm& f = assignment[s];
    if (sgn(f.constant) != 0) throw Error(ErrorCode::NonLinearAssignment, "assignment has a constant term");
    // Merge repeated target slots and drop zero coefficients.
    std::map<int, Rational> merged;
    for (const auto& [slot, c] : f.terms) {
      if (slot < 0 || slot >= target.slots()) throw Error(ErrorCode::LayoutMismatch, "target slot out of range");
      merged[slot] += c;
    }
    std::erase_if(merged, [](const auto& kv) { return sgn(kv.second) == 0; });
    if (merged.empty()) {
      kind[s] = Kind::Zero;
    } else if (merged.size() == 1) {
      kind[s] = Kind::Single;
      single_slot[s] = merged.begin()->first;
      single_coeff[s] = merged.begin()->second;
    } else {
      kind[s] = Kind::Multi;
      multi_slots.push_back(s);
    }
  }

  // Powers of single-slot coefficients, and powers of multi-term forms.
  const int n = p.degree();
  std::vector<std::vector<Rational>> coeff_pow(src.slots());
  for (int s = 0; s < src.slots(); ++s) {
    if (kind[s] != Kind::Single) continue;
    coeff_pow[s].resize(n + 1);
    coeff_pow[s][0] = 1;
    for (int e = 1; e <= n; ++e) coeff_pow[s][e] = coeff_pow[s][e - 1] * single_coeff[s];
  }
  std::vector<std::vector<SparseTerms>> form_pow(src.slots());
  auto form_power = [&](int s, int e) -> const SparseTerms& {
    auto& cache = form_pow[s];
    if (cache.empty()) {
      SparseTerms one{{Monomial{}, Rational(1)}};
      cache.push_back(std::move(one));
    }
    if (static_cast<int>(cache.size()) <= e) {
      SparseTerms base;
      std::map<int, Rational> merged;
      for (const auto& [slot, c] : assignment[s].terms) merged[slot] += c;
      for (const auto& [slot, c] : merged) {
        if (sgn(c) == 0) continue;
        Monomial m;
        m[slot] = 1;
        base.emplace_back(m, c);
      }
      while (static_cast<int>(cache.size()) <= e) cache.push_back(multiply_sparse(cache.back(), base));
    }
    return cache[e];
  };
  // Expansion of the product of all multi-term forms, keyed by their exponents.
  std::unordered_map<Monomial, SparseTerms, MonomialHash> expansion_cache;
  auto expansion = [&](const Monomial& key) -> const SparseTerms& {
    auto it = expansion_cache.find(key);
    if (it != expansion_cache.end()) return it->second;
    SparseTerms acc{{Monomial{}, scale}};
    for (int idx = 0; idx < static_cast<int>(multi_slots.size()); ++idx) {
      const int e = key[idx];
      if (e == 0) continue;
      acc = multiply_sparse(acc, form_power(multi_slots[idx], e));
    }
    return expansion_cache.emplace(key, std::move(acc)).first->second;
  };

  TermMap out;
  out.reserve(p.size() * 2);
  Rational coef;
  Rational prod;
  for (const auto& [mono, c] : p.terms()) {
    Monomial base;
    Monomial key;
    coef = c;
    bool vanishes = false;
    for (int s = 0; s < src.slots(); ++s) {
      const int e = mono[s];
      if (e == 0) continue;
      switch (kind[s]) {
        case Kind::Zero:
          vanishes = true;
          break;
        case Kind::Single:
          coef *= coeff_pow[s][e];
          base[single_slot[s]] = static_cast<std::uint8_t>(base[single_slot[s]] + e);
          break;
        case Kind::Multi:
          break;
      }
      if (vanishes) break;
    }
    if (vanishes) continue;
    for (int idx = 0; idx < static_cast<int>(multi_slots.size()); ++idx) {
      key[idx] = mono[multi_slots[idx]];
    }
    const SparseTerms& exp = expansion(key);
    for (const auto& [m2, c2] : exp) {
      Monomial m = base;
      m += m2;
      prod = coef * c2;
      auto [it, inserted] = out.try_emplace(m, prod);
      if (!inserted) it->second += prod;
    }
  }
  return from_terms_unchecked(target, n, std::move(out));
}

Enumerator reindex(const Enumerator& p, VarLayout target, int x_offset, int y_offset) {
  const VarLayout& src = p.layout();
  if (x_offset < 0 || y_offset < 0 || src.x_count + x_offset > target.x_count ||
      src.y_count + y_offset > target.y_count) {
    throw Error(ErrorCode::LayoutMismatch, "reindex target too small");
  }
  TermMap out;
  out.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) {
    Monomial m;
    m[0] = mono[0];
    for (int i = 0; i < src.x_count; ++i) m[target.x_slot(i + x_offset)] = mono[src.x_slot(i)];
    for (int j = 0; j < src.y_count; ++j) m[target.y_slot(j + y_offset)] = mono[src.y_slot(j)];
    out.emplace(m, c);
  }
  return from_terms_unchecked(target, p.degree(), std::move(out));
}

Enumerator extract_divisible(const Enumerator& p, const std::vector<int>& required_slots) {
  for (int s : required_slots) {
    if (s < 0 || s >= p.layout().slots()) throw Error(ErrorCode::LayoutMismatch, "required slot out of range");
  }
  TermMap out;
  for (const auto& [mono, c] : p.terms()) {
    if (std::all_of(required_slots.begin(), required_slots.end(), [&](int s) { return mono[s] > 0; })) {
      out.emplace(mono, c);
    }
  }
  return from_terms_unchecked(p.layout(), p.degree(), std::move(out));
}

const Enumerator& assert_integral(const Enumerator& p, const std::string& what) {
  for (const auto& [mono, c] : p.terms()) {
    if (c.get_den() != 1) {
      throw Error(ErrorCode::NotIntegral, what + " has non-integral coefficient " + c.get_str());
    }
  }
  return p;
}

Rational UnivariatePolynomial::sum() const {
  Rational s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

int UnivariatePolynomial::min_positive_exponent() const {
  for (const auto& [e, c] : coeffs) {
    if (e > 0) return e;
  }
  return -1;
}

Rational UnivariatePolynomial::coefficient(int e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Rational(0) : it->second;
}

UnivariatePolynomial specialize(const Enumerator& p, const std::vector<int>& powers) {
  if (static_cast<int>(powers.size()) != p.layout().slots()) {
    throw Error(ErrorCode::LayoutMismatch, "specialize needs one power per variable");
  }
  UnivariatePolynomial out;
  for (const auto& [mono, c] : p.terms()) {
    int e = 0;
    for (int s = 0; s < p.layout().slots(); ++s) e += powers[s] * mono[s];
    out.coeffs[e] += c;
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// --- Serialization ---------------------------------------------------------

std::string to_text(const Enumerator& p) {
  if (p.is_zero()) return "0\n";
  const auto names = p.layout().names();
  std::ostringstream os;
  for (const auto& [mono, c] : p.sorted_terms()) {
    os << (sgn(c) < 0 ? "-" : "+") << Rational(abs(c)).get_str();
    for (int s = 0; s < p.layout().slots(); ++s) os << '*' << names[s] << '^' << static_cast<int>(mono[s]);
    os << '\n';
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(const std::string& text, const std::vector<std::string>& names, Naming naming)
      : text_(text), names_(names), naming_(naming) {}

  // Returns (monomial, coefficient) pairs.
  std::vector<std::pair<Monomial, Rational>> parse() {
    std::vector<std::pair<Monomial, Rational>> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    while (!at_end()) {
      out.push_back(parse_term(out.empty()));
      skip_ws();
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Rational> parse_term(bool first) {
    Rational coef = 1;
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') coef = -1;
      ++pos_;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    Monomial mono;
    bool any_factor = false;
    bool after_star = false;
    while (true) {
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') {
        if (after_star) fail("dangling '*'");
        break;
      }
      if (peek() == '*') {
        if (!any_factor || after_star) fail("dangling '*'");
        after_star = true;
        ++pos_;
        continue;
      }
      after_star = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational num(parse_integer());
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          Integer den = parse_integer();
          if (den == 0) fail("zero denominator");
          num /= Rational(den);
        }
        coef *= num;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_++;
        if (naming_ == Naming::Canonical) {
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        const std::string name = text_.substr(start, pos_ - start);
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) fail("unknown variable '" + name + "'");
        int exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          exp = static_cast<int>(parse_integer().get_si());
        }
        const int slot = static_cast<int>(it - names_.begin());
        if (mono[slot] + exp > 255) fail("exponent too large");
        mono[slot] = static_cast<std::uint8_t>(mono[slot] + exp);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      any_factor = true;
    }
    if (!any_factor) fail("empty term");
    return {mono, coef};
  }

  const std::string& text_;
  const std::vector<std::string>& names_;
  Naming naming_;
  std::size_t pos_ = 0;
};

}  // namespace

Enumerator parse_enumerator(const std::string& text, VarLayout layout, Naming naming, int degree) {
  const auto names = layout.names(naming);
  const auto terms = TermParser(text, names, naming).parse();
  if (degree < 0) {
    for (const auto& [m, c] : terms) {
      if (sgn(c) != 0) {
        degree = m.degree();
        break;
      }
    }
  }
  if (degree < 0) throw Error(ErrorCode::ParseError, "cannot infer the degree of the zero polynomial");
  Enumerator e(layout, degree);
  for (const auto& [m, c] : terms) {
    if (sgn(c) != 0) e.add_term(m, c);
  }
  return e;
}

std::string to_json(const Enumerator& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.layout().names();
  j["degree"] = p.degree();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [mono, c] : p.sorted_terms()) {
    std::vector<int> exps;
    for (int s = 0; s < p.layout().slots(); ++s) exps.push_back(mono[s]);
    nlohmann::ordered_json t;
    t["coef"] = c.get_str();
    t["exps"] = exps;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Enumerator from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    VarLayout layout;
    for (const auto& v : vars) {
      if (v.size() >= 2 && v[0] == 'x') ++layout.x_count;
      if (v.size() >= 2 && v[0] == 'y') ++layout.y_count;
    }
    if (layout.slots() != static_cast<int>(vars.size()) || layout.names() != vars) {
      throw Error(ErrorCode::ParseError, "vars must be z, x0.., y0.. in order");
    }
    Enumerator e(layout, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto exps = t.at("exps").get<std::vector<int>>();
      if (exps.size() != vars.size()) throw Error(ErrorCode::ParseError, "exps length does not match vars");
      Rational c;
      if (c.set_str(t.at("coef").get<std::string>(), 10) != 0 || sgn(c.get_den()) == 0) {
        throw Error(ErrorCode::ParseError, "bad coefficient");
      }
      c.canonicalize();
      e.add_term(make_monomial(exps), c);
    }
    return e;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace liftenum
