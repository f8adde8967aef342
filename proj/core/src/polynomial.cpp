#include "apoly/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iterator>
#include <sstream>

namespace apoly {

namespace {

std::atomic<std::size_t> g_term_limit{1'000'000};

void check_term_limit(std::size_t terms) {
  const std::size_t limit = g_term_limit.load(std::memory_order_relaxed);
  if (terms > limit) throw TermLimitExceeded(terms, limit);
}

std::vector<VarName> union_vars(const std::vector<VarName>& a, const std::vector<VarName>& b) {
  std::vector<VarName> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::ptrdiff_t index_of(const std::vector<VarName>& vars, std::string_view name) {
  auto it = std::lower_bound(vars.begin(), vars.end(), name,
                             [](const VarName& v, std::string_view n) { return v.str() < n; });
  if (it == vars.end() || it->str() != name) return -1;
  return it - vars.begin();
}

Monomial to_monomial(const std::vector<VarName>& vars, const std::vector<Exponent>& exps) {
  Monomial m;
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (exps[k] != 0) m = m * Monomial::of(vars[k], exps[k]);
  return m;
}

std::vector<Exponent> to_exps(const std::vector<VarName>& vars, const Monomial& m) {
  std::vector<Exponent> exps(vars.size(), 0);
  for (const auto& [v, e] : m.factors()) exps[static_cast<std::size_t>(index_of(vars, v.str()))] = e;
  return exps;
}

/// Terms of p re-expressed over `vars`, a sorted superset of p's variables.
std::vector<LaurentPolynomial::Term> align(const LaurentPolynomial& p,
                                           const std::vector<VarName>& vars) {
  std::vector<std::size_t> slot;
  for (const auto& v : p.variables())
    slot.push_back(static_cast<std::size_t>(index_of(vars, v.str())));
  std::vector<LaurentPolynomial::Term> out;
  out.reserve(p.term_count());
  for (const auto& t : p.raw_terms()) {
    std::vector<Exponent> exps(vars.size(), 0);
    for (std::size_t k = 0; k < slot.size(); ++k) exps[slot[k]] = t.exps[k];
    out.push_back({std::move(exps), t.coeff});
  }
  return out;
}

std::vector<VarName> vars_of(const Monomial& m) {
  std::vector<VarName> vars;
  for (const auto& [v, e] : m.factors()) vars.push_back(v);
  return vars;
}

}  // namespace

// ---------------------------------------------------------------------------
// VarName / Monomial

bool is_valid_var_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u < 0x80 && (std::isalnum(u) || c == '_');
  });
}

VarName::VarName(std::string name) : name_(std::move(name)) {
  if (!is_valid_var_name(name_)) throw InvalidVarName(name_);
}

Monomial::Monomial(std::initializer_list<std::pair<VarName, Exponent>> factors) {
  for (const auto& [v, e] : factors) set(v, exponent(v.str()) + e);
}

Monomial Monomial::of(const VarName& var, Exponent e) {
  Monomial m;
  m.set(var, e);
  return m;
}

void Monomial::set(const VarName& var, Exponent e) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const auto& f, const VarName& v) { return f.first < v; });
  if (it != factors_.end() && it->first == var) {
    if (e == 0)
      factors_.erase(it);
    else
      it->second = e;
  } else if (e != 0) {
    factors_.insert(it, {var, e});
  }
}

Exponent Monomial::exponent(std::string_view var) const noexcept {
  for (const auto& [v, e] : factors_)
    if (v.str() == var) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [v, e] : other.factors_) out.set(v, out.exponent(v.str()) + e);
  return out;
}

Monomial Monomial::pow(Exponent e) const {
  Monomial out;
  if (e == 0) return out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.second *= e;
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  while (i < fa.size() || j < fb.size()) {
    Exponent ea = 0, eb = 0;
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      ea = fa[i++].second;
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      eb = fb[j++].second;
    } else {
      ea = fa[i++].second;
      eb = fb[j++].second;
    }
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial LaurentPolynomial::constant(const Integer& c) {
  LaurentPolynomial f;
  if (c != 0) f.terms_.push_back({{}, c});
  return f;
}

LaurentPolynomial LaurentPolynomial::variable(const VarName& v) {
  return monomial(1, Monomial::of(v));
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, const Monomial& m) {
  LaurentPolynomial f;
  if (c == 0) return f;
  f.vars_ = vars_of(m);
  f.terms_.push_back({to_exps(f.vars_, m), c});
  return f;
}

LaurentPolynomial LaurentPolynomial::from_terms(
    std::span<const std::pair<Monomial, Integer>> terms) {
  std::vector<VarName> vars;
  for (const auto& [m, c] : terms) vars = union_vars(vars, vars_of(m));
  std::vector<Term> raw;
  raw.reserve(terms.size());
  for (const auto& [m, c] : terms) raw.push_back({to_exps(vars, m), c});
  return from_raw(std::move(vars), std::move(raw));
}

LaurentPolynomial LaurentPolynomial::from_raw(std::vector<VarName> vars, std::vector<Term> terms) {
  if (!std::is_sorted(vars.begin(), vars.end()) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    // Re-express over the sorted, deduplicated variable list.
    std::vector<VarName> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& t : terms) {
      std::vector<Exponent> exps(sorted.size(), 0);
      for (std::size_t k = 0; k < vars.size(); ++k)
        exps[static_cast<std::size_t>(index_of(sorted, vars[k].str()))] += t.exps[k];
      t.exps = std::move(exps);
    }
    vars = std::move(sorted);
  }
  LaurentPolynomial f;
  f.vars_ = std::move(vars);
  f.terms_ = std::move(terms);
  f.canonicalize();
  return f;
}

void LaurentPolynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exps < b.exps; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);

  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_)
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (t.exps[k] != 0) used[k] = true;
  if (std::find(used.begin(), used.end(), false) == used.end()) return;

  std::vector<VarName> vars;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) vars.push_back(vars_[k]);
  for (auto& t : terms_) {
    std::vector<Exponent> exps;
    exps.reserve(vars.size());
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (used[k]) exps.push_back(t.exps[k]);
    t.exps = std::move(exps);
  }
  vars_ = std::move(vars);
}

bool LaurentPolynomial::involves(std::string_view var) const noexcept {
  return index_of(vars_, var) >= 0;
}

std::vector<std::pair<Monomial, Integer>> LaurentPolynomial::terms() const {
  std::vector<std::pair<Monomial, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(to_monomial(vars_, t.exps), t.coeff);
  return out;
}

Integer LaurentPolynomial::coefficient(const Monomial& m) const {
  for (const auto& [v, e] : m.factors())
    if (!involves(v.str())) return 0;
  const auto exps = to_exps(vars_, m);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const std::vector<Exponent>& e) { return t.exps < e; });
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

Exponent LaurentPolynomial::degree_in(std::string_view var) const noexcept {
  const auto idx = index_of(vars_, var);
  if (idx < 0 || terms_.empty()) return 0;
  Exponent best = terms_.front().exps[static_cast<std::size_t>(idx)];
  for (const auto& t : terms_) best = std::max(best, t.exps[static_cast<std::size_t>(idx)]);
  return best;
}

Exponent LaurentPolynomial::min_degree_in(std::string_view var) const noexcept {
  const auto idx = index_of(vars_, var);
  if (idx < 0 || terms_.empty()) return 0;
  Exponent best = terms_.front().exps[static_cast<std::size_t>(idx)];
  for (const auto& t : terms_) best = std::min(best, t.exps[static_cast<std::size_t>(idx)]);
  return best;
}

std::vector<LaurentPolynomial> LaurentPolynomial::coefficients_in(std::string_view var) const {
  const auto idx = index_of(vars_, var);
  if (idx < 0) return {*this};
  if (min_degree_in(var) < 0) throw LaurentInEliminationVar(std::string(var));
  const auto k = static_cast<std::size_t>(idx);
  std::vector<VarName> rest = vars_;
  rest.erase(rest.begin() + idx);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    std::vector<Exponent> exps = t.exps;
    exps.erase(exps.begin() + idx);
    buckets[static_cast<std::size_t>(t.exps[k])].push_back({std::move(exps), t.coeff});
  }
  std::vector<LaurentPolynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_raw(rest, std::move(b)));
  return out;
}

std::pair<Monomial, Integer> LaurentPolynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading_term");
  return {to_monomial(vars_, terms_.back().exps), terms_.back().coeff};
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  auto vars = union_vars(vars_, other.vars_);
  auto mine = align(*this, vars);
  auto theirs = align(other, vars);
  mine.insert(mine.end(), std::make_move_iterator(theirs.begin()),
              std::make_move_iterator(theirs.end()));
  vars_ = std::move(vars);
  terms_ = std::move(mine);
  canonicalize();
  check_term_limit(terms_.size());
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = multiply(*this, other);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return multiply(a, b);
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(1);
  LaurentPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e != 0) base = multiply(base, base);
  }
  return result;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].exps != b.terms_[k].exps || a.terms_[k].coeff != b.terms_[k].coeff)
      return false;
  return true;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = abs(t.coeff);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Monomial m = to_monomial(vars_, t.exps);
    if (m.is_one())
      out << magnitude.get_str();
    else if (magnitude == 1)
      out << m.to_string();
    else
      out << magnitude.get_str() << '*' << m.to_string();
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPolynomial multiply(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  auto vars = union_vars(f.variables(), g.variables());
  const auto a = align(f, vars);
  const auto b = align(g, vars);
  std::vector<LaurentPolynomial::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      std::vector<Exponent> exps(vars.size());
      for (std::size_t k = 0; k < vars.size(); ++k) exps[k] = ta.exps[k] + tb.exps[k];
      prod.push_back({std::move(exps), ta.coeff * tb.coeff});
    }
  }
  auto out = LaurentPolynomial::from_raw(std::move(vars), std::move(prod));
  check_term_limit(out.term_count());
  return out;
}

Integer content(const LaurentPolynomial& f) {
  Integer g = 0;
  for (const auto& t : f.raw_terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPolynomial clear_monomial(const LaurentPolynomial& f) {
  if (f.is_zero()) return f;
  const auto& vars = f.variables();
  std::vector<Exponent> low = f.raw_terms().front().exps;
  for (const auto& t : f.raw_terms())
    for (std::size_t k = 0; k < vars.size(); ++k) low[k] = std::min(low[k], t.exps[k]);
  std::vector<LaurentPolynomial::Term> terms(f.raw_terms().begin(), f.raw_terms().end());
  for (auto& t : terms)
    for (std::size_t k = 0; k < vars.size(); ++k) t.exps[k] -= low[k];
  return LaurentPolynomial::from_raw(vars, std::move(terms));
}

LaurentPolynomial fix_sign(const LaurentPolynomial& f) {
  if (f.is_zero() || f.raw_terms().back().coeff > 0) return f;
  return -f;
}

LaurentPolynomial normalize(const LaurentPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("normalize");
  const Integer c = content(f);
  std::vector<LaurentPolynomial::Term> terms(f.raw_terms().begin(), f.raw_terms().end());
  for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return fix_sign(clear_monomial(LaurentPolynomial::from_raw(f.variables(), std::move(terms))));
}

LaurentPolynomial substitute_monomials(const LaurentPolynomial& f, const MonomialMap& map) {
  std::vector<VarName> out_vars;
  std::vector<const Monomial*> images;
  for (const auto& v : f.variables()) {
    auto it = map.find(v);
    if (it == map.end()) throw UnassignedVariable(v.str());
    images.push_back(&it->second);
    out_vars = union_vars(out_vars, vars_of(it->second));
  }
  std::vector<std::vector<Exponent>> image_exps;
  for (const auto* m : images) image_exps.push_back(to_exps(out_vars, *m));

  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.raw_terms()) {
    std::vector<Exponent> exps(out_vars.size(), 0);
    for (std::size_t k = 0; k < images.size(); ++k)
      for (std::size_t j = 0; j < out_vars.size(); ++j) exps[j] += t.exps[k] * image_exps[k][j];
    terms.push_back({std::move(exps), t.coeff});
  }
  return LaurentPolynomial::from_raw(std::move(out_vars), std::move(terms));
}

LaurentPolynomial specialize(const LaurentPolynomial& f, const VarName& var, const Integer& value) {
  const auto idx = index_of(f.variables(), var.str());
  if (idx < 0) return f;
  const auto k = static_cast<std::size_t>(idx);
  if (f.min_degree_in(var.str()) < 0) {
    if (value == 0) throw NegativeExponentAtZero(var.str());
    if (abs(value) != 1) throw NonIntegralSpecialization(var.str());
  }
  std::vector<VarName> rest = f.variables();
  rest.erase(rest.begin() + idx);
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& t : f.raw_terms()) {
    const Exponent e = t.exps[k];
    Integer factor;
    if (value == 0) {
      if (e != 0) continue;
      factor = 1;
    } else if (abs(value) == 1) {
      factor = (value < 0 && (e % 2 != 0)) ? -1 : 1;
    } else {
      mpz_pow_ui(factor.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e));
    }
    std::vector<Exponent> exps = t.exps;
    exps.erase(exps.begin() + idx);
    terms.push_back({std::move(exps), t.coeff * factor});
  }
  return LaurentPolynomial::from_raw(std::move(rest), std::move(terms));
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g) {
  if (g.is_zero()) throw ZeroDivisor();
  if (f.is_zero()) return LaurentPolynomial{};

  const auto vars = union_vars(f.variables(), g.variables());
  const std::size_t nv = vars.size();
  const auto fa = align(f, vars);
  const auto ga = align(g, vars);

  // In an integral domain max/min degrees add, so every quotient exponent
  // lies in a box fixed by f and g.
  std::vector<Exponent> lo(nv), hi(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    Exponent fl = fa.front().exps[k], fh = fl, gl = ga.front().exps[k], gh = gl;
    for (const auto& t : fa) fl = std::min(fl, t.exps[k]), fh = std::max(fh, t.exps[k]);
    for (const auto& t : ga) gl = std::min(gl, t.exps[k]), gh = std::max(gh, t.exps[k]);
    lo[k] = fl - gl;
    hi[k] = fh - gh;
    if (lo[k] > hi[k]) return std::nullopt;
  }

  std::map<std::vector<Exponent>, Integer> rem;
  for (const auto& t : fa) rem.emplace(t.exps, t.coeff);
  const auto& glead = ga.back();

  std::vector<LaurentPolynomial::Term> quotient;
  Integer qc;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    if (!mpz_divisible_p(top->second.get_mpz_t(), glead.coeff.get_mpz_t())) return std::nullopt;
    std::vector<Exponent> qe(nv);
    for (std::size_t k = 0; k < nv; ++k) {
      qe[k] = top->first[k] - glead.exps[k];
      if (qe[k] < lo[k] || qe[k] > hi[k]) return std::nullopt;
    }
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), glead.coeff.get_mpz_t());
    for (const auto& t : ga) {
      std::vector<Exponent> e(nv);
      for (std::size_t k = 0; k < nv; ++k) e[k] = qe[k] + t.exps[k];
      auto [it, inserted] = rem.try_emplace(std::move(e), 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({std::move(qe), qc});
    check_term_limit(quotient.size());
  }
  return LaurentPolynomial::from_raw(vars, std::move(quotient));
}

void set_term_limit(std::size_t limit) noexcept {
  g_term_limit.store(limit, std::memory_order_relaxed);
}

std::size_t term_limit() noexcept { return g_term_limit.load(std::memory_order_relaxed); }

}  // namespace apoly
