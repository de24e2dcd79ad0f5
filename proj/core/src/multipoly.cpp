#include "kbound/multipoly.hpp"

#include "kbound/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kbound {

namespace {

using Term = MultiPoly::Term;
using Exponents = MultiPoly::Exponents;

bool lex_greater(const Exponents& a, const Exponents& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Exponent vectors of `terms` re-indexed from `from` to the superset `to`.
std::vector<Term> remap(const std::vector<Term>& terms, const std::vector<std::string>& from,
                        const std::vector<std::string>& to) {
  if (from == to) return terms;
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    pos[i] = static_cast<std::size_t>(std::lower_bound(to.begin(), to.end(), from[i]) - to.begin());
  }
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Exponents e(to.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) e[pos[i]] = t.exps[i];
    out.push_back({std::move(e), t.coeff});
  }
  return out;
}

// Merge two decreasing-sorted term lists over the same variables, b scaled by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && lex_greater(a[i].exps, b[j].exps))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || lex_greater(b[j].exps, a[i].exps)) {
      out.push_back({b[j].exps, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.push_back({Exponents{1}, Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exps.size() != vars.size()) throw UsageError("exponent vector arity does not match variable list");
  }
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (vars[order[i]] == vars[order[i - 1]]) throw UsageError("duplicate variable name: " + vars[order[i]]);
  }
  MultiPoly p;
  p.vars_.reserve(vars.size());
  for (auto i : order) p.vars_.push_back(vars[i]);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    Exponents e(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) e[i] = t.exps[order[i]];
    p.terms_.push_back({std::move(e), std::move(t.coeff)});
  }
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return lex_greater(a.exps, b.exps); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exps == t.exps) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);

  std::vector<bool> used(vars_.size(), false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i] > 0) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) nv.push_back(vars_[i]);
  }
  for (auto& t : terms_) {
    Exponents e;
    e.reserve(nv.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (used[i]) e.push_back(t.exps[i]);
    }
    t.exps = std::move(e);
  }
  vars_ = std::move(nv);
  // Dropping all-zero columns preserves the lexicographic order.
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!vars_.empty()) throw UsageError("constant_value of a non-constant polynomial");
  return terms_.front().coeff;
}

int MultiPoly::var_index(std::string_view v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return -1;
  return static_cast<int>(it - vars_.begin());
}

bool MultiPoly::depends_on(std::string_view v) const { return var_index(v) >= 0; }

int MultiPoly::degree(std::string_view v) const {
  if (terms_.empty()) return -1;
  int idx = var_index(v);
  if (idx < 0) return 0;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[static_cast<std::size_t>(idx)]);
  return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, std::accumulate(t.exps.begin(), t.exps.end(), std::uint32_t{0}));
  return static_cast<int>(d);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  auto vars = union_vars(vars_, o.vars_);
  auto a = remap(terms_, vars_, vars);
  auto b = remap(o.terms_, o.vars_, vars);
  terms_ = merge_terms(a, b, +1);
  vars_ = std::move(vars);
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  auto vars = union_vars(vars_, o.vars_);
  auto a = remap(terms_, vars_, vars);
  auto b = remap(o.terms_, o.vars_, vars);
  terms_ = merge_terms(a, b, -1);
  vars_ = std::move(vars);
  canonicalize();
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    vars_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  auto vars = union_vars(a.vars_, b.vars_);
  auto ta = remap(a.terms_, a.vars_, vars);
  auto tb = remap(b.terms_, b.vars_, vars);
  std::vector<Term> prod;
  prod.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = x.exps[i] + y.exps[i];
      prod.push_back({std::move(e), x.coeff * y.coeff});
    }
  }
  MultiPoly r;
  r.vars_ = std::move(vars);
  r.terms_ = std::move(prod);
  r.canonicalize();
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_mono = std::any_of(t.exps.begin(), t.exps.end(), [](std::uint32_t e) { return e > 0; });
    bool wrote = false;
    if (!has_mono || c != 1) {
      os << to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (wrote) os << "*";
      os << p.variables()[i];
      if (t.exps[i] > 1) os << "^" << t.exps[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace kbound
