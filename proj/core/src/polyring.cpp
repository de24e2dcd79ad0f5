#include "kbound/polyring.hpp"

#include "kbound/detail/prs.hpp"
#include "kbound/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kbound {

namespace {

using Term = MultiPoly::Term;
using Exponents = MultiPoly::Exponents;

struct ExpGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

struct MultiPolyOps {
  MultiPoly zero() const { return {}; }
  MultiPoly one() const { return MultiPoly(1); }
  bool is_zero(const MultiPoly& p) const { return p.is_zero(); }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return a * b; }
  MultiPoly sub(const MultiPoly& a, const MultiPoly& b) const { return a - b; }
  MultiPoly neg(const MultiPoly& a) const { return -a; }
  MultiPoly div_exact(const MultiPoly& a, const MultiPoly& b) const {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("inexact division inside subresultant PRS");
    return *q;
  }
};

std::vector<std::string> union_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<std::string> out;
  std::set_union(a.variables().begin(), a.variables().end(), b.variables().begin(), b.variables().end(),
                 std::back_inserter(out));
  return out;
}

Integer lcm_of_denominators(const MultiPoly& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Integer coefficients are required; used on already integral inputs.
ZPoly to_zpoly_exact(const MultiPoly& p, std::string_view v) {
  if (p.is_zero()) return {};
  int idx = p.var_index(v);
  if (p.variables().size() > (idx >= 0 ? 1U : 0U)) throw UsageError("polynomial is not univariate in " + std::string(v));
  std::vector<Integer> c(static_cast<std::size_t>(std::max(p.degree(v), 0)) + 1, Integer(0));
  for (const auto& t : p.terms()) {
    std::size_t e = idx >= 0 ? t.exps[static_cast<std::size_t>(idx)] : 0;
    c[e] = t.coeff.get_num();
  }
  return ZPoly(std::move(c));
}

MultiPoly content_wrt(const MultiPoly& p, std::string_view v) {
  UniView view = univariate_view(p, v);
  std::vector<const MultiPoly*> cs;
  for (const auto& c : view.coeffs) {
    if (!c.is_zero()) cs.push_back(&c);
  }
  std::sort(cs.begin(), cs.end(), [](const MultiPoly* a, const MultiPoly* b) { return a->num_terms() < b->num_terms(); });
  MultiPoly g;
  for (const auto* c : cs) {
    g = multivar_gcd(g, *c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly primitive_wrt_var(const MultiPoly& p, std::string_view v) {
  MultiPoly c = content_wrt(p, v);
  if (c.is_constant()) return normalize(p);
  auto q = divide_exact(p, c);
  return normalize(*q);
}

std::vector<MultiPoly> coeff_vector(const MultiPoly& p, std::string_view v) {
  return univariate_view(p, v).coeffs;
}

MultiPoly from_coeff_vector(const std::vector<MultiPoly>& c, std::string_view v) {
  UniView view{MultiPoly{}, std::string(v), c};
  return reassemble(view);
}

// Small deterministic integer evaluation points for variable j in attempt s.
long probe_value(int attempt, std::size_t j) {
  static constexpr long kSeq[] = {2, -3, 5, 7, -1, 11, 4, -6, 3, 13, -2, 9};
  constexpr std::size_t n = sizeof(kSeq) / sizeof(kSeq[0]);
  return kSeq[(static_cast<std::size_t>(attempt) * 5 + j * 7) % n] + attempt;
}

// True when A and B, both of positive degree in v, certainly have no common
// factor of positive degree in v: a specialization of the other variables
// that keeps both leading coefficients nonzero and gives coprime images.
bool coprime_by_specialization(const MultiPoly& A, const MultiPoly& B, std::string_view v) {
  auto vars = union_vars(A, B);
  std::vector<std::string> others;
  for (const auto& x : vars) {
    if (x != v) others.push_back(x);
  }
  if (others.empty()) return false;
  const MultiPoly lcA = leading_coeff_and_degree(A, v).coeff;
  const MultiPoly lcB = leading_coeff_and_degree(B, v).coeff;
  int good = 0;
  for (int attempt = 0; attempt < 8 && good < 2; ++attempt) {
    std::map<std::string, Rational> pt;
    for (std::size_t j = 0; j < others.size(); ++j) pt[others[j]] = Rational(probe_value(attempt, j));
    if (eval_at(lcA, pt) == 0 || eval_at(lcB, pt) == 0) continue;
    ++good;
    ZPoly a = to_zpoly(substitute(A, pt), v);
    ZPoly b = to_zpoly(substitute(B, pt), v);
    if (gcd(a, b).degree() == 0) return true;
  }
  return false;
}

MultiPoly gcd_primitive_core(const MultiPoly& a, const MultiPoly& b);

// Exact resultant of integer-coefficient inputs, both of positive degree in v.
MultiPoly resultant_eval_interp(const MultiPoly& A, const MultiPoly& B, std::string_view v);

MultiPoly interpolate(const std::vector<Integer>& xs, const std::vector<MultiPoly>& ys, const std::string& w) {
  const std::size_t n = xs.size();
  bool all_const = std::all_of(ys.begin(), ys.end(), [](const MultiPoly& y) { return y.is_constant(); });
  if (all_const) {
    std::vector<Rational> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = ys[i].constant_value();
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = n - 1; i >= j; --i) {
        dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
        if (i == j) break;
      }
    }
    // Horner on the Newton form, dense in w.
    std::vector<Rational> acc{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
      std::vector<Rational> next(acc.size() + 1, Rational(0));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + 1] += acc[i];
        next[i] -= acc[i] * Rational(xs[k]);
      }
      next[0] += dd[k];
      acc = std::move(next);
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] != 0) terms.push_back({Exponents{static_cast<std::uint32_t>(i)}, acc[i]});
    }
    return MultiPoly::from_terms({w}, std::move(terms));
  }
  std::vector<MultiPoly> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) * (Rational(1) / Rational(xs[i] - xs[i - j]));
      if (i == j) break;
    }
  }
  MultiPoly wv = MultiPoly::variable(w);
  MultiPoly acc = dd[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = acc * (wv - MultiPoly(Rational(xs[k]))) + dd[k];
  }
  return acc;
}

MultiPoly resultant_integer(const MultiPoly& A, const MultiPoly& B, std::string_view v) {
  auto vars = union_vars(A, B);
  std::vector<std::string> others;
  for (const auto& x : vars) {
    if (x != v) others.push_back(x);
  }
  if (others.empty()) {
    return MultiPoly(Rational(resultant(to_zpoly_exact(A, v), to_zpoly_exact(B, v))));
  }
  return resultant_eval_interp(A, B, v);
}

MultiPoly resultant_eval_interp(const MultiPoly& A, const MultiPoly& B, std::string_view v) {
  const int da = A.degree(v);
  const int db = B.degree(v);
  auto vars = union_vars(A, B);
  std::string w;
  long best = -1;
  for (const auto& x : vars) {
    if (x == v) continue;
    long bound = static_cast<long>(db) * A.degree(x) + static_cast<long>(da) * B.degree(x);
    if (best < 0 || bound < best) {
      best = bound;
      w = x;
    }
  }
  const MultiPoly lcA = leading_coeff_and_degree(A, v).coeff;
  const MultiPoly lcB = leading_coeff_and_degree(B, v).coeff;
  std::vector<Integer> xs;
  std::vector<MultiPoly> ys;
  const auto needed = static_cast<std::size_t>(best + 1);
  for (long k = 0; xs.size() < needed; ++k) {
    long t = (k % 2 == 0) ? -(k / 2) : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
    Rational tv(t);
    if (substitute(lcA, w, tv).is_zero() || substitute(lcB, w, tv).is_zero()) continue;
    xs.emplace_back(t);
    ys.push_back(resultant_integer(substitute(A, w, tv), substitute(B, w, tv), v));
  }
  return interpolate(xs, ys, w);
}

// Integer image: returns (scale, scale * p) with integer coprime coefficients
// and scale > 0.
std::pair<Rational, MultiPoly> integer_image(const MultiPoly& p) {
  if (p.is_zero()) return {Rational(1), p};
  Integer l = lcm_of_denominators(p);
  MultiPoly q = p * Rational(l);
  Integer g = gcd_of_numerators(q);
  Rational scale = make_rational(l, g);
  return {scale, p * scale};
}

MultiPoly gcd_primitive_core(const MultiPoly& A, const MultiPoly& B) {
  // A, B normalized, both nonconstant.
  auto vars = union_vars(A, B);
  if (vars.size() == 1) {
    return normalize(from_zpoly(gcd(to_zpoly(A, vars[0]), to_zpoly(B, vars[0])), vars[0]));
  }
  std::string v;
  int best = -1;
  for (const auto& x : vars) {
    if (!A.depends_on(x) || !B.depends_on(x)) continue;
    int d = std::max(A.degree(x), B.degree(x));
    if (best < 0 || d < best) {
      best = d;
      v = x;
    }
  }
  if (v.empty()) return MultiPoly(1);  // no common variable
  MultiPoly cA = content_wrt(A, v);
  MultiPoly cB = content_wrt(B, v);
  MultiPoly gc = multivar_gcd(cA, cB);
  MultiPoly u = cA.is_constant() ? A : *divide_exact(A, cA);
  MultiPoly w = cB.is_constant() ? B : *divide_exact(B, cB);
  if (coprime_by_specialization(u, w, v)) return normalize(gc);
  if (u.degree(v) < w.degree(v)) std::swap(u, w);
  MultiPolyOps ops;
  MultiPoly g;
  while (true) {
    auto r = detail::pseudo_remainder(coeff_vector(u, v), coeff_vector(w, v), ops);
    if (r.empty()) {
      g = w;
      break;
    }
    if (r.size() == 1) {
      g = MultiPoly(1);
      break;
    }
    u = std::move(w);
    w = primitive_wrt_var(from_coeff_vector(r, v), v);
  }
  return normalize(gc * g);
}

}  // namespace

MultiPoly pow(const MultiPoly& p, long e) {
  if (e < 0) throw UsageError("negative exponent in polynomial power");
  MultiPoly result(1);
  MultiPoly base = p;
  auto n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

MultiPoly derivative(const MultiPoly& p, std::string_view v) {
  int idx = p.var_index(v);
  if (idx < 0) return {};
  auto i = static_cast<std::size_t>(idx);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exps[i] == 0) continue;
    Term d = t;
    d.coeff *= Rational(static_cast<unsigned long>(t.exps[i]));
    d.exps[i] -= 1;
    terms.push_back(std::move(d));
  }
  return MultiPoly::from_terms(p.variables(), std::move(terms));
}

MultiPoly substitute(const MultiPoly& p, std::string_view v, const MultiPoly& replacement) {
  if (!p.depends_on(v)) return p;
  if (replacement.is_constant()) return substitute(p, v, replacement.constant_value());
  UniView view = univariate_view(p, v);
  MultiPoly acc;
  for (std::size_t i = view.coeffs.size(); i-- > 0;) {
    acc = acc * replacement + view.coeffs[i];
  }
  return acc;
}

MultiPoly substitute(const MultiPoly& p, std::string_view v, const Rational& value) {
  int idx = p.var_index(v);
  if (idx < 0) return p;
  auto i = static_cast<std::size_t>(idx);
  std::vector<Rational> powers{Rational(1)};
  std::vector<Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    while (powers.size() <= t.exps[i]) powers.push_back(powers.back() * value);
    Term s = t;
    s.coeff *= powers[t.exps[i]];
    s.exps[i] = 0;
    terms.push_back(std::move(s));
  }
  return MultiPoly::from_terms(p.variables(), std::move(terms));
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  const auto& vars = p.variables();
  std::vector<const Rational*> val(vars.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it != point.end()) {
      val[i] = &it->second;
      any = true;
    }
  }
  if (!any) return p;
  std::vector<std::vector<Rational>> powers(vars.size());
  std::vector<Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Term s = t;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (val[i] == nullptr || t.exps[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= t.exps[i]) pw.push_back(pw.back() * *val[i]);
      s.coeff *= pw[t.exps[i]];
      s.exps[i] = 0;
    }
    terms.push_back(std::move(s));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

Rational eval_at(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  for (const auto& v : p.variables()) {
    if (point.find(v) == point.end()) throw UsageError("no value assigned to variable " + v);
  }
  return substitute(p, point).constant_value();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw UsageError("division by the zero polynomial");
  if (a.is_zero()) return MultiPoly{};
  if (b.is_constant()) return a * (Rational(1) / b.constant_value());
  for (const auto& v : b.variables()) {
    if (!a.depends_on(v)) return std::nullopt;
  }
  if (a.variables().size() == 1 && b.variables().size() == 1) {
    const std::string& v = a.variables()[0];
    auto [sa, A] = integer_image(a);
    auto [sb, B] = integer_image(b);
    auto q = try_div_exact(to_zpoly_exact(A, v), to_zpoly_exact(B, v));
    if (!q) return std::nullopt;
    return from_zpoly(*q, v) * (sb / sa);
  }
  // Sparse division in decreasing lex order; b's variables are a subset of a's.
  const auto& vars = a.variables();
  std::vector<std::size_t> pos;
  for (const auto& v : b.variables()) pos.push_back(static_cast<std::size_t>(a.var_index(v)));
  std::vector<Term> bt;
  bt.reserve(b.num_terms());
  for (const auto& t : b.terms()) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exps[i];
    bt.push_back({std::move(e), t.coeff});
  }
  std::map<Exponents, Rational, ExpGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exps, t.coeff);
  const Term& lead = bt.front();
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents qe(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (it->first[i] < lead.exps[i]) return std::nullopt;
      qe[i] = it->first[i] - lead.exps[i];
    }
    Rational qc = it->second / lead.coeff;
    for (const auto& t : bt) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = t.exps[i] + qe[i];
      auto [slot, inserted] = rem.try_emplace(std::move(e), Rational(0));
      slot->second -= qc * t.coeff;
      if (slot->second == 0) rem.erase(slot);
    }
    quot.push_back({std::move(qe), std::move(qc)});
  }
  return MultiPoly::from_terms(vars, std::move(quot));
}

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  auto [scale, q] = integer_image(p);
  if (q.leading_term().coeff < 0) q = -q;
  return q;
}

Rational normalization_scale(const MultiPoly& p) {
  if (p.is_zero()) return Rational(1);
  MultiPoly n = normalize(p);
  return p.leading_term().coeff / n.leading_term().coeff;
}

bool equal_up_to_constant(const MultiPoly& a, const MultiPoly& b) { return normalize(a) == normalize(b); }

LeadingCoeff leading_coeff_and_degree(const MultiPoly& p, std::string_view v) {
  if (p.is_zero()) return {MultiPoly{}, kDegreeOfZero};
  UniView view = univariate_view(p, v);
  return {view.coeffs.back(), static_cast<int>(view.coeffs.size()) - 1};
}

UniView univariate_view(const MultiPoly& p, std::string_view main_var) {
  UniView view;
  view.poly = p;
  view.main_var = std::string(main_var);
  if (p.is_zero()) return view;
  int idx = p.var_index(main_var);
  if (idx < 0) {
    view.coeffs.push_back(p);
    return view;
  }
  auto m = static_cast<std::size_t>(idx);
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < p.variables().size(); ++i) {
    if (i != m) rest.push_back(p.variables()[i]);
  }
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(p.degree(main_var)) + 1);
  for (const auto& t : p.terms()) {
    Exponents e;
    e.reserve(rest.size());
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (i != m) e.push_back(t.exps[i]);
    }
    buckets[t.exps[m]].push_back({std::move(e), t.coeff});
  }
  view.coeffs.reserve(buckets.size());
  for (auto& b : buckets) view.coeffs.push_back(MultiPoly::from_terms(rest, std::move(b)));
  return view;
}

MultiPoly reassemble(const UniView& view) {
  std::vector<std::string> vars;
  std::vector<Term> terms;
  for (const auto& c : view.coeffs) {
    for (const auto& x : c.variables()) vars.push_back(x);
  }
  vars.push_back(view.main_var);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto main = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), view.main_var) - vars.begin());
  for (std::size_t d = 0; d < view.coeffs.size(); ++d) {
    const auto& c = view.coeffs[d];
    std::vector<std::size_t> pos;
    for (const auto& x : c.variables()) {
      pos.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), x) - vars.begin()));
    }
    for (const auto& t : c.terms()) {
      Exponents e(vars.size(), 0);
      for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exps[i];
      e[main] = static_cast<std::uint32_t>(d);
      terms.push_back({std::move(e), t.coeff});
    }
  }
  return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

ZPoly to_zpoly(const MultiPoly& p, std::string_view v) {
  auto [scale, q] = integer_image(p);
  return to_zpoly_exact(q, v);
}

MultiPoly from_zpoly(const ZPoly& p, const std::string& v) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) terms.push_back({Exponents{static_cast<std::uint32_t>(i)}, Rational(p.coeffs()[i])});
  }
  return MultiPoly::from_terms({v}, std::move(terms));
}

MultiPoly multivar_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  MultiPoly A = normalize(a);
  MultiPoly B = normalize(b);
  if (A == B) return A;
  return gcd_primitive_core(A, B);
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw UsageError("squarefree part of the zero polynomial");
  MultiPoly P = normalize(p);
  if (P.is_constant()) return MultiPoly(1);
  if (P.variables().size() == 1) {
    const auto& v = P.variables()[0];
    return normalize(from_zpoly(squarefree_part(to_zpoly(P, v)), v));
  }
  MultiPoly g = P;
  for (const auto& v : P.variables()) {
    g = multivar_gcd(g, derivative(P, v));
    if (g.is_constant()) return P;
  }
  return normalize(*divide_exact(P, g));
}

MultiPoly squarefree_part_wrt(const MultiPoly& p, std::string_view v) {
  if (p.is_zero()) throw UsageError("squarefree part of the zero polynomial");
  MultiPoly P = normalize(p);
  MultiPoly d = derivative(P, v);
  if (d.is_zero()) return P;
  MultiPoly g = multivar_gcd(P, d);
  if (g.is_constant()) return P;
  return normalize(*divide_exact(P, g));
}

MultiPoly primitive_part_wrt(const MultiPoly& p, const std::vector<std::string>& vset) {
  if (p.is_zero()) throw UsageError("primitive part of the zero polynomial");
  const auto& vars = p.variables();
  std::vector<std::size_t> in_set;
  std::vector<std::string> rest;
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (std::find(vset.begin(), vset.end(), vars[i]) != vset.end()) {
      in_set.push_back(i);
    } else {
      rest.push_back(vars[i]);
      rest_pos.push_back(i);
    }
  }
  if (in_set.empty()) return MultiPoly(1);
  if (rest.empty()) return normalize(p);
  std::map<Exponents, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Exponents key;
    for (auto i : in_set) key.push_back(t.exps[i]);
    Exponents e;
    for (auto i : rest_pos) e.push_back(t.exps[i]);
    groups[key].push_back({std::move(e), t.coeff});
  }
  std::vector<MultiPoly> coeffs;
  for (auto& [key, terms] : groups) coeffs.push_back(MultiPoly::from_terms(rest, std::move(terms)));
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return a.num_terms() < b.num_terms(); });
  MultiPoly g;
  for (const auto& c : coeffs) {
    g = multivar_gcd(g, c);
    if (g.is_constant()) return normalize(p);
  }
  return normalize(*divide_exact(p, g));
}

MultiPoly powerfree(const MultiPoly& p, const std::vector<std::string>& vset) {
  if (p.is_zero()) throw UsageError("powerfree of the zero polynomial");
  MultiPoly q = primitive_part_wrt(p, vset);
  if (q.is_constant()) throw DegenerateProjection("no factor depends on the kept variables");
  return squarefree_part(q);
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::string_view v) {
  if (a.is_zero() || b.is_zero()) return {};
  const int da = a.degree(v);
  const int db = b.degree(v);
  if (da == 0 && db == 0) throw UsageError("resultant: both inputs are constant in " + std::string(v));
  if (da == 0) return pow(a, db);
  if (db == 0) return pow(b, da);
  auto [sa, A] = integer_image(a);
  auto [sb, B] = integer_image(b);
  MultiPoly r = resultant_integer(A, B, v);
  return r * (Rational(1) / (pow(sa, static_cast<unsigned long>(db)) * pow(sb, static_cast<unsigned long>(da))));
}

MultiPoly resultant_prs(const MultiPoly& a, const MultiPoly& b, std::string_view v) {
  if (a.is_zero() || b.is_zero()) return {};
  const int da = a.degree(v);
  const int db = b.degree(v);
  if (da == 0 && db == 0) throw UsageError("resultant: both inputs are constant in " + std::string(v));
  if (da == 0) return pow(a, db);
  if (db == 0) return pow(b, da);
  auto [sa, A] = integer_image(a);
  auto [sb, B] = integer_image(b);
  MultiPoly r = detail::subresultant_resultant(coeff_vector(A, v), coeff_vector(B, v), MultiPolyOps{});
  return r * (Rational(1) / (pow(sa, static_cast<unsigned long>(db)) * pow(sb, static_cast<unsigned long>(da))));
}

unsigned exponent_gcd(const MultiPoly& p, std::string_view v) {
  int idx = p.var_index(v);
  if (idx < 0) return 0;
  unsigned g = 0;
  for (const auto& t : p.terms()) g = std::gcd(g, static_cast<unsigned>(t.exps[static_cast<std::size_t>(idx)]));
  return g;
}

MultiPoly deflate_variable(const MultiPoly& p, std::string_view v, unsigned d) {
  int idx = p.var_index(v);
  if (idx < 0 || d <= 1) return p;
  auto i = static_cast<std::size_t>(idx);
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) {
    if (t.exps[i] % d != 0) throw UsageError("deflate_variable: exponent not divisible");
    t.exps[i] /= d;
  }
  return MultiPoly::from_terms(p.variables(), std::move(terms));
}

}  // namespace kbound
