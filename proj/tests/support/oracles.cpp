#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kbound::oracle {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  }
  return determinant(std::move(s));
}

Rational eval_dense(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

Rational eval_terms(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      const Rational& x = point.at(p.variables()[i]);
      for (std::uint32_t e = 0; e < t.exps[i]; ++e) v *= x;
    }
    total += v;
  }
  return total;
}

Rational grid_minimum(const MultiPoly& p, const Rational& bound, const Rational& step) {
  const auto& vars = p.variables();
  std::vector<Rational> axis;
  for (Rational x = -bound; x <= bound; x += step) axis.push_back(x);
  std::vector<std::size_t> idx(vars.size(), 0);
  bool first = true;
  Rational best = 0;
  while (true) {
    std::map<std::string, Rational> pt;
    for (std::size_t i = 0; i < vars.size(); ++i) pt[vars[i]] = axis[idx[i]];
    Rational v = eval_terms(p, pt);
    if (first || v < best) best = v;
    first = false;
    std::size_t k = 0;
    while (k < vars.size() && ++idx[k] == axis.size()) idx[k++] = 0;
    if (k == vars.size()) break;
  }
  return best;
}

std::vector<Rational> random_dense(std::mt19937_64& rng, int degree, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = dist(rng);
  while (c.back() == 0) c.back() = dist(rng);
  return c;
}

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_degree, int lo, int hi,
                      double density) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::vector<MultiPoly::Term> terms;
  std::vector<std::uint32_t> e(vars.size(), 0);
  while (true) {
    std::uint32_t total = 0;
    for (auto x : e) total += x;
    if (total <= static_cast<std::uint32_t>(max_degree) && keep(rng) < density) {
      int c = coeff(rng);
      if (c != 0) terms.push_back({e, Rational(c)});
    }
    std::size_t k = 0;
    while (k < e.size() && ++e[k] > static_cast<std::uint32_t>(max_degree)) e[k++] = 0;
    if (k == e.size()) break;
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

int count_sign_changes_on_grid(const std::vector<Rational>& c, const Rational& lo, const Rational& hi,
                               const Rational& step) {
  int changes = 0;
  int last = 0;
  for (Rational x = lo; x <= hi; x += step) {
    Rational v = eval_dense(c, x);
    int s = sgn(v);
    if (s == 0) {
      // An exact grid root counts once; the next nonzero sign restarts.
      ++changes;
      last = 0;
      continue;
    }
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

MultiPoly dense_to_poly(const std::vector<Rational>& c, const std::string& var) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i) terms.push_back({{static_cast<std::uint32_t>(i)}, c[i]});
  return MultiPoly::from_terms({var}, std::move(terms));
}

bool grid_finds_negative(const MultiPoly& p) {
  const auto& vars = p.variables();
  std::vector<std::pair<std::vector<std::uint32_t>, double>> terms;
  for (const auto& t : p.terms()) terms.push_back({t.exps, t.coeff.get_d()});
  auto eval = [&](double a, double b) {
    double s = 0;
    for (const auto& [e, c] : terms) {
      double m = c;
      if (!e.empty()) m *= std::pow(a, e[0]);
      if (e.size() > 1) m *= std::pow(b, e[1]);
      s += m;
    }
    return s;
  };
  for (int i = -32; i <= 32; ++i) {
    for (int j = -32; j <= 32; ++j) {
      if (vars.size() < 2 && j != -32) break;
      if (eval(i / 8.0, j / 8.0) < 0) return true;
    }
    if (vars.empty()) break;
  }
  return false;
}

DeciderTrial random_decider_trial(std::mt19937_64& rng, int trial) {
  std::uniform_int_distribution<int> nv(1, 2);
  std::uniform_int_distribution<int> deg(1, 4);
  std::vector<std::string> vars = nv(rng) == 1 ? std::vector<std::string>{"x"} : std::vector<std::string>{"x", "y"};
  MultiPoly p = random_poly(rng, vars, deg(rng), -3, 3, 0.6);
  if (trial % 2 == 1) {
    std::uniform_int_distribution<int> pos(1, 3);
    p = random_poly(rng, vars, 3, -2, 2, 0.5) + MultiPoly(pos(rng));
    for (const auto& name : vars) {
      MultiPoly t = MultiPoly::variable(name);
      p = p + MultiPoly(pos(rng)) * t * t * t * t;
    }
    std::vector<MultiPoly::Term> terms = p.terms();
    for (auto& t : terms) t.coeff = std::clamp(t.coeff, Rational(-3), Rational(3));
    p = MultiPoly::from_terms(p.variables(), std::move(terms));
  }
  return {p, vars};
}

}  // namespace kbound::oracle
