#include "kbound/decide.hpp"

#include "kbound/errors.hpp"
#include "kbound/polyring.hpp"
#include "kbound/projection.hpp"
#include "kbound/realroots.hpp"

#include <algorithm>
#include <functional>

namespace kbound {

namespace {

using Point = std::map<std::string, Rational>;
using SignOracle = std::function<int(const Point&)>;

// Small grid tried before any projection work; a negative value found here is
// already a valid witness.
constexpr long kProbeValues[] = {0, 1, -1, 2, -2};
constexpr std::size_t kProbeMaxVars = 4;

std::optional<Point> probe_grid(const std::vector<std::string>& vars, const SignOracle& oracle) {
  if (vars.size() > kProbeMaxVars) return std::nullopt;
  constexpr std::size_t m = sizeof(kProbeValues) / sizeof(kProbeValues[0]);
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Point pt;
    for (std::size_t i = 0; i < vars.size(); ++i) pt[vars[i]] = Rational(kProbeValues[idx[i]]);
    if (oracle(pt) < 0) return pt;
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == m) idx[j++] = 0;
    if (j == idx.size()) return std::nullopt;
  }
}

// Replaces coordinates by nearby integers or halves while the value stays negative.
Point minimize_witness(Point w, const std::vector<std::string>& vars, const SignOracle& oracle) {
  for (const auto& v : vars) {
    const Rational t = w[v];
    if (is_integer(t)) continue;
    Integer f = floor(t);
    Integer r = floor(t + Rational(1, 2));
    Integer h = floor(2 * t + Rational(1, 2));
    std::vector<Rational> tries{Rational(r), Rational(f), Rational(f + 1), make_rational(h, 2)};
    for (const auto& c : tries) {
      Point trial = w;
      trial[v] = c;
      if (oracle(trial) < 0) {
        w = std::move(trial);
        break;
      }
    }
  }
  return w;
}

std::vector<Rational> samples_for(const std::vector<MultiPoly>& univariates) {
  MultiPoly prod(1);
  for (const auto& p : univariates) {
    if (p.is_zero() || p.is_constant()) continue;
    prod = prod * squarefree_part(p);
  }
  if (prod.is_constant()) return {Rational(0)};
  return sample_between(isolate_real_roots(squarefree_part(prod)));
}

class OpenCellSearch {
 public:
  OpenCellSearch(std::vector<std::string> order, SignOracle oracle) : order_(std::move(order)), oracle_(std::move(oracle)) {}

  // Returns a point with negative oracle value, or nullopt when every open
  // cell sample is nonnegative. Throws DegenerateProjection.
  std::optional<Point> run(const std::vector<MultiPoly>& top) {
    const std::size_t n = order_.size();
    sets_.assign(n, {});
    for (const auto& p : top) {
      if (!p.is_constant()) sets_[0].push_back(normalize(p));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::string> keep(order_.begin() + static_cast<long>(i) + 1, order_.end());
      sets_[i + 1] = decider_projection(sets_[i], order_[i], keep);
    }
    Point pt;
    return lift(n - 1, pt);
  }

 private:
  std::optional<Point> lift(std::size_t level, Point& pt) {
    std::vector<MultiPoly> uni;
    for (const auto& p : sets_[level]) {
      MultiPoly s = substitute(p, pt);
      if (!s.is_zero()) uni.push_back(std::move(s));
    }
    for (const auto& s : samples_for(uni)) {
      pt[order_[level]] = s;
      if (level == 0) {
        if (oracle_(pt) < 0) return pt;
      } else if (auto found = lift(level - 1, pt)) {
        return found;
      }
    }
    pt.erase(order_[level]);
    return std::nullopt;
  }

  std::vector<std::string> order_;
  SignOracle oracle_;
  std::vector<std::vector<MultiPoly>> sets_;
};

std::vector<std::string> used_order(const std::vector<MultiPoly>& polys, const std::vector<std::string>& vars) {
  std::vector<std::string> order;
  for (const auto& v : vars) {
    bool used = std::any_of(polys.begin(), polys.end(), [&](const MultiPoly& p) { return p.depends_on(v); });
    if (used && std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  return order;
}

void require_covered(const MultiPoly& p, const std::vector<std::string>& vars, const std::string& skip = {}) {
  for (const auto& v : p.variables()) {
    if (v == skip) continue;
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw UsageError("variable " + v + " is not in the decision variable list");
    }
  }
}

Verdict search(const std::vector<MultiPoly>& top, const std::vector<std::string>& order, const SignOracle& oracle) {
  if (order.empty()) {
    Point empty;
    return oracle(empty) < 0 ? Verdict::fails(empty) : Verdict::holds();
  }
  if (auto w = probe_grid(order, oracle)) return Verdict::fails(minimize_witness(*w, order, oracle));
  try {
    OpenCellSearch s(order, oracle);
    if (auto w = s.run(top)) return Verdict::fails(minimize_witness(*w, order, oracle));
  } catch (const DegenerateProjection&) {
    return Verdict::undecided("projection degenerate");
  }
  return Verdict::holds();
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  root = make_rational(n, d);
  return true;
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::HoldsForAll:
      return "holds-for-all";
    case VerdictKind::FailsWitness:
      return "fails";
    case VerdictKind::Undecided:
      return "undecided";
  }
  return "undecided";
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Decreasing:
      return "decreasing";
    case Monotonicity::Increasing:
      return "increasing";
    case Monotonicity::Indefinite:
      return "indefinite";
  }
  return "indefinite";
}

Verdict nonneg_forall(const MultiPoly& p, const std::vector<std::string>& vars) {
  require_covered(p, vars);
  auto order = used_order({p}, vars);
  SignOracle oracle = [&p](const Point& pt) { return sign(eval_at(p, pt)); };
  return search({p}, order, oracle);
}

int section_sign_at(const MultiPoly& g, const SectionSpec& section, const Point& point) {
  MultiPoly gu = substitute(g, point);
  if (gu.is_constant()) return sign(gu.constant_value());
  if (gu.variables().size() != 1 || gu.variables()[0] != section.aux) {
    throw UsageError("section sign query leaves unassigned variables in " + to_string(gu));
  }
  Rational r0 = eval_at(section.radicand, point);
  if (r0 < 0) throw UsageError("radicand is negative at a sample point");
  Rational root;
  if (is_rational_square(r0, root)) return sign(eval_at(gu, {{section.aux, root}}));
  MultiPoly u = MultiPoly::variable(section.aux);
  AlgebraicNumber alpha = make_algebraic(u * u - MultiPoly(r0), {Rational(0), std::max(Rational(1), r0)});
  return algnum_sign_at(alpha, gu);
}

Verdict nonneg_forall_section(const MultiPoly& g, const SectionSpec& section, const std::vector<std::string>& vars) {
  require_covered(g, vars, section.aux);
  require_covered(section.radicand, vars);
  Verdict r = nonneg_forall(section.radicand, vars);
  if (r.is_fails()) throw UsageError("radicand " + to_string(section.radicand) + " is not globally nonnegative");
  if (r.is_undecided()) return Verdict::undecided("could not verify the radicand is nonnegative");
  if (!g.depends_on(section.aux)) return nonneg_forall(g, vars);
  MultiPoly u = MultiPoly::variable(section.aux);
  MultiPoly res = resultant(g, u * u - section.radicand, section.aux);
  if (res.is_zero()) return Verdict::undecided("section resultant vanishes identically");
  std::vector<MultiPoly> top{res, section.radicand};
  auto order = used_order({res, section.radicand, g}, vars);
  order.erase(std::remove(order.begin(), order.end(), section.aux), order.end());
  SignOracle oracle = [&](const Point& pt) { return section_sign_at(g, section, pt); };
  return search(top, order, oracle);
}

Verdict nonneg_forall_sections(const MultiPoly& g, const std::vector<SectionSpec>& sections,
                               const std::vector<std::string>& vars) {
  std::vector<const SectionSpec*> used;
  for (const auto& s : sections) {
    if (g.depends_on(s.aux)) used.push_back(&s);
  }
  if (used.empty()) return nonneg_forall(g, vars);
  if (used.size() > 1) return Verdict::undecided("more than one radical section in one test");
  return nonneg_forall_section(g, *used.front(), vars);
}

MonotonicityResult monotonicity_class(const MultiPoly& F, const std::string& param, const std::vector<std::string>& vars,
                                      const std::vector<SectionSpec>& sections) {
  if (!F.depends_on(param)) throw UsageError("objective does not depend on the parameter " + param);
  MultiPoly d = derivative(F, param);
  std::vector<std::string> all = vars;
  if (d.depends_on(param)) all.push_back(param);
  MonotonicityResult out;
  Verdict dec = nonneg_forall_sections(-d, sections, all);
  if (dec.is_holds()) {
    out.kind = Monotonicity::Decreasing;
    return out;
  }
  Verdict inc = nonneg_forall_sections(d, sections, all);
  if (inc.is_holds()) {
    out.kind = Monotonicity::Increasing;
    return out;
  }
  if (dec.is_undecided() || inc.is_undecided()) {
    out.caveat = "monotonicity test undecided: " + (dec.is_undecided() ? *dec.reason : *inc.reason);
  }
  return out;
}

Verdict endpoint_test(const MultiPoly& F, const std::string& param, const Rational& value,
                      const std::vector<std::string>& vars, const std::vector<SectionSpec>& sections) {
  return nonneg_forall_sections(substitute(F, param, value), sections, vars);
}

}  // namespace kbound
