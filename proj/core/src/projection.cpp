#include "kbound/projection.hpp"

#include "kbound/polyring.hpp"

#include <algorithm>

namespace kbound {

namespace {

constexpr long kShears[] = {1, -1, 2, -2, 3};

// res(p, dp/dv, v) up to a nonzero constant and powers of its factors.
MultiPoly raw_discriminant(const MultiPoly& p, const std::string& v, unsigned& deflation) {
  unsigned d = exponent_gcd(p, v);
  deflation = 1;
  if (d >= 2) {
    // p = G(v^d): res(p, p') agrees with G(0)^(d-1) * res(G, G')^d up to a constant.
    MultiPoly g = deflate_variable(p, v, d);
    MultiPoly g0 = substitute(g, v, Rational(0));
    if (g0.is_zero()) return {};
    deflation = d;
    return g0 * resultant(g, derivative(g, v), v);
  }
  return resultant(p, derivative(p, v), v);
}

MultiPoly content_in(const MultiPoly& p, const std::string& v) {
  MultiPoly pp = primitive_part_wrt(p, {v});
  return normalize(*divide_exact(p, pp));
}

void push_unique(std::vector<MultiPoly>& out, const MultiPoly& p) {
  if (p.is_constant()) return;
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

void push_powerfree(std::vector<MultiPoly>& out, const MultiPoly& p, const std::vector<std::string>& keep) {
  if (p.is_zero() || p.is_constant()) return;
  try {
    push_unique(out, powerfree(p, keep));
  } catch (const DegenerateProjection&) {
    // Nothing depending on the kept variables: contributes no cell boundary.
  }
}

}  // namespace

MultiPoly project_step(const MultiPoly& p, const std::string& v, const std::vector<std::string>& keep,
                       ProjectionStep* record) {
  if (p.degree(v) < 1) throw UsageError("project_step: polynomial has degree 0 in " + v);
  ProjectionStep step;
  step.variable = v;
  step.input = p;
  MultiPoly raw = raw_discriminant(p, v, step.deflation);
  if (raw.is_zero()) {
    step.squarefree_retry = true;
    MultiPoly content = content_in(p, v);
    raw = raw_discriminant(squarefree_part_wrt(p, v), v, step.deflation) * content;
    if (raw.is_zero()) {
      std::string w;
      for (const auto& x : p.variables()) {
        if (x != v && std::find(keep.begin(), keep.end(), x) == keep.end()) {
          w = x;
          break;
        }
      }
      for (long lambda : kShears) {
        if (w.empty()) break;
        MultiPoly sheared =
            substitute(p, v, MultiPoly::variable(v) + MultiPoly(lambda) * MultiPoly::variable(w));
        raw = raw_discriminant(squarefree_part_wrt(sheared, v), v, step.deflation) * content_in(sheared, v);
        if (!raw.is_zero()) {
          step.shear = std::make_pair(w, lambda);
          break;
        }
      }
    }
  }
  if (raw.is_zero()) throw DegenerateProjection("identically zero resultant eliminating " + v);
  step.resultant = raw;
  step.result = powerfree(raw, keep);
  if (record != nullptr) *record = step;
  return step.result;
}

ProjectionTrace successive_projection(const MultiPoly& p, const std::vector<std::string>& elim_order,
                                      const std::string& param) {
  if (!p.depends_on(param)) throw UsageError("polynomial does not depend on the parameter " + param);
  ProjectionTrace trace;
  MultiPoly current = p;
  for (const auto& v : elim_order) {
    if (v == param || !current.depends_on(v)) continue;
    ProjectionStep step;
    try {
      current = project_step(current, v, {param}, &step);
    } catch (const DegenerateProjection& e) {
      trace.final = current;
      throw ProjectionCollapse(e.what(), trace);
    }
    trace.steps.push_back(std::move(step));
  }
  for (const auto& v : current.variables()) {
    if (v != param) throw UsageError("elimination order does not cover variable " + v);
  }
  trace.final = squarefree_part(current);
  return trace;
}

MultiPoly radical_eliminate(const MultiPoly& p, const std::vector<SideEquation>& side_eqs, const std::string& param,
                            ProjectionTrace* trace) {
  MultiPoly current = p;
  for (const auto& eq : side_eqs) {
    if (eq.h.degree(eq.aux) < 1) throw UsageError("side equation has degree 0 in " + eq.aux);
    if (!current.depends_on(eq.aux)) continue;
    ProjectionStep step;
    step.variable = eq.aux;
    step.input = current;
    step.resultant = resultant(current, eq.h, eq.aux);
    if (step.resultant.is_constant()) {
      ProjectionTrace partial = trace != nullptr ? *trace : ProjectionTrace{};
      partial.final = current;
      throw ProjectionCollapse("radical elimination of " + eq.aux + " gave a constant", partial);
    }
    step.result = powerfree(step.resultant, step.resultant.variables());
    current = step.result;
    if (trace != nullptr) trace->steps.push_back(std::move(step));
  }
  if (!current.depends_on(param)) {
    ProjectionTrace partial = trace != nullptr ? *trace : ProjectionTrace{};
    partial.final = current;
    throw ProjectionCollapse("radical elimination removed the parameter " + param, partial);
  }
  return current;
}

std::vector<MultiPoly> decider_projection(const std::vector<MultiPoly>& polys, const std::string& v,
                                          const std::vector<std::string>& keep) {
  std::vector<MultiPoly> out;
  std::vector<MultiPoly> main;
  for (const auto& p : polys) {
    if (p.is_zero() || p.is_constant()) continue;
    if (p.degree(v) == 0) {
      push_powerfree(out, p, keep);
      continue;
    }
    push_powerfree(out, leading_coeff_and_degree(p, v).coeff, keep);
    MultiPoly q = squarefree_part_wrt(p, v);
    if (std::find(main.begin(), main.end(), q) == main.end()) main.push_back(q);
  }
  for (const auto& q : main) {
    if (q.degree(v) >= 2) {
      try {
        push_unique(out, project_step(q, v, keep));
      } catch (const DegenerateProjection&) {
        // Constant discriminant: no interior cell boundary from q alone.
      }
    }
  }
  for (std::size_t i = 0; i < main.size(); ++i) {
    for (std::size_t j = i + 1; j < main.size(); ++j) {
      MultiPoly a = main[i];
      MultiPoly b = main[j];
      MultiPoly r = resultant(a, b, v);
      if (r.is_zero()) {
        MultiPoly g = multivar_gcd(a, b);
        a = *divide_exact(a, g);
        b = *divide_exact(b, g);
        if (a.degree(v) < 1 || b.degree(v) < 1) continue;
        r = resultant(a, b, v);
      }
      push_powerfree(out, r, keep);
    }
  }
  return out;
}

}  // namespace kbound
