#pragma once

// Successive resultant projection, radical elimination and the augmented
// projection sets used by the decision procedures.

#include "kbound/errors.hpp"
#include "kbound/multipoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kbound {

struct ProjectionStep {
  std::string variable;
  MultiPoly input;
  // res(p, dp/dv, v) as computed. When p is a polynomial in v^d with d > 1
  // this is the resultant of the deflated pair times p(0), which has the
  // same powerfree part.
  MultiPoly resultant;
  MultiPoly result;
  unsigned deflation = 1;
  bool squarefree_retry = false;
  std::optional<std::pair<std::string, long>> shear;  // v -> v + lambda * w
};

struct ProjectionTrace {
  std::vector<ProjectionStep> steps;
  MultiPoly final;
};

class ProjectionCollapse : public DegenerateProjection {
 public:
  ProjectionCollapse(const std::string& what, ProjectionTrace partial)
      : DegenerateProjection(what), partial_(std::move(partial)) {}
  const ProjectionTrace& partial() const { return partial_; }

 private:
  ProjectionTrace partial_;
};

// powerfree(res(p, dp/dv, v), keep). A zero resultant is retried once on the
// squarefree part in v and then under integer shears of v.
// Throws DegenerateProjection when nothing depending on `keep` survives.
MultiPoly project_step(const MultiPoly& p, const std::string& v, const std::vector<std::string>& keep,
                       ProjectionStep* record = nullptr);

// Chains project_step over elim_order with keep = {param}. Order entries
// absent from the current polynomial are skipped. Throws ProjectionCollapse.
ProjectionTrace successive_projection(const MultiPoly& p, const std::vector<std::string>& elim_order,
                                      const std::string& param);

struct SideEquation {
  std::string aux;
  MultiPoly h;
};

// Eliminates each aux variable by a resultant with its side equation and
// keeps the squarefree part. Throws ProjectionCollapse.
MultiPoly radical_eliminate(const MultiPoly& p, const std::vector<SideEquation>& side_eqs, const std::string& param,
                            ProjectionTrace* trace = nullptr);

// Projection set for open-cell delineability over the remaining variables:
// discriminant projections, leading coefficients in v and pairwise
// resultants, each powerfree with respect to `keep`; inputs free of v pass
// through. Constants are dropped and duplicates removed.
std::vector<MultiPoly> decider_projection(const std::vector<MultiPoly>& polys, const std::string& v,
                                          const std::vector<std::string>& keep);

}  // namespace kbound
