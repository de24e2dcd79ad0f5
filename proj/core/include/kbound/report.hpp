#pragma once

// JSON and text rendering of optimization results and their traces.

#include "kbound/optimizer.hpp"

#include <string>

namespace kbound {

enum class ReportFormat { Json, Text };

struct ReportOptions {
  ReportFormat format = ReportFormat::Text;
  int digits = 10;
  bool trace = false;
};

// JSON keys come in a fixed order, so equal results give equal bytes.
std::string emit_result(const OptimizationResult& r, const ReportOptions& options = {});

// One line per projection step and per decision.
std::string render_trace(const OptimizationResult& r);

// Decimal string with `digits` fractional digits as an exact rational.
Rational parse_decimal(const std::string& s);

}  // namespace kbound
