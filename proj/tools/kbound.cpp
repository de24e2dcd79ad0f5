#include "kbound/errors.hpp"
#include "kbound/optimizer.hpp"
#include "kbound/parser.hpp"
#include "kbound/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;
constexpr int kExitLimit = 4;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact best constant k for a polynomial inequality F(k, x) >= 0"};
  std::string input;
  std::string direction;
  int digits = 10;
  std::string mode = "auto";
  std::string elim_order;
  long timeout_seconds = 1800;
  bool trace = false;
  std::string format = "text";
  app.add_option("--input", input, "Problem file")->required();
  app.add_option("--direction", direction, "Override the file's direction")->check(CLI::IsMember({"max", "min"}));
  app.add_option("--digits", digits, "Fractional digits of the approximation")->check(CLI::Range(1, 1000));
  app.add_option("--mode", mode, "Solver path")->check(CLI::IsMember({"auto", "monotone", "scan"}));
  app.add_option("--elim-order", elim_order, "Comma separated elimination order");
  app.add_option("--timeout-seconds", timeout_seconds, "Wall clock limit")->check(CLI::PositiveNumber);
  app.add_flag("--trace", trace, "Include the projection trace and decision log");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  kbound::ProblemSpec spec;
  try {
    spec = kbound::parse_problem(buf.str());
  } catch (const kbound::ParseError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kExitUsage;
  }
  if (direction == "max") spec.direction = kbound::Direction::Maximize;
  if (direction == "min") spec.direction = kbound::Direction::Minimize;

  kbound::SolveOptions options;
  options.mode = mode == "monotone" ? kbound::SolveMode::Monotone
                 : mode == "scan"   ? kbound::SolveMode::Scan
                                    : kbound::SolveMode::Auto;
  options.elim_order = split_commas(elim_order);
  kbound::ReportOptions report;
  report.format = format == "json" ? kbound::ReportFormat::Json : kbound::ReportFormat::Text;
  report.digits = digits;
  report.trace = trace;

  std::packaged_task<int()> task([&] {
    try {
      kbound::OptimizationResult r = kbound::solve(spec, options);
      std::cout << kbound::emit_result(r, report);
      return r.status == kbound::Status::Undecided ? kExitUndecided : kExitOk;
    } catch (const kbound::UsageError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  });
  std::future<int> done = task.get_future();
  std::thread(std::move(task)).detach();
  if (done.wait_for(std::chrono::seconds(timeout_seconds)) == std::future_status::timeout) {
    std::cerr << "error: time limit of " << timeout_seconds << " s exceeded\n";
    std::cout.flush();
    std::_Exit(kExitLimit);
  }
  try {
    int code = done.get();
    std::cout.flush();
    return code;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
