#include "cp2harm/report.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

namespace cp2harm {

RunReport::RunReport(std::string command, std::vector<std::string> args)
    : command_(std::move(command)), args_(std::move(args)) {}

void RunReport::add_input(const std::string& path) {
  inputs_[path] = file_digest(path);
}

void RunReport::add_exact(const std::string& name, bool pass) {
  records_.push_back({{"name", name},
                      {"kind", "exact"},
                      {"value", pass ? "zero" : "nonzero"},
                      {"tolerance", 0.0},
                      {"pass", pass}});
}

void RunReport::add_numeric(const std::string& name, double value, double target,
                            double tolerance) {
  bool pass = std::isfinite(value) && std::abs(value - target) <= tolerance;
  records_.push_back({{"name", name},
                      {"kind", "numeric"},
                      {"value", value},
                      {"target", target},
                      {"tolerance", tolerance},
                      {"pass", pass}});
}

void RunReport::add_bound(const std::string& name, double value, double bound) {
  bool pass = std::isfinite(value) && value <= bound;
  records_.push_back({{"name", name},
                      {"kind", "numeric"},
                      {"value", value},
                      {"target", 0.0},
                      {"tolerance", bound},
                      {"pass", pass}});
}

void RunReport::add_info(const std::string& name, const json& value) {
  records_.push_back(
      {{"name", name}, {"kind", "info"}, {"value", value}, {"pass", true}});
}

void RunReport::set_grid(int resolution, std::size_t nodes, double weight_sum) {
  grid_ = json{{"resolution", resolution},
               {"nodes", nodes},
               {"weight_sum", weight_sum}};
}

bool RunReport::all_pass() const {
  for (const auto& r : records_)
    if (!r.at("pass").get<bool>()) return false;
  return true;
}

json RunReport::to_json() const {
  json j{{"command", command_},
         {"args", args_},
         {"inputs", inputs_},
         {"records", records_},
         {"pass", all_pass()}};
  if (grid_) j["grid"] = *grid_;
  return j;
}

int RunReport::emit(double wall_seconds) const {
  std::cout << to_json().dump(2) << "\n";
  std::size_t failed = 0;
  for (const auto& r : records_)
    if (!r.at("pass").get<bool>()) ++failed;
  std::fprintf(stderr, "%s: %zu checks, %zu failed (%.2fs)\n", command_.c_str(),
               records_.size(), failed, wall_seconds);
  for (const auto& r : records_)
    if (!r.at("pass").get<bool>())
      std::fprintf(stderr, "  FAIL %s\n", r.at("name").get<std::string>().c_str());
  return exit_code();
}

}  // namespace cp2harm
