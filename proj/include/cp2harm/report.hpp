#ifndef CP2HARM_REPORT_HPP
#define CP2HARM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cp2harm/io.hpp"

namespace cp2harm {

/// Machine-readable run report. Serialization is deterministic: keys are
/// sorted, numbers use shortest round-trip formatting, and nothing
/// time-dependent is part of the report (wall time goes to the human
/// summary on stderr only).
class RunReport {
public:
  RunReport(std::string command, std::vector<std::string> args);

  void add_input(const std::string& path);

  /// Exact (zero-tolerance) check.
  void add_exact(const std::string& name, bool pass);
  /// Numeric check: pass iff |value - target| <= tolerance.
  void add_numeric(const std::string& name, double value, double target,
                   double tolerance);
  /// Numeric bound: pass iff value <= bound.
  void add_bound(const std::string& name, double value, double bound);
  /// Informational record (always passes).
  void add_info(const std::string& name, const json& value);

  void set_grid(int resolution, std::size_t nodes, double weight_sum);

  bool all_pass() const;
  int exit_code() const { return all_pass() ? 0 : 1; }

  json to_json() const;
  /// Dumps the JSON report to stdout and a short summary (with wall time)
  /// to stderr; returns the exit code.
  int emit(double wall_seconds) const;

private:
  std::string command_;
  std::vector<std::string> args_;
  json inputs_ = json::object();
  json records_ = json::array();
  std::optional<json> grid_;
};

}  // namespace cp2harm

#endif
