#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tic {

enum class errc {
  invalid_operands,
  invalid_graph,
  invalid_t,
  no_row_above,
  invalid_jump,
  invalid_ladder,
  out_of_trace,
  missing_rung,
  invalid_snapshot,
  invalid_pattern,
  parse_error,
};

inline const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_operands: return "invalid-operands";
    case errc::invalid_graph: return "invalid-graph";
    case errc::invalid_t: return "invalid-T";
    case errc::no_row_above: return "no-row-above";
    case errc::invalid_jump: return "invalid-jump";
    case errc::invalid_ladder: return "invalid-ladder";
    case errc::out_of_trace: return "out-of-trace";
    case errc::missing_rung: return "missing-rung";
    case errc::invalid_snapshot: return "invalid-snapshot";
    case errc::invalid_pattern: return "invalid-pattern";
    case errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Input-format error carrying the 1-based line it was detected on.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& message)
      : error(errc::parse_error, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tic
