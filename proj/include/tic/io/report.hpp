#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "tic/core/op_counter.hpp"

namespace tic {

inline constexpr int report_schema = 1;

/// Summary of one tool run. Op counts are the algebra's counter at completion.
struct RunReport {
  std::string command;
  std::string algorithm;
  std::string input_digest;
  nlohmann::json result;
  OpCounts ops;
  double wall_time_ms = 0.0;

  nlohmann::json to_json() const {
    return nlohmann::json{{"schema", report_schema},
                          {"command", command},
                          {"algorithm", algorithm},
                          {"input_digest", input_digest},
                          {"result", result},
                          {"intersections", ops.intersections},
                          {"connectivity_tests", ops.connectivity_tests},
                          {"total_ops", ops.total()},
                          {"wall_time_ms", wall_time_ms}};
  }
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace tic
