#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "tic/core/snapshot.hpp"
#include "tic/hierarchy/pattern_algebra.hpp"
#include "tic/io/digest.hpp"

// Trace file:
//   n delta mode            mode is "undirected" or "directed"
//   step i m                i = 1..delta, then m lines "u v"
// Vertex ids are 0-based; undirected edges are written u < v. Lines starting
// with '#' and blank lines are ignored.
//
// Pattern file:
//   delta
//   i k                     one disconnected cell per line
namespace tic {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t p = 0;
  while (p < line.size()) {
    while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == '\r')) ++p;
    const auto start = p;
    while (p < line.size() && line[p] != ' ' && line[p] != '\t' && line[p] != '\r') ++p;
    if (p > start) out.push_back(line.substr(start, p - start));
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
  Int value{};
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last) {
    throw parse_error(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

struct TraceHeader {
  Vertex n = 0;
  std::size_t delta = 0;
  Mode mode = Mode::undirected;
};

/// Incremental reader: one snapshot per call, so traces can be consumed from a
/// pipe as they are written.
class TraceReader {
 public:
  explicit TraceReader(std::istream& in) : in_(&in) {
    auto tokens = next_tokens();
    if (!tokens) throw parse_error(line_, "missing header 'n delta mode'");
    const auto& t = *tokens;
    if (t.size() != 3) throw parse_error(line_, "header must be 'n delta mode'");
    header_.n = detail::parse_int<Vertex>(t[0], line_, "vertex count");
    header_.delta = detail::parse_int<std::size_t>(t[1], line_, "trace length");
    if (t[2] == "undirected") {
      header_.mode = Mode::undirected;
    } else if (t[2] == "directed") {
      header_.mode = Mode::directed;
    } else {
      throw parse_error(line_, "mode must be 'undirected' or 'directed'");
    }
    if (header_.n == 0) throw parse_error(line_, "vertex count must be >= 1");
    if (header_.delta == 0) throw parse_error(line_, "trace length must be >= 1");
  }

  const TraceHeader& header() const noexcept { return header_; }
  std::size_t steps_read() const noexcept { return steps_; }
  std::string digest() const { return digest_.hex(); }

  /// Next snapshot, or nullopt once all delta steps were read.
  std::optional<Snapshot> next() {
    if (steps_ == header_.delta) return std::nullopt;
    auto tokens = next_tokens();
    if (!tokens) throw parse_error(line_, "expected 'step " + std::to_string(steps_ + 1) + " m', got end of input");
    const auto& t = *tokens;
    if (t.size() != 3 || t[0] != "step") throw parse_error(line_, "expected 'step i m'");
    const auto index = detail::parse_int<std::size_t>(t[1], line_, "step index");
    if (index != steps_ + 1) {
      throw parse_error(line_, "expected step " + std::to_string(steps_ + 1) + ", got " + std::to_string(index));
    }
    const auto m = detail::parse_int<std::size_t>(t[2], line_, "edge count");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
      auto et = next_tokens();
      if (!et) throw parse_error(line_, "step " + std::to_string(index) + " ends before its " + std::to_string(m) + " edges");
      if (et->size() != 2) throw parse_error(line_, "expected edge 'u v'");
      const auto u = detail::parse_int<Vertex>((*et)[0], line_, "vertex id");
      const auto v = detail::parse_int<Vertex>((*et)[1], line_, "vertex id");
      if (u >= header_.n || v >= header_.n) {
        throw parse_error(line_, "endpoint out of range for n=" + std::to_string(header_.n));
      }
      if (u == v) throw parse_error(line_, "self-loop " + std::to_string(u) + " " + std::to_string(v));
      if (header_.mode == Mode::undirected && u > v) {
        throw parse_error(line_, "undirected edges must be written u < v");
      }
      if (!seen.insert(std::uint64_t{u} * header_.n + v).second) {
        throw parse_error(line_, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      edges.push_back({u, v});
    }
    ++steps_;
    return Snapshot(header_.n, header_.mode, std::move(edges));
  }

  /// Throws when anything other than comments follows the last step.
  void expect_end() {
    if (next_tokens()) throw parse_error(line_, "unexpected content after step " + std::to_string(header_.delta));
  }

 private:
  std::optional<std::vector<std::string_view>> next_tokens() {
    while (std::getline(*in_, buffer_)) {
      ++line_;
      digest_.update(buffer_);
      digest_.update("\n");
      std::string_view view(buffer_);
      auto tokens = detail::split_ws(view);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  }

  std::istream* in_;
  std::string buffer_;
  std::size_t line_ = 0;
  std::size_t steps_ = 0;
  TraceHeader header_;
  Fnv1a64 digest_;
};

inline Trace read_trace(std::istream& in) {
  TraceReader reader(in);
  std::vector<Snapshot> snapshots;
  snapshots.reserve(reader.header().delta);
  while (auto s = reader.next()) snapshots.push_back(std::move(*s));
  reader.expect_end();
  return Trace(reader.header().n, reader.header().mode, std::move(snapshots));
}

inline Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_trace(in);
}

inline void write_snapshot(std::ostream& os, const Snapshot& s, std::size_t step) {
  os << "step " << step << ' ' << s.edge_count() << '\n';
  for (const auto& e : s.edges()) os << e.u << ' ' << e.v << '\n';
}

inline void write_trace(std::ostream& os, const Trace& t) {
  os << t.n() << ' ' << t.delta() << ' ' << to_string(t.mode()) << '\n';
  for (std::size_t i = 1; i <= t.delta(); ++i) write_snapshot(os, t.step(i), i);
}

inline std::string serialize_trace(const Trace& t) {
  std::ostringstream os;
  write_trace(os, t);
  return os.str();
}

struct PatternSpec {
  std::size_t delta = 0;
  std::vector<Interval> disconnected;

  PatternAlgebra algebra() const { return PatternAlgebra(delta, disconnected); }
};

inline PatternSpec read_pattern(std::istream& in) {
  PatternSpec spec;
  std::string line;
  std::size_t lineno = 0;
  bool have_delta = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = detail::split_ws(line);
    if (t.empty() || t.front().front() == '#') continue;
    if (!have_delta) {
      if (t.size() != 1) throw parse_error(lineno, "pattern header must be 'delta'");
      spec.delta = detail::parse_int<std::size_t>(t[0], lineno, "trace length");
      if (spec.delta == 0) throw parse_error(lineno, "trace length must be >= 1");
      have_delta = true;
      continue;
    }
    if (t.size() != 2) throw parse_error(lineno, "expected disconnected cell 'i k'");
    const Interval c{detail::parse_int<std::size_t>(t[0], lineno, "index"),
                     detail::parse_int<std::size_t>(t[1], lineno, "height")};
    if (c.index < 1 || c.height < 1 || c.end() > spec.delta) {
      throw parse_error(lineno, "cell (" + std::to_string(c.index) + "," + std::to_string(c.height) +
                                    ") lies outside the hierarchy");
    }
    spec.disconnected.push_back(c);
  }
  if (!have_delta) throw parse_error(lineno, "missing pattern header 'delta'");
  return spec;
}

inline PatternSpec parse_pattern(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_pattern(in);
}

inline std::string serialize_pattern(const PatternSpec& spec) {
  std::ostringstream os;
  os << spec.delta << '\n';
  for (const auto& c : spec.disconnected) os << c.index << ' ' << c.height << '\n';
  return os.str();
}

}  // namespace tic
