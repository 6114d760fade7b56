#ifndef HYPERALPHA_IO_HPP
#define HYPERALPHA_IO_HPP

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalpha/hypergraph.hpp"

namespace hyperalpha {

namespace detail {

inline std::string_view strip_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
  while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
  return line;
}

inline std::vector<std::size_t> parse_indices(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    const auto token = line.substr(pos, end - pos);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                      std::string(token) + "'");
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace detail

/// Reads the plain-text hypergraph format: the first content line holds the
/// vertex count, each following non-empty line one edge of 1-based indices.
/// '#' comments run to end of line; LF and CRLF line endings are accepted.
inline Hypergraph parse(std::string_view text, BuildOptions options = {}) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::optional<std::size_t> n;
  std::vector<std::vector<std::size_t>> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    const auto line = detail::strip_line(text.substr(start, stop - start));
    start = stop + 1;
    if (line.empty()) continue;

    auto values = detail::parse_indices(line, line_no);
    if (!n) {
      if (values.size() != 1 || values[0] == 0)
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line_no) + ": expected a single positive vertex count");
      n = values[0];
      continue;
    }
    for (auto v : values)
      if (v < 1 || v > *n)
        throw Error(ErrorCode::EdgeOutOfRange, "line " + std::to_string(line_no) + ": vertex " +
                                                   std::to_string(v) + " outside [1, " + std::to_string(*n) + "]");
    edges.push_back(std::move(values));
  }
  if (!n) throw Error(ErrorCode::SyntaxError, "missing vertex count");
  return Hypergraph::from_one_based(*n, edges, options);
}

/// Emits LF line endings and lexicographically sorted edges.
inline std::string serialize(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + "\n";
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(e[i] + 1);
    }
    out += '\n';
  }
  return out;
}

inline Hypergraph read_file(const std::string& path, BuildOptions options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), options);
}

inline void write_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << serialize(h);
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_IO_HPP
