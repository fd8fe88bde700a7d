#include "drd/instance_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <vector>

#include "drd/error.hpp"
#include "parse_util.hpp"

namespace drd {

namespace {

// Canonical unsigned decimal: no sign, no leading zeros.
std::optional<long long> canonical_number(std::string_view token) {
  if (token.empty() || (token.size() > 1 && token.front() == '0')) return std::nullopt;
  for (char c : token)
    if (c < '0' || c > '9') return std::nullopt;
  return detail::parse_number<long long>(token);
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<int> numbers_after(const Line& line, char tag, std::size_t expected_min) {
  auto tokens = detail::split(line.text, ' ');
  if (tokens.front() != std::string_view(&tag, 1)) {
    throw ParseError(ErrorKind::SyntaxError, line.number, std::string("expected '") + tag + "' line");
  }
  std::vector<int> out;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    auto v = canonical_number(tokens[i]);
    if (!v || *v > 1'000'000'000) {
      throw ParseError(ErrorKind::SyntaxError, line.number, "bad number '" + std::string(tokens[i]) + "'");
    }
    out.push_back(static_cast<int>(*v));
  }
  if (out.size() < expected_min) throw ParseError(ErrorKind::SyntaxError, line.number, "too few fields");
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw ParseError(ErrorKind::SyntaxError, 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n')),
                     "input must end with a newline");
  }
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    ++number;
    std::string_view body = text.substr(start, end - start);
    start = end + 1;
    if (body.starts_with('#')) continue;
    if (body.empty() || body.front() == ' ' || body.back() == ' ' || body.find("  ") != std::string_view::npos ||
        body.find_first_of("\t\r") != std::string_view::npos) {
      throw ParseError(ErrorKind::SyntaxError, number, "fields must be separated by single spaces");
    }
    lines.push_back({number, body});
  }
  if (lines.empty()) throw ParseError(ErrorKind::SyntaxError, number, "missing 'p drd' line");

  const Line& header = lines[0];
  if (!header.text.starts_with("p drd ")) throw ParseError(ErrorKind::SyntaxError, header.number, "expected 'p drd <n> <m>'");
  auto head = detail::split(header.text, ' ');
  if (head.size() != 4) throw ParseError(ErrorKind::SyntaxError, header.number, "expected 'p drd <n> <m>'");
  auto n = canonical_number(head[2]);
  auto m = canonical_number(head[3]);
  if (!n || !m) throw ParseError(ErrorKind::SyntaxError, header.number, "bad vertex or edge count");
  if (*n < 1 || *n > 1'000'000) throw ParseError(ErrorKind::OutOfRange, header.number, "vertex count must be >= 1");

  if (lines.size() < 2) throw ParseError(ErrorKind::SyntaxError, header.number, "missing 'f' line");
  const Line& f_line = lines[1];
  std::vector<int> f = numbers_after(f_line, 'f', 0);
  if (f.size() != static_cast<std::size_t>(*n)) {
    throw ParseError(ErrorKind::CountMismatch, f_line.number,
                     "f line has " + std::to_string(f.size()) + " values, expected " + std::to_string(*n));
  }

  const std::size_t edge_lines = lines.size() - 2;
  if (edge_lines != static_cast<std::size_t>(*m)) {
    throw ParseError(ErrorKind::CountMismatch, lines.back().number,
                     "declared " + std::to_string(*m) + " edges, found " + std::to_string(edge_lines));
  }
  std::vector<Edge> edges;
  edges.reserve(edge_lines);
  std::set<Edge> seen;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int at = lines[i].number;
    auto ends = numbers_after(lines[i], 'e', 2);
    if (ends.size() != 2) throw ParseError(ErrorKind::SyntaxError, at, "expected 'e <u> <v>'");
    const auto [u, v] = std::pair(ends[0], ends[1]);
    if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError(ErrorKind::OutOfRange, at, "endpoint outside 1..n");
    if (u == v) throw ParseError(ErrorKind::SelfLoop, at, "self-loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(ErrorKind::DuplicateEdge, at, "edge listed twice");
    }
    edges.emplace_back(u, v);
  }

  Graph g(static_cast<int>(*n), edges);
  try {
    return Instance(std::move(g), std::move(f));
  } catch (const Error& e) {
    throw ParseError(e.kind(), f_line.number, e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  const Graph& g = inst.graph();
  std::string out = "p drd " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\nf";
  for (int k : inst.f()) out += " " + std::to_string(k);
  out += "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string instance_digest(const Instance& inst) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_instance(inst)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace drd
