#include "mrc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "mrc/errors.hpp"

namespace mrc {

namespace {

struct Line {
  int number;
  std::string_view text;
};

// Data lines with comments stripped.
std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back({number, line});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::vector<long long> integers(const Line& line) {
  std::vector<long long> out;
  std::size_t i = 0;
  const auto& s = line.text;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() ||
        (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw ParseError("expected an integer", line.number, static_cast<int>(i));
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

Graph parse_edgelist(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("missing header \"n m\"", 1, 0);
  auto header = integers(lines[0]);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0)
    throw ParseError("header must be two non-negative integers \"n m\"", lines[0].number, 0);
  const long long n = header[0], m = header[1];
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1),
                     lines[0].number, 0);
  std::vector<Edge> edges;
  std::vector<std::vector<char>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = integers(lines[i]);
    if (uv.size() != 2) throw ParseError("edge line must be \"u v\"", lines[i].number, 0);
    for (long long x : uv)
      if (x < 0 || x >= n)
        throw ParseError("vertex id " + std::to_string(x) + " outside 0.." + std::to_string(n - 1),
                         lines[i].number, 0);
    if (uv[0] == uv[1])
      throw ParseError("loop at vertex " + std::to_string(uv[0]), lines[i].number, 0);
    Edge e = make_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    for (const auto& f : edges)
      if (f == e)
        throw ParseError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}",
                         lines[i].number, 0);
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6 string truncated", 1, static_cast<int>(i));
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range 63..126", 1, static_cast<int>(i));
    return c - 63;
  };
  long long n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      for (int k = 0; k < 6; ++k) n = (n << 6) | byte(pos + 2 + static_cast<std::size_t>(k));
      pos += 8;
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | byte(pos + 1 + static_cast<std::size_t>(k));
      pos += 4;
    }
  } else {
    n = byte(pos);
    pos += 1;
  }
  if (n > 100000) throw ParseError("graph too large for this tool", 1, 0);
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     1, static_cast<int>(pos));
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(pos + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  for (; k < static_cast<long long>(need) * 6; ++k) {
    int b = byte(pos + static_cast<std::size_t>(k / 6));
    if ((b >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding bit", 1, static_cast<int>(pos + static_cast<std::size_t>(k / 6)));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

GraphFormat detect_format(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) return GraphFormat::EdgeList;
  try {
    if (integers(lines[0]).size() == 2) return GraphFormat::EdgeList;
  } catch (const ParseError&) {
  }
  return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Graph6) return parse_graph6(text);
  return parse_edgelist(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Graph6) return to_graph6(g) + "\n";
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  for (const auto& line : data_lines(text)) {
    std::string_view t = line.text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    try {
      out.push_back(parse_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number, e.offset());
    }
  }
  return out;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_graph6(g)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mrc
