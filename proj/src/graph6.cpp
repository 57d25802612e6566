#include "tdom/graph6.hpp"

#include <charconv>
#include <sstream>

namespace tdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw ParseError(std::string("graph6: byte outside '?'..'~': ") + c);
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (s[0] != '~') {
    n = sextet(s[0]);
    pos = 1;
  } else if (s.size() >= 2 && s[1] == '~') {
    if (s.size() < 8) throw ParseError("graph6: truncated 8-byte order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(s[i]);
    pos = 8;
  } else {
    if (s.size() < 4) throw ParseError("graph6: truncated 4-byte order field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(s[i]);
    pos = 4;
  }
  if (n > Graph::kMaxOrder) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (s.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for order " +
                     std::to_string(n) + ", found " + std::to_string(s.size() - pos));
  }

  GraphBuilder b(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(s[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  for (; k < expected * 6; ++k) {
    if ((sextet(s[pos + k / 6]) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return b.build();
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream is{std::string(line)};
    long u = -1, v = -1;
    std::string extra;
    if (!(is >> u >> v) || (is >> extra) || u < 0 || v < 0) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (u >= Graph::kMaxOrder || v >= Graph::kMaxOrder) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex id exceeds 63");
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    max_id = std::max<int>(max_id, static_cast<int>(std::max(u, v)));
  }
  if (max_id < 0) throw ParseError("edge list: no edges");
  return Graph::from_edges(max_id + 1, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph_text(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    auto nl = rest.find('\n');
    std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (line.empty() || line.starts_with('#')) continue;
    if (line.find_first_of(" \t") != std::string_view::npos) return parse_edge_list(text);
    if (!rest.empty() && !trim(rest).empty()) {
      throw ParseError("graph6 input holds more than one graph");
    }
    return parse_graph6(line);
  }
  throw ParseError("empty graph input");
}

}  // namespace tdom
