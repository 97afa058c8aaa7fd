#include "degseq/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "degseq/error.hpp"

namespace degseq {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void put_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw Error(ErrorKind::ParseError, "graph6: byte outside printable range");
  return v;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  put_size(out, n);
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorKind::ParseError, "graph6: empty input");
  if (text.front() == ':' || text.front() == '&')
    throw Error(ErrorKind::ParseError, "graph6: sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Error(ErrorKind::ParseError, "graph6: truncated size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw Error(ErrorKind::ParseError, "graph6: truncated size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n > 100000) throw Error(ErrorKind::ParseError, "graph6: graph too large for dense representation");

  const long long pairs = n * (n - 1) / 2;
  const long long needed = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != needed)
    throw Error(ErrorKind::ParseError, "graph6: expected " + std::to_string(needed) + " data bytes, got " +
                                           std::to_string(text.size() - pos));
  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if (byte & (1 << (5 - bit % 6))) g.add_edge(i, j);
    }
  // padding bits must be zero
  if (pairs % 6 != 0) {
    const int last = sextet(text.back());
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw Error(ErrorKind::ParseError, "graph6: non-zero padding bits");
  }
  return g;
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph decode_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_n = false;
  int n = 0;
  Graph g;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream ls{std::string(body)};
    if (!have_n) {
      std::string extra;
      if (!(ls >> n) || n < 0 || (ls >> extra))
        throw Error(ErrorKind::ParseError, "edge list: line " + std::to_string(line_no) + " must hold the vertex count");
      g = Graph(n);
      have_n = true;
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw Error(ErrorKind::ParseError, "edge list: line " + std::to_string(line_no) + " is not a 'u v' pair");
    if (u < 1 || v < 1 || u > n || v > n || u == v)
      throw Error(ErrorKind::ParseError, "edge list: bad edge on line " + std::to_string(line_no));
    g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (!have_n) throw Error(ErrorKind::ParseError, "edge list: missing vertex count");
  return g;
}

Graph decode_graph_auto(std::string_view text) {
  auto body = trim(text);
  if (body.empty()) throw Error(ErrorKind::ParseError, "empty graph input");
  const auto first_line = body.substr(0, body.find('\n'));
  bool numeric = !first_line.empty();
  for (char c : trim(first_line))
    if (!std::isdigit(static_cast<unsigned char>(c))) numeric = false;
  if (first_line.front() == '#' || numeric) return decode_edge_list(body);
  return decode_graph6(first_line);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return decode_graph_auto(ss.str());
}

}  // namespace degseq
