#ifndef INDPOLY_IO_HPP
#define INDPOLY_IO_HPP

#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace indpoly {

class ParseError : public GraphError {
public:
  ParseError(const std::string &what, std::size_t position)
      : GraphError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// graph6

inline std::string write_graph6(const Graph &g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int value = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = nbits = 0;
      }
    }
  if (nbits)
    out.push_back(static_cast<char>((value << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader)
    pos = kHeader.size();
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);

  auto sextet = [&](std::size_t at) {
    if (at >= line.size())
      throw ParseError("graph6: truncated input", at);
    int v = static_cast<unsigned char>(line[at]) - 63;
    if (v < 0 || v > 63)
      throw ParseError("graph6: byte outside 63..126", at);
    return v;
  };

  int n = sextet(pos);
  ++pos;
  if (n == 63) {
    if (pos < line.size() && line[pos] == '~')
      throw ParseError("graph6: order exceeds vertex cap", pos);
    n = 0;
    for (int i = 0; i < 3; ++i)
      n = (n << 6) | sextet(pos++);
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds vertex cap", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes)
    throw ParseError("graph6: truncated payload", line.size());
  if (line.size() - pos > bytes)
    throw ParseError("graph6: trailing bytes", pos + bytes);

  std::vector<Graph::Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int v = sextet(pos + k / 6);
      if ((v >> (5 - k % 6)) & 1)
        edges.emplace_back(i, j);
    }
  // padding bits must be zero for a byte-exact round trip
  if (bits % 6) {
    int last = sextet(pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------
// Edge list: "n <count>" then one "u v" pair per line.

inline std::string write_edge_list(const Graph &g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Graph::Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first))
      continue;
    if (n < 0) {
      if (first != "n" || !(ls >> n) || n < 0)
        throw ParseError("edge list: expected header 'n <count>'", lineno);
      if (n > kMaxVertices)
        throw ParseError("edge list: order exceeds vertex cap", lineno);
      std::string extra;
      if (ls >> extra)
        throw ParseError("edge list: trailing tokens", lineno);
    } else {
      int u = 0, v = 0;
      std::istringstream pair(line);
      if (!(pair >> u >> v))
        throw ParseError("edge list: expected 'u v'", lineno);
      std::string extra;
      if (pair >> extra)
        throw ParseError("edge list: trailing tokens", lineno);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError("edge list: vertex out of range", lineno);
      if (u == v)
        throw ParseError("edge list: loop edge", lineno);
      edges.emplace_back(u, v);
    }
  }
  if (n < 0)
    throw ParseError("edge list: missing header", 0);
  return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------
// Family-spec grammar
//
//   spec := name '(' [arg {',' arg}] ')' ['@' int]
//   arg  := int | spec | 'k' '=' int

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec s = parse_spec();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return s;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError("family spec: " + msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  long integer() {
    skip_ws();
    long v = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc())
      fail("expected integer");
    pos_ = static_cast<std::size_t>(end - text_.data());
    return v;
  }
  bool at_integer() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
  }

  FamilySpec parse_spec() {
    skip_ws();
    std::size_t name_at = pos_;
    std::string name = identifier();
    if (name.empty())
      fail("expected family name");
    auto kind = family_kind(name);
    if (!kind) {
      pos_ = name_at;
      fail("unknown family '" + name + "'");
    }
    FamilySpec s;
    s.kind = *kind;
    expect('(');
    if (!peek(')')) {
      do {
        parse_arg(s);
      } while (peek(',') && (++pos_, true));
    }
    expect(')');
    if (peek('@')) {
      ++pos_;
      s.anchor = integer();
      if (*s.anchor < 0)
        fail("anchor must be nonnegative");
    }
    return s;
  }

  void parse_arg(FamilySpec &s) {
    if (at_integer()) {
      if (!s.children.empty())
        fail("integer arguments must precede graph arguments");
      s.ints.push_back(integer());
      return;
    }
    std::size_t save = pos_;
    std::string id = identifier();
    if (id == "k" && peek('=')) {
      ++pos_;
      if (s.k)
        fail("duplicate k=");
      s.k = integer();
      return;
    }
    pos_ = save;
    s.children.push_back(parse_spec());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
  return detail::SpecParser(text).parse_all();
}

}  // namespace indpoly

#endif
