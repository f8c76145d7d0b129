#include "dichro/io.hpp"

#include <algorithm>

namespace dichro {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string strip_blanks(std::string_view line) {
  std::string row;
  for (char c : line)
    if (!is_blank(c)) row.push_back(c);
  return row;
}

Digraph matrix_from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "matrix has " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(ErrorCode::RaggedRows,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
  std::vector<VertexSet> out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '+' && c != '-')
        throw Error(ErrorCode::BadChar, std::string("unexpected character '") + c + "' in row " + std::to_string(i + 1));
      if (i == j) {
        if (c != '0') throw Error(ErrorCode::NonZeroDiagonal, "diagonal entry " + std::to_string(i + 1));
        continue;
      }
      const char mirror = rows[j][i];
      const bool ok = (c == '0' && mirror == '0') || (c == '+' && mirror == '-') || (c == '-' && mirror == '+');
      if (!ok)
        throw Error(ErrorCode::NotAntisymmetric,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                        std::to_string(j + 1) + "," + std::to_string(i + 1) + ") disagree");
      if (c == '+') out[i] |= singleton(j);
    }
  }
  return Digraph::from_rows(out);
}

int d6_value(char c) {
  if (c < 63 || c > 126) throw Error(ErrorCode::BadChar, "byte outside the digraph6 range");
  return c - 63;
}

}  // namespace

std::vector<Digraph> parse_matrix_list(std::string_view text) {
  std::vector<Digraph> graphs;
  std::vector<std::string> rows;
  for (std::string_view line : split_lines(text)) {
    std::string row = strip_blanks(line);
    if (row.empty()) {
      if (!rows.empty()) graphs.push_back(matrix_from_rows(rows));
      rows.clear();
      continue;
    }
    rows.push_back(std::move(row));
  }
  if (!rows.empty()) graphs.push_back(matrix_from_rows(rows));
  return graphs;
}

Digraph parse_matrix(std::string_view text) {
  std::vector<Digraph> graphs = parse_matrix_list(text);
  if (graphs.size() != 1)
    throw Error(ErrorCode::RaggedRows, "expected one matrix, found " + std::to_string(graphs.size()));
  return graphs.front();
}

std::string emit_matrix(const Digraph& d) {
  const int n = d.order();
  std::string text;
  text.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) text.push_back(d.has_arc(i, j) ? '+' : d.has_arc(j, i) ? '-' : '0');
    text.push_back('\n');
  }
  return text;
}

std::string emit_matrix_list(std::span<const Digraph> graphs) {
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) text.push_back('\n');
    text += emit_matrix(graphs[i]);
  }
  return text;
}

Digraph parse_d6(std::string_view text) {
  while (!text.empty() && (is_blank(text.back()) || text.back() == '\n')) text.remove_suffix(1);
  while (!text.empty() && (is_blank(text.front()) || text.front() == '\n')) text.remove_prefix(1);
  if (text.empty() || text.front() != '&') throw Error(ErrorCode::BadHeader, "digraph6 must start with '&'");
  text.remove_prefix(1);
  if (text.empty()) throw Error(ErrorCode::BadLength, "missing order");
  // N(n) with n <= 62 is a single byte; the long forms start with '~'.
  if (text.front() == '~') throw Error(ErrorCode::TooLarge, "order exceeds " + std::to_string(kMaxVertices));
  const int n = d6_value(text.front());
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "order exceeds " + std::to_string(kMaxVertices));
  text.remove_prefix(1);
  const std::size_t bits = static_cast<std::size_t>(n) * n;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() != chars)
    throw Error(ErrorCode::BadLength,
                "payload has " + std::to_string(text.size()) + " bytes, expected " + std::to_string(chars));
  std::vector<VertexSet> out(n, 0);
  for (std::size_t k = 0; k < bits; ++k) {
    const int value = d6_value(text[k / 6]);
    if ((value >> (5 - k % 6)) & 1) out[k / n] |= singleton(static_cast<int>(k % n));
  }
  return Digraph::from_rows(out);
}

std::string emit_d6(const Digraph& d) {
  const int n = d.order();
  std::string text = "&";
  text.push_back(static_cast<char>(n + 63));
  const std::size_t bits = static_cast<std::size_t>(n) * n;
  int acc = 0;
  for (std::size_t k = 0; k < bits; ++k) {
    acc = (acc << 1) | (d.has_arc(static_cast<int>(k / n), static_cast<int>(k % n)) ? 1 : 0);
    if (k % 6 == 5) {
      text.push_back(static_cast<char>(acc + 63));
      acc = 0;
    }
  }
  if (bits % 6 != 0) text.push_back(static_cast<char>((acc << (6 - bits % 6)) + 63));
  return text;
}

std::vector<Digraph> parse_d6_list(std::string_view text) {
  std::vector<Digraph> graphs;
  for (std::string_view line : split_lines(text)) {
    if (strip_blanks(line).empty()) continue;
    graphs.push_back(parse_d6(line));
  }
  return graphs;
}

std::string emit_d6_list(std::span<const Digraph> graphs) {
  std::string text;
  for (const Digraph& d : graphs) text += emit_d6(d) + "\n";
  return text;
}

std::vector<Digraph> parse_any(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !is_blank(c) && c != '\n'; });
  if (first != text.end() && *first == '&') return parse_d6_list(text);
  return parse_matrix_list(text);
}

std::string emit(std::span<const Digraph> graphs, Format format) {
  return format == Format::Matrix ? emit_matrix_list(graphs) : emit_d6_list(graphs);
}

}  // namespace dichro
