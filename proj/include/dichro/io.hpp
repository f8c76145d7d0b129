#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

// Antisymmetric sign matrix: row i, column j holds '+' if i->j is an arc,
// '-' if j->i is an arc, '0' otherwise. Rows are newline terminated. Rows
// may carry surrounding or interior blanks on input; output never does.
// A multi-graph file separates matrices by one blank line.

Digraph parse_matrix(std::string_view text);
std::string emit_matrix(const Digraph& d);
std::vector<Digraph> parse_matrix_list(std::string_view text);
std::string emit_matrix_list(std::span<const Digraph> graphs);

// digraph6: '&', then N(n), then the n*n adjacency matrix row-major,
// six bits per character (value + 63), zero padded. One graph per line.

Digraph parse_d6(std::string_view text);
std::string emit_d6(const Digraph& d);
std::vector<Digraph> parse_d6_list(std::string_view text);
std::string emit_d6_list(std::span<const Digraph> graphs);

enum class Format { Matrix, Digraph6 };

/// Picks digraph6 when the first non-blank character is '&'.
std::vector<Digraph> parse_any(std::string_view text);
std::string emit(std::span<const Digraph> graphs, Format format);

}  // namespace dichro
