#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypershuffle/hypergraph.hpp"

namespace hypershuffle {

class DhgParseError : public std::runtime_error {
public:
    DhgParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// .dhg text format:
//
//   # comment
//   vertices u v x
//   arc u u -> x
//
// One `vertices` line, before any arc. A repeated token inside a tail or head
// is a repeated vertex. Lines and columns in errors are 1-based.
DirectedHypergraph parse_dhg(std::string_view text);

/// Arcs in canonical order, tokens ascending by vertex index. parse_dhg of the
/// result reproduces the same canonical form and labels.
std::string serialize_dhg(const DirectedHypergraph& h);

DirectedHypergraph read_dhg_file(const std::string& path);

/// Degree sequence text "in,out in,out ... / tail,head tail,head ...".
/// Throws std::invalid_argument on malformed input.
DegreeSequence parse_degree_sequence(std::string_view text);
std::string format_degree_sequence(const DegreeSequence& d);

}  // namespace hypershuffle
