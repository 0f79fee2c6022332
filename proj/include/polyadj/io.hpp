#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "polyadj/core.hpp"
#include "polyadj/witness.hpp"

namespace polyadj::io {

// Matrix text: "m n" then m lines of n space-separated 0/1 tokens.
BinaryMatrix parse_matrix(std::istream& in);
std::string format_matrix(const BinaryMatrix& a);

// Graph text: "p <nv> <ne>" then ne lines "e u v", 1-based; lines starting
// with 'c' are comments.
Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g);

// One pair per line: two 0/1 strings. Blank lines and '#' comments skipped.
std::vector<VertexPair> parse_pairs(std::istream& in);
std::string format_pairs(const std::vector<VertexPair>& pairs);

// One 0/1 string per line. Blank lines and '#' comments skipped.
std::vector<BitVector> parse_vertex_list(std::istream& in);

/// Graph format for Stable, matrix format for every other family.
PolytopeCode parse_code(Family family, std::istream& in);
std::string format_code(const PolytopeCode& code);

PolytopeCode read_code(Family family, const std::filesystem::path& path);
Graph read_graph(const std::filesystem::path& path);
BinaryMatrix read_matrix(const std::filesystem::path& path);
std::vector<VertexPair> read_pairs(const std::filesystem::path& path);
std::vector<BitVector> read_vertex_list(const std::filesystem::path& path);

}  // namespace polyadj::io
