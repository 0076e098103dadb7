#pragma once

// Plain-text fraction files:
//
//   # optional comment lines
//   n m
//   s_1 ... s_m
//   n rows of m integers, row r coordinate j in [0, s_j)
//
// Duplicate rows are multiplicities. LF and CRLF line endings are accepted;
// comment and blank lines may appear anywhere.

#include "gwlp/design.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gwlp {

/// Throws ValidationError with the offending line number.
Fraction parse_fraction_file(std::string_view text);
Fraction read_fraction_file(const std::filesystem::path& path);

/// One row per run, multiplicities expanded, lexicographic order.
std::string render_fraction_file(const Fraction& fraction, const std::vector<std::string>& comments = {});
void write_fraction_file(const std::filesystem::path& path, const Fraction& fraction,
                         const std::vector<std::string>& comments = {});

}  // namespace gwlp
