#pragma once

/*
 * Text format for generator matrices:
 *
 *   # comment lines start with '#'
 *   2 2
 *   11|20
 *   01|11
 *
 * The first data line holds alpha and beta separated by one space; each
 * further data line is one generator row as a vector literal.  Blank lines
 * are ignored.  format_code_file() writes no comments, so its output parses
 * back and re-formats to the same bytes.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include "z2z4/code.hpp"

namespace z2z4 {

GeneratorMatrix parse_code_file(std::string_view text);
GeneratorMatrix read_code_file(const std::filesystem::path& path);
std::string format_code_file(const GeneratorMatrix& generators);

}  // namespace z2z4
