#include "z2z4/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || token.empty()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

Ambient parse_header(std::string_view text, std::size_t line) {
  auto space = text.find(' ');
  if (space == std::string_view::npos || text.find(' ', space + 1) != std::string_view::npos) {
    throw ParseError(line, "header must be \"alpha beta\", got '" + std::string(text) + "'");
  }
  return {parse_count(text.substr(0, space), line), parse_count(text.substr(space + 1), line)};
}

}  // namespace

GeneratorMatrix parse_code_file(std::string_view text) {
  std::optional<GeneratorMatrix> matrix;
  std::size_t line_number = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!matrix) {
      matrix.emplace(parse_header(line, line_number));
      continue;
    }
    try {
      matrix->add_row(parse_vector(line, matrix->ambient()));
    } catch (const Error& e) {
      throw ParseError(line_number, e.what());
    }
  }
  if (!matrix) throw ParseError(line_number, "missing \"alpha beta\" header");
  return *matrix;
}

GeneratorMatrix read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_file(buffer.str());
}

std::string format_code_file(const GeneratorMatrix& generators) {
  std::string out = std::to_string(generators.ambient().alpha) + " " + std::to_string(generators.ambient().beta) + "\n";
  for (const auto& row : generators.rows()) out += to_string(row) + "\n";
  return out;
}

}  // namespace z2z4
