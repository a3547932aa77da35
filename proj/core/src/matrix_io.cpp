#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "depthkit/errors.hpp"
#include "depthkit/exact_matrix.hpp"

namespace depthkit {

namespace {

// Splits the stream into whitespace-separated tokens, dropping '#' comments.
// Each token remembers its 1-based line for diagnostics.
struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back({tok, lineno});
  }
  return out;
}

bool all_digits(std::string const& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t parse_dimension(Token const& t, char const* what) {
  if (!all_digits(t.text) || t.text.size() > 6) {
    throw ParseError("line " + std::to_string(t.line) + ": invalid " + what +
                     " '" + t.text + "'");
  }
  auto v = std::stoul(t.text);
  if (v == 0) {
    throw ParseError("line " + std::to_string(t.line) + ": " + what +
                     " must be positive");
  }
  return v;
}

}  // namespace

NonNegMatrix parse_matrix(std::istream& in) {
  auto tokens = tokenize(in);
  if (tokens.size() < 2) throw ParseError("missing 'rows cols' header");
  std::size_t const rows = parse_dimension(tokens[0], "row count");
  std::size_t const cols = parse_dimension(tokens[1], "column count");
  if (tokens[0].line != tokens[1].line) {
    throw ParseError("header 'rows cols' must be on one line");
  }
  std::size_t const header_line = tokens[0].line;

  std::vector<BigInt> entries;
  entries.reserve(rows * cols);
  std::size_t pos = 2;
  std::size_t prev_line = header_line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (pos >= tokens.size()) {
      throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                       std::to_string(r));
    }
    std::size_t const line = tokens[pos].line;
    if (line == prev_line) {
      throw ParseError("line " + std::to_string(line) +
                       ": matrix row must start on a new line");
    }
    std::size_t c = 0;
    for (; pos < tokens.size() && tokens[pos].line == line; ++pos, ++c) {
      if (!all_digits(tokens[pos].text)) {
        throw ParseError("line " + std::to_string(line) + ": '" +
                         tokens[pos].text + "' is not a nonnegative integer");
      }
      entries.emplace_back(tokens[pos].text);
    }
    if (c != cols) {
      throw ParseError("line " + std::to_string(line) + ": expected " +
                       std::to_string(cols) + " entries, got " +
                       std::to_string(c));
    }
    prev_line = line;
  }
  if (pos != tokens.size()) {
    throw ParseError("line " + std::to_string(tokens[pos].line) +
                     ": trailing data after matrix");
  }
  return NonNegMatrix(rows, cols, std::move(entries));
}

NonNegMatrix parse_matrix(std::string const& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

NonNegMatrix read_matrix_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  return parse_matrix(in);
}

std::string format_matrix(NonNegMatrix const& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace depthkit
