#include "rlcm/rep_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rlcm/error.hpp"

namespace rlcm {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      auto j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
        ++j;
      }
      tokens.push_back({line.substr(i, j - i), number, i + 1});
      i = j;
    }
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
    }
  }
  return lines;
}

}  // namespace

Representation<Rational> parse_representation(std::string_view text,
                                              const HomogeneousPresentation& pres) {
  auto lines = tokenize(text);
  if (lines.empty()) {
    throw ParseError(1, 1, "empty representation file");
  }
  const auto& head = lines[0];
  if (head[0].text != "dim" || head.size() != 2) {
    throw ParseError(head[0].line, head[0].column, "expected 'dim d'");
  }
  std::size_t dim = 0;
  const auto& dt = head[1].text;
  auto [ptr, ec] = std::from_chars(dt.data(), dt.data() + dt.size(), dim);
  if (ec != std::errc() || ptr != dt.data() + dt.size() || dim == 0) {
    throw ParseError(head[1].line, head[1].column, "dimension must be a positive integer");
  }
  std::vector<letter_type> generators;
  std::vector<DenseMatrix<Rational>> matrices;
  const auto& names = pres.alphabet().names();
  std::size_t i = 1;
  while (i < lines.size()) {
    const auto& g = lines[i++];
    if (g[0].text != "generator" || g.size() != 2) {
      throw ParseError(g[0].line, g[0].column, "expected 'generator <name>'");
    }
    auto it = std::find(names.begin(), names.end(), g[1].text);
    if (it == names.end()) {
      throw ParseError(g[1].line, g[1].column, "unknown generator '" + g[1].text + "'");
    }
    auto s = static_cast<letter_type>(it - names.begin());
    if (std::find(generators.begin(), generators.end(), s) != generators.end()) {
      throw ParseError(g[1].line, g[1].column, "generator '" + g[1].text + "' listed twice");
    }
    DenseMatrix<Rational> m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (i >= lines.size()) {
        throw ParseError(g[0].line, g[0].column,
                         "matrix for '" + g[1].text + "' needs " + std::to_string(dim) + " rows");
      }
      const auto& row = lines[i++];
      if (row.size() != dim) {
        throw ParseError(row[0].line, row[0].column,
                         "row needs " + std::to_string(dim) + " entries, got " +
                             std::to_string(row.size()));
      }
      for (std::size_t c = 0; c < dim; ++c) {
        try {
          m(r, c) = parse_rational(row[c].text);
        } catch (const ParseError& e) {
          throw ParseError(row[c].line, row[c].column + e.column() - 1, e.message());
        }
      }
    }
    generators.push_back(s);
    matrices.push_back(std::move(m));
  }
  if (generators.empty()) {
    throw ParseError(head[0].line, head[0].column, "no generator matrices");
  }
  return Representation<Rational>(pres, std::move(generators), matrices);
}

}  // namespace rlcm
