#include "rlcm/spec_parser.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rlcm/error.hpp"

namespace rlcm {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) {
      stop = text.size();
    }
    ++number;
    std::string line(text.substr(start, stop - start));
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    Line parsed{number, line, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
        ++j;
      }
      parsed.tokens.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }
    if (!parsed.tokens.empty()) {
      out.push_back(std::move(parsed));
    }
    if (stop == text.size()) {
      break;
    }
    start = stop + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  MonoidSpec parse_document() {
    if (lines_.empty()) {
      throw ParseError(1, 1, "empty monoid description");
    }
    auto spec = parse_monoid();
    if (pos_ < lines_.size()) {
      const auto& l = lines_[pos_];
      throw ParseError(l.number, l.tokens[0].column,
                       "unexpected '" + l.tokens[0].text + "' after the monoid description");
    }
    return spec;
  }

 private:
  const Line& next(std::string_view expected) {
    if (pos_ >= lines_.size()) {
      auto last = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(last, 1, "unexpected end of input, expected " + std::string(expected));
    }
    return lines_[pos_++];
  }

  const Line* peek() const { return pos_ < lines_.size() ? &lines_[pos_] : nullptr; }

  static std::size_t count(const Line& l, const Token& t, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(l.number, t.column, "expected " + std::string(what) + ", got '" + t.text + "'");
    }
    return value;
  }

  static void arity(const Line& l, std::size_t n) {
    if (l.tokens.size() != n) {
      auto col = l.tokens.size() > n ? l.tokens[n].column : l.tokens.back().column;
      throw ParseError(l.number, col,
                       "'" + l.tokens[0].text + "' takes " + std::to_string(n - 1) +
                           " argument(s)");
    }
  }

  Alphabet names(std::size_t n) {
    const Line* l = peek();
    if (l == nullptr || l->tokens[0].text != "names") {
      return Alphabet::standard(n);
    }
    ++pos_;
    if (l->tokens.size() != n + 1) {
      throw ParseError(l->number, l->tokens[0].column,
                       "expected " + std::to_string(n) + " generator names, got " +
                           std::to_string(l->tokens.size() - 1));
    }
    std::vector<std::string> out;
    for (std::size_t i = 1; i < l->tokens.size(); ++i) {
      out.push_back(l->tokens[i].text);
    }
    try {
      return Alphabet(std::move(out));
    } catch (const ValidationError& e) {
      throw ParseError(l->number, l->tokens[1].column, e.what());
    }
  }

  MonoidSpec parse_monoid() {
    const Line& head = next("a monoid header");
    const auto& keyword = head.tokens[0].text;
    if (keyword == "free") {
      return parse_free(head);
    }
    if (keyword == "coxeter") {
      return parse_coxeter(head);
    }
    if (keyword == "presentation") {
      return parse_presentation(head);
    }
    if (keyword == "graphproduct") {
      return parse_graph_product(head);
    }
    throw ParseError(head.number, head.tokens[0].column,
                     "unknown monoid header '" + keyword +
                         "' (expected free, coxeter, presentation or graphproduct)");
  }

  MonoidSpec parse_free(const Line& head) {
    arity(head, 2);
    auto n = count(head, head.tokens[1], "a generator count");
    if (n == 0) {
      throw ParseError(head.number, head.tokens[1].column, "need at least one generator");
    }
    MonoidSpec spec;
    spec.kind = MonoidSpec::Kind::Free;
    spec.presentation = free_presentation(names(n));
    spec.coxeter = spec.presentation.coxeter();
    return spec;
  }

  MonoidSpec parse_coxeter(const Line& head) {
    arity(head, 2);
    auto n = count(head, head.tokens[1], "a rank");
    if (n == 0) {
      throw ParseError(head.number, head.tokens[1].column, "rank must be positive");
    }
    auto alphabet = names(n);
    std::vector<std::uint32_t> entries;
    std::size_t first_row_line = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const Line& row = next("a matrix row");
      if (r == 0) {
        first_row_line = row.number;
      }
      if (row.tokens.size() != n) {
        throw ParseError(row.number, row.tokens[0].column,
                         "matrix row needs " + std::to_string(n) + " entries, got " +
                             std::to_string(row.tokens.size()));
      }
      for (const auto& t : row.tokens) {
        if (t.text == "inf") {
          entries.push_back(CoxeterMatrix::infinity);
        } else {
          auto v = count(row, t, "an integer or inf");
          if (v >= CoxeterMatrix::infinity) {
            throw ParseError(row.number, t.column, "entry too large");
          }
          entries.push_back(static_cast<std::uint32_t>(v));
        }
      }
    }
    MonoidSpec spec;
    spec.kind = MonoidSpec::Kind::Coxeter;
    try {
      spec.coxeter = CoxeterMatrix(n, std::move(entries));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(first_row_line) + ": " + e.what());
    }
    spec.presentation = artin_presentation(*spec.coxeter, std::move(alphabet));
    return spec;
  }

  MonoidSpec parse_presentation(const Line& head) {
    arity(head, 2);
    auto n = count(head, head.tokens[1], "a generator count");
    if (n == 0) {
      throw ParseError(head.number, head.tokens[1].column, "need at least one generator");
    }
    auto alphabet = names(n);
    std::vector<Relation> relations;
    while (true) {
      const Line& l = next("'relation' or 'end'");
      if (l.tokens[0].text == "end") {
        arity(l, 1);
        break;
      }
      if (l.tokens[0].text != "relation") {
        throw ParseError(l.number, l.tokens[0].column,
                         "expected 'relation' or 'end', got '" + l.tokens[0].text + "'");
      }
      auto body_start = l.tokens[0].column - 1 + l.tokens[0].text.size();
      auto eq = l.text.find('=', body_start);
      if (eq == std::string::npos) {
        throw ParseError(l.number, l.text.size() + 1, "relation needs '='");
      }
      if (l.text.find('=', eq + 1) != std::string::npos) {
        throw ParseError(l.number, l.text.find('=', eq + 1) + 1, "relation has more than one '='");
      }
      auto lhs = side(l, alphabet, body_start, eq);
      auto rhs = side(l, alphabet, eq + 1, l.text.size());
      try {
        HomogeneousPresentation(alphabet, {Relation{lhs, rhs}}, "");
      } catch (const ValidationError& e) {
        throw ParseError(l.number, l.tokens[0].column, e.what());
      }
      relations.push_back({std::move(lhs), std::move(rhs)});
    }
    MonoidSpec spec;
    spec.kind = MonoidSpec::Kind::Presentation;
    spec.presentation = HomogeneousPresentation(std::move(alphabet), std::move(relations),
                                                "Presentation(" + std::to_string(n) + ")");
    return spec;
  }

  static word_type side(const Line& l, const Alphabet& alphabet, std::size_t begin,
                        std::size_t end) {
    auto text = std::string_view(l.text).substr(begin, end - begin);
    auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      throw ParseError(l.number, begin + 1, "relation side is empty");
    }
    auto last = text.find_last_not_of(" \t");
    auto trimmed = text.substr(first, last - first + 1);
    if (trimmed == "e") {
      throw ParseError(l.number, begin + first + 1, "relation side is the identity");
    }
    try {
      return alphabet.parse(trimmed);
    } catch (const ParseError& e) {
      throw ParseError(l.number, begin + first + e.column(), e.message());
    }
  }

  MonoidSpec parse_graph_product(const Line& head) {
    arity(head, 2);
    auto k = count(head, head.tokens[1], "a vertex count");
    if (k == 0) {
      throw ParseError(head.number, head.tokens[1].column, "need at least one vertex");
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    MonoidSpec spec;
    spec.kind = MonoidSpec::Kind::GraphProduct;
    while (true) {
      const Line* l = peek();
      if (l == nullptr) {
        next("'end'");
      }
      if (l->tokens[0].text == "end") {
        ++pos_;
        arity(*l, 1);
        break;
      }
      if (l->tokens[0].text == "edge") {
        ++pos_;
        arity(*l, 3);
        auto i = count(*l, l->tokens[1], "a vertex number");
        auto j = count(*l, l->tokens[2], "a vertex number");
        for (auto [v, t] : {std::pair{i, &l->tokens[1]}, std::pair{j, &l->tokens[2]}}) {
          if (v < 1 || v > k) {
            throw ParseError(l->number, t->column,
                             "vertex must be between 1 and " + std::to_string(k));
          }
        }
        if (i == j) {
          throw ParseError(l->number, l->tokens[2].column, "edge is a loop");
        }
        edges.emplace_back(i - 1, j - 1);
        continue;
      }
      if (spec.factors.size() == k) {
        throw ParseError(l->number, l->tokens[0].column,
                         "graph product has only " + std::to_string(k) + " vertices");
      }
      spec.factors.push_back(parse_monoid());
    }
    if (spec.factors.size() != k) {
      throw ParseError(lines_[pos_ - 1].number, 1,
                       "graph product needs " + std::to_string(k) + " factors, got " +
                           std::to_string(spec.factors.size()));
    }
    spec.graph = SimplicialGraph(k, edges);
    std::vector<HomogeneousPresentation> factors;
    for (const auto& f : spec.factors) {
      factors.push_back(f.presentation);
    }
    spec.presentation = graph_product(spec.graph, factors);
    spec.coxeter = spec.presentation.coxeter();
    return spec;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(MonoidSpec::Kind k) {
  switch (k) {
    case MonoidSpec::Kind::Free:
      return "free";
    case MonoidSpec::Kind::Coxeter:
      return "coxeter";
    case MonoidSpec::Kind::Presentation:
      return "presentation";
    case MonoidSpec::Kind::GraphProduct:
      return "graphproduct";
  }
  return "free";
}

MonoidSpec parse_spec(std::string_view text) {
  return Parser(split_lines(text)).parse_document();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MonoidSpec load_spec(const std::filesystem::path& path) {
  return parse_spec(read_file(path));
}

}  // namespace rlcm
