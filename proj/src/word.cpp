#include "rlcm/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "rlcm/error.hpp"

namespace rlcm {

std::size_t WordHash::operator()(const word_type& w) const noexcept {
  return boost::hash_range(w.begin(), w.end());
}

word_type concat(const word_type& u, const word_type& v) {
  word_type out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

bool valid_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw ValidationError("generator names must be nonempty");
    }
    if (n == "e") {
      throw ValidationError("generator name 'e' is reserved for the identity");
    }
    if (!std::all_of(n.begin(), n.end(), valid_name_char)) {
      throw ValidationError("generator name '" + n +
                            "' may only contain letters, digits and '_'");
    }
    if (!seen.insert(n).second) {
      throw ValidationError("duplicate generator name '" + n + "'");
    }
    single_char_ = single_char_ && n.size() == 1;
  }
}

Alphabet Alphabet::standard(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

std::string Alphabet::format(const word_type& w) const {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single_char_) {
      out += '.';
    }
    out += name(w[i]);
  }
  return out;
}

word_type Alphabet::parse(std::string_view text) const {
  word_type out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == '.' || text[pos] == ' ')) {
      ++pos;
    }
  };
  skip();
  if (text.substr(pos) == "e") {
    return out;
  }
  while (pos < text.size()) {
    std::size_t best_len = 0;
    letter_type best = 0;
    for (letter_type s = 0; s < names_.size(); ++s) {
      const auto& n = names_[s];
      if (n.size() > best_len && text.substr(pos, n.size()) == n) {
        best_len = n.size();
        best = s;
      }
    }
    if (best_len == 0) {
      throw ParseError(0, pos + 1,
                       "unknown generator at '" + std::string(text.substr(pos)) +
                           "'");
    }
    out.push_back(best);
    pos += best_len;
    skip();
  }
  return out;
}

std::vector<word_type> Alphabet::parse_list(std::string_view text) const {
  std::vector<word_type> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos
                                       ? std::string_view::npos
                                       : comma - start);
    if (item.empty()) {
      throw ParseError(0, start + 1, "empty list item");
    }
    try {
      out.push_back(parse(item));
    } catch (const ParseError& e) {
      throw ParseError(0, start + e.column(), e.message());
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace rlcm
