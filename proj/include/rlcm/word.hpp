#ifndef RLCM_WORD_HPP_
#define RLCM_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rlcm {

using letter_type = std::uint32_t;

// A word over the alphabet {0, ..., n - 1}; the empty word is the identity.
using word_type = std::vector<letter_type>;

struct WordHash {
  std::size_t operator()(const word_type& w) const noexcept;
};

word_type concat(const word_type& u, const word_type& v);

// Generator names used for printing and parsing words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // s1, s2, ..., sn
  static Alphabet standard(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(letter_type s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  // The identity prints as "e". Words print by concatenation when every
  // name is a single character, otherwise with '.' between letters.
  std::string format(const word_type& w) const;

  // Inverse of format. Separators '.' and blanks are optional; names are
  // matched greedily by longest prefix. Throws ParseError with the column
  // of the first unrecognized character.
  word_type parse(std::string_view text) const;

  // Parses a comma-separated list of words, e.g. "a,b,ab".
  std::vector<word_type> parse_list(std::string_view text) const;

 private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

}  // namespace rlcm

#endif  // RLCM_WORD_HPP_
