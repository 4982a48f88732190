#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sofic2 {

/// An alphabet symbol. Symbols are compared by their token; any nonempty
/// whitespace-free string is a valid token, which lets gadget
/// constructions mint fresh symbols by name.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string token);

  const std::string& token() const noexcept { return token_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
    return a.token_.compare(b.token_) <=> 0;
  }

 private:
  std::string token_;
};

using Word = std::vector<Symbol>;

/// Parses the textual word syntax used throughout the file formats:
/// "-" is the empty word, every plain character is one symbol, and
/// "[tok]" is a multi-character symbol.
Word parse_word(std::string_view text);

/// Inverse of parse_word. Single-character tokens other than the reserved
/// characters are written bare; everything else is bracketed.
std::string format_word(const Word& word);

/// Convenience for building a word from single-character symbols.
Word word_of(std::string_view chars);

Word concat(const Word& a, const Word& b);

/// Returns (root, exponent) with word = root^exponent and root primitive.
/// Throws Error(EmptyWord) on the empty word.
std::pair<Word, std::size_t> primitive_root(const Word& word);

bool is_primitive(const Word& word);

/// Offset k such that rotating `word` left by k yields its lexicographically
/// least rotation (the smallest such k).
std::size_t least_rotation_offset(const Word& word);

Word rotate_left(const Word& word, std::size_t k);

}  // namespace sofic2

template <>
struct std::hash<sofic2::Symbol> {
  std::size_t operator()(const sofic2::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.token());
  }
};
