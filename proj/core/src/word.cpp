#include "sofic2/word.hpp"

#include <algorithm>
#include <cctype>

#include "sofic2/error.hpp"

namespace sofic2 {

namespace {

bool is_reserved_char(char c) {
  return c == '[' || c == ']' || c == '-' || c == '=' || c == ':' ||
         std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (token_.empty()) throw Error(ErrorKind::ParseError, "empty symbol token");
  for (char c : token_) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      throw Error(ErrorKind::ParseError, "symbol token contains whitespace: '" + token_ + "'");
    }
  }
}

Word parse_word(std::string_view text) {
  Word out;
  if (text == "-") return out;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty word text (use '-')");
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[') {
      auto close = text.find(']', i + 1);
      if (close == std::string_view::npos || close == i + 1) {
        throw Error(ErrorKind::ParseError, "bad bracketed symbol in '" + std::string(text) + "'");
      }
      out.emplace_back(std::string(text.substr(i + 1, close - i - 1)));
      i = close;
    } else if (is_reserved_char(c)) {
      throw Error(ErrorKind::ParseError, "reserved character in word '" + std::string(text) + "'");
    } else {
      out.emplace_back(std::string(1, c));
    }
  }
  return out;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "-";
  std::string out;
  for (const auto& s : word) {
    const auto& t = s.token();
    if (t.size() == 1 && !is_reserved_char(t[0])) {
      out += t;
    } else {
      out += '[';
      out += t;
      out += ']';
    }
  }
  return out;
}

Word word_of(std::string_view chars) {
  Word out;
  out.reserve(chars.size());
  for (char c : chars) out.emplace_back(std::string(1, c));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::pair<Word, std::size_t> primitive_root(const Word& word) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "primitive_root of the empty word");
  const std::size_t n = word.size();
  // Prefix function: the least period is n - pi[n-1] when it divides n.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && !(word[i] == word[k])) k = pi[k - 1];
    if (word[i] == word[k]) ++k;
    pi[i] = k;
  }
  std::size_t period = n - pi[n - 1];
  if (n % period != 0) period = n;
  return {Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(period)), n / period};
}

bool is_primitive(const Word& word) { return primitive_root(word).second == 1; }

std::size_t least_rotation_offset(const Word& word) {
  // Two-pointer minimum rotation; returns the smallest least offset.
  const std::size_t n = word.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Symbol& a = word[(i + k) % n];
    const Symbol& b = word[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

Word rotate_left(const Word& word, std::size_t k) {
  if (word.empty()) return word;
  k %= word.size();
  Word out;
  out.reserve(word.size());
  out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
  out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace sofic2
