#include "amalgam/presentation.hpp"

#include <cctype>
#include <limits>
#include <string>

namespace amalgam {

AmalgamParams parse_params(long m, long n, long d) {
  if (m < 2) throw RangeError("m must be at least 2, got " + std::to_string(m));
  if (n < 3) throw RangeError("n must be at least 3, got " + std::to_string(n));
  if (d < 1) throw RangeError("d must be at least 1, got " + std::to_string(d));
  if (m % d != 0)
    throw DivisibilityError("d = " + std::to_string(d) + " does not divide m = " +
                            std::to_string(m));
  if (n % d != 0)
    throw DivisibilityError("d = " + std::to_string(d) + " does not divide n = " +
                            std::to_string(n));
  // Proper amalgamation: d < m and d < n. d = 1 (the free product) passes
  // automatically because m >= 2 and n >= 3.
  if (d >= m)
    throw RangeError("improper amalgamation: d = " + std::to_string(d) +
                     " must be smaller than m = " + std::to_string(m));
  if (d >= n)
    throw RangeError("improper amalgamation: d = " + std::to_string(d) +
                     " must be smaller than n = " + std::to_string(n));
  return AmalgamParams{static_cast<int>(m), static_cast<int>(n),
                       static_cast<int>(d)};
}

namespace {

// Whitespace or the middle dot U+00B7 (0xC2 0xB7) used by render().
std::size_t skip_separators(const std::string& text, std::size_t i) {
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
    } else if (c == 0xC2 && i + 1 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      i += 2;
    } else {
      break;
    }
  }
  return i;
}

long parse_exponent(const std::string& text, std::size_t& i) {
  std::size_t start = i;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    throw SyntaxError("expected integer after '^'", i);
  long value = 0;
  constexpr long kLimit = std::numeric_limits<long>::max() / 16;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (value > kLimit) throw SyntaxError("exponent out of range", start);
    value = value * 10 + (text[i] - '0');
    ++i;
  }
  return negative ? -value : value;
}

}  // namespace

RawWord parse_word(const std::string& text, const AmalgamParams& params) {
  RawWord word;
  std::size_t i = 0;
  while ((i = skip_separators(text, i)) < text.size()) {
    char c = text[i];
    if (c == '1') {  // identity term
      ++i;
      continue;
    }
    if (c != 's' && c != 't' && c != 'r')
      throw SyntaxError("expected generator 's', 't' or 'r'", i);
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exponent = parse_exponent(text, i);
    }
    if (exponent == 0) continue;
    if (c == 'r') {
      // r = s^(m/d); guard the multiplication for absurd exponents.
      long width = params.coset_width(Factor::s);
      if (exponent > std::numeric_limits<long>::max() / width ||
          exponent < std::numeric_limits<long>::min() / width)
        throw SyntaxError("exponent out of range", i - 1);
      word.letters.push_back({Factor::s, exponent * width});
    } else {
      word.letters.push_back({c == 's' ? Factor::s : Factor::t, exponent});
    }
  }
  return word;
}

std::string render(const RawWord& word) {
  if (word.letters.empty()) return "1";
  std::string out;
  for (const auto& letter : word.letters) {
    if (!out.empty()) out += ' ';
    out += generator_char(letter.generator);
    if (letter.exponent != 1) out += "^" + std::to_string(letter.exponent);
  }
  return out;
}

}  // namespace amalgam
