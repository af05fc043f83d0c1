#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagcoh {

/// Exact rational number backed by GMP. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Bad user input: unknown diagram, malformed polynomial, out-of-range node.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (degree cap, enumeration cap, memory budget)
/// would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "3", "-7/2". Throws InputError on anything else.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool slash = false;
  bool digit = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (c >= '0' && c <= '9') {
      digit = true;
    } else {
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!digit) throw InputError("malformed rational literal '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  if (auto slash_at = s.find('/'); slash_at != std::string::npos &&
                                   s.find_first_not_of('0', slash_at + 1) == std::string::npos) {
    throw InputError("zero denominator in '" + s + "'");
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace flagcoh
