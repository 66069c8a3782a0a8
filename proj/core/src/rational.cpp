#include "affgrass/rational.hpp"

#include "affgrass/error.hpp"

#include <cctype>

namespace affgrass {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* what) -> Rational {
    throw ParseError(std::string(what) + " in rational '" + std::string(text) +
                         "'",
                     1, static_cast<int>(pos) + 1);
  };
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    return pos > start;
  };
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  if (!digits())
    return fail("expected digits");
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_start = pos;
    if (!digits())
      return fail("expected denominator digits");
    bool all_zero = true;
    for (std::size_t i = den_start; i < pos; ++i)
      all_zero = all_zero && text[i] == '0';
    if (all_zero)
      return fail("zero denominator");
  }
  if (pos != text.size())
    return fail("trailing characters");
  std::string s(text);
  if (s[0] == '+')
    s.erase(0, 1);
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

} // namespace affgrass
