#include "mstd/literal.hpp"

#include <charconv>
#include <numeric>
#include <vector>

namespace mstd {

namespace {

struct Token {
  std::string_view text;
  std::size_t index;   // 1-based
  std::size_t offset;  // into the literal
};

struct Fraction {
  Int num;
  Int den;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<Token> split(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t start = 0;
  for (std::size_t index = 1;; ++index) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t offset = start;
    const std::string_view tok = trim(text.substr(start, end - start), offset);
    tokens.push_back({tok, index, offset});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return tokens;
}

[[noreturn]] void fail(const Token& t, const std::string& why) {
  throw LiteralError("malformed set literal at token " + std::to_string(t.index) +
                         " (offset " + std::to_string(t.offset) + "): " + why,
                     t.index, t.offset);
}

Int parse_integer(const Token& t, std::string_view s) {
  if (s.empty()) fail(t, "empty token");
  if (s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range) fail(t, "integer out of range");
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(t, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

Fraction parse_fraction(const Token& t, bool allow_rational) {
  const std::size_t slash = t.text.find('/');
  if (slash == std::string_view::npos) return {parse_integer(t, t.text), 1};
  if (!allow_rational) fail(t, "rational tokens are not accepted here");
  const Int num = parse_integer(t, t.text.substr(0, slash));
  const Int den = parse_integer(t, t.text.substr(slash + 1));
  if (den <= 0) fail(t, "denominator must be positive");
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

std::vector<Fraction> parse_all(std::string_view text, bool allow_rational) {
  std::vector<Fraction> out;
  for (const Token& t : split(text)) out.push_back(parse_fraction(t, allow_rational));
  return out;
}

}  // namespace

IntSet parse_int_set(std::string_view text) {
  std::vector<Int> values;
  for (const Fraction& f : parse_all(text, false)) values.push_back(f.num);
  return IntSet(std::move(values));
}

RationalSet parse_rational_set(std::string_view text) {
  const std::vector<Fraction> fs = parse_all(text, true);
  Int den = 1;
  for (const Fraction& f : fs) den = std::lcm(den, f.den);
  std::vector<Int> nums;
  nums.reserve(fs.size());
  for (const Fraction& f : fs) nums.push_back(f.num * (den / f.den));
  return RationalSet(IntSet(std::move(nums)), den);
}

std::string format_set(const IntSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

std::string format_set(const RationalSet& r) {
  std::string out;
  bool first = true;
  for (Int p : r.numerators()) {
    if (!first) out += ',';
    first = false;
    const Int g = std::gcd(p, r.denominator());
    const Int den = r.denominator() / g;
    out += std::to_string(p / g);
    if (den != 1) out += '/' + std::to_string(den);
  }
  return out;
}

}  // namespace mstd
