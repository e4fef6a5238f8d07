#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mstd/int_set.hpp"
#include "mstd/rational_set.hpp"

// Set literals: comma-separated integers such as "0,2,3,4,7,11,12,14".
// Rational literals additionally accept "p/q" tokens ("0,1,5/2").
namespace mstd {

class LiteralError : public std::invalid_argument {
 public:
  LiteralError(const std::string& what, std::size_t token, std::size_t offset)
      : std::invalid_argument(what), token_(token), offset_(offset) {}

  /// 1-based index of the offending token.
  std::size_t token() const noexcept { return token_; }
  /// 0-based character offset of the offending token.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t token_;
  std::size_t offset_;
};

IntSet parse_int_set(std::string_view text);
RationalSet parse_rational_set(std::string_view text);

std::string format_set(const IntSet& a);
std::string format_set(const RationalSet& r);

}  // namespace mstd
