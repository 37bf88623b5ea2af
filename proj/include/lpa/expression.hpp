#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lpa/cohn.hpp"

namespace lpa {

/// Expression syntax error; `position()` is a 0-based byte offset.
class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses
///   element := term { ('+'|'-') term }
///   term    := [ coef ] factor { factor } | coef
///   coef    := integer [ '/' positive-integer ]
///   factor  := identifier [ '*' ]
/// A bare coefficient multiplies the unit (the sum of all vertices). A bare
/// vertex name is its idempotent; `e*` (no space) is the ghost edge.
/// Adjacent factors must have matching vertices.
Element parse_element(const Graph& g, FieldSpec f, std::string_view text);

/// `e e* - v + 2 f g*`; terms in canonical monomial order, zero prints `0`.
std::string to_string(const Graph& g, const Element& x);
std::string to_string(const Graph& g, const Monomial& m);
std::string to_string(const Graph& g, const Path& p);

}  // namespace lpa
