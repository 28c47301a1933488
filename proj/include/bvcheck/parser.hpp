#ifndef BVCHECK_PARSER_HPP
#define BVCHECK_PARSER_HPP

#include <string>

#include "bvcheck/poly.hpp"

namespace bvcheck {

/// Parses "3/2*x1^2*xi1 - h^-1*(x2 + 1)" style expressions over the named
/// generators of a universe. Used by scenario files and golden files.
Poly parse_poly(const ConstUniversePtr& u, const std::string& text);

}  // namespace bvcheck

#endif
