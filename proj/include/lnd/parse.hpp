#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/poly.hpp"

namespace lnd {

/// Parses a polynomial expression.
///
///     expr   := term (('+'|'-') term)*
///     term   := signed ('*' signed)*
///     signed := ('+'|'-') signed | factor
///     factor := base ('^' nat)?
///     base   := rational | ident | '(' expr ')'
///
/// Rational literals are `p` or `p/q`. Identifiers are `[A-Za-z_][A-Za-z0-9_]*`
/// followed by any number of `'` marks. With a whitelist, the result is
/// expressed over exactly those variables and any other identifier is an
/// error; without one, variables are declared in order of first appearance.
/// Throws ParseError carrying the byte offset of the problem.
Poly parse_expression(std::string_view text,
                      const std::optional<std::vector<std::string>>& whitelist = std::nullopt);

}  // namespace lnd
