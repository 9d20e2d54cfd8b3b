#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "signpat/sign_matrix.hpp"

namespace signpat {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One row per line over '+', '-', '0' (and '#' when allow_ambiguous), no
// separators within a row; blank lines are ignored. The pattern must be
// square.
SignMatrix parse_pattern(std::string_view text, bool allow_ambiguous = false);

// Rows joined by '\n', with a trailing newline.
std::string format_pattern(const SignMatrix& m);

}  // namespace signpat
