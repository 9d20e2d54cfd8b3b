#pragma once

#include <cstdint>
#include <optional>

namespace signpat {

// Four-valued sign scalar. Pattern files contain only {Zero, Plus, Minus};
// Amb marks a sum that contained a pair of opposite signed terms.
enum class Sign : std::uint8_t { Zero = 0, Plus = 1, Minus = 2, Amb = 3 };

constexpr Sign sign_add(Sign a, Sign b) {
  constexpr Sign t[4][4] = {
      {Sign::Zero, Sign::Plus, Sign::Minus, Sign::Amb},
      {Sign::Plus, Sign::Plus, Sign::Amb, Sign::Amb},
      {Sign::Minus, Sign::Amb, Sign::Minus, Sign::Amb},
      {Sign::Amb, Sign::Amb, Sign::Amb, Sign::Amb},
  };
  return t[int(a)][int(b)];
}

// Zero annihilates even an ambiguous factor; Amb absorbs any nonzero one.
constexpr Sign sign_mul(Sign a, Sign b) {
  constexpr Sign t[4][4] = {
      {Sign::Zero, Sign::Zero, Sign::Zero, Sign::Zero},
      {Sign::Zero, Sign::Plus, Sign::Minus, Sign::Amb},
      {Sign::Zero, Sign::Minus, Sign::Plus, Sign::Amb},
      {Sign::Zero, Sign::Amb, Sign::Amb, Sign::Amb},
  };
  return t[int(a)][int(b)];
}

constexpr Sign negated(Sign a) {
  constexpr Sign t[4] = {Sign::Zero, Sign::Minus, Sign::Plus, Sign::Amb};
  return t[int(a)];
}

constexpr bool is_nonzero(Sign a) { return a != Sign::Zero; }
constexpr bool is_proper(Sign a) { return a != Sign::Amb; }

constexpr char to_char(Sign a) {
  constexpr char c[4] = {'0', '+', '-', '#'};
  return c[int(a)];
}

constexpr std::optional<Sign> sign_from_char(char c) {
  switch (c) {
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '#': return Sign::Amb;
    default: return std::nullopt;
  }
}

}  // namespace signpat
