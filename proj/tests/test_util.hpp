#pragma once

#include <random>
#include <string>

#include "signpat/pattern_text.hpp"
#include "signpat/sign_matrix.hpp"

// Rows separated by '|', e.g. pat("+-|0+").
inline signpat::SignMatrix pat(const std::string& rows) {
  std::string text;
  for (char c : rows) text.push_back(c == '|' ? '\n' : c);
  return signpat::parse_pattern(text, true);
}

inline signpat::Sign random_sign(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return signpat::Sign::Zero;
    case 1: return signpat::Sign::Plus;
    default: return signpat::Sign::Minus;
  }
}

inline signpat::SignMatrix random_pattern(int n, std::mt19937_64& rng) {
  signpat::SignMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, random_sign(rng));
  return m;
}
