#include "signpat/pattern_text.hpp"

#include <vector>

namespace signpat {

SignMatrix parse_pattern(std::string_view text, bool allow_ambiguous) {
  std::vector<std::string> rows;
  std::string cur;
  auto flush = [&] {
    bool blank = true;
    for (char c : cur)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (!blank) rows.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();

  if (rows.empty()) throw ParseError("empty pattern");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Tolerate trailing whitespace on a row.
    while (!rows[i].empty() &&
           (rows[i].back() == ' ' || rows[i].back() == '\t' || rows[i].back() == '\r'))
      rows[i].pop_back();
    if (rows[i].size() != rows[0].size())
      throw ParseError("ragged rows: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows[0].size()));
  }
  if (rows[0].size() != n)
    throw ParseError("pattern must be square: " + std::to_string(n) + " rows of length " +
                     std::to_string(rows[0].size()));

  SignMatrix m{int(n)};
  for (int i = 0; i < int(n); ++i) {
    for (int j = 0; j < int(n); ++j) {
      const auto s = sign_from_char(rows[i][j]);
      if (!s)
        throw ParseError(std::string("illegal character '") + rows[i][j] +
                         "' at row " + std::to_string(i + 1));
      if (*s == Sign::Amb && !allow_ambiguous)
        throw ParseError("'#' entries require the generalized flag");
      m.set(i, j, *s);
    }
  }
  return m;
}

std::string format_pattern(const SignMatrix& m) {
  std::string out;
  out.reserve(std::size_t(m.rows()) * (m.cols() + 1));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.push_back(to_char(m.get(i, j)));
    out.push_back('\n');
  }
  return out;
}

}  // namespace signpat
