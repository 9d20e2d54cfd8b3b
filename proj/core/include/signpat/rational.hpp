#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "signpat/sign_matrix.hpp"

namespace signpat {

// Exact rational scalar; arbitrary-precision, never rounded.
using Rational = boost::multiprecision::cpp_rational;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : RationalMatrix(n, n) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  int order() const { return rows_; }

  const Rational& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
  Rational& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> e_;
};

RationalMatrix rat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix rat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix rat_pow(const RationalMatrix& a, int e);
RationalMatrix rat_identity(int n);

Sign sign_of(const Rational& v);
SignMatrix sign_pattern_of(const RationalMatrix& b);

// sgn(b_ij) = a_ij for all entries.
bool qualitative_member(const RationalMatrix& b, const SignMatrix& a);

std::string to_string(const Rational& v);
// Accepts "p", "-p", "p/q".
Rational rational_from_string(std::string_view s);

}  // namespace signpat
