#include "signpat/rational.hpp"

#include <stdexcept>

namespace signpat {

RationalMatrix rat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("rational matrix product shape mismatch");
  RationalMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Rational acc = 0;
      for (int t = 0; t < a.cols(); ++t) acc += a.at(i, t) * b.at(t, j);
      r.at(i, j) = acc;
    }
  return r;
}

RationalMatrix rat_add(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("rational matrix shape mismatch");
  RationalMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

RationalMatrix rat_pow(const RationalMatrix& a, int e) {
  if (!a.square()) throw std::invalid_argument("rat_pow requires a square matrix");
  if (e < 1) throw std::invalid_argument("rat_pow requires e >= 1");
  RationalMatrix p = a;
  for (int t = 2; t <= e; ++t) p = rat_mul(p, a);
  return p;
}

RationalMatrix rat_identity(int n) {
  RationalMatrix r(n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

Sign sign_of(const Rational& v) {
  if (v == 0) return Sign::Zero;
  return v > 0 ? Sign::Plus : Sign::Minus;
}

SignMatrix sign_pattern_of(const RationalMatrix& b) {
  SignMatrix m(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.set(i, j, sign_of(b.at(i, j)));
  return m;
}

bool qualitative_member(const RationalMatrix& b, const SignMatrix& a) {
  if (b.rows() != a.rows() || b.cols() != a.cols())
    throw std::invalid_argument("qualitative_member shape mismatch");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (sign_of(b.at(i, j)) != a.get(i, j)) return false;
  return true;
}

std::string to_string(const Rational& v) { return v.str(); }

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Rational(std::string(s));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal '" + std::string(s) + "'");
  }
}

}  // namespace signpat
