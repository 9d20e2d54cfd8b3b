#include <doctest.h>

#include <random>

#include "signpat/cyclic.hpp"
#include "signpat/rational.hpp"
#include "signpat/sign_matrix.hpp"
#include "test_util.hpp"

using namespace signpat;

namespace {

const Sign kAll[4] = {Sign::Zero, Sign::Plus, Sign::Minus, Sign::Amb};

// The known non-idempotent 4x4 upper triangular pattern whose square picks
// up an ambiguous (1,4) entry.
const char* kNonIdempotent4x4 = "++-+|0+0+|000+|000+";

// Upper triangular 5x5 with the (1,5) corner left to the caller; no
// completion of the corner is sign k-potent for any k.
SignMatrix stuck_pattern(Sign corner) {
  SignMatrix a = pat("+---0|000++|00+0-|000++|0000+");
  a.set(0, 4, corner);
  return a;
}

}  // namespace

TEST_SUITE("sign_algebra") {

TEST_CASE("scalar addition") {
  CHECK(sign_add(Sign::Plus, Sign::Minus) == Sign::Amb);
  CHECK(sign_add(Sign::Zero, Sign::Minus) == Sign::Minus);
  CHECK(sign_add(Sign::Amb, Sign::Plus) == Sign::Amb);
  for (Sign a : kAll) {
    CHECK(sign_add(Sign::Zero, a) == a);
    CHECK(sign_add(Sign::Amb, a) == Sign::Amb);
    for (Sign b : kAll) {
      CHECK(sign_add(a, b) == sign_add(b, a));
      for (Sign c : kAll)
        CHECK(sign_add(sign_add(a, b), c) == sign_add(a, sign_add(b, c)));
    }
  }
}

TEST_CASE("scalar multiplication") {
  CHECK(sign_mul(Sign::Minus, Sign::Minus) == Sign::Plus);
  CHECK(sign_mul(Sign::Amb, Sign::Zero) == Sign::Zero);
  CHECK(sign_mul(Sign::Amb, Sign::Minus) == Sign::Amb);
  for (Sign a : kAll) {
    CHECK(sign_mul(Sign::Zero, a) == Sign::Zero);
    CHECK(sign_mul(Sign::Plus, a) == a);
    for (Sign b : kAll) CHECK(sign_mul(a, b) == sign_mul(b, a));
  }
}

TEST_CASE("negation is an involution fixing Zero and Amb") {
  CHECK(negated(Sign::Zero) == Sign::Zero);
  CHECK(negated(Sign::Amb) == Sign::Amb);
  for (Sign a : kAll) CHECK(negated(negated(a)) == a);
}

TEST_CASE("matrix product") {
  const SignMatrix p2 = p_cycle(2);
  CHECK(mat_mul(p2, p2) == pat("+0|0+"));

  const SignMatrix j2 = all_plus(2, 2);
  CHECK(mat_mul(j2, j2) == j2);

  const SignMatrix huang = pat(kNonIdempotent4x4);
  const SignMatrix sq = mat_mul(huang, huang);
  CHECK(sq.get(0, 3) == Sign::Amb);
  CHECK(sq != huang);

  CHECK_THROWS_AS(mat_mul(p2, pat("+")), std::invalid_argument);
}

TEST_CASE("matrix powers") {
  CHECK(mat_pow(q_cycle(1), 2) == pat("+"));
  CHECK(mat_pow(q_cycle(1), 3) == pat("-"));
  CHECK(mat_pow(p_cycle(3), 4) == p_cycle(3));
}

TEST_CASE("potence index") {
  const PotenceReport idem = potence_index(pat("+-|0+"));
  REQUIRE(idem.k.has_value());
  CHECK(*idem.k == 1);

  const PotenceReport q2 = potence_index(q_cycle(2));
  REQUIRE(q2.k.has_value());
  CHECK(*q2.k == 4);
}

TEST_CASE("stuck corner pattern has no potence index for any completion") {
  for (Sign corner : {Sign::Zero, Sign::Plus, Sign::Minus}) {
    const SignMatrix a = stuck_pattern(corner);
    // Direct evaluation of the (1,5) entry of the square: the sum always
    // contains opposite-signed terms, whatever the corner is.
    Sign entry = Sign::Zero;
    for (int p = 0; p < 5; ++p)
      entry = sign_add(entry, sign_mul(a.get(0, p), a.get(p, 4)));
    CHECK(entry == Sign::Amb);
    CHECK(mat_mul(a, a).get(0, 4) == Sign::Amb);

    const PotenceReport rep = potence_index(a, 100);
    CHECK_FALSE(rep.k.has_value());
  }
}

TEST_CASE("subpattern") {
  const SignMatrix z(2);
  CHECK(subpattern(z, pat("+-|0+")));
  CHECK(subpattern(pat("+-|0+"), pat("+-|0+")));
  CHECK_FALSE(subpattern(pat("+"), pat("-")));

  // transitivity on random triples chained by zeroing entries
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    SignMatrix c = random_pattern(3, rng);
    SignMatrix b = c;
    SignMatrix a = c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (rng() % 2) b.set(i, j, Sign::Zero);
        if (rng() % 2) a.set(i, j, b.get(i, j));
        else a.set(i, j, Sign::Zero);
      }
    CHECK(subpattern(a, b));
    CHECK(subpattern(b, c));
    CHECK(subpattern(a, c));
  }
}

TEST_CASE("equivalence transforms") {
  const SignMatrix a = pat("+-|0+");
  const std::vector<Sign> id_sig = {Sign::Plus, Sign::Plus};
  CHECK(signature_similar(a, id_sig) == a);
  CHECK(negated(q_cycle(1)) == p_cycle(1));
  CHECK(transposed(transposed(a)) == a);

  // Permutation, signature and transposition preserve the potence index.
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int t = 0; t < 5000 && seen < 50; ++t) {
    const SignMatrix m = random_pattern(3, rng);
    const PotenceReport base = potence_index(m);
    std::vector<int> perm = {0, 1, 2};
    for (int s = 0; s < 3; ++s) std::swap(perm[rng() % 3], perm[rng() % 3]);
    std::vector<Sign> d(3);
    for (auto& v : d) v = rng() % 2 ? Sign::Plus : Sign::Minus;
    CHECK(potence_index(permuted(m, perm)).k == base.k);
    CHECK(potence_index(signature_similar(m, d)).k == base.k);
    CHECK(potence_index(transposed(m)).k == base.k);
    if (base.k) ++seen;
  }
  CHECK(seen >= 20);
}

TEST_CASE("product is monotone in the subpattern order") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 100; ++t) {
    SignMatrix a2 = random_pattern(3, rng), b2 = random_pattern(3, rng);
    SignMatrix a1 = a2, b1 = b2;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (rng() % 2) a1.set(i, j, Sign::Zero);
        if (rng() % 2) b1.set(i, j, Sign::Zero);
      }
    const SignMatrix p1 = mat_mul(a1, b1), p2 = mat_mul(a2, b2);
    if (!p1.is_proper() || !p2.is_proper()) continue;
    ++checked;
    CHECK(subpattern(p1, p2));
  }
  CHECK(checked >= 100);
}

TEST_CASE("random rational members agree with the sign product") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + int(rng() % 3);
    const SignMatrix a = random_pattern(n, rng);
    RationalMatrix b(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational mag(1 + int(rng() % 7), 1 + int(rng() % 5));
        if (a.get(i, j) == Sign::Plus) b.at(i, j) = mag;
        if (a.get(i, j) == Sign::Minus) b.at(i, j) = -mag;
      }
    REQUIRE(qualitative_member(b, a));
    const SignMatrix prod = mat_mul(a, a);
    const RationalMatrix bb = rat_mul(b, b);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (prod.get(i, j) != Sign::Amb)
          CHECK(sign_of(bb.at(i, j)) == prod.get(i, j));
  }
}

TEST_CASE("qualitative membership") {
  const SignMatrix zp(2);
  CHECK(qualitative_member(RationalMatrix(2), zp));
  RationalMatrix b(1);
  b.at(0, 0) = Rational(1, 2);
  CHECK_FALSE(qualitative_member(b, pat("-")));
}

TEST_CASE("shape and argument validation") {
  CHECK_THROWS_AS(subpattern(pat("+"), pat("+0|0+")), std::invalid_argument);
  const std::vector<int> bad_perm = {0, 0};
  CHECK_THROWS_AS(permuted(pat("+0|0+"), bad_perm), std::invalid_argument);
  const std::vector<Sign> bad_sig = {Sign::Plus, Sign::Zero};
  CHECK_THROWS_AS(signature_similar(pat("+0|0+"), bad_sig), std::invalid_argument);
  CHECK_THROWS_AS(potence_index(pat("+#|00")), std::invalid_argument);
}

TEST_CASE("default potence cap") {
  CHECK(default_potence_cap(1) == 2);
  CHECK(default_potence_cap(4) == 24);
  CHECK(default_potence_cap(7) == 840);
  CHECK(default_potence_cap(9) == 2520);
  CHECK(default_potence_cap(40) == 2520);
}

}  // TEST_SUITE
