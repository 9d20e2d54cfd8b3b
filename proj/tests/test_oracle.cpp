#include <doctest.h>

#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "signpat/cyclic.hpp"
#include "signpat/oracle.hpp"
#include "test_util.hpp"

using namespace signpat;

namespace {

std::set<SignMatrix> enum_set(const EnumSpec& spec, int jobs = 1) {
  std::set<SignMatrix> out;
  enumerate(spec, [&](const SignMatrix& m) { out.insert(m); }, jobs);
  return out;
}

EnumSpec full_spec(int n, EnumSpec::Predicate pred, int k = 1) {
  EnumSpec s;
  s.n = n;
  s.shape = EnumSpec::Shape::Full;
  s.predicate = pred;
  s.k = k;
  return s;
}

// The exact potence decision, for validating the masked-ambiguity early
// exit used by the enumeration loops.
std::optional<int> exact_k(const SignMatrix& a, int k_max) {
  const PotenceReport rep = potence_index(a, k_max);
  return rep.k;
}

std::optional<int> pruned_k(const SignMatrix& a, int k_max) {
  std::unordered_map<SignMatrix, int, SignMatrixHash> seen;
  seen.emplace(a, 1);
  SignMatrix p = a;
  for (int e = 2; e <= k_max + 1; ++e) {
    p = mat_mul(p, a);
    if (p == a) return e - 1;
    bool masked = false;
    for (int i = 0; i < a.order() && !masked; ++i)
      for (int j = 0; j < a.order(); ++j)
        if (p.get(i, j) == Sign::Amb && is_nonzero(a.get(i, j))) {
          masked = true;
          break;
        }
    if (masked) return std::nullopt;
    if (!seen.emplace(p, e).second) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("order one enumerations") {
  CHECK(enum_set(full_spec(1, EnumSpec::Predicate::Idempotent)) ==
        std::set<SignMatrix>{pat("0"), pat("+")});
  CHECK(enum_set(full_spec(1, EnumSpec::Predicate::KPotent, 2)) ==
        std::set<SignMatrix>{pat("-")});
}

TEST_CASE("upper triangular enumeration with a fixed diagonal") {
  EnumSpec s;
  s.n = 2;
  s.shape = EnumSpec::Shape::UpperTriangular;
  s.diag = {Sign::Plus, Sign::Plus};
  s.predicate = EnumSpec::Predicate::Idempotent;
  CHECK(enum_set(s).size() == 3);
}

TEST_CASE("full 2x2 idempotent count matches the hand count") {
  // case split on the off-diagonal support gives 10 + 6 + 2 patterns
  CHECK(enum_set(full_spec(2, EnumSpec::Predicate::Idempotent)).size() == 18);
}

TEST_CASE("enumeration order is deterministic and job independent") {
  std::vector<SignMatrix> serial, parallel;
  const EnumSpec s = full_spec(2, EnumSpec::Predicate::Idempotent);
  enumerate(s, [&](const SignMatrix& m) { serial.push_back(m); }, 1);
  enumerate(s, [&](const SignMatrix& m) { parallel.push_back(m); }, 3);
  CHECK(serial == parallel);
  CHECK(serial.size() == 18);
}

TEST_CASE("cap rejection reports the required count") {
  EnumSpec s = full_spec(5, EnumSpec::Predicate::Idempotent);
  CHECK_THROWS_WITH_AS(enumerate(s, [](const SignMatrix&) {}),
                       doctest::Contains("847288609443"), std::invalid_argument);
}

TEST_CASE("canonical form is capped at order 8") {
  CHECK_THROWS_AS(canonical_form(SignMatrix(9)), std::invalid_argument);
}

TEST_CASE("masked-ambiguity early exit agrees with the exact search") {
  // exhaustive order <= 3
  for (int n = 1; n <= 3; ++n) {
    long long total = 1;
    for (int c = 0; c < n * n; ++c) total *= 3;
    const int cap = default_potence_cap(n);
    for (long long idx = 0; idx < total; ++idx) {
      SignMatrix a(n);
      long long rest = idx;
      for (int c = 0; c < n * n; ++c) {
        const Sign s[3] = {Sign::Zero, Sign::Plus, Sign::Minus};
        a.set(c / n, c % n, s[rest % 3]);
        rest /= 3;
      }
      CHECK(pruned_k(a, cap) == exact_k(a, cap));
    }
  }
  // random order 4 and 5
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 20000; ++t) {
    const int n = 4 + int(rng() % 2);
    const SignMatrix a = random_pattern(n, rng);
    const int cap = default_potence_cap(n);
    CHECK(pruned_k(a, cap) == exact_k(a, cap));
  }
}

TEST_CASE("pruned and unpruned enumeration coincide") {
  for (int k = 1; k <= 4; ++k) {
    EnumSpec on = full_spec(2, EnumSpec::Predicate::KPotent, k);
    EnumSpec off = on;
    off.prune_masked_amb = false;
    CHECK(enum_set(on) == enum_set(off));
  }
  EnumSpec on = full_spec(3, EnumSpec::Predicate::PotentAny);
  EnumSpec off = on;
  off.prune_masked_amb = false;
  CHECK(enum_set(on) == enum_set(off));
}

TEST_CASE("canonical forms identify equivalent patterns") {
  CHECK(canonical_form(p_cycle(2)) == canonical_form(transposed(p_cycle(2))));
  CHECK(canonical_form(q_cycle(1)) == canonical_form(p_cycle(1)));  // negation
  std::mt19937_64 rng(77);
  for (int t = 0; t < 50; ++t) {
    const SignMatrix a = random_pattern(3, rng);
    std::vector<Sign> d(3);
    for (auto& v : d) v = rng() % 2 ? Sign::Plus : Sign::Minus;
    CHECK(canonical_form(a) == canonical_form(signature_similar(a, d)));
    std::vector<int> perm = {0, 1, 2};
    std::swap(perm[rng() % 3], perm[rng() % 3]);
    CHECK(canonical_form(a) == canonical_form(permuted(a, perm)));
    const SignMatrix c = canonical_form(a);
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("census golden values") {
  std::ifstream in(std::string(SIGNPAT_TEST_DATA) + "/census_golden.json");
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  for (const auto& entry : doc) {
    EnumSpec s;
    s.n = entry.at("n").get<int>();
    s.shape = entry.at("shape") == "full" ? EnumSpec::Shape::Full
                                          : EnumSpec::Shape::UpperTriangular;
    if (entry.contains("diag")) {
      for (char c : entry.at("diag").get<std::string>())
        s.diag.push_back(c == '+' ? Sign::Plus : Sign::Zero);
    }
    const std::string pred = entry.at("predicate").get<std::string>();
    if (pred == "idem") s.predicate = EnumSpec::Predicate::Idempotent;
    else if (pred == "potent") s.predicate = EnumSpec::Predicate::PotentAny;
    else {
      s.predicate = EnumSpec::Predicate::KPotent;
      s.k = entry.at("k").get<int>();
    }
    const Census c = census(s, 2);
    CAPTURE(entry.dump());
    CHECK(c.total == entry.at("total").get<long long>());
    CHECK(c.classes == entry.at("classes").get<long long>());
  }
}

}  // TEST_SUITE
