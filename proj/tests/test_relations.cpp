#include "doctest.h"
#include "qflag/relations.hpp"
#include "qflag/schubert.hpp"

using namespace qflag;

namespace {
Polynomial parse(const char* s, int n) { return parse_polynomial(s, n); }
}  // namespace

TEST_CASE("recursive generators") {
  for (int n = 1; n <= 6; ++n) CHECK(quantum_relation_recursive(1, n) == elementary_symmetric(1, n));
  CHECK(quantum_relation_recursive(2, 2) == parse("x1*x2 + q1", 2));
  CHECK(quantum_relation_recursive(3, 3) == parse("x1*x2*x3 + q1*x3 + q2*x1", 3));
  CHECK(quantum_relation_recursive(4, 3).is_zero());
  CHECK(quantum_relation_recursive(0, 3) == Polynomial(3, 1));
  CHECK(quantum_relation_recursive(2, 2, 4).rank() == 4);
}

TEST_CASE("determinant generators") {
  CHECK(quantum_relation_determinant(1, 2) == parse("x1 + x2", 2));
  CHECK(quantum_relation_determinant(2, 2) == parse("x1*x2 + q1", 2));
  CHECK(quantum_relation_determinant(1, 1) == parse("x1", 1));
}

TEST_CASE("sigma prime") {
  CHECK(sigma_prime(3, 3) == parse("q1", 2));
  CHECK(sigma_prime(4, 4) == parse("q1*x3 + q2*x1", 3));
  for (int m = 1; m <= 6; ++m) CHECK(sigma_prime(1, m).is_zero());
  CHECK(sigma_prime(2, 4).is_zero());
  // Weight 4 over x1..x4, q1..q3: q1q3, q1x3x4, q2x1x4, q3x1x2.
  CHECK(sigma_prime(5, 5) == parse("q1*q3 + q1*x3*x4 + q2*x1*x4 + q3*x1*x2", 4));
  for (int m = 2; m <= 7; ++m) {
    for (int k = 1; k <= m; ++k) {
      const Polynomial s = sigma_prime(k, m);
      for (const auto& [mono, c] : s.terms()) {
        CHECK(c == 1);
        CHECK(mono.is_square_free());
        CHECK(mono.has_q());
        CHECK(mono.weighted_degree() == k - 1);
        for (int i = 1; i <= m - 2; ++i) {
          if (mono.q(i) == 0) continue;
          CHECK(mono.x(i) == 0);
          CHECK(mono.x(i + 1) == 0);
          if (i + 1 <= m - 2) CHECK(mono.q(i + 1) == 0);
        }
      }
    }
  }
}

TEST_CASE("Fulton's formula") {
  CHECK(quantum_relation_fulton(2, 2) == parse("x1*x2 + q1", 2));
  CHECK(quantum_relation_fulton(3, 3) == elementary_symmetric(3, 3) + parse("q1*x3 + q2*x1", 3));
}

TEST_CASE("three constructions agree and degenerate to e_k") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Polynomial r = quantum_relation_recursive(k, n);
      CHECK(r == quantum_relation_determinant(k, n));
      CHECK(r == quantum_relation_fulton(k, n));
      CHECK(r.is_homogeneous());
      CHECK(r.weighted_degree() == k);
      CHECK(substitute_q_zero(r) == elementary_symmetric(k, n));
    }
  }
  CHECK(quantum_relations(3, RelationMethod::kFulton).size() == 3);
  CHECK(parse_relation_method("determinant") == RelationMethod::kDeterminant);
  CHECK(to_string(RelationMethod::kFulton) == "fulton");
  CHECK_THROWS(parse_relation_method("cofactor"));
}

TEST_CASE("alpha classes satisfy the three-term recursion") {
  CHECK(recursion_identity_check(3, 3));
  CHECK(recursion_identity_check(2, 2));
  for (int m = 2; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) CHECK(recursion_identity_check(k, m));
  }
  CHECK_THROWS(recursion_identity_check(1, 1));
  // The alpha class of (k, m) is the quantum elementary polynomial in m-1 variables.
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= m; ++k) {
      CHECK(alpha_class(k, m, std::max(m, 1)) == quantum_relation_recursive(k - 1, m - 1, std::max(m, 1)));
    }
  }
}
