// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; the time limit of each criterion is fixed below and exceeding it
// counts as a failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qflag/flag_ring.hpp"
#include "qflag/relations.hpp"
#include "qflag/schubert.hpp"
#include "qflag/verify.hpp"
#include "support/oracles.hpp"

using namespace qflag;

namespace {

constexpr std::uint64_t kSeed = 1998;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<std::string()> body;  // empty string on success
};

Permutation P(const char* s) { return Permutation::parse(s); }

std::string c1_presentation() {
  const std::vector<Polynomial> expected{parse_polynomial("x1 + x2", 2), parse_polynomial("x1*x2 + q1", 2)};
  if (quantum_relations(2, RelationMethod::kRecursion) != expected) return "recursion gives other generators";
  if (flag_ring(2).generators() != expected) return "ring F(2) has other generators";
  return {};
}

std::string c2_three_way() {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Polynomial r = quantum_relation_recursive(k, n);
      if (r != quantum_relation_determinant(k, n)) return "determinant differs at k=" + std::to_string(k) + " n=" + std::to_string(n);
      if (r != quantum_relation_fulton(k, n)) return "Fulton formula differs at k=" + std::to_string(k) + " n=" + std::to_string(n);
    }
  }
  return {};
}

std::string c3_degeneration() {
  for (int n = 1; n <= 6; ++n) {
    for (const auto method : {RelationMethod::kRecursion, RelationMethod::kDeterminant, RelationMethod::kFulton}) {
      const auto gens = quantum_relations(n, method);
      for (int k = 1; k <= n; ++k) {
        if (substitute_q_zero(gens[static_cast<std::size_t>(k - 1)]) != elementary_symmetric(k, n)) {
          return to_string(method) + " R_" + std::to_string(k) + "(" + std::to_string(n) + ") does not degenerate";
        }
      }
    }
  }
  return {};
}

std::string c4_schubert() {
  for (int n : {3, 4}) {
    for (const auto& w : all_permutations(n)) {
      if (schubert_polynomial(w, n) != oracle::schubert_all_words(w, n)) return "σ_" + w.to_string() + " differs from the oracle";
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) {
        if (schubert_polynomial(alpha(k, m, n), n) != elementary_symmetric(k - 1, m - 1, n)) {
          return "σ_α fails at k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
      }
    }
  }
  return {};
}

std::string c5_monk() {
  std::mt19937_64 rng(kSeed);
  auto check = [](const Permutation& w, int n) -> std::string {
    const Polynomial sw = schubert_polynomial(w, n + 1);
    for (int p = 1; p <= n; ++p) {
      const Polynomial lhs = schubert_polynomial(adjacent_transposition(p, n + 1), n + 1) * sw;
      Polynomial rhs(n + 1);
      for (const auto& t : oracle::monk_terms(p, oracle::padded(w, n + 1))) rhs += schubert_polynomial(Permutation(t), n + 1);
      if (lhs != rhs) return "fails at p=" + std::to_string(p) + " w=" + w.to_string();
      if (monk_multiply(p, w, n + 1).reconstitute().with_rank(n + 1) != lhs) return "monk_multiply disagrees";
    }
    return {};
  };
  for (const auto& w : all_permutations(3)) {
    if (auto e = check(w, 3); !e.empty()) return e;
  }
  for (const auto& w : sample_permutations(4, 50, rng)) {
    if (auto e = check(w, 4); !e.empty()) return e;
  }
  // Witness in S_3 without the embedding: σ_{s2}^2 needs σ_{1423} from S_4.
  const Permutation s2 = P("1 3 2");
  const Polynomial square = schubert_polynomial(s2, 3) * schubert_polynomial(s2, 3);
  Polynomial in_s3(3);
  for (const auto& t : oracle::monk_terms(2, s2.images())) in_s3 += schubert_polynomial(Permutation(t), 3);
  if (in_s3 == square) return "the S_3 witness unexpectedly satisfies Monk's identity";
  return {};
}

std::string c6_degree_zero() {
  std::mt19937_64 rng(kSeed + 6);
  auto check = [](const Permutation& u, const Permutation& v, const Permutation& w, int n) -> std::string {
    const std::vector<Permutation> abc{u, v, w};
    const Integer gw = flag_ring(n).gromov_witten(abc, Multidegree::zero(n));
    if (gw != oracle::triple_intersection(u, v, w, n)) return "differs at " + u.to_string() + "; " + v.to_string() + "; " + w.to_string();
    if (gw != classical_intersection_number(abc, n)) return "classical number differs at " + u.to_string();
    return {};
  };
  const auto s3 = all_permutations(3);
  for (const auto& u : s3) {
    for (const auto& v : s3) {
      for (const auto& w : s3) {
        if (u.length() + v.length() + w.length() != 3) continue;
        if (auto e = check(u, v, w, 3); !e.empty()) return e;
      }
    }
  }
  const auto s4 = all_permutations(4);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  int sampled = 0;
  while (sampled < 100) {
    const Permutation& u = s4[pick(rng)];
    const Permutation& v = s4[pick(rng)];
    const int need = 6 - u.length() - v.length();
    if (need < 0) continue;
    std::vector<Permutation> candidates;
    for (const auto& w : s4) {
      if (w.length() == need) candidates.push_back(w);
    }
    const Permutation& w = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    if (auto e = check(u, v, w, 4); !e.empty()) return e;
    ++sampled;
  }
  return {};
}

std::string c7_f2_count() {
  // x1^3 = x1·x1^2 ≡ x1·(-x1 x2) ≡ q1 x1 using x2 ≡ -x1 and x1 x2 ≡ -q1.
  const FlagRing& f2 = flag_ring(2);
  if (f2.normal_form(parse_polynomial("x1^3", 2)) != parse_polynomial("q1*x1", 2)) return "x1^3 does not reduce to q1 x1";
  const std::vector<Permutation> s1s1s1{P("2 1"), P("2 1"), P("2 1")};
  const Integer value = f2.gromov_witten(s1s1s1, Multidegree({1}));
  if (value != 1) return "got " + value.get_str();
  return {};
}

std::string c8_ring_laws() {
  std::mt19937_64 rng(kSeed + 8);
  for (int n : {3, 4}) {
    const FlagRing& ring = flag_ring(n);
    const auto perms = all_permutations(n);
    for (const auto& w : perms) {
      if (ring.quantum_product(Permutation::identity(n), w) != SchubertExpansion::single(w, n, n)) return "unit law fails";
    }
    const auto us = n == 3 ? perms : sample_permutations(n, 100, rng);
    const auto vs = n == 3 ? perms : sample_permutations(n, 100, rng);
    for (std::size_t i = 0; i < us.size(); ++i) {
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (n == 4 && i != j) continue;
        if (ring.quantum_product(us[i], vs[j]) != ring.quantum_product(vs[j], us[i])) return "not commutative";
      }
    }
    auto assoc = [&](const Permutation& u, const Permutation& v, const Permutation& w) {
      const auto one = [&](const Permutation& p) { return SchubertExpansion::single(p, n, n); };
      return ring.multiply(ring.quantum_product(u, v), one(w)) == ring.multiply(one(u), ring.quantum_product(v, w));
    };
    if (n == 3) {
      for (const auto& u : perms) {
        for (const auto& v : perms) {
          for (const auto& w : perms) {
            if (!assoc(u, v, w)) return "not associative in S_3";
          }
        }
      }
    } else {
      const auto a = sample_permutations(n, 50, rng);
      const auto b = sample_permutations(n, 50, rng);
      const auto c = sample_permutations(n, 50, rng);
      for (std::size_t i = 0; i < 50; ++i) {
        if (!assoc(a[i], b[i], c[i])) return "not associative in S_4";
      }
    }
  }
  return {};
}

std::string c9_positivity_grading() {
  long computed = 0;
  for (int n = 2; n <= 4; ++n) {
    const FlagRing& ring = flag_ring(n);
    const auto perms = all_permutations(n);
    const auto degrees = multidegrees_up_to(n, 2);
    for (const auto& u : perms) {
      for (const auto& v : perms) {
        const SchubertExpansion uv = ring.quantum_product(u, v);
        for (const auto& [w, c] : uv.terms()) {
          for (const auto& [m, coeff] : c.terms()) {
            if (coeff < 0) return "negative structure constant";
            if (u.length() + v.length() != w.length() + 2 * m.q_degree()) return "grading fails";
          }
        }
        for (const auto& d : degrees) {
          for (const auto& w : perms) {
            if (u.length() + v.length() + w.length() != d.expected_dimension()) continue;
            const std::vector<Permutation> abc{u, v, w};
            const Integer value = ring.gromov_witten(abc, d);
            ++computed;
            if (value < 0) {
              return "negative invariant <" + u.to_string() + ", " + v.to_string() + ", " + w.to_string() + ">_(" +
                     d.to_string() + ")";
            }
          }
        }
      }
    }
  }
  // Four-point invariants on F(3).
  const FlagRing& f3 = flag_ring(3);
  const auto s3 = all_permutations(3);
  for (const auto& d : multidegrees_up_to(3, 2)) {
    for (const auto& a : s3) {
      for (const auto& b : s3) {
        for (const auto& c : s3) {
          for (const auto& e : s3) {
            if (a.length() + b.length() + c.length() + e.length() != d.expected_dimension()) continue;
            const std::vector<Permutation> abce{a, b, c, e};
            ++computed;
            if (f3.gromov_witten(abce, d) < 0) return "negative four-point invariant";
          }
        }
      }
    }
  }
  return computed > 0 ? std::string() : std::string("no invariants computed");
}

std::string c10_normal_form_oracle() {
  std::mt19937_64 rng(kSeed + 10);
  for (int n : {2, 3, 4}) {
    const FlagRing& ring = flag_ring(n);
    for (int i = 0; i < 500; ++i) {
      const Polynomial p = random_polynomial(n, 6, 6, rng);
      if (ring.normal_form(p) != ring.normal_form_linear(p)) return "disagree on " + to_text(p);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "F(2) presentation {x1+x2, x1x2+q1}", 1.0, c1_presentation},
      {2, "three-way generator agreement, 2 <= n <= 6", 30.0, c2_three_way},
      {3, "classical degeneration to e_k, n <= 6", 5.0, c3_degeneration},
      {4, "Schubert polynomials vs all-words oracle; alpha classes", 30.0, c4_schubert},
      {5, "Monk identity in S_{n+1} and S_3 witness", 60.0, c5_monk},
      {6, "degree-0 invariants vs iterated Monk", 120.0, c6_degree_zero},
      {7, "F(2) three-point count equals 1", 10.0, c7_f2_count},
      {8, "commutativity, associativity, unit", 300.0, c8_ring_laws},
      {9, "positivity and grading, n <= 4, total degree <= 2", 300.0, c9_positivity_grading},
      {10, "rewriting vs linear normal forms, 500 per n", 120.0, c10_normal_form_oracle},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.body();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && seconds > c.limit_seconds) error = "exceeded the time limit";
    const bool pass = error.empty();
    failures += pass ? 0 : 1;
    std::printf("%s %2d  %-58s %8.3f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, pass ? "" : "  ", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
