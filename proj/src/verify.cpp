#include "qflag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "qflag/relations.hpp"

namespace qflag {

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "smoke") return VerifyLevel::kSmoke;
  if (name == "full") return VerifyLevel::kFull;
  throw std::invalid_argument("unknown verify level '" + name + "'");
}

std::string to_string(VerifyLevel level) { return level == VerifyLevel::kSmoke ? "smoke" : "full"; }

Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng) {
  std::vector<Monomial> pool;
  for (int d = 0; d <= max_degree; ++d) {
    auto ms = monomials_of_weighted_degree(n, d);
    pool.insert(pool.end(), ms.begin(), ms.end());
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Polynomial p(n);
  for (int i = 0; i < terms; ++i) p.add_term(pool[pick(rng)], coeff(rng));
  return p;
}

std::vector<Permutation> sample_permutations(int n, std::size_t count, std::mt19937_64& rng) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < count; ++i) {
    for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = j + 1;
    std::shuffle(images.begin(), images.end(), rng);
    out.emplace_back(images);
  }
  return out;
}

namespace {

using Check = std::function<std::string()>;

PropertyResult run_check(const std::string& name, const Check& check) {
  PropertyResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed) r.detail = "ok";
  return r;
}

// Triple product coefficient of σ_{w0} by iterated Monk multiplication.
Integer monk_triple(const Permutation& u, const Permutation& v, const Permutation& w, int n) {
  const SchubertExpansion uv = classical_product_by_monk(u, v, n);
  const Permutation w0 = Permutation::longest(n);
  Integer total = 0;
  for (const auto& [x, c] : uv.terms()) {
    total += c.constant_term() * classical_product_by_monk(x.embed(n), w, n).coefficient(w0).constant_term();
  }
  return total;
}

std::string check_expansion_graded(const Permutation& u, const Permutation& v, const SchubertExpansion& e) {
  for (const auto& [w, c] : e.terms()) {
    for (const auto& [m, coeff] : c.terms()) {
      if (coeff < 0) return "negative coefficient in " + u.to_string() + " * " + v.to_string();
      if (m.x_degree() != 0) return "coefficient involves x";
      if (u.length() + v.length() != w.length() + 2 * m.q_degree()) {
        return "grading fails in " + u.to_string() + " * " + v.to_string() + " at " + w.to_string();
      }
    }
  }
  return {};
}

}  // namespace

std::vector<PropertyResult> run_properties(int n, VerifyLevel level, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("verify needs n >= 2");
  const bool full = level == VerifyLevel::kFull;
  std::mt19937_64 rng(seed);
  const FlagRing& ring = flag_ring(n);
  const auto perms = all_permutations(n);
  const std::size_t samples = full ? 50 : 8;
  auto pick = [&](std::size_t count) {
    return (perms.size() <= count) ? perms : sample_permutations(n, count, rng);
  };
  std::vector<PropertyResult> out;

  out.push_back(run_check("generators-agree", [&]() -> std::string {
    const auto rec = quantum_relations(n, RelationMethod::kRecursion);
    if (rec != quantum_relations(n, RelationMethod::kDeterminant)) return "recursion and determinant differ";
    if (rec != quantum_relations(n, RelationMethod::kFulton)) return "recursion and Fulton formula differ";
    return {};
  }));

  out.push_back(run_check("classical-degeneration", [&]() -> std::string {
    for (int k = 1; k <= n; ++k) {
      if (substitute_q_zero(quantum_relation_recursive(k, n)) != elementary_symmetric(k, n)) {
        return "R_" + std::to_string(k) + " does not specialize to e_" + std::to_string(k);
      }
    }
    return {};
  }));

  out.push_back(run_check("recursion-identity", [&]() -> std::string {
    for (int m = 2; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) {
        if (!recursion_identity_check(k, m)) return "fails at k=" + std::to_string(k) + ", m=" + std::to_string(m);
      }
    }
    return {};
  }));

  out.push_back(run_check("alpha-schubert", [&]() -> std::string {
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= m; ++k) {
        if (!schubert_alpha_check(k, m, n)) return "fails at k=" + std::to_string(k) + ", m=" + std::to_string(m);
      }
    }
    return {};
  }));

  out.push_back(run_check("reduced-word-independence", [&]() -> std::string {
    const Permutation w0 = Permutation::longest(n);
    const std::size_t max_words = full ? 256 : 16;
    for (const auto& w : pick(samples)) {
      const Polynomial reference = schubert_polynomial(w, n);
      const auto words = all_reduced_words(w0 * w, n * (n - 1) / 2);
      for (std::size_t i = 0; i < words.size() && i < max_words; ++i) {
        if (schubert_polynomial_along(w, n, words[i]) != reference) return "σ_" + w.to_string() + " depends on the word";
      }
    }
    return {};
  }));

  out.push_back(run_check("monk-identity", [&]() -> std::string {
    for (const auto& w : pick(samples)) {
      const Polynomial sw = schubert_polynomial(w, n + 1);
      for (int p = 1; p < n; ++p) {
        const Polynomial lhs = schubert_polynomial(adjacent_transposition(p, n), n + 1) * sw;
        if (lhs != monk_multiply(p, w, n + 1).reconstitute().with_rank(n + 1)) {
          return "fails for p=" + std::to_string(p) + ", w=" + w.to_string();
        }
      }
    }
    return {};
  }));

  const int random_count = full ? 100 : 20;
  const int max_degree = n <= 3 ? 6 : 5;

  out.push_back(run_check("normal-form-ideal", [&]() -> std::string {
    for (int i = 0; i < random_count; ++i) {
      const Polynomial& g = ring.generators()[static_cast<std::size_t>(i % n)];
      if (!ring.normal_form(g * random_polynomial(n, 4, 4, rng)).is_zero()) return "g·h does not reduce to zero";
      const Polynomial p = random_polynomial(n, max_degree, 6, rng);
      const Polynomial q = random_polynomial(n, max_degree, 6, rng);
      const Polynomial np = ring.normal_form(p);
      if (ring.normal_form(np) != np) return "normal form is not idempotent";
      if (ring.normal_form(Integer(3) * p - q) != Integer(3) * np - ring.normal_form(q)) return "normal form is not linear";
      for (const auto& [m, c] : np.terms()) {
        if (!is_standard_monomial(m, n)) return "normal form leaves the standard monomials";
      }
    }
    return {};
  }));

  out.push_back(run_check("normal-form-oracle", [&]() -> std::string {
    for (int i = 0; i < random_count; ++i) {
      const Polynomial p = random_polynomial(n, max_degree, 6, rng);
      if (ring.normal_form(p) != ring.normal_form_linear(p)) return "rewriting and linear algebra disagree on " + to_text(p);
    }
    return {};
  }));

  out.push_back(run_check("homomorphism", [&]() -> std::string {
    for (int i = 0; i < random_count / 2; ++i) {
      const Polynomial p = random_polynomial(n, 3, 4, rng);
      const Polynomial q = random_polynomial(n, 3, 4, rng);
      if (ring.normal_form(p * q) != ring.normal_form(ring.normal_form(p) * ring.normal_form(q))) {
        return "NF(PQ) != NF(NF(P)NF(Q))";
      }
    }
    return {};
  }));

  out.push_back(run_check("unit-law", [&]() -> std::string {
    const Permutation id = Permutation::identity(n);
    for (const auto& w : perms) {
      if (ring.quantum_product(id, w) != SchubertExpansion::single(w, n, n)) return "identity is not a unit for " + w.to_string();
    }
    return {};
  }));

  out.push_back(run_check("commutativity-grading-positivity", [&]() -> std::string {
    const auto us = pick(full ? perms.size() : samples);
    const auto vs = pick(full ? perms.size() : samples);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        const SchubertExpansion uv = ring.quantum_product(u, v);
        if (uv != ring.quantum_product(v, u)) return "not commutative at " + u.to_string() + ", " + v.to_string();
        if (auto bad = check_expansion_graded(u, v, uv); !bad.empty()) return bad;
      }
    }
    return {};
  }));

  out.push_back(run_check("associativity", [&]() -> std::string {
    const std::size_t count = (n <= 3 && full) ? perms.size() : samples;
    const auto us = pick(count);
    const auto vs = pick(count);
    const auto ws = pick(count);
    for (std::size_t i = 0; i < us.size(); ++i) {
      const auto one = [&](const Permutation& p) { return SchubertExpansion::single(p, n, n); };
      const std::size_t jn = (n <= 3 && full) ? vs.size() : 1;
      for (std::size_t j = 0; j < jn; ++j) {
        const Permutation& v = (n <= 3 && full) ? vs[j] : vs[i];
        const std::size_t kn = (n <= 3 && full) ? ws.size() : 1;
        for (std::size_t k = 0; k < kn; ++k) {
          const Permutation& w = (n <= 3 && full) ? ws[k] : ws[i];
          const auto left = ring.multiply(ring.quantum_product(us[i], v), one(w));
          const auto right = ring.multiply(one(us[i]), ring.quantum_product(v, w));
          if (left != right) return "not associative at " + us[i].to_string() + ", " + v.to_string() + ", " + w.to_string();
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("gromov-witten-positivity-symmetry", [&]() -> std::string {
    const int max_total = full ? 2 : 1;
    const auto triples = pick(full ? perms.size() : samples);
    for (const auto& d : multidegrees_up_to(n, max_total)) {
      for (const auto& u : triples) {
        for (const auto& v : triples) {
          const int need = d.expected_dimension() - u.length() - v.length();
          for (const auto& w : perms) {
            if (w.length() != need) continue;
            const std::vector<Permutation> abc{u, v, w};
            const Integer value = ring.gromov_witten(abc, d);
            if (value < 0) return "negative invariant at d=(" + d.to_string() + ")";
            const std::vector<Permutation> cab{w, u, v};
            if (ring.gromov_witten(cab, d) != value) return "invariant depends on argument order";
          }
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("degree-zero-oracle", [&]() -> std::string {
    const Multidegree zero = Multidegree::zero(n);
    const auto us = pick(full ? perms.size() : samples);
    for (const auto& u : us) {
      for (const auto& v : perms) {
        const int need = n * (n - 1) / 2 - u.length() - v.length();
        if (need < 0) continue;
        for (const auto& w : perms) {
          if (w.length() != need) continue;
          const std::vector<Permutation> abc{u, v, w};
          const Integer gw = ring.gromov_witten(abc, zero);
          if (gw != monk_triple(u, v, w, n)) return "disagrees with iterated Monk at " + u.to_string();
          if (gw != classical_intersection_number(abc, n)) return "disagrees with the classical number";
        }
      }
    }
    return {};
  }));

  out.push_back(run_check("dual-pairing", [&]() -> std::string {
    const Permutation w0 = Permutation::longest(n);
    for (const auto& w : perms) {
      const std::vector<Permutation> pair{w, w0 * w};
      if (classical_intersection_number(pair, n) != 1) return "<w, w0·w> != 1 for " + w.to_string();
    }
    return {};
  }));

  return out;
}

}  // namespace qflag
