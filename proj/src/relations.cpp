#include "qflag/relations.hpp"

#include <map>
#include <stdexcept>

#include "qflag/permutation.hpp"
#include "qflag/schubert.hpp"

namespace qflag {

Polynomial quantum_relation_recursive(int k, int n, int rank) {
  if (rank < 0) rank = n;
  if (n < 0 || n > rank) throw std::invalid_argument("quantum_relation_recursive: bad n");
  std::map<std::pair<int, int>, Polynomial> memo;
  auto rec = [&](auto&& self, int kk, int m) -> Polynomial {
    if (kk == 0) return Polynomial(rank, 1);
    if (kk < 0 || kk > m || m <= 0) return Polynomial(rank);
    if (m == 1) return Polynomial::x(rank, 1);
    auto it = memo.find({kk, m});
    if (it != memo.end()) return it->second;
    Polynomial value = self(self, kk, m - 1) + Polynomial::x(rank, m) * self(self, kk - 1, m - 1) +
                       Polynomial::q(rank, m - 1) * self(self, kk - 2, m - 2);
    memo.emplace(std::make_pair(kk, m), value);
    return value;
  };
  return rec(rec, k, n);
}

Polynomial quantum_relation_determinant(int k, int n) {
  if (n < 1) throw std::invalid_argument("quantum_relation_determinant: n must be >= 1");
  // Entries are polynomials in λ with coefficients in ℤ[x, q]; index = λ power.
  using LambdaPoly = std::vector<Polynomial>;
  auto entry = [&](int row, int col) -> LambdaPoly {
    if (row == col) return {Polynomial::x(n, row), Polynomial(n, 1)};
    if (col == row + 1) return {Polynomial::q(n, row)};
    if (col == row - 1) return {Polynomial(n, -1)};
    return {};
  };
  auto multiply = [&](const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out(a.size() + b.size() - 1, Polynomial(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };

  LambdaPoly det(static_cast<std::size_t>(n + 1), Polynomial(n));
  for (const auto& sigma : all_permutations(n)) {
    LambdaPoly product{Polynomial(n, 1)};
    bool zero = false;
    for (int row = 1; row <= n && !zero; ++row) {
      LambdaPoly e = entry(row, sigma(row));
      if (e.empty()) {
        zero = true;
      } else {
        product = multiply(product, e);
      }
    }
    if (zero) continue;
    const int sign = sigma.length() % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < product.size(); ++i) det[i] += Integer(sign) * product[i];
  }
  const int power = n - k;
  if (power < 0 || power > n) return Polynomial(n);
  return det[static_cast<std::size_t>(power)];
}

Polynomial sigma_prime(int k, int m, int rank) {
  if (rank < 0) rank = std::max(m - 1, 1);
  if (m - 1 > rank) throw std::invalid_argument("sigma_prime: rank too small");
  Polynomial result(rank);
  const int target = k - 1;
  const int nx = std::max(m - 1, 0);
  const int nq = std::max(m - 2, 0);
  if (target < 2 || nq == 0) return result;

  // Choose the q set first (no two adjacent), then x variables avoiding the
  // positions each chosen q_i blocks.
  Monomial chosen;
  auto choose_x = [&](auto&& self, int next, int remaining, const std::vector<bool>& blocked) -> void {
    if (remaining == 0) {
      result.add_term(chosen, 1);
      return;
    }
    for (int i = next; i <= nx; ++i) {
      if (blocked[static_cast<std::size_t>(i)]) continue;
      chosen.set_x(i, 1);
      self(self, i + 1, remaining - 1, blocked);
      chosen.set_x(i, 0);
    }
  };
  auto choose_q = [&](auto&& self, int next, int weight, int count, std::vector<bool>& blocked) -> void {
    if (count > 0 && weight <= target) choose_x(choose_x, 1, target - weight, blocked);
    for (int i = next; i <= nq; ++i) {
      if (weight + 2 > target) break;
      chosen.set_q(i, 1);
      const bool bi = blocked[static_cast<std::size_t>(i)];
      const bool bi1 = blocked[static_cast<std::size_t>(i + 1)];
      blocked[static_cast<std::size_t>(i)] = blocked[static_cast<std::size_t>(i + 1)] = true;
      self(self, i + 2, weight + 2, count + 1, blocked);
      blocked[static_cast<std::size_t>(i)] = bi;
      blocked[static_cast<std::size_t>(i + 1)] = bi1;
      chosen.set_q(i, 0);
    }
  };
  std::vector<bool> blocked(static_cast<std::size_t>(nx + 2), false);
  choose_q(choose_q, 1, 0, 0, blocked);
  return result;
}

Polynomial alpha_class(int k, int m, int rank) {
  if (k < 1 || k > m) return Polynomial(rank);
  return schubert_polynomial(alpha(k, m, m), m).with_rank(rank) + sigma_prime(k, m, rank);
}

Polynomial quantum_relation_fulton(int k, int n) {
  if (n < 1) throw std::invalid_argument("quantum_relation_fulton: n must be >= 1");
  if (k < 1 || k > n) return Polynomial(n);
  return schubert_polynomial(alpha(k + 1, n + 1, n + 1), n + 1).with_rank(n) +
         sigma_prime(k + 1, n + 1, n);
}

bool recursion_identity_check(int k, int m) {
  if (m < 2) throw std::invalid_argument("recursion_identity_check needs m >= 2");
  const int rank = m;
  Polynomial rhs = alpha_class(k, m - 1, rank) + Polynomial::x(rank, m - 1) * alpha_class(k - 1, m - 1, rank);
  if (m >= 3) rhs += Polynomial::q(rank, m - 2) * alpha_class(k - 2, m - 2, rank);
  return alpha_class(k, m, rank) == rhs;
}

std::string to_string(RelationMethod method) {
  switch (method) {
    case RelationMethod::kRecursion: return "recursion";
    case RelationMethod::kDeterminant: return "determinant";
    case RelationMethod::kFulton: return "fulton";
  }
  return "unknown";
}

RelationMethod parse_relation_method(const std::string& name) {
  if (name == "recursion") return RelationMethod::kRecursion;
  if (name == "determinant") return RelationMethod::kDeterminant;
  if (name == "fulton") return RelationMethod::kFulton;
  throw std::invalid_argument("unknown relation method '" + name + "'");
}

std::vector<Polynomial> quantum_relations(int n, RelationMethod method) {
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    switch (method) {
      case RelationMethod::kRecursion: out.push_back(quantum_relation_recursive(k, n)); break;
      case RelationMethod::kDeterminant: out.push_back(quantum_relation_determinant(k, n)); break;
      case RelationMethod::kFulton: out.push_back(quantum_relation_fulton(k, n)); break;
    }
  }
  return out;
}

}  // namespace qflag
