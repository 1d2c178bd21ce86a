#pragma once

#include <string>
#include <vector>

#include "qflag/polynomial.hpp"

namespace qflag {

// Generators R^q_k(n) of the quantum ideal, built three independent ways.
// Every function returns a polynomial of rank n unless a rank is given.

/// R^q_k(n) = R^q_k(n-1) + x_n R^q_{k-1}(n-1) + q_{n-1} R^q_{k-2}(n-2),
/// grounded at R^q_0 = 1, R^q_1(1) = x_1 and R^q_k(m) = 0 for k > m or k < 0.
Polynomial quantum_relation_recursive(int k, int n, int rank = -1);

/// Coefficient of λ^{n-k} in det(M + λ) where M is tridiagonal with x_i on
/// the diagonal, q_i above and -1 below. Expanded by brute force over all
/// n! permutations.
Polynomial quantum_relation_determinant(int k, int n);

/// Sum of the square-free monomials of weighted degree k-1 in
/// x_1..x_{m-1}, q_1..q_{m-2} that contain at least one q, where q_i
/// excludes x_i, x_{i+1} and q_{i+1}.
Polynomial sigma_prime(int k, int m, int rank = -1);

/// σ_{α_{k+1}(n+1)} + σ'_{α_{k+1}(n+1)}, with the Schubert polynomial
/// computed by divided differences in S_{n+1}.
Polynomial quantum_relation_fulton(int k, int n);

/// σ_{α_k(m)} + σ'_{α_k(m)}; zero when k < 1 or k > m.
Polynomial alpha_class(int k, int m, int rank);

/// Checks the three-term identity
///   A(k,m) = A(k,m-1) + x_{m-1} A(k-1,m-1) + q_{m-2} A(k-2,m-2)
/// for A = alpha_class, with absent tail terms treated as zero.
bool recursion_identity_check(int k, int m);

enum class RelationMethod { kRecursion, kDeterminant, kFulton };

std::string to_string(RelationMethod method);
/// "recursion", "determinant" or "fulton".
RelationMethod parse_relation_method(const std::string& name);

/// R^q_1(n)..R^q_n(n) by the chosen construction.
std::vector<Polynomial> quantum_relations(int n, RelationMethod method);

}  // namespace qflag
