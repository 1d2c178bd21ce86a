#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qflag/json_io.hpp"
#include "qflag/permutation.hpp"
#include "qflag/polynomial.hpp"

namespace qflag {

/// Raised when an internal identity that must hold exactly fails: an
/// expansion that does not reconstitute, a non-integral solve, generator
/// constructions that disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// x_1^{n-1} x_2^{n-2} … x_{n-1} in a ring of rank `rank` (defaults to n).
Polynomial staircase(int n, int rank = -1);

/// σ_w for w ∈ S_n: write w = w0·s_{i1}…s_{ik} with k = n(n-1)/2 - l(w) and
/// apply ∂_{ik}∘…∘∂_{i1} to the staircase. Permutations from a smaller S_m
/// are embedded first. The result has rank n.
Polynomial schubert_polynomial(const Permutation& w, int n);

/// σ_w computed along an explicit factorization w0·w = s_{i1}…s_{ik}. Throws
/// std::invalid_argument when the word is not a reduced word for w0·w.
Polynomial schubert_polynomial_along(const Permutation& w, int n, const Word& word);

/// Precomputed σ_w for all w ∈ S_m, grouped by length. Immutable once built.
class SchubertTable {
 public:
  explicit SchubertTable(int m);

  int ambient() const { return ambient_; }
  const Polynomial& polynomial(const Permutation& w) const;
  const std::vector<Permutation>& of_length(int l) const;
  int max_length() const { return ambient_ * (ambient_ - 1) / 2; }

 private:
  int ambient_;
  std::map<Permutation, Polynomial> sigma_;
  std::vector<std::vector<Permutation>> by_length_;
};

/// Shared table for S_m, built on first use under a lock.
const SchubertTable& schubert_table(int m);

/// σ_{alpha(k,m,n)} == e_{k-1}(x_1..x_{m-1}).
bool schubert_alpha_check(int k, int m, int n);

/// Finite sum Σ c_w σ_w with c_w ∈ ℤ[q]. Keys are stored embedded in
/// S_ambient; `rank` is the rank of the coefficient polynomials.
class SchubertExpansion {
 public:
  using Terms = std::map<Permutation, Polynomial>;

  SchubertExpansion(int ambient, int rank);
  static SchubertExpansion single(const Permutation& w, int ambient, int rank);

  int ambient() const { return ambient_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Permutation& w, const Polynomial& coefficient);
  Polynomial coefficient(const Permutation& w) const;
  /// Drops every term whose permutation does not lie in S_m.
  SchubertExpansion truncated_to(int m) const;
  SchubertExpansion substitute_q_zero() const;

  /// Σ c_w σ_w at rank max(rank, ambient).
  Polynomial reconstitute() const;

  SchubertExpansion& operator+=(const SchubertExpansion& other);
  SchubertExpansion& operator-=(const SchubertExpansion& other);
  friend bool operator==(const SchubertExpansion& a, const SchubertExpansion& b);

 private:
  Permutation key(const Permutation& w) const;

  int ambient_;
  int rank_;
  Terms terms_;
};

/// {"1 3 2": "q1", …} with permutations in lexicographic order.
std::string to_text(const SchubertExpansion& e);
/// {"<perm>": <polynomial JSON>, …}
Json to_json(const SchubertExpansion& e);

/// Unique ℤ[q]-expansion of P in {σ_w : w ∈ S_m}. Coefficients are read off
/// from the top degree down by applying the divided-difference word of w and
/// taking the constant term. Throws ConsistencyError if the result does not
/// reconstitute P.
SchubertExpansion expand_in_schubert_basis(const Polynomial& p, int m);

/// Monk's rule: σ_{s_p}·σ_w = Σ σ_{w·t_ij} over i <= p < j <= ambient with
/// l(w·t_ij) = l(w) + 1. Use ambient >= n+1 for a polynomial identity.
SchubertExpansion monk_multiply(int p, const Permutation& w, int ambient);

/// x_p · (expansion) via x_p = σ_{s_p} - σ_{s_{p-1}} and Monk's rule in
/// S_{m+1}, discarding terms outside S_m (they vanish in H*(F(m))).
SchubertExpansion multiply_by_x_classical(int p, const SchubertExpansion& e, int m);

/// Classical product σ_u·σ_v in H*(F(n)) by iterated Monk multiplication.
SchubertExpansion classical_product_by_monk(const Permutation& u, const Permutation& v, int n);

}  // namespace qflag
