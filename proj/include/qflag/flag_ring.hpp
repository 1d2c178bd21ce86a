#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qflag/linear_reduction.hpp"
#include "qflag/permutation.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/relations.hpp"
#include "qflag/rewriting.hpp"
#include "qflag/schubert.hpp"

namespace qflag {

/// d = (d_1..d_{n-1}), the degree of a curve class; q^d = Π q_i^{d_i}.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> d);
  static Multidegree zero(int n);
  /// "1 0", "1,0" or "" (the empty multidegree of F(1)).
  static Multidegree parse(std::string_view text);

  const std::vector<int>& values() const { return d_; }
  int size() const { return static_cast<int>(d_.size()); }
  int total() const;
  /// n(n-1)/2 + 2 Σ d_i for n = size() + 1.
  int expected_dimension() const;
  Monomial q_monomial() const;
  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<int> d_;
};

/// Every multidegree of length n-1 with total at most `max_total`.
std::vector<Multidegree> multidegrees_up_to(int n, int max_total);

/// ℤ[x_1..x_n, q_1..q_{n-1}] / (R^q_1(n), …, R^q_n(n)), immutable after
/// construction and safe to query from several threads.
class FlagRing {
 public:
  /// Builds the rewriting system, reusing `<cache_dir>/rewriting-n<n>.json`
  /// when it is present and current. A missing or stale file is rewritten.
  static std::shared_ptr<const FlagRing> build(int n, const std::optional<std::filesystem::path>& cache_dir);

  int n() const { return n_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  /// The n! monomials x^a with a_j <= n-j, in display order.
  const std::vector<Monomial>& standard_basis() const { return standard_basis_; }
  const RewritingSystem& rewriting_system() const { return rewriting_; }
  bool loaded_from_cache() const { return loaded_from_cache_; }

  Polynomial normal_form(const Polynomial& p) const;
  /// Same result computed by graded linear algebra; an independent oracle.
  Polynomial normal_form_linear(const Polynomial& p) const;

  /// Normal form of the quantum Schubert class of w ∈ S_n: σ_w written in
  /// standard elementary monomials Π_j e_{i_j}(x_1..x_j), with every
  /// e_i(x_1..x_j) replaced by R^q_i(j).
  const Polynomial& quantum_class(const Permutation& w) const;

  /// Unique expansion Σ c_w(q) · (quantum class of w) of p mod I.
  SchubertExpansion expand(const Polynomial& p) const;
  SchubertExpansion quantum_product(const Permutation& u, const Permutation& v) const;
  SchubertExpansion multiply(const SchubertExpansion& a, const SchubertExpansion& b) const;

  /// ⟨Ω_{w_1},…,Ω_{w_N}⟩_d: zero unless Σ l(w_i) matches the expected
  /// dimension, otherwise the coefficient of q^d σ_{w0} in the normal form of
  /// the product. Requires N >= 2.
  Integer gromov_witten(std::span<const Permutation> ws, const Multidegree& d) const;

  /// w restricted to S_n; throws std::invalid_argument when w moves n+1.
  Permutation in_ring(const Permutation& w) const;

 private:
  FlagRing(int n, std::vector<Polynomial> generators, RewritingSystem rewriting, bool cached);
  void compute_quantum_classes() const;
  Polynomial from_expansion(const SchubertExpansion& e) const;

  int n_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> standard_basis_;
  RewritingSystem rewriting_;
  std::unique_ptr<GradedLinearReducer> linear_;
  bool loaded_from_cache_ = false;

  mutable std::once_flag classes_once_;
  mutable std::map<Permutation, Polynomial> quantum_classes_;
};

/// Cache directory from the QFLAG_CACHE_DIR environment variable, if set.
std::optional<std::filesystem::path> default_cache_dir();

/// Shared ring for F(n), built on first use with the default cache.
const FlagRing& flag_ring(int n);

/// Classical intersection number of Ω_{w_1}…Ω_{w_N} on F(n): the
/// coefficient of σ_{w0} in the q = 0 part of the normal form of Π σ_{w_i}.
Integer classical_intersection_number(std::span<const Permutation> ws, int n);

}  // namespace qflag
