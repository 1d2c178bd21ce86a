#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qflag/exact_linalg.hpp"
#include "qflag/polynomial.hpp"

namespace qflag {

/// True when m is one of the n! standard monomials, i.e. the exponent of x_j
/// is at most n-j (q exponents are unrestricted).
bool is_standard_monomial(const Monomial& m, int n);

/// Every monomial of weighted degree d in x_1..x_n, q_1..q_{n-1}.
std::vector<Monomial> monomials_of_weighted_degree(int n, int d);

/// Normal forms computed independently of the rewriting system: in each
/// weighted degree d, span{m·g_k} is put into echelon form over ℚ with the
/// non-standard monomials as leading columns, and the target is reduced
/// against it. Degrees are built on demand and cached.
class GradedLinearReducer {
 public:
  /// Generators must be weighted-homogeneous and of rank n.
  GradedLinearReducer(int n, std::vector<Polynomial> generators);
  ~GradedLinearReducer();

  int rank() const { return n_; }
  /// Throws ConsistencyError if the result is not integral or the echelon
  /// form finds a relation among standard monomials.
  Polynomial normal_form(const Polynomial& p) const;

 private:
  struct Degree;
  const Degree& degree(int d) const;
  std::unique_ptr<Degree> build(int d) const;

  int n_;
  std::vector<Polynomial> generators_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Degree>> degrees_;
};

}  // namespace qflag
