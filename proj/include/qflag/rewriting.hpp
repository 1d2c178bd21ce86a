#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qflag/json_io.hpp"
#include "qflag/polynomial.hpp"

namespace qflag {

/// Block term order used for normal forms: x-degree, then lexicographic on x
/// with x_n > x_{n-1} > … > x_1, then q-degree, then lexicographic on q with
/// q_1 > q_2 > …. As a map comparator it sorts larger monomials first.
struct ReductionOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Leading monomial of p under ReductionOrder. p must be nonzero.
Monomial leading_monomial(const Polynomial& p);

/// Reduced Gröbner basis of an ideal of ℤ[x, q] with monic leading terms,
/// used as a confluent rewriting system LT(g) → LT(g) - g.
class RewritingSystem {
 public:
  static constexpr int kFormatVersion = 1;

  /// Buchberger completion with primitive pseudo-reduction over ℤ. Throws
  /// ConsistencyError if the reduced basis is not monic.
  static RewritingSystem complete(const std::vector<Polynomial>& generators);

  int rank() const { return rank_; }
  const std::vector<Polynomial>& rules() const { return rules_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  /// True when no leading monomial divides m.
  bool is_irreducible(const Monomial& m) const;
  Polynomial reduce(const Polynomial& p) const;

  /// {"format": ..., "format_version": 1, "n": n, "rules": [...]}.
  Json to_json() const;
  /// Returns nullopt when the document's format, version or rank does not
  /// match.
  static std::optional<RewritingSystem> from_json(const Json& j, int expected_rank);

 private:
  explicit RewritingSystem(std::vector<Polynomial> rules);

  int rank_ = 0;
  std::vector<Polynomial> rules_;
  std::vector<Monomial> leads_;
  // Each rule split as lead → tail, with the tail negated and sorted.
  std::vector<std::vector<std::pair<Monomial, Integer>>> tails_;
};

}  // namespace qflag
