#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

using Integer = mpz_class;

/// Largest supported number of x variables.
inline constexpr int kMaxRank = 16;

/// x_1^{a_1}…x_n^{a_n} q_1^{d_1}…q_{n-1}^{d_{n-1}}. Unused slots stay zero, so
/// monomials from rings of different rank compare consistently.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, kMaxRank>;

  Monomial() = default;
  static Monomial from(std::span<const int> x, std::span<const int> q = {});
  static Monomial x_var(int i, int power = 1);
  static Monomial q_var(int i, int power = 1);

  int x(int i) const { return x_[static_cast<std::size_t>(i - 1)]; }
  int q(int i) const { return q_[static_cast<std::size_t>(i - 1)]; }
  void set_x(int i, int e);
  void set_q(int i, int e);

  int x_degree() const;
  int q_degree() const;
  /// deg x_i = 1, deg q_i = 2.
  int weighted_degree() const { return x_degree() + 2 * q_degree(); }
  bool is_square_free() const;
  bool has_q() const { return q_degree() != 0; }
  bool is_one() const { return x_degree() == 0 && q_degree() == 0; }
  /// Highest x (resp. q) index with a nonzero exponent, 0 when none.
  int max_x_index() const;
  int max_q_index() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  Monomial x_part() const;
  Monomial q_part() const;
  /// The monomial with x_i and x_{i+1} exchanged.
  Monomial swap_x(int i) const;

  const Exponents& x_exponents() const { return x_; }
  const Exponents& q_exponents() const { return q_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents x_{};
  Exponents q_{};
};

/// Display order: higher weighted degree first, ties broken lexicographically
/// with x1 > … > xn > q1 > … > q_{n-1}. Sorts larger terms first.
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse element of ℤ[x_1..x_n, q_1..q_{n-1}] with arbitrary-precision
/// coefficients. `rank()` is n; every operand of a binary operation must have
/// the same rank (use `embed` to widen).
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, DisplayOrder>;

  Polynomial() = default;
  explicit Polynomial(int rank);
  Polynomial(int rank, const Integer& constant);

  static Polynomial x(int rank, int i);
  static Polynomial q(int rank, int i);
  static Polynomial term(int rank, const Monomial& m, const Integer& c = 1);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_q() const;
  /// Coefficient of m (zero when absent).
  Integer coefficient(const Monomial& m) const;
  Integer constant_term() const;

  /// Maximum weighted degree over terms; -1 for the zero polynomial.
  int weighted_degree() const;
  int x_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Multiplies every monomial by m.
  Polynomial shifted(const Monomial& m, const Integer& c = 1) const;
  /// Same polynomial viewed in a ring with `new_rank` x variables. Narrowing
  /// throws when a dropped variable occurs.
  Polynomial with_rank(int new_rank) const;
  /// Terms of a given x-degree.
  Polynomial x_homogeneous_part(int degree) const;

 private:
  void require_same_rank(const Polynomial& other) const;

  int rank_ = 0;
  Terms terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Integer& c, const Polynomial& p);

/// (P - s_i P) / (x_i - x_{i+1}). Throws std::invalid_argument when P
/// involves a q variable and std::out_of_range when i is not in 1..rank-1.
Polynomial divided_difference(int i, const Polynomial& p);

/// Applies ∂_{a_l} first and ∂_{a_1} last for the word (a_1..a_l).
Polynomial apply_divided_differences(std::span<const int> word, const Polynomial& p);

/// s_i P: exchanges x_i and x_{i+1}.
Polynomial swap_variables(int i, const Polynomial& p);

/// e_k(x_1..x_nvars) in a ring of the given rank (defaults to nvars). e_0 = 1
/// and e_k = 0 for k > nvars or k < 0.
Polynomial elementary_symmetric(int k, int nvars, int rank = -1);

Polynomial substitute_q_zero(const Polynomial& p);

/// The x-polynomial multiplying q^d = Π q_i^{d_i}. `degree` may be shorter
/// than rank-1; missing entries are zero.
Polynomial coefficient_of_q(const Polynomial& p, std::span<const int> degree);

/// Groups terms by their q part: q-monomial → x-polynomial.
std::map<Monomial, Polynomial, DisplayOrder> split_by_q(const Polynomial& p);

// Text and JSON forms live in polynomial_io.cpp.

/// "x1^2*x2 - 3*q1*x3"; "0" for the zero polynomial.
std::string to_text(const Polynomial& p);
std::string to_text(const Monomial& m);
/// Parses sums, differences, products, integer powers and parentheses over
/// integers and the variables x1..xn, q1..q_{n-1}.
Polynomial parse_polynomial(std::string_view text, int rank);

}  // namespace qflag
