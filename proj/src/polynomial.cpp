#include "qflag/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qflag {

namespace {

std::uint8_t checked_exponent(int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 255) throw std::overflow_error("exponent exceeds 255");
  return static_cast<std::uint8_t>(e);
}

void check_rank(int rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("polynomial rank must lie in 0.." + std::to_string(kMaxRank));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from(std::span<const int> x, std::span<const int> q) {
  if (x.size() > kMaxRank || q.size() > kMaxRank) {
    throw std::invalid_argument("too many variables in monomial");
  }
  Monomial m;
  for (std::size_t i = 0; i < x.size(); ++i) m.x_[i] = checked_exponent(x[i]);
  for (std::size_t i = 0; i < q.size(); ++i) m.q_[i] = checked_exponent(q[i]);
  return m;
}

Monomial Monomial::x_var(int i, int power) {
  Monomial m;
  m.set_x(i, power);
  return m;
}

Monomial Monomial::q_var(int i, int power) {
  Monomial m;
  m.set_q(i, power);
  return m;
}

void Monomial::set_x(int i, int e) {
  if (i < 1 || i > kMaxRank) throw std::out_of_range("x variable index out of range");
  x_[static_cast<std::size_t>(i - 1)] = checked_exponent(e);
}

void Monomial::set_q(int i, int e) {
  if (i < 1 || i > kMaxRank) throw std::out_of_range("q variable index out of range");
  q_[static_cast<std::size_t>(i - 1)] = checked_exponent(e);
}

int Monomial::x_degree() const {
  int d = 0;
  for (auto e : x_) d += e;
  return d;
}

int Monomial::q_degree() const {
  int d = 0;
  for (auto e : q_) d += e;
  return d;
}

bool Monomial::is_square_free() const {
  return std::all_of(x_.begin(), x_.end(), [](auto e) { return e <= 1; }) &&
         std::all_of(q_.begin(), q_.end(), [](auto e) { return e <= 1; });
}

int Monomial::max_x_index() const {
  for (int i = kMaxRank; i >= 1; --i) {
    if (x_[static_cast<std::size_t>(i - 1)]) return i;
  }
  return 0;
}

int Monomial::max_q_index() const {
  for (int i = kMaxRank; i >= 1; --i) {
    if (q_[static_cast<std::size_t>(i - 1)]) return i;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    if (x_[i] > other.x_[i] || q_[i] > other.q_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    m.x_[i] = checked_exponent(x_[i] + other.x_[i]);
    m.q_[i] = checked_exponent(q_[i] + other.q_[i]);
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    m.x_[i] = static_cast<std::uint8_t>(x_[i] - divisor.x_[i]);
    m.q_[i] = static_cast<std::uint8_t>(q_[i] - divisor.q_[i]);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    m.x_[i] = std::max(a.x_[i], b.x_[i]);
    m.q_[i] = std::max(a.q_[i], b.q_[i]);
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    if ((x_[i] && other.x_[i]) || (q_[i] && other.q_[i])) return false;
  }
  return true;
}

Monomial Monomial::x_part() const {
  Monomial m;
  m.x_ = x_;
  return m;
}

Monomial Monomial::q_part() const {
  Monomial m;
  m.q_ = q_;
  return m;
}

Monomial Monomial::swap_x(int i) const {
  Monomial m = *this;
  std::swap(m.x_[static_cast<std::size_t>(i - 1)], m.x_[static_cast<std::size_t>(i)]);
  return m;
}

bool DisplayOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.weighted_degree();
  const int db = b.weighted_degree();
  if (da != db) return da > db;
  if (a.x_exponents() != b.x_exponents()) return a.x_exponents() > b.x_exponents();
  return a.q_exponents() > b.q_exponents();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int rank) : rank_(rank) { check_rank(rank); }

Polynomial::Polynomial(int rank, const Integer& constant) : Polynomial(rank) {
  add_term(Monomial{}, constant);
}

Polynomial Polynomial::x(int rank, int i) {
  if (i < 1 || i > rank) throw std::out_of_range("x variable index out of range");
  return term(rank, Monomial::x_var(i));
}

Polynomial Polynomial::q(int rank, int i) {
  if (i < 1 || i > rank - 1) throw std::out_of_range("q variable index out of range");
  return term(rank, Monomial::q_var(i));
}

Polynomial Polynomial::term(int rank, const Monomial& m, const Integer& c) {
  if (m.max_x_index() > rank || m.max_q_index() > std::max(rank - 1, 0)) {
    throw std::out_of_range("monomial uses variables outside the ring of rank " +
                            std::to_string(rank));
  }
  Polynomial p(rank);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_q(); });
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Polynomial::constant_term() const { return coefficient(Monomial{}); }

int Polynomial::weighted_degree() const {
  // DisplayOrder puts the largest weighted degree first.
  return terms_.empty() ? -1 : terms_.begin()->first.weighted_degree();
}

int Polynomial::x_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x_degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = weighted_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.weighted_degree() == d; });
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_rank(const Polynomial& other) const {
  if (rank_ != other.rank_) {
    throw std::invalid_argument("polynomial rank mismatch: " + std::to_string(rank_) + " vs " +
                                std::to_string(other.rank_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_rank(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_rank(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_rank(b);
  Polynomial result(a.rank_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) result.add_term(ma * mb, ca * cb);
  }
  return result;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::shifted(const Monomial& m, const Integer& c) const {
  Polynomial result(rank_);
  if (c == 0) return result;
  for (const auto& [mm, cc] : terms_) result.terms_.emplace_hint(result.terms_.end(), mm * m, cc * c);
  return result;
}

Polynomial Polynomial::with_rank(int new_rank) const {
  check_rank(new_rank);
  Polynomial result(new_rank);
  for (const auto& [m, c] : terms_) {
    if (m.max_x_index() > new_rank || m.max_q_index() > std::max(new_rank - 1, 0)) {
      throw std::invalid_argument("cannot narrow polynomial to rank " + std::to_string(new_rank) +
                                  ": variable out of range in " + to_text(m));
    }
    result.terms_.emplace_hint(result.terms_.end(), m, c);
  }
  return result;
}

Polynomial Polynomial::x_homogeneous_part(int degree) const {
  Polynomial result(rank_);
  for (const auto& [m, c] : terms_) {
    if (m.x_degree() == degree) result.terms_.emplace_hint(result.terms_.end(), m, c);
  }
  return result;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial scale(const Integer& c, const Polynomial& p) { return c * p; }

// ---------------------------------------------------------------------------
// Divided differences

Polynomial swap_variables(int i, const Polynomial& p) {
  if (i < 1 || i >= p.rank()) throw std::out_of_range("swap index out of range");
  Polynomial result(p.rank());
  for (const auto& [m, c] : p.terms()) result.add_term(m.swap_x(i), c);
  return result;
}

Polynomial divided_difference(int i, const Polynomial& p) {
  if (i < 1 || i >= p.rank()) {
    throw std::out_of_range("divided difference index " + std::to_string(i) +
                            " out of range for rank " + std::to_string(p.rank()));
  }
  if (p.has_q()) throw std::invalid_argument("divided differences act on q-free polynomials only");

  // x_i^a x_{i+1}^b with a > b maps to (x_i x_{i+1})^b · h_{a-b-1}(x_i, x_{i+1});
  // a < b gives the negative of the swapped case and a == b gives zero.
  Polynomial result(p.rank());
  for (const auto& [m, c] : p.terms()) {
    const int a = m.x(i);
    const int b = m.x(i + 1);
    if (a == b) continue;
    const int low = std::min(a, b);
    const int span = std::abs(a - b);
    const Integer coeff = a > b ? c : Integer(-c);
    Monomial base = m;
    base.set_x(i, low);
    base.set_x(i + 1, low);
    for (int j = 0; j < span; ++j) {
      Monomial t = base;
      t.set_x(i, low + span - 1 - j);
      t.set_x(i + 1, low + j);
      result.add_term(t, coeff);
    }
  }
  return result;
}

Polynomial apply_divided_differences(std::span<const int> word, const Polynomial& p) {
  Polynomial result = p;
  for (auto it = word.rbegin(); it != word.rend() && !result.is_zero(); ++it) {
    result = divided_difference(*it, result);
  }
  return result;
}

Polynomial elementary_symmetric(int k, int nvars, int rank) {
  if (rank < 0) rank = nvars;
  if (nvars > rank) throw std::invalid_argument("elementary_symmetric: more variables than rank");
  Polynomial result(rank);
  if (k < 0 || k > nvars) return result;
  // Enumerate k-subsets of {1..nvars} in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Monomial m;
    for (int v : pick) m.set_x(v, 1);
    result.add_term(m, 1);
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == nvars - k + pos + 1) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return result;
}

Polynomial substitute_q_zero(const Polynomial& p) {
  Polynomial result(p.rank());
  for (const auto& [m, c] : p.terms()) {
    if (!m.has_q()) result.add_term(m, c);
  }
  return result;
}

Polynomial coefficient_of_q(const Polynomial& p, std::span<const int> degree) {
  if (static_cast<int>(degree.size()) > std::max(p.rank() - 1, 0)) {
    throw std::invalid_argument("q multidegree longer than the number of q variables");
  }
  const Monomial target = Monomial::from({}, degree);
  Polynomial result(p.rank());
  for (const auto& [m, c] : p.terms()) {
    if (m.q_part() == target) result.add_term(m.x_part(), c);
  }
  return result;
}

std::map<Monomial, Polynomial, DisplayOrder> split_by_q(const Polynomial& p) {
  std::map<Monomial, Polynomial, DisplayOrder> groups;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = groups.try_emplace(m.q_part(), p.rank());
    it->second.add_term(m.x_part(), c);
  }
  return groups;
}

}  // namespace qflag
