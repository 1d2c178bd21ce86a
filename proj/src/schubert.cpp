#include "qflag/schubert.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qflag {

Polynomial staircase(int n, int rank) {
  if (rank < 0) rank = n;
  Monomial m;
  for (int i = 1; i < n; ++i) m.set_x(i, n - i);
  return Polynomial::term(rank, m);
}

Polynomial schubert_polynomial_along(const Permutation& w, int n, const Word& word) {
  const Permutation v = w.restrict(n);
  const Permutation target = Permutation::longest(n) * v;
  if (static_cast<int>(word.size()) != target.length() ||
      Permutation::from_word(word, n) != target) {
    throw std::invalid_argument("word is not a reduced word for w0*w");
  }
  Polynomial sigma = staircase(n);
  for (int i : word) sigma = divided_difference(i, sigma);
  return sigma;
}

Polynomial schubert_polynomial(const Permutation& w, int n) {
  const Permutation v = w.restrict(n);
  return schubert_polynomial_along(v, n, reduced_word(Permutation::longest(n) * v));
}

// ---------------------------------------------------------------------------

SchubertTable::SchubertTable(int m) : ambient_(m) {
  if (m < 1) throw std::invalid_argument("SchubertTable needs m >= 1");
  by_length_.resize(static_cast<std::size_t>(max_length() + 1));
  for (auto& w : all_permutations(m)) by_length_[static_cast<std::size_t>(w.length())].push_back(w);

  // σ_{w0} is the staircase; below that σ_w = ∂_i σ_{w·s_i} for an ascent i.
  for (int l = max_length(); l >= 0; --l) {
    for (const auto& w : by_length_[static_cast<std::size_t>(l)]) {
      if (l == max_length()) {
        sigma_.emplace(w, staircase(m));
        continue;
      }
      int ascent = 1;
      while (w(ascent) > w(ascent + 1)) ++ascent;
      sigma_.emplace(w, divided_difference(ascent, sigma_.at(w.times_adjacent(ascent))));
    }
  }
}

const Polynomial& SchubertTable::polynomial(const Permutation& w) const {
  return sigma_.at(w.restrict(ambient_));
}

const std::vector<Permutation>& SchubertTable::of_length(int l) const {
  static const std::vector<Permutation> kEmpty;
  if (l < 0 || l > max_length()) return kEmpty;
  return by_length_[static_cast<std::size_t>(l)];
}

const SchubertTable& schubert_table(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const SchubertTable>> tables;
  std::lock_guard lock(mutex);
  auto it = tables.find(m);
  if (it == tables.end()) it = tables.emplace(m, std::make_unique<const SchubertTable>(m)).first;
  return *it->second;
}

bool schubert_alpha_check(int k, int m, int n) {
  return schubert_polynomial(alpha(k, m, n), n) == elementary_symmetric(k - 1, m - 1, n);
}

// ---------------------------------------------------------------------------

namespace {

// Table lookups are cheap up to S_6; larger ambients compute σ directly.
Polynomial sigma_at_rank(const Permutation& w, int ambient, int rank) {
  if (ambient <= 6) return schubert_table(ambient).polynomial(w).with_rank(rank);
  return schubert_polynomial(w, ambient).with_rank(rank);
}

}  // namespace

SchubertExpansion::SchubertExpansion(int ambient, int rank) : ambient_(ambient), rank_(rank) {
  if (ambient < 1) throw std::invalid_argument("expansion ambient must be >= 1");
}

SchubertExpansion SchubertExpansion::single(const Permutation& w, int ambient, int rank) {
  SchubertExpansion e(ambient, rank);
  e.add(w, Polynomial(rank, 1));
  return e;
}

Permutation SchubertExpansion::key(const Permutation& w) const { return w.restrict(ambient_); }

void SchubertExpansion::add(const Permutation& w, const Polynomial& coefficient) {
  if (coefficient.rank() != rank_) throw std::invalid_argument("expansion coefficient rank mismatch");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key(w), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial SchubertExpansion::coefficient(const Permutation& w) const {
  if (w.support() > ambient_) return Polynomial(rank_);
  auto it = terms_.find(key(w));
  return it == terms_.end() ? Polynomial(rank_) : it->second;
}

SchubertExpansion SchubertExpansion::truncated_to(int m) const {
  SchubertExpansion result(std::min(m, ambient_), rank_);
  for (const auto& [w, c] : terms_) {
    if (w.support() <= m) result.add(w, c);
  }
  return result;
}

SchubertExpansion SchubertExpansion::substitute_q_zero() const {
  SchubertExpansion result(ambient_, rank_);
  for (const auto& [w, c] : terms_) result.add(w, qflag::substitute_q_zero(c));
  return result;
}

Polynomial SchubertExpansion::reconstitute() const {
  const int r = std::max(rank_, ambient_);
  Polynomial total(r);
  for (const auto& [w, c] : terms_) total += c.with_rank(r) * sigma_at_rank(w, ambient_, r);
  return total;
}

SchubertExpansion& SchubertExpansion::operator+=(const SchubertExpansion& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

SchubertExpansion& SchubertExpansion::operator-=(const SchubertExpansion& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

bool operator==(const SchubertExpansion& a, const SchubertExpansion& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (w.restrict(std::max(w.support(), 1)) != ib->first.restrict(std::max(ib->first.support(), 1)) ||
        !(c == ib->second)) {
      return false;
    }
    ++ib;
  }
  return true;
}

std::string to_text(const SchubertExpansion& e) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) out << ", ";
    first = false;
    out << '"' << w.to_string() << "\": \"" << to_text(c) << '"';
  }
  out << '}';
  return out.str();
}

Json to_json(const SchubertExpansion& e) {
  Json j = Json::object();
  for (const auto& [w, c] : e.terms()) j[w.to_string()] = to_json(c);
  return j;
}

// ---------------------------------------------------------------------------

SchubertExpansion expand_in_schubert_basis(const Polynomial& p, int m) {
  const SchubertTable& table = schubert_table(m);
  const int r = std::max(p.rank(), m);
  SchubertExpansion result(m, p.rank());

  for (const auto& [qm, xpart] : split_by_q(p)) {
    Polynomial remaining = xpart.with_rank(r);
    while (!remaining.is_zero()) {
      const int e = remaining.x_degree();
      const Polynomial top = remaining.x_homogeneous_part(e);
      for (const auto& w : table.of_length(e)) {
        const Integer c = apply_divided_differences(reduced_word(w), top).constant_term();
        if (c == 0) continue;
        result.add(w, Polynomial::term(p.rank(), qm, c));
        remaining -= c * table.polynomial(w).with_rank(r);
      }
      if (remaining.x_degree() >= e && !remaining.x_homogeneous_part(e).is_zero()) {
        throw ConsistencyError("polynomial " + to_text(p) +
                               " is not in the span of Schubert polynomials of S_" +
                               std::to_string(m));
      }
    }
  }

  if (!(result.reconstitute() == p.with_rank(std::max(r, result.rank())))) {
    throw ConsistencyError("Schubert expansion failed to reconstitute " + to_text(p));
  }
  return result;
}

SchubertExpansion monk_multiply(int p, const Permutation& w, int ambient) {
  if (p < 1 || p >= ambient) throw std::out_of_range("Monk index p must satisfy 1 <= p < ambient");
  const Permutation v = w.restrict(ambient);
  SchubertExpansion result(ambient, ambient);
  for (int i = 1; i <= p; ++i) {
    for (int j = p + 1; j <= ambient; ++j) {
      // l(v·t_ij) = l(v) + 1 iff v(i) < v(j) with no value strictly between
      // them in positions i+1..j-1.
      if (v(i) > v(j)) continue;
      bool covers = true;
      for (int k = i + 1; k < j && covers; ++k) covers = !(v(i) < v(k) && v(k) < v(j));
      if (covers) result.add(v.times_transposition(i, j), Polynomial(ambient, 1));
    }
  }
  return result;
}

SchubertExpansion multiply_by_x_classical(int p, const SchubertExpansion& e, int m) {
  if (p < 1 || p > m) throw std::out_of_range("x index out of range");
  SchubertExpansion result(m, e.rank());
  for (const auto& [w, c] : e.terms()) {
    const SchubertExpansion up = monk_multiply(p, w, m + 1);
    for (const auto& [v, one] : up.terms()) {
      if (v.support() <= m) result.add(v, c);
    }
    if (p >= 2) {
      const SchubertExpansion down = monk_multiply(p - 1, w, m + 1);
      for (const auto& [v, one] : down.terms()) {
        if (v.support() <= m) result.add(v, -c);
      }
    }
  }
  return result;
}

SchubertExpansion classical_product_by_monk(const Permutation& u, const Permutation& v, int n) {
  SchubertExpansion result(n, n);
  const SchubertExpansion start = SchubertExpansion::single(v, n, n);
  const Polynomial sigma_u = schubert_polynomial(u, n);
  for (const auto& [m, c] : sigma_u.terms()) {
    SchubertExpansion partial = start;
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < m.x(i); ++k) partial = multiply_by_x_classical(i, partial, n);
    }
    for (const auto& [w, coeff] : partial.terms()) result.add(w, coeff * c);
  }
  return result;
}

}  // namespace qflag
