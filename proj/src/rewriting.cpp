#include "qflag/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "qflag/schubert.hpp"

namespace qflag {

bool ReductionOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int xa = a.x_degree();
  const int xb = b.x_degree();
  if (xa != xb) return xa > xb;
  for (int i = kMaxRank; i >= 1; --i) {
    if (a.x(i) != b.x(i)) return a.x(i) > b.x(i);
  }
  const int qa = a.q_degree();
  const int qb = b.q_degree();
  if (qa != qb) return qa > qb;
  for (int i = 1; i <= kMaxRank; ++i) {
    if (a.q(i) != b.q(i)) return a.q(i) > b.q(i);
  }
  return false;
}

Monomial leading_monomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading_monomial of zero");
  const ReductionOrder greater;
  Monomial best = p.terms().begin()->first;
  for (const auto& [m, c] : p.terms()) {
    if (greater(m, best)) best = m;
  }
  return best;
}

namespace {

using Ordered = std::map<Monomial, Integer, ReductionOrder>;

Ordered to_ordered(const Polynomial& p) {
  Ordered out;
  for (const auto& [m, c] : p.terms()) out.emplace(m, c);
  return out;
}

Polynomial from_ordered(const Ordered& o, int rank) {
  Polynomial p(rank);
  for (const auto& [m, c] : o) p.add_term(m, c);
  return p;
}

void add_scaled(Ordered& target, const Ordered& source, const Monomial& shift, const Integer& c) {
  for (const auto& [m, coeff] : source) {
    auto [it, inserted] = target.try_emplace(m * shift, coeff * c);
    if (!inserted) {
      it->second += coeff * c;
      if (it->second == 0) target.erase(it);
    }
  }
}

void scale(Ordered& p, const Integer& c) {
  if (c == 1) return;
  for (auto& [m, coeff] : p) coeff *= c;
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(Ordered& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& [m, c] : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.begin()->second < 0) g = -g;
  if (g == 1) return;
  for (auto& [m, c] : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Full pseudo-reduction of p by basis (skipping index `skip`), up to a
// nonzero integer factor.
Ordered pseudo_reduce(Ordered p, const std::vector<Ordered>& basis, std::size_t skip) {
  Ordered remainder;
  while (!p.empty()) {
    const auto lead = *p.begin();
    const Ordered* divisor = nullptr;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip || basis[i].empty()) continue;
      if (basis[i].begin()->first.divides(lead.first)) {
        divisor = &basis[i];
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.emplace(lead.first, lead.second);
      p.erase(p.begin());
      continue;
    }
    const Integer& h = divisor->begin()->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), lead.second.get_mpz_t(), h.get_mpz_t());
    const Integer mult_p = h / g;
    const Integer mult_d = lead.second / g;
    scale(p, mult_p);
    scale(remainder, mult_p);
    add_scaled(p, *divisor, lead.first / divisor->begin()->first, -mult_d);
  }
  make_primitive(remainder);
  return remainder;
}

Ordered s_polynomial(const Ordered& f, const Ordered& g) {
  const Monomial& lf = f.begin()->first;
  const Monomial& lg = g.begin()->first;
  const Monomial l = Monomial::lcm(lf, lg);
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.begin()->second.get_mpz_t(), g.begin()->second.get_mpz_t());
  Ordered s;
  add_scaled(s, f, l / lf, g.begin()->second / d);
  add_scaled(s, g, l / lg, -(f.begin()->second / d));
  return s;
}

}  // namespace

RewritingSystem::RewritingSystem(std::vector<Polynomial> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("rewriting system needs at least one rule");
  rank_ = rules_.front().rank();
  std::sort(rules_.begin(), rules_.end(), [](const Polynomial& a, const Polynomial& b) {
    return ReductionOrder{}(leading_monomial(b), leading_monomial(a));
  });
  for (const auto& rule : rules_) {
    if (rule.rank() != rank_) throw std::invalid_argument("rewriting rules differ in rank");
    const Monomial lead = leading_monomial(rule);
    if (rule.coefficient(lead) != 1) throw ConsistencyError("rewriting rule is not monic: " + to_text(rule));
    std::vector<std::pair<Monomial, Integer>> tail;
    for (const auto& [m, c] : to_ordered(rule)) {
      if (!(m == lead)) tail.emplace_back(m, -c);
    }
    leads_.push_back(lead);
    tails_.push_back(std::move(tail));
  }
}

RewritingSystem RewritingSystem::complete(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int rank = generators.front().rank();
  std::vector<Ordered> basis;
  for (const auto& g : generators) {
    if (g.rank() != rank) throw std::invalid_argument("generators differ in rank");
    Ordered o = to_ordered(g);
    make_primitive(o);
    if (!o.empty()) basis.push_back(std::move(o));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (basis[i].begin()->first.coprime(basis[j].begin()->first)) continue;
    Ordered r = pseudo_reduce(s_polynomial(basis[i], basis[j]), basis, basis.size());
    if (r.empty()) continue;
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimize: drop elements whose lead is divisible by another lead.
  std::vector<Ordered> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].begin()->first;
      const Monomial& lj = basis[j].begin()->first;
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) minimal[i] = pseudo_reduce(minimal[i], minimal, i);

  std::vector<Polynomial> rules;
  for (const auto& o : minimal) {
    if (o.begin()->second != 1) {
      throw ConsistencyError("reduced basis has a non-unit leading coefficient; normal forms would "
                             "leave ℤ");
    }
    rules.push_back(from_ordered(o, rank));
  }
  return RewritingSystem(std::move(rules));
}

bool RewritingSystem::is_irreducible(const Monomial& m) const {
  return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
}

Polynomial RewritingSystem::reduce(const Polynomial& p) const {
  if (p.rank() != rank_) throw std::invalid_argument("normal form: polynomial rank mismatch");
  Ordered work = to_ordered(p);
  Polynomial result(rank_);
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Integer c = it->second;
    work.erase(it);
    std::size_t r = 0;
    while (r < leads_.size() && !leads_[r].divides(m)) ++r;
    if (r == leads_.size()) {
      result.add_term(m, c);
      continue;
    }
    const Monomial shift = m / leads_[r];
    for (const auto& [tm, tc] : tails_[r]) {
      auto [slot, inserted] = work.try_emplace(tm * shift, tc * c);
      if (!inserted) {
        slot->second += tc * c;
        if (slot->second == 0) work.erase(slot);
      }
    }
  }
  return result;
}

Json RewritingSystem::to_json() const {
  Json j;
  j["format"] = "qflag-rewriting-system";
  j["format_version"] = kFormatVersion;
  j["n"] = rank_;
  Json rules = Json::array();
  for (const auto& r : rules_) rules.push_back(qflag::to_json(r));
  j["rules"] = std::move(rules);
  return j;
}

std::optional<RewritingSystem> RewritingSystem::from_json(const Json& j, int expected_rank) {
  try {
    if (j.at("format") != "qflag-rewriting-system") return std::nullopt;
    if (j.at("format_version").get<int>() != kFormatVersion) return std::nullopt;
    if (j.at("n").get<int>() != expected_rank) return std::nullopt;
    std::vector<Polynomial> rules;
    for (const auto& r : j.at("rules")) rules.push_back(polynomial_from_json(r, expected_rank));
    return RewritingSystem(std::move(rules));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace qflag
