#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qflag/json_io.hpp"
#include "qflag/polynomial.hpp"

namespace qflag {

std::string to_text(const Monomial& m) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](char name, int index, int e) {
    if (e == 0) return;
    if (!first) out << '*';
    first = false;
    out << name << index;
    if (e > 1) out << '^' << e;
  };
  for (int i = 1; i <= kMaxRank; ++i) emit('x', i, m.x(i));
  for (int i = 1; i <= kMaxRank; ++i) emit('q', i, m.q(i));
  if (first) out << '1';
  return out.str();
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << to_text(m);
    } else {
      out << magnitude.get_str() << '*' << to_text(m);
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Polynomial parse() {
    Polynomial result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected token");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           (end == pos_ || std::isalnum(static_cast<unsigned char>(text_[end])))) {
      ++end;
    }
    const std::string token = pos_ < text_.size() ? std::string(text_.substr(pos_, std::max<std::size_t>(end - pos_, 1)))
                                                  : std::string("<end of input>");
    throw std::invalid_argument(what + " '" + token + "' at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial result(rank_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial t = term();
    result = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  Polynomial term() {
    Polynomial result = power();
    while (accept('*')) result *= power();
    return result;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const int e = integer_literal_small();
      Polynomial result(rank_, 1);
      for (int i = 0; i < e; ++i) result *= base;
      return result;
    }
    return base;
  }

  int integer_literal_small() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 3) {
      pos_ = start;
      fail("exponent too large");
    }
    return std::stoi(digits);
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(rank_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 'x' || c == 'q') {
      const std::size_t start = pos_;
      ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_ || pos_ - digits > 3) {
        pos_ = start;
        fail("invalid variable");
      }
      const int index = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
      const int limit = c == 'x' ? rank_ : rank_ - 1;
      if (index < 1 || index > limit) {
        pos_ = start;
        fail("variable out of range for rank " + std::to_string(rank_));
      }
      return c == 'x' ? Polynomial::x(rank_, index) : Polynomial::q(rank_, index);
    }
    fail("unexpected token");
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int rank) { return Parser(text, rank).parse(); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  const int n = p.rank();
  for (const auto& [m, c] : p.terms()) {
    Json x = Json::array();
    Json q = Json::array();
    for (int i = 1; i <= n; ++i) x.push_back(m.x(i));
    for (int i = 1; i <= n - 1; ++i) q.push_back(m.q(i));
    Json term;
    term["x"] = std::move(x);
    term["q"] = std::move(q);
    term["c"] = c.get_str();
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial polynomial_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list of terms");
  if (rank < 0) {
    if (j.empty()) throw std::invalid_argument("cannot infer the rank of an empty polynomial");
    rank = static_cast<int>(j.front().at("x").size());
  }
  Polynomial result(rank);
  for (const auto& term : j) {
    const auto x = term.at("x").get<std::vector<int>>();
    const auto q = term.at("q").get<std::vector<int>>();
    if (static_cast<int>(x.size()) != rank || static_cast<int>(q.size()) != std::max(rank - 1, 0)) {
      throw std::invalid_argument("polynomial JSON term has the wrong number of exponents");
    }
    Integer c;
    if (term.at("c").is_string()) {
      if (c.set_str(term.at("c").get<std::string>(), 10) != 0) {
        throw std::invalid_argument("invalid coefficient string");
      }
    } else {
      c = term.at("c").get<long>();
    }
    result.add_term(Monomial::from(x, q), c);
  }
  return result;
}

}  // namespace qflag
