#pragma once

// Sparse multivariate polynomials over Q with positive integer variable
// weights. Text form: "3/2*q1^2*k2 - x3".

#include <flagcoh/rational.hpp>

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagcoh {

using Exponents = std::vector<int>;

/// Ordered by weighted degree, then lexicographically on exponents.
struct Monomial {
  int degree = 0;
  Exponents exponents;
  auto operator<=>(const Monomial&) const = default;
};

class VariableTable {
 public:
  VariableTable() = default;
  VariableTable(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() != weights_.size()) throw InputError("variable names and weights differ in length");
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (weights_[k] <= 0) throw InputError("variable " + names_[k] + " needs a positive weight");
      if (!valid_name(names_[k])) throw InputError("invalid variable name '" + names_[k] + "'");
      for (std::size_t m = 0; m < k; ++m)
        if (names_[m] == names_[k]) throw InputError("duplicate variable " + names_[k]);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t k) const { return names_.at(k); }
  int weight(std::size_t k) const { return weights_.at(k); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == name) return k;
    return std::nullopt;
  }
  std::size_t index(std::string_view name) const {
    auto k = find(name);
    if (!k) throw InputError("unknown variable '" + std::string(name) + "'");
    return *k;
  }

  int degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += e[k] * weights_[k];
    return d;
  }

  bool operator==(const VariableTable&) const = default;

  static bool valid_name(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline TablePtr make_table(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const VariableTable>(std::move(names), std::move(weights));
}

/// Table x1..xn (prefix configurable), all weight one.
inline TablePtr make_uniform_table(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back(prefix + std::to_string(k));
  return make_table(std::move(names), std::vector<int>(n, 1));
}

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(TablePtr table) : table_(std::move(table)) {
    if (!table_) throw InputError("polynomial without variable table");
  }
  Polynomial(TablePtr table, const Rational& c) : Polynomial(std::move(table)) {
    add_term(Exponents(table_->size(), 0), c);
  }

  static Polynomial variable(const TablePtr& table, std::size_t k, int power = 1) {
    Polynomial p(table);
    Exponents e(table->size(), 0);
    e.at(k) = power;
    p.add_term(e, 1);
    return p;
  }
  static Polynomial variable(const TablePtr& table, std::string_view name, int power = 1) {
    return variable(table, table->index(name), power);
  }
  static Polynomial monomial(const TablePtr& table, const Exponents& e, const Rational& c = 1) {
    Polynomial p(table);
    p.add_term(e, c);
    return p;
  }

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != table_->size()) throw InputError("exponent vector length mismatch");
    if (c == 0) return;
    Monomial m{table_->degree(e), e};
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest weighted degree present; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree; }
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree; }
  bool is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

  Polynomial homogeneous_component(int d) const {
    Polynomial out(table_);
    for (const auto& [m, c] : terms_)
      if (m.degree == d) out.terms_.emplace(m, c);
    return out;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(Monomial{table_->degree(e), e});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Exponents(table_->size(), 0)); }

  /// True when variable k occurs in some monomial.
  bool involves(std::size_t k) const {
    for (const auto& [m, c] : terms_)
      if (m.exponents[k] != 0) return true;
    return false;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_monomial(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_table(o);
    for (const auto& [m, c] : o.terms_) add_monomial(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_table(b);
    Polynomial out(a.table_);
    const std::size_t n = a.table_->size();
    Monomial prod{0, Exponents(n, 0)};
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t k = 0; k < n; ++k) prod.exponents[k] = ma.exponents[k] + mb.exponents[k];
        prod.degree = ma.degree + mb.degree;
        out.add_monomial(prod, ca * cb);
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    if (k < 0) throw InputError("negative power");
    Polynomial result(table_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  /// Replaces variable k by `value` (same table).
  Polynomial substitute(std::size_t k, const Polynomial& value) const {
    check_table(value);
    Polynomial out(table_);
    std::map<int, Polynomial> powers;
    for (const auto& [m, c] : terms_) {
      int e = m.exponents[k];
      if (e == 0) {
        out.add_monomial(m, c);
        continue;
      }
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      Exponents rest = m.exponents;
      rest[k] = 0;
      out += monomial(table_, rest, c) * it->second;
    }
    return out;
  }

  /// Rewrites into another table by variable name; every variable used must exist there.
  Polynomial rebase(const TablePtr& target) const {
    std::vector<std::size_t> map(table_->size());
    for (std::size_t k = 0; k < table_->size(); ++k) {
      auto found = target->find(table_->name(k));
      if (!found) {
        if (involves(k)) throw InputError("variable " + table_->name(k) + " missing in target table");
        map[k] = static_cast<std::size_t>(-1);
      } else {
        map[k] = *found;
      }
    }
    Polynomial out(target);
    for (const auto& [m, c] : terms_) {
      Exponents e(target->size(), 0);
      for (std::size_t k = 0; k < m.exponents.size(); ++k)
        if (m.exponents[k]) e[map[k]] += m.exponents[k];
      out.add_term(e, c);
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_table(a.table_, b.table_) && a.terms_ == b.terms_;
  }

  static bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || *a == *b; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string factors;
      for (std::size_t k = 0; k < m.exponents.size(); ++k) {
        if (!m.exponents[k]) continue;
        if (!factors.empty()) factors += "*";
        factors += table_->name(k);
        if (m.exponents[k] > 1) factors += "^" + std::to_string(m.exponents[k]);
      }
      if (factors.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += factors;
      } else {
        out += mag.get_str() + "*" + factors;
      }
    }
    return out;
  }

  static Polynomial parse(const TablePtr& table, std::string_view text);

 private:
  void check_table(const Polynomial& o) const {
    if (!same_table(table_, o.table_)) throw InputError("polynomials over different variable tables");
  }
  void add_monomial(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TablePtr table_;
  Terms terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const TablePtr& table, std::string_view text) : table_(table), text_(text) {}

  Polynomial parse() {
    Polynomial out(table_);
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      out += parse_term() * Rational(sign);
      skip();
    }
    return out;
  }

 private:
  Polynomial parse_term() {
    Polynomial term(table_, 1);
    while (true) {
      skip();
      if (pos_ >= text_.size()) fail("dangling operator");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        auto name = text_.substr(start, pos_ - start);
        auto k = table_->find(name);
        if (!k) fail("unknown variable '" + std::string(name) + "'");
        int power = 1;
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip();
          power = parse_int();
        }
        term *= Polynomial::variable(table_, *k, power);
      } else if (c == '(') {
        ++pos_;
        std::size_t depth = 1, start = pos_;
        while (pos_ < text_.size() && depth) {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        }
        if (depth) fail("unbalanced parenthesis");
        Polynomial inner = PolyParser(table_, text_.substr(start, pos_ - start - 1)).parse();
        skip();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip();
          inner = inner.pow(parse_int());
        }
        term *= inner;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return term;
    }
  }

  Rational parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail("missing denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  int parse_int() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected exponent");
    return static_cast<int>(v);
  }

  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  const TablePtr& table_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const TablePtr& table, std::string_view text) {
  return detail::PolyParser(table, text).parse();
}

/// e_k of the listed variables; e_0 = 1.
inline Polynomial elementary_symmetric(const TablePtr& table, int k, const std::vector<std::size_t>& vars) {
  if (k < 0 || k > static_cast<int>(vars.size())) {
    throw InputError("e_" + std::to_string(k) + " undefined on " + std::to_string(vars.size()) + " variables");
  }
  // Coefficient of t^k in prod (1 + t v).
  std::vector<Polynomial> coeffs{Polynomial(table, 1)};
  for (std::size_t v : vars) {
    auto x = Polynomial::variable(table, v);
    coeffs.emplace_back(table);
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) coeffs[j] += x * coeffs[j - 1];
  }
  return coeffs[static_cast<std::size_t>(k)];
}

/// h_k of the listed variables (complete homogeneous); h_0 = 1.
inline Polynomial complete_homogeneous(const TablePtr& table, int k, const std::vector<std::size_t>& vars) {
  if (k < 0) throw InputError("negative degree");
  std::vector<Polynomial> h(static_cast<std::size_t>(k + 1), Polynomial(table));
  h[0] = Polynomial(table, 1);
  for (std::size_t v : vars) {
    auto x = Polynomial::variable(table, v);
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += x * h[j - 1];
  }
  return h[static_cast<std::size_t>(k)];
}

/// Power series in t with polynomial coefficients: coeffs[i] multiplies t^i.
using SeriesCoefficients = std::vector<Polynomial>;

inline SeriesCoefficients series_product(const SeriesCoefficients& a, const SeriesCoefficients& b) {
  if (a.empty() || b.empty()) throw InputError("empty series");
  SeriesCoefficients out(a.size() + b.size() - 1, Polynomial(a.front().table()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) out[i + j] += a[i] * b[j];
  return out;
}

/// p(-t).
inline SeriesCoefficients series_negate_parameter(SeriesCoefficients p) {
  for (std::size_t i = 1; i < p.size(); i += 2) p[i] *= Rational(-1);
  return p;
}

/// u with u * p = 1 mod t^{cap+1}; requires p_0 = 1.
inline SeriesCoefficients truncated_inverse(const SeriesCoefficients& p, int cap) {
  if (p.empty()) throw InputError("empty series");
  const auto& table = p.front().table();
  if (!(p.front() == Polynomial(table, 1))) throw InputError("series inverse needs constant term 1");
  if (cap < 0) throw InputError("negative truncation degree");
  SeriesCoefficients u{Polynomial(table, 1)};
  for (int i = 1; i <= cap; ++i) {
    Polynomial next(table);
    for (int j = 1; j <= i && j < static_cast<int>(p.size()); ++j) {
      next -= p[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(i - j)];
    }
    u.push_back(std::move(next));
  }
  return u;
}

}  // namespace flagcoh
