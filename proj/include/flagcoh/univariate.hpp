#pragma once

// Dense univariate polynomials over Q: Euclidean division, Sturm sequences
// and rational roots.

#include <flagcoh/rational.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace flagcoh {

/// coeffs[i] multiplies y^i; no trailing zeros.
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& y) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
  }

  Univariate derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return Univariate(d);
  }

  /// Quotient and remainder by a nonzero divisor.
  std::pair<Univariate, Univariate> divmod(const Univariate& b) const {
    if (b.is_zero()) throw InputError("division by the zero polynomial");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() >= b.c_.size() ? c_.size() - b.c_.size() + 1 : 0);
    for (int k = degree() - b.degree(); k >= 0; --k) {
      Rational f = rem[static_cast<std::size_t>(k + b.degree())] / b.leading();
      quo[static_cast<std::size_t>(k)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return {Univariate(quo), Univariate(rem)};
  }

  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Univariate(out);
  }
  Univariate operator-() const {
    auto out = c_;
    for (auto& x : out) x = -x;
    return Univariate(out);
  }
  bool operator==(const Univariate&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::vector<Univariate> sturm_sequence(const Univariate& p) {
  std::vector<Univariate> seq{p};
  if (p.degree() < 1) return seq;
  seq.push_back(p.derivative());
  while (!seq.back().is_zero()) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

/// Number of distinct real roots.
inline int count_real_roots(const Univariate& p) {
  if (p.is_zero()) throw InputError("the zero polynomial has infinitely many roots");
  if (p.degree() < 1) return 0;
  auto seq = sturm_sequence(p);
  auto variations = [&](bool at_plus) {
    int count = 0, prev = 0;
    for (const auto& s : seq) {
      int sign = s.leading() > 0 ? 1 : -1;
      if (!at_plus && s.degree() % 2) sign = -sign;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n, const Integer& limit) {
  if (n < 0) n = -n;
  if (n > limit) throw ResourceError("coefficient too large for rational root search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const Univariate& p) {
  if (p.is_zero()) throw InputError("the zero polynomial has infinitely many roots");
  std::vector<Rational> roots;
  auto coeffs = p.coefficients();
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(shift));
  if (coeffs.size() <= 1) return roots;
  Integer lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : coeffs) {
    Rational scaled = c * lcm_den;
    ints.push_back(scaled.get_num());
  }
  Univariate reduced(coeffs);
  const Integer limit("1000000000000");
  for (const auto& num : detail::positive_divisors(ints.front(), limit)) {
    for (const auto& den : detail::positive_divisors(ints.back(), limit)) {
      for (int sign : {1, -1}) {
        Rational y(num * sign, den);
        y.canonicalize();
        if (reduced(y) == 0) roots.push_back(y);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace flagcoh
