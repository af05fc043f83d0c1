#pragma once

// Two-row Schubert calculus on the Grassmannian G(1,m) of lines in P^m.

#include <flagcoh/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace flagcoh {

/// sigma_{a1,a2} with m-1 >= a1 >= a2 >= 0.
struct SchubertClass {
  int m;
  int a1;
  int a2;

  SchubertClass(int m_, int a1_, int a2_) : m(m_), a1(a1_), a2(a2_) {
    if (m < 2) throw InputError("G(1,m) needs m >= 2");
    if (!(m - 1 >= a1 && a1 >= a2 && a2 >= 0)) {
      throw InputError("no Schubert class (" + std::to_string(a1) + "," + std::to_string(a2) + ") on G(1," +
                       std::to_string(m) + ")");
    }
  }

  int codimension() const { return a1 + a2; }
  std::string name() const { return "s(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }
  auto operator<=>(const SchubertClass&) const = default;
};

class SchubertSum {
 public:
  explicit SchubertSum(int m) : m_(m) {}
  SchubertSum(const SchubertClass& c, const Rational& coeff = 1) : m_(c.m) { add(c, coeff); }

  int m() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

  void add(const SchubertClass& c, const Rational& coeff) {
    if (c.m != m_) throw InputError("Schubert classes on different Grassmannians");
    if (coeff == 0) return;
    auto& slot = terms_[{c.a1, c.a2}];
    slot += coeff;
    if (slot == 0) terms_.erase({c.a1, c.a2});
  }

  Rational coefficient(int a1, int a2) const {
    auto it = terms_.find({a1, a2});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool effective() const {
    for (const auto& [k, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      Rational mag = abs(c);
      if (mag != 1) out += mag.get_str() + "*";
      out += SchubertClass(m_, k.first, k.second).name();
    }
    return out;
  }

  bool operator==(const SchubertSum&) const = default;

 private:
  int m_;
  std::map<std::pair<int, int>, Rational> terms_;
};

/// sigma_a * sigma_b = sum of sigma_c over |c| = |a| + |b| with
/// a1 + b2 <= c1 <= a1 + b1 (after ordering a1 - a2 >= b1 - b2),
/// c1 <= m - 1 and c1 >= c2 >= 0.
inline SchubertSum product(SchubertClass a, SchubertClass b) {
  if (a.m != b.m) throw InputError("Schubert classes on different Grassmannians");
  if (a.a1 - a.a2 < b.a1 - b.a2) std::swap(a, b);
  const int k = a.codimension() + b.codimension();
  SchubertSum out(a.m);
  const int lo = std::max(a.a1 + b.a2, (k + 1) / 2);
  const int hi = std::min(a.a1 + b.a1, a.m - 1);
  for (int c1 = lo; c1 <= hi; ++c1) {
    int c2 = k - c1;
    if (c2 < 0 || c2 > c1) continue;
    out.add(SchubertClass(a.m, c1, c2), 1);
  }
  return out;
}

inline SchubertSum product_sum(const SchubertSum& x, const SchubertSum& y) {
  if (x.m() != y.m()) throw InputError("Schubert sums on different Grassmannians");
  SchubertSum out(x.m());
  for (const auto& [ka, ca] : x.terms()) {
    for (const auto& [kb, cb] : y.terms()) {
      auto p = product(SchubertClass(x.m(), ka.first, ka.second), SchubertClass(x.m(), kb.first, kb.second));
      for (const auto& [kc, cc] : p.terms()) out.add(SchubertClass(x.m(), kc.first, kc.second), ca * cb * cc);
    }
  }
  return out;
}

struct VanishingPair {
  SchubertClass a;
  SchubertClass b;
};

/// Smallest |a| + |b| over classes of positive codimension with zero product.
inline std::pair<int, VanishingPair> min_vanishing_pair(int m) {
  if (m < 3) throw InputError("G(1,m) scan needs m >= 3");
  int best = -1;
  std::optional<VanishingPair> witness;
  for (int a1 = 0; a1 <= m - 1; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2)
      for (int b1 = 0; b1 <= m - 1; ++b1)
        for (int b2 = 0; b2 <= b1; ++b2) {
          if (a1 + a2 == 0 || b1 + b2 == 0) continue;
          int deg = a1 + a2 + b1 + b2;
          if (best >= 0 && deg >= best) continue;
          SchubertClass a(m, a1, a2), b(m, b1, b2);
          if (product(a, b).is_zero()) {
            best = deg;
            witness = VanishingPair{a, b};
          }
        }
  if (!witness) throw std::logic_error("no vanishing Schubert product");
  return {best, *witness};
}

inline int min_vanishing_degree(int m) { return min_vanishing_pair(m).first; }

/// Structure constants are nonnegative, so the minimum over effective
/// classes is attained on pairs of Schubert classes.
inline int effective_divisibility(int m) { return min_vanishing_degree(m) - 1; }

}  // namespace flagcoh
