#pragma once

// Weyl groups of classical type as signed permutation groups acting on the
// coordinates x_1..x_{n+e} (e = 1 for A_n, 0 otherwise).

#include <flagcoh/dynkin.hpp>
#include <flagcoh/polynomial.hpp>

#include <deque>
#include <set>
#include <string>
#include <vector>

namespace flagcoh {

/// x_k -> sign[k] * x_{perm[k]} (0-based).
class WeylElement {
 public:
  explicit WeylElement(std::size_t n) : perm_(n), sign_(n, 1) {
    for (std::size_t k = 0; k < n; ++k) perm_[k] = static_cast<int>(k);
  }
  WeylElement(std::vector<int> perm, std::vector<int> sign) : perm_(std::move(perm)), sign_(std::move(sign)) {
    if (perm_.size() != sign_.size()) throw InputError("permutation and sign vector differ in length");
  }

  std::size_t size() const { return perm_.size(); }
  int image(std::size_t k) const { return perm_[k]; }
  int sign(std::size_t k) const { return sign_[k]; }
  int negative_count() const {
    int c = 0;
    for (int s : sign_) c += s < 0;
    return c;
  }

  /// (a * b)(x) = a(b(x)): apply b first.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto mid = static_cast<std::size_t>(b.perm_[k]);
      out.perm_[k] = a.perm_[mid];
      out.sign_[k] = b.sign_[k] * a.sign_[mid];
    }
    return out;
  }

  bool is_identity() const { return *this == WeylElement(size()); }
  bool operator==(const WeylElement&) const = default;
  auto operator<=>(const WeylElement&) const = default;

 private:
  std::vector<int> perm_;
  std::vector<int> sign_;
};

inline std::size_t coordinate_count(const DynkinDiagram& d) {
  return static_cast<std::size_t>(d.family() == Family::A ? d.rank() + 1 : d.rank());
}

inline WeylElement simple_reflection(const DynkinDiagram& d, int i) {
  if (!d.is_classical()) throw InputError("Weyl group elements are available only for classical types");
  if (!d.valid_node(i)) throw InputError("node " + std::to_string(i) + " not in " + d.name());
  const int n = d.rank();
  WeylElement e(coordinate_count(d));
  std::vector<int> perm(e.size()), sign(e.size(), 1);
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  if (i < n || d.family() == Family::A) {
    std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
  } else if (d.family() == Family::D) {
    std::swap(perm[static_cast<std::size_t>(n - 2)], perm[static_cast<std::size_t>(n - 1)]);
    sign[static_cast<std::size_t>(n - 2)] = -1;
    sign[static_cast<std::size_t>(n - 1)] = -1;
  } else {
    sign[static_cast<std::size_t>(n - 1)] = -1;
  }
  return WeylElement(perm, sign);
}

class WeylGroup {
 public:
  explicit WeylGroup(DynkinDiagram d) : diagram_(d) {}

  const DynkinDiagram& diagram() const { return diagram_; }
  std::uint64_t order() const { return weyl_group_order(diagram_); }

  std::vector<WeylElement> generators() const { return generators(NodeSet::all(diagram_.rank())); }

  /// Generators of the parabolic subgroup W(I).
  std::vector<WeylElement> generators(const NodeSet& subset) const {
    if (!subset.within(diagram_.rank())) throw InputError("node set outside " + diagram_.name());
    std::vector<WeylElement> out;
    for (int i : subset) out.push_back(simple_reflection(diagram_, i));
    return out;
  }

  /// Breadth-first closure of the generators.
  std::vector<WeylElement> enumerate(std::uint64_t cap = 1'000'000) const {
    if (!diagram_.is_classical()) {
      throw InputError("enumeration of " + diagram_.name() + " is not supported; use order()");
    }
    if (order() > cap) {
      throw ResourceError("|W(" + diagram_.name() + ")| = " + std::to_string(order()) + " exceeds cap " +
                          std::to_string(cap));
    }
    auto gens = generators();
    std::set<WeylElement> seen;
    std::deque<WeylElement> queue;
    WeylElement id(coordinate_count(diagram_));
    seen.insert(id);
    queue.push_back(id);
    std::vector<WeylElement> out;
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      out.push_back(w);
      for (const auto& g : gens) {
        auto next = g * w;
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw ResourceError("Weyl group enumeration exceeded cap");
          queue.push_back(next);
        }
      }
    }
    return out;
  }

 private:
  DynkinDiagram diagram_;
};

/// Order of a Weyl element (smallest k >= 1 with e^k = 1).
inline int element_order(const WeylElement& e) {
  WeylElement power = e;
  int k = 1;
  while (!power.is_identity()) {
    power = e * power;
    ++k;
  }
  return k;
}

/// Substitutes x_k -> sign_k * x_{perm_k} in a polynomial whose first
/// size() variables are the x-coordinates.
inline Polynomial act(const WeylElement& e, const Polynomial& p) {
  const auto& table = p.table();
  if (table->size() < e.size()) {
    throw InputError("polynomial has " + std::to_string(table->size()) + " variables, element acts on " +
                     std::to_string(e.size()));
  }
  Polynomial out(table);
  for (const auto& [mono, coeff] : p.terms()) {
    Exponents image = mono.exponents;
    int parity = 0;
    for (std::size_t k = 0; k < e.size(); ++k) image[k] = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      image[static_cast<std::size_t>(e.image(k))] += mono.exponents[k];
      if (e.sign(k) < 0) parity += mono.exponents[k];
    }
    out.add_term(image, parity % 2 ? Rational(-coeff) : coeff);
  }
  return out;
}

inline bool is_invariant(const std::vector<WeylElement>& generators, const Polynomial& p) {
  for (const auto& g : generators)
    if (act(g, p) != p) return false;
  return true;
}

inline bool is_invariant(const WeylGroup& w, const Polynomial& p) { return is_invariant(w.generators(), p); }

}  // namespace flagcoh
