#pragma once

// Quadrics in the coordinates Z_{i,j} = x_i x_j of the second Veronese
// embedding of P^n whose vertex misses v_2(P^n).

#include <flagcoh/linalg.hpp>
#include <flagcoh/polynomial.hpp>

#include <string>
#include <utility>
#include <vector>

namespace flagcoh {

/// Coordinates Z_{i,j}, i <= j, in lexicographic order.
class VeroneseCoordinates {
 public:
  explicit VeroneseCoordinates(int n) : n_(n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) names.push_back("Z_" + std::to_string(i) + "_" + std::to_string(j));
    table_ = make_table(names, std::vector<int>(names.size(), 1));
  }
  int n() const { return n_; }
  std::size_t count() const { return static_cast<std::size_t>((n_ + 1) * (n_ + 2) / 2); }
  const TablePtr& table() const { return table_; }

  std::size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > n_) throw InputError("coordinate Z_" + std::to_string(i) + "_" + std::to_string(j) + " out of range");
    // rows 0..i-1 hold (n+1) + n + ... + (n+2-i) entries
    return static_cast<std::size_t>(i * (n_ + 1) - i * (i - 1) / 2 + (j - i));
  }
  Polynomial z(int i, int j) const { return Polynomial::variable(table_, index(i, j)); }

 private:
  int n_;
  TablePtr table_;
};

struct QuadricInZ {
  int n;
  VeroneseCoordinates coords;
  Polynomial form;
  DenseMatrix gram;  // form(Z) = Z^T gram Z
};

inline QuadricInZ build_quadric(int n) {
  if (n < 2) throw InputError("the Veronese quadric needs n >= 2");
  VeroneseCoordinates c(n);
  Polynomial f(c.table());
  auto block = [&](int a, int b) { return c.z(a, a) * c.z(b, b) - c.z(a, b).pow(2); };
  const int blocks = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  for (int i = 0; i <= blocks; ++i) f = f + block(2 * i, 2 * i + 1);
  if (n % 2 == 0) f = f + c.z(n - 2, n - 1) * c.z(n, n) - c.z(n - 2, n) * c.z(n, n - 1);

  const std::size_t N = c.count();
  DenseMatrix gram(N, std::vector<Rational>(N, Rational(0)));
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < mono.exponents.size(); ++k)
      for (int e = 0; e < mono.exponents[k]; ++e) vars.push_back(k);
    if (vars.size() != 2) throw std::logic_error("quadric is not quadratic");
    if (vars[0] == vars[1]) {
      gram[vars[0]][vars[0]] += coeff;
    } else {
      gram[vars[0]][vars[1]] += coeff / 2;
      gram[vars[1]][vars[0]] += coeff / 2;
    }
  }
  return {n, c, f, gram};
}

/// Rank of the Gram matrix: the number of independent linear equations of the vertex.
inline int vertex_codimension(const QuadricInZ& q) { return static_cast<int>(matrix_rank(q.gram)); }

inline std::vector<Rational> unit_row(std::size_t size, std::size_t k) {
  std::vector<Rational> row(size, Rational(0));
  row[k] = 1;
  return row;
}

/// Each Z_{j,j} lies in the span of the vertex equations; under Z_{i,j} = x_i x_j
/// the substituted equations therefore contain every x_j^2, which have no
/// common projective zero.
inline bool verify_disjoint(const QuadricInZ& q) {
  const std::size_t rank = matrix_rank(q.gram);
  for (int j = 0; j <= q.n; ++j) {
    DenseMatrix extended = q.gram;
    extended.push_back(unit_row(q.coords.count(), q.coords.index(j, j)));
    if (matrix_rank(extended) != rank) return false;
  }
  return true;
}

/// The vertex equations written out by hand: Z_{j,j}, Z_{2i,2i+1}, and for
/// even n also Z_{n-1,n} and Z_{n-2,n}.
inline std::vector<std::pair<int, int>> listed_vertex_equations(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= n; ++j) out.emplace_back(j, j);
  for (int i = 0; 2 * i + 1 <= n; ++i) out.emplace_back(2 * i, 2 * i + 1);
  if (n % 2 == 0) {
    out.emplace_back(n - 1, n);
    out.emplace_back(n - 2, n);
  }
  return out;
}

inline bool listed_equations_match(const QuadricInZ& q) {
  DenseMatrix listed;
  for (auto [i, j] : listed_vertex_equations(q.n)) listed.push_back(unit_row(q.coords.count(), q.coords.index(i, j)));
  const std::size_t gram_rank = matrix_rank(q.gram);
  const std::size_t listed_rank = matrix_rank(listed);
  DenseMatrix both = q.gram;
  both.insert(both.end(), listed.begin(), listed.end());
  return listed_rank == gram_rank && matrix_rank(both) == gram_rank;
}

/// Projecting from the vertex sends v_2(P^n) into a smooth quadric of this dimension.
inline int target_quadric_dimension(int n) { return vertex_codimension(build_quadric(n)) - 2; }

}  // namespace flagcoh
