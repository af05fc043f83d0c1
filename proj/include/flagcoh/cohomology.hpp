#pragma once

// Borel presentations of H*(G/B) and H*(D(r)) for classical types, graded
// quotients computed degree by degree, normal forms and good divisibility.

#include <flagcoh/dynkin.hpp>
#include <flagcoh/linalg.hpp>
#include <flagcoh/polynomial.hpp>
#include <flagcoh/univariate.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagcoh {

struct RingPresentation {
  TablePtr table;
  std::vector<Polynomial> relations;
  std::vector<bool> auxiliary;  // per variable; eliminated before g.d. bounds
  std::string label;

  void validate() const {
    if (auxiliary.size() != table->size()) throw InputError("auxiliary flags do not match variables");
    for (const auto& r : relations) {
      if (!Polynomial::same_table(r.table(), table)) throw InputError("relation over a foreign table");
      if (!r.is_homogeneous()) throw InputError("relation " + r.to_string() + " is not homogeneous");
    }
  }

  std::vector<int> relation_degrees() const {
    std::vector<int> out;
    for (const auto& r : relations) out.push_back(r.degree());
    return out;
  }

  /// Deterministic text used for hashing and caching.
  std::string canonical_text() const {
    std::string out = label + "\nvars:";
    for (std::size_t k = 0; k < table->size(); ++k) {
      out += " " + table->name(k) + "/" + std::to_string(table->weight(k)) + (auxiliary[k] ? "*" : "");
    }
    out += "\nrels:";
    for (const auto& r : relations) out += "\n  " + r.to_string();
    return out + "\n";
  }
};

// ---------------------------------------------------------------------------
// Presentations

inline RingPresentation presentation_full_flag(const DynkinDiagram& d) {
  if (!d.is_classical()) throw InputError("no cohomology presentation for " + d.name());
  const int n = d.rank();
  const std::size_t vars = d.family() == Family::A ? static_cast<std::size_t>(n + 1) : static_cast<std::size_t>(n);
  auto table = make_uniform_table("x", vars);
  RingPresentation p{table, {}, std::vector<bool>(vars, false), d.name() + " full flag"};
  std::vector<std::size_t> all(vars);
  for (std::size_t k = 0; k < vars; ++k) all[k] = k;

  if (d.family() == Family::A) {
    for (int k = 1; k <= n + 1; ++k) p.relations.push_back(elementary_symmetric(table, k, all));
    return p;
  }
  // K(t) = prod (1 - t^2 x_i^2)
  SeriesCoefficients k_series{Polynomial(table, 1)};
  for (std::size_t v : all) {
    SeriesCoefficients factor{Polynomial(table, 1), Polynomial(table), -Polynomial::variable(table, v, 2)};
    k_series = series_product(k_series, factor);
  }
  for (std::size_t i = 1; i < k_series.size(); ++i)
    if (!k_series[i].is_zero()) p.relations.push_back(k_series[i]);
  if (d.family() == Family::D) {
    Polynomial eta(table, 1);
    for (std::size_t v : all) eta *= Polynomial::variable(table, v);
    p.relations.push_back(eta);
  }
  return p;
}

inline RingPresentation presentation_picard_one(const MarkedDiagram& x) {
  const auto& d = x.diagram;
  if (!d.is_classical()) throw InputError("no cohomology presentation for " + x.name());
  const int n = d.rank();
  const int r = x.node();
  if (d.family() == Family::D && r == n - 1) {
    throw InputError(x.name() + " must be normalized to " + d.name() + "(" + std::to_string(n) + ") first");
  }

  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<bool> aux;
  auto add = [&](std::string name, int w, bool is_aux) {
    names.push_back(std::move(name));
    weights.push_back(w);
    aux.push_back(is_aux);
  };
  for (int i = 1; i <= r; ++i) add("q" + std::to_string(i), i, false);

  if (d.family() == Family::A) {
    for (int i = 1; i <= n - r + 1; ++i) add("s" + std::to_string(i), i, true);
    auto table = make_table(names, weights);
    SeriesCoefficients q{Polynomial(table, 1)}, s{Polynomial(table, 1)};
    for (int i = 1; i <= r; ++i) q.push_back(Polynomial::variable(table, "q" + std::to_string(i)));
    for (int i = 1; i <= n - r + 1; ++i) s.push_back(Polynomial::variable(table, "s" + std::to_string(i)));
    RingPresentation p{table, {}, aux, x.name()};
    auto prod = series_product(q, s);
    for (std::size_t i = 1; i < prod.size(); ++i) p.relations.push_back(prod[i]);
    return p;
  }

  const bool type_d = d.family() == Family::D;
  const int k_count = type_d ? n - r - 1 : n - r;
  for (int i = 1; i <= k_count; ++i) add("k" + std::to_string(2 * i), 2 * i, true);
  if (type_d && n - r > 0) add("eta", n - r, false);
  auto table = make_table(names, weights);

  SeriesCoefficients q{Polynomial(table, 1)};
  for (int i = 1; i <= r; ++i) q.push_back(Polynomial::variable(table, "q" + std::to_string(i)));
  SeriesCoefficients k{Polynomial(table, 1)};
  for (int i = 1; i <= k_count; ++i) {
    k.push_back(Polynomial(table));
    k.push_back(Polynomial::variable(table, "k" + std::to_string(2 * i)));
  }
  Polynomial eta = type_d && n - r > 0 ? Polynomial::variable(table, "eta") : Polynomial(table, 1);
  if (type_d && n - r > 0) {
    // k_{2(n-r)} := (-1)^{n-r} eta^2
    k.push_back(Polynomial(table));
    k.push_back(eta.pow(2) * Rational((n - r) % 2 ? -1 : 1));
  }
  RingPresentation p{table, {}, aux, x.name()};
  auto prod = series_product(series_product(q, series_negate_parameter(q)), k);
  for (std::size_t i = 1; i < prod.size(); ++i)
    if (!prod[i].is_zero()) p.relations.push_back(prod[i]);
  if (type_d) p.relations.push_back(q.back() * eta);
  return p;
}

// ---------------------------------------------------------------------------
// Quotient rings

struct QuotientOptions {
  std::size_t max_columns = 200000;  // per graded piece
  std::size_t max_entries = 20000000;  // stored echelon entries, all degrees
};

struct GradedPiece {
  std::vector<Exponents> monomials;  // descending; column k is monomials[k]
  std::map<Exponents, std::size_t> index;
  EchelonBasis ideal;

  std::size_t betti() const { return monomials.size() - ideal.rank(); }
};

class QuotientRing {
 public:
  QuotientRing(RingPresentation presentation, int cap, QuotientOptions options = {})
      : presentation_(std::move(presentation)), cap_(cap), options_(options) {
    presentation_.validate();
    if (cap < 0) throw InputError("negative degree cap");
    eliminate();
    for (int d = 0; d <= cap_; ++d) compute_degree(d);
  }

  /// Rebuilds a ring from stored echelon rows (one list per degree, columns
  /// indexed as in piece(d).monomials).
  QuotientRing(RingPresentation presentation, int cap, const std::vector<std::vector<SparseVector>>& rows,
               QuotientOptions options = {})
      : presentation_(std::move(presentation)), cap_(cap), options_(options) {
    presentation_.validate();
    if (cap < 0 || rows.size() != static_cast<std::size_t>(cap) + 1) throw InputError("stored rows do not match cap");
    eliminate();
    for (int d = 0; d <= cap_; ++d) {
      GradedPiece piece = empty_piece(d);
      for (const auto& r : rows[static_cast<std::size_t>(d)]) piece.ideal.insert(r);
      pieces_.push_back(std::move(piece));
    }
  }

  const RingPresentation& presentation() const { return presentation_; }
  const TablePtr& table() const { return presentation_.table; }
  int cap() const { return cap_; }

  std::vector<int> betti() const {
    std::vector<int> out;
    for (const auto& piece : pieces_) out.push_back(static_cast<int>(piece.betti()));
    return out;
  }
  long total_dimension() const {
    long s = 0;
    for (int b : betti()) s += b;
    return s;
  }

  /// True when every degree above the cap is known to vanish.
  bool complete() const {
    int window = 1;
    for (std::size_t k = 0; k < kept_.size(); ++k)
      if (kept_[k]) window = std::max(window, table()->weight(k));
    if (cap_ + 1 < window) return false;
    for (int d = cap_ - window + 1; d <= cap_; ++d)
      if (pieces_[static_cast<std::size_t>(d)].betti() != 0) return false;
    return true;
  }

  /// Largest degree with a nonzero piece (within the cap).
  int top_degree() const {
    for (int d = cap_; d >= 0; --d)
      if (pieces_[static_cast<std::size_t>(d)].betti()) return d;
    return -1;
  }

  bool palindromic() const {
    if (!complete()) return false;
    auto b = betti();
    int top = top_degree();
    for (int d = 0; d <= top; ++d)
      if (b[static_cast<std::size_t>(d)] != b[static_cast<std::size_t>(top - d)]) return false;
    return true;
  }

  /// Relations left after eliminating auxiliary generators.
  const std::vector<Polynomial>& reduced_relations() const { return reduced_relations_; }
  const std::map<std::size_t, Polynomial>& substitutions() const { return substitutions_; }
  /// Relations left after every linear elimination; they generate the ideal
  /// in the polynomial ring on the kept variables.
  const std::vector<Polynomial>& working_relations() const { return working_relations_; }
  bool kept(std::size_t var) const { return kept_.at(var); }

  /// Canonical representative; zero exactly on the ideal.
  Polynomial normal_form(const Polynomial& p) const {
    if (!Polynomial::same_table(p.table(), table())) throw InputError("polynomial over a foreign table");
    Polynomial q = apply_substitutions(p);
    if (q.degree() > cap_) {
      throw ResourceError("degree " + std::to_string(q.degree()) + " exceeds quotient cap " + std::to_string(cap_));
    }
    Polynomial out(table());
    for (int d = q.low_degree(); d >= 0 && d <= q.degree(); ++d) {
      const auto& piece = pieces_[static_cast<std::size_t>(d)];
      auto v = piece.ideal.reduce(to_vector(q.homogeneous_component(d), piece));
      for (const auto& [col, val] : v) out.add_term(piece.monomials[col], val);
    }
    return out;
  }

  bool is_zero(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Standard monomials spanning the degree-d piece.
  std::vector<Exponents> standard_monomials(int d) const {
    const auto& piece = pieces_.at(static_cast<std::size_t>(d));
    std::vector<Exponents> out;
    for (std::size_t c : piece.ideal.free_columns()) out.push_back(piece.monomials[c]);
    return out;
  }

  const GradedPiece& piece(int d) const { return pieces_.at(static_cast<std::size_t>(d)); }

  /// Certified: the ideal has no nonzero element of degree <= value.
  struct LowerBound {
    int value;
    bool at_least;  // true when no relation appears up to the cap
  };
  /// By default the ideal is taken after eliminating auxiliary generators
  /// only; with all_linear it is taken after every linear elimination, which
  /// is also a polynomial ring and gives a bound at least as strong.
  LowerBound gd_lower_bound(bool all_linear = false) const {
    int first = -1;
    for (const auto& r : all_linear ? working_relations_ : reduced_relations_)
      if (first < 0 || r.degree() < first) first = r.degree();
    if (first < 0 || first - 1 > cap_) return {cap_, true};
    return {first - 1, false};
  }

  Polynomial apply_substitutions(const Polynomial& p) const {
    Polynomial q = p;
    for (const auto& [var, value] : substitutions_)
      if (q.involves(var)) q = q.substitute(var, value);
    return q;
  }

 private:
  // Solve g = c*v + rest (v absent from rest) for v and substitute everywhere.
  bool eliminate_pass(bool auxiliary_only, std::vector<Polynomial>& rels) {
    std::sort(rels.begin(), rels.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    for (std::size_t gi = 0; gi < rels.size(); ++gi) {
      const auto& g = rels[gi];
      for (std::size_t v = 0; v < table()->size(); ++v) {
        if (!kept_[v] || (auxiliary_only && !presentation_.auxiliary[v])) continue;
        Exponents unit(table()->size(), 0);
        unit[v] = 1;
        Rational c = g.coefficient(unit);
        if (c == 0) continue;
        Polynomial rest = g - Polynomial::monomial(table(), unit, c);
        if (rest.involves(v)) continue;
        Polynomial value = rest * Rational(-1 / c);
        for (auto& [var, val] : substitutions_)
          if (val.involves(v)) val = val.substitute(v, value);
        substitutions_.emplace(v, value);
        kept_[v] = false;
        std::vector<Polynomial> next;
        for (std::size_t hi = 0; hi < rels.size(); ++hi) {
          if (hi == gi) continue;
          auto h = rels[hi].involves(v) ? rels[hi].substitute(v, value) : rels[hi];
          if (!h.is_zero()) next.push_back(std::move(h));
        }
        rels = std::move(next);
        return true;
      }
    }
    return false;
  }

  void eliminate() {
    kept_.assign(table()->size(), true);
    std::vector<Polynomial> rels;
    for (const auto& r : presentation_.relations)
      if (!r.is_zero()) rels.push_back(r);
    while (eliminate_pass(true, rels)) {
    }
    reduced_relations_ = rels;
    while (eliminate_pass(false, rels)) {
    }
    working_relations_ = rels;
  }

  void enumerate_monomials(int d, std::size_t var, Exponents& cur, std::vector<Exponents>& out) const {
    if (var == table()->size()) {
      if (d == 0) out.push_back(cur);
      return;
    }
    if (!kept_[var]) {
      enumerate_monomials(d, var + 1, cur, out);
      return;
    }
    int w = table()->weight(var);
    for (int e = d / w; e >= 0; --e) {
      cur[var] = e;
      enumerate_monomials(d - e * w, var + 1, cur, out);
    }
    cur[var] = 0;
  }

  SparseVector to_vector(const Polynomial& p, const GradedPiece& piece) const {
    SparseVector v;
    for (const auto& [m, c] : p.terms()) {
      auto it = piece.index.find(m.exponents);
      if (it == piece.index.end()) throw std::logic_error("monomial outside graded piece");
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  GradedPiece empty_piece(int d) const {
    GradedPiece piece;
    Exponents cur(table()->size(), 0);
    enumerate_monomials(d, 0, cur, piece.monomials);
    // Lexicographically descending within the degree.
    std::sort(piece.monomials.begin(), piece.monomials.end(), std::greater<>());
    if (piece.monomials.size() > options_.max_columns) {
      throw ResourceError("graded piece of degree " + std::to_string(d) + " has " +
                          std::to_string(piece.monomials.size()) + " monomials, above the budget of " +
                          std::to_string(options_.max_columns));
    }
    for (std::size_t c = 0; c < piece.monomials.size(); ++c) piece.index.emplace(piece.monomials[c], c);
    piece.ideal = EchelonBasis(piece.monomials.size());
    return piece;
  }

  void compute_degree(int d) {
    GradedPiece piece = empty_piece(d);
    for (std::size_t v = 0; v < table()->size(); ++v) {
      if (!kept_[v]) continue;
      int w = table()->weight(v);
      if (w > d) continue;
      const auto& lower = pieces_[static_cast<std::size_t>(d - w)];
      for (std::size_t k = 0; k < lower.ideal.rank(); ++k) {
        SparseVector shifted;
        for (const auto& [col, val] : lower.ideal.row(k)) {
          Exponents e = lower.monomials[col];
          ++e[v];
          shifted.emplace_back(piece.index.at(e), val);
        }
        piece.ideal.insert(std::move(shifted));
      }
    }
    for (const auto& g : working_relations_)
      if (g.degree() == d) piece.ideal.insert(to_vector(g, piece));

    for (std::size_t k = 0; k < piece.ideal.rank(); ++k) entries_ += piece.ideal.row(k).size();
    if (entries_ > options_.max_entries) {
      throw ResourceError("quotient computation exceeded the memory budget at degree " + std::to_string(d));
    }
    pieces_.push_back(std::move(piece));
  }

  RingPresentation presentation_;
  int cap_;
  QuotientOptions options_;
  std::vector<bool> kept_;
  std::map<std::size_t, Polynomial> substitutions_;
  std::vector<Polynomial> reduced_relations_;
  std::vector<Polynomial> working_relations_;
  std::vector<GradedPiece> pieces_;
  std::size_t entries_ = 0;
};

/// Degree cap that computes the whole ring of a Picard-one space.
inline int full_cap(const MarkedDiagram& x, const RingPresentation& p) {
  int w = 1;
  for (std::size_t k = 0; k < p.table->size(); ++k)
    if (!p.auxiliary[k]) w = std::max(w, p.table->weight(k));
  return dimension(x) + w;
}

inline QuotientRing picard_one_ring(const MarkedDiagram& x, std::optional<int> cap = std::nullopt,
                                    QuotientOptions options = {}) {
  auto p = presentation_picard_one(x);
  int c = cap ? *cap : full_cap(x, p);
  return QuotientRing(std::move(p), c, options);
}

inline QuotientRing full_flag_ring(const DynkinDiagram& d, std::optional<int> cap = std::nullopt,
                                   QuotientOptions options = {}) {
  auto p = presentation_full_flag(d);
  int c = cap ? *cap : static_cast<int>(positive_root_count(d)) + 1;
  return QuotientRing(std::move(p), c, options);
}

// ---------------------------------------------------------------------------
// Good divisibility

struct UpperCertificate {
  bool accepted = false;
  int bound = 0;  // g.d. <= bound when accepted
  std::string detail;
};

/// Nonzero a, b with ab = 0 in the ring certify g.d. <= deg a + deg b - 1.
inline UpperCertificate gd_upper_certificate(const QuotientRing& ring, const Polynomial& a, const Polynomial& b) {
  UpperCertificate out;
  if (!a.is_homogeneous() || !b.is_homogeneous() || a.degree() <= 0 || b.degree() <= 0) {
    out.detail = "factors must be homogeneous of positive degree";
    return out;
  }
  if (ring.is_zero(a)) {
    out.detail = "first factor " + a.to_string() + " vanishes in the ring";
    return out;
  }
  if (ring.is_zero(b)) {
    out.detail = "second factor " + b.to_string() + " vanishes in the ring";
    return out;
  }
  auto prod = ring.normal_form(a * b);
  if (!prod.is_zero()) {
    out.detail = "product is nonzero: " + prod.to_string();
    return out;
  }
  out.accepted = true;
  out.bound = a.degree() + b.degree() - 1;
  out.detail = "(" + a.to_string() + ")*(" + b.to_string() + ") = 0";
  return out;
}

/// f_m = (1 0) [[q1, q2], [-1, 0]]^m (1 0)^T in a table containing q1, q2.
inline Polynomial grassmannian_line_relation(const TablePtr& table, int m) {
  auto q1 = Polynomial::variable(table, "q1");
  auto q2 = Polynomial::variable(table, "q2");
  // Row vector (a, b) times M: (a q1 - b, a q2).
  Polynomial a(table, 1), b(table);
  for (int k = 0; k < m; ++k) {
    Polynomial na = a * q1 - b;
    Polynomial nb = a * q2;
    a = std::move(na);
    b = std::move(nb);
  }
  return a;
}

/// Evidence that the degree-m generator of the G(1,m) ideal splits into
/// factors of positive degree.
struct ReducibleRelation {
  enum class Kind { RationalFactors, RealRoot, RealFactorization, None };
  Kind kind = Kind::None;
  std::optional<Polynomial> relation;
  std::optional<std::pair<Polynomial, Polynomial>> factors;  // exact rational factors
  std::optional<Univariate> dehomogenized;                    // f(1, y) with y = q2
  int real_roots = 0;
  std::string detail;
};

inline std::string kind_name(ReducibleRelation::Kind k) {
  switch (k) {
    case ReducibleRelation::Kind::RationalFactors: return "rational factorization";
    case ReducibleRelation::Kind::RealRoot: return "real root (Sturm count)";
    case ReducibleRelation::Kind::RealFactorization: return "real factorization of degree >= 3 univariate";
    case ReducibleRelation::Kind::None: return "none";
  }
  return "none";
}

inline ReducibleRelation find_reducible_relation(const QuotientRing& ring, int m) {
  if (m < 3) throw InputError("G(1,m) relation analysis needs m >= 3");
  ReducibleRelation out;
  const auto& table = ring.table();
  if (!table->find("q1") || !table->find("q2") || table->find("q3")) {
    throw InputError("ring is not an A_m(2) presentation");
  }
  Polynomial f = grassmannian_line_relation(table, m);
  out.relation = f;
  if (!ring.is_zero(f)) {
    out.detail = "recurrence output " + f.to_string() + " is not in the ideal";
    return out;
  }
  const std::size_t i1 = table->index("q1"), i2 = table->index("q2");
  auto q1 = Polynomial::variable(table, i1);

  // Extract q1 when every monomial has positive q1-exponent.
  bool q1_divides = true;
  for (const auto& [mono, c] : f.terms())
    if (mono.exponents[i1] == 0) q1_divides = false;
  if (q1_divides) {
    Polynomial cof(table);
    for (const auto& [mono, c] : f.terms()) {
      auto e = mono.exponents;
      --e[i1];
      cof.add_term(e, c);
    }
    out.kind = ReducibleRelation::Kind::RationalFactors;
    out.factors = std::make_pair(q1, cof);
    out.detail = "q1 divides the relation";
    return out;
  }

  // Dehomogenize q1 -> 1: F(y) = sum c_j y^j over monomials q1^{m-2j} q2^j.
  std::vector<Rational> coeffs(static_cast<std::size_t>(m / 2 + 1), Rational(0));
  for (const auto& [mono, c] : f.terms()) coeffs[static_cast<std::size_t>(mono.exponents[i2])] += c;
  Univariate F(coeffs);
  out.dehomogenized = F;
  auto roots = rational_roots(F);
  if (!roots.empty()) {
    // f = (q2 - y0 q1^2) * g; recover g by division on F and rehomogenize.
    Rational y0 = roots.front();
    auto [quo, rem] = F.divmod(Univariate({-y0, 1}));
    if (!rem.is_zero()) throw std::logic_error("rational root does not divide");
    Polynomial linear = Polynomial::variable(table, i2) - Polynomial::variable(table, i1, 2) * y0;
    Polynomial g(table);
    const int top = m - 2;
    for (std::size_t j = 0; j < quo.coefficients().size(); ++j) {
      Exponents e(table->size(), 0);
      e[i2] = static_cast<int>(j);
      e[i1] = top - 2 * static_cast<int>(j);
      g.add_term(e, quo.coefficients()[j]);
    }
    if (!(linear * g == f)) throw std::logic_error("rehomogenized factorization mismatch");
    out.kind = ReducibleRelation::Kind::RationalFactors;
    out.factors = std::make_pair(linear, g);
    out.detail = "rational root y = " + y0.get_str() + " of f(1, y)";
    return out;
  }
  out.real_roots = count_real_roots(F);
  if (out.real_roots > 0) {
    out.kind = ReducibleRelation::Kind::RealRoot;
    out.detail = "f(1, y) has " + std::to_string(out.real_roots) +
                 " real root(s), none rational; f = (q2 - y0 q1^2) g over R";
    return out;
  }
  if (F.degree() >= 3) {
    out.kind = ReducibleRelation::Kind::RealFactorization;
    out.detail = "f(1, y) has degree " + std::to_string(F.degree()) + " and so splits over R";
    return out;
  }
  out.detail = "no factorization certified";
  return out;
}

/// g.d. interval with its evidence; e.d. when computed.
struct DivisibilityBound {
  int lower = 0;
  bool lower_at_least = false;
  std::optional<int> upper;
  std::string upper_certificate;
  std::optional<int> effective;
  std::string effective_certificate;

  bool exact() const { return upper && !lower_at_least && *upper == lower; }
  std::string describe() const {
    std::string out = "g.d. in [" + std::to_string(lower) + (lower_at_least ? "+" : "") + ", " +
                      (upper ? std::to_string(*upper) : std::string("?")) + "]";
    out += exact() ? " (certified)" : " (uncertified upper bound)";
    if (effective) out += "; e.d. = " + std::to_string(*effective);
    return out;
  }
};

/// Certified g.d. of G(1,m) computed on the A_m(2) ring.
inline DivisibilityBound gd_grassmannian_lines(const QuotientRing& ring, int m) {
  DivisibilityBound out;
  auto lb = ring.gd_lower_bound();
  out.lower = lb.value;
  out.lower_at_least = lb.at_least;
  auto rel = find_reducible_relation(ring, m);
  if (rel.kind == ReducibleRelation::Kind::RationalFactors) {
    auto cert = gd_upper_certificate(ring, rel.factors->first, rel.factors->second);
    if (cert.accepted) {
      out.upper = cert.bound;
      out.upper_certificate = cert.detail;
    }
  } else if (rel.kind != ReducibleRelation::Kind::None && !lb.at_least && lb.value >= m - 1) {
    // Real factors have degrees in [1, m-1]; the ideal vanishes below m, so
    // both are nonzero while their product f is zero.
    out.upper = m - 1;
    out.upper_certificate = rel.relation->to_string() + " = 0 with " + rel.detail;
  }
  return out;
}

/// g.d. of a ring whose graded pieces all have dimension <= 1, generated by q1.
inline std::optional<DivisibilityBound> gd_single_generator(const QuotientRing& ring) {
  if (!ring.complete()) return std::nullopt;
  for (int b : ring.betti())
    if (b > 1) return std::nullopt;
  int top = ring.top_degree();
  if (top < 1) return std::nullopt;
  auto q1 = Polynomial::variable(ring.table(), "q1");
  if (ring.is_zero(q1.pow(top))) return std::nullopt;
  DivisibilityBound out;
  auto lb = ring.gd_lower_bound(true);
  out.lower = lb.value;
  out.lower_at_least = lb.at_least;
  auto cert = gd_upper_certificate(ring, q1, q1.pow(top));
  if (cert.accepted) {
    out.upper = cert.bound;
    out.upper_certificate = cert.detail;
  }
  // Every nonzero class is a multiple of a power of q1, and q1^top != 0.
  out.effective = top;
  out.effective_certificate = "q1^" + std::to_string(top) + " != 0 spans the top degree";
  return out;
}

/// Q^{2n} as D_{n+1}(1): g.d. = n via (q1, eta); e.d. via alpha, beta.
inline DivisibilityBound divisibility_even_quadric(int n) {
  if (n < 1) throw InputError("even quadric needs n >= 1");
  MarkedDiagram x(DynkinDiagram(Family::D, n + 1), 1);
  if (n + 1 == 2) throw InputError("D2 is not simple");
  auto ring = picard_one_ring(x);
  const auto& t = ring.table();
  auto q1 = Polynomial::variable(t, "q1");
  auto eta = Polynomial::variable(t, "eta");
  DivisibilityBound out;
  auto lb = ring.gd_lower_bound();
  out.lower = lb.value;
  out.lower_at_least = lb.at_least;
  auto cert = gd_upper_certificate(ring, q1, eta);
  if (cert.accepted) {
    out.upper = cert.bound;
    out.upper_certificate = cert.detail;
  }
  // Effective generators: q1^k off the middle degree, alpha and beta in it.
  Polynomial alpha = (q1.pow(n) + eta) * Rational(1, 2);
  Polynomial beta = (q1.pow(n) - eta) * Rational(1, 2);
  std::vector<std::pair<Polynomial, std::string>> gens;
  for (int k = 1; k <= 2 * n; ++k) {
    if (k == n) {
      gens.emplace_back(alpha, "alpha");
      gens.emplace_back(beta, "beta");
    } else {
      gens.emplace_back(q1.pow(k), "q1^" + std::to_string(k));
    }
  }
  int best = -1;
  std::string witness;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      int deg = gens[i].first.degree() + gens[j].first.degree();
      if (deg > ring.cap() || (best >= 0 && deg >= best)) continue;
      if (ring.is_zero(gens[i].first * gens[j].first)) {
        best = deg;
        witness = gens[i].second + "*" + gens[j].second + " = 0";
      }
    }
  }
  if (best < 0) best = 2 * n + 1;  // only products beyond the top degree vanish
  out.effective = best - 1;
  out.effective_certificate = witness.empty() ? "no vanishing product below the top degree" : witness;
  return out;
}

inline int ed_quadric(int n) {
  if (n < 2) throw InputError("ed_quadric needs n >= 2");
  return *divisibility_even_quadric(n).effective;
}

/// Odd quadrics (and P^1 for dimension one): every graded piece is a line.
inline int ed_odd_quadric(int dim) {
  if (dim < 1 || dim % 2 == 0) throw InputError("odd quadric dimension must be odd and positive");
  MarkedDiagram x = dim == 1 ? MarkedDiagram(DynkinDiagram(Family::A, 1), 1)
                             : MarkedDiagram(DynkinDiagram(Family::B, (dim + 1) / 2), 1);
  auto ring = picard_one_ring(x);
  auto bound = gd_single_generator(ring);
  if (!bound || !bound->effective) throw std::logic_error("odd quadric ring is not monogenic");
  return *bound->effective;
}

}  // namespace flagcoh
