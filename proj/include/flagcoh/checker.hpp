#pragma once

// Diagonalizability criteria for uniform flag bundles over Picard-one
// homogeneous spaces: the Coxeter-number criterion (h), the rank criterion
// (r) for type-A fibers, and the data they consume.

#include <flagcoh/cohomology.hpp>
#include <flagcoh/dynkin.hpp>
#include <flagcoh/schubert.hpp>
#include <flagcoh/tags.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace flagcoh {

enum class Result { Diagonalizable, Inconclusive };

inline std::string to_string(Result r) { return r == Result::Diagonalizable ? "Diagonalizable" : "Inconclusive"; }

struct TraceStep {
  std::string rule;
  std::string lhs;
  std::string rhs;
  std::string comparison;
  std::string citation;
  bool holds = true;
};

struct Verdict {
  Result result = Result::Inconclusive;
  std::vector<TraceStep> trace;
  std::vector<std::string> warnings;
};

/// (ed, gd, dim) of the source of a morphism M -> D(r).
struct SourceDescriptor {
  std::string name;
  int ed = 0;
  int gd = 0;
  int dim = 0;
  bool picard_one = true;
  std::string method;
};

struct MorphismCheck {
  bool holds = false;
  std::vector<TraceStep> steps;
};

namespace detail {

inline TraceStep compare_step(std::string rule, std::string lhs_name, long lhs, std::string op, std::string rhs_name,
                              long rhs, std::string citation) {
  bool holds = op == ">" ? lhs > rhs : op == ">=" ? lhs >= rhs : lhs == rhs;
  return {std::move(rule),
          lhs_name + " = " + std::to_string(lhs),
          rhs_name + " = " + std::to_string(rhs),
          op,
          std::move(citation),
          holds};
}

inline TraceStep compare_step(std::string rule, std::string lhs_name, const Extended& lhs, std::string op,
                              std::string rhs_name, const Extended& rhs, std::string citation) {
  bool holds = op == ">" ? lhs > rhs : op == ">=" ? lhs >= rhs : lhs == rhs;
  return {std::move(rule),
          lhs_name + " = " + lhs.to_string(),
          rhs_name + " = " + rhs.to_string(),
          op,
          std::move(citation),
          holds};
}

}  // namespace detail

/// No nonconstant morphism src -> D(r) when e.d.(src) >= h(D) and, for D of
/// type D, 2 g.d.(src) > h(D).
inline MorphismCheck no_nonconstant_morphisms_cohomological(const SourceDescriptor& src, const MarkedDiagram& tgt) {
  if (!tgt.diagram.is_classical()) throw InputError("cohomological criterion needs a classical target");
  MorphismCheck out;
  const int h = coxeter_number(tgt.diagram);
  const std::string target = "h(" + tgt.diagram.name() + ")";
  out.steps.push_back(detail::compare_step("ed-check " + src.name + " -> " + tgt.name(), "ed(" + src.name + ")", src.ed,
                                           ">=", target, h, "effective divisibility criterion for classical targets"));
  if (tgt.diagram.family() == Family::D) {
    out.steps.push_back(detail::compare_step("gd-check " + src.name + " -> " + tgt.name(), "2*gd(" + src.name + ")",
                                             2L * src.gd, ">", target, h,
                                             "good divisibility side condition for type D targets"));
  }
  out.holds = true;
  for (const auto& s : out.steps) out.holds = out.holds && s.holds;
  return out;
}

/// No nonconstant morphism from a Picard-one src of larger dimension to A_n(r).
inline MorphismCheck no_nonconstant_morphisms_dimension(const SourceDescriptor& src, const MarkedDiagram& tgt) {
  if (tgt.diagram.family() != Family::A) throw InputError("dimension criterion is stated for type A targets");
  if (!src.picard_one) throw InputError("dimension criterion needs a Picard-one source");
  MorphismCheck out;
  out.steps.push_back(detail::compare_step("dim-check " + src.name + " -> " + tgt.name(), "dim(" + src.name + ")",
                                           src.dim, ">", "dim(" + tgt.name() + ")", dimension(tgt),
                                           "Picard-one dimension obstruction"));
  out.holds = out.steps.back().holds;
  return out;
}

// ---------------------------------------------------------------------------
// Fiber data

class FiberDataCache {
 public:
  static FiberDataCache& instance() {
    static FiberDataCache cache;
    return cache;
  }
  std::optional<SourceDescriptor> find(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = data_.find(key);
    if (it == data_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, const SourceDescriptor& s) {
    std::lock_guard<std::mutex> lock(mutex_);
    data_.emplace(key, s);
  }

 private:
  std::mutex mutex_;
  std::map<std::string, SourceDescriptor> data_;
};

/// Grassmannian of lines G(1,s) when x is A_s(2) or its dual A_s(s-1).
inline std::optional<int> lines_grassmannian_index(const MarkedDiagram& x) {
  if (x.diagram.family() != Family::A || !x.picard_one()) return std::nullopt;
  int s = x.diagram.rank();
  if (s >= 3 && (x.node() == 2 || x.node() == s - 1)) return s;
  return std::nullopt;
}

/// Certified divisibility data for the families where e.d. is known:
/// graded pieces of dimension <= 1, even quadrics and G(1,s). Other spaces
/// get only the lower bound.
inline DivisibilityBound divisibility(const MarkedDiagram& input) {
  if (!input.diagram.is_classical() || !input.picard_one()) {
    throw InputError("divisibility is available for classical Picard-one spaces only, not " + input.name());
  }
  MarkedDiagram x = normalize_spinor(input);
  if (x.diagram.family() == Family::D && x.node() == 1) return divisibility_even_quadric(x.diagram.rank() - 1);
  if (auto s = lines_grassmannian_index(x)) {
    auto ring = picard_one_ring(MarkedDiagram(DynkinDiagram(Family::A, *s), 2));
    auto b = gd_grassmannian_lines(ring, *s);
    auto [degree, pair] = min_vanishing_pair(*s);
    b.effective = degree - 1;
    b.effective_certificate = pair.a.name() + "*" + pair.b.name() + " = 0";
    return b;
  }
  auto ring = picard_one_ring(x);
  if (auto b = gd_single_generator(ring)) return *b;
  DivisibilityBound out;
  auto lb = ring.gd_lower_bound(true);
  out.lower = lb.value;
  out.lower_at_least = lb.at_least;
  return out;
}

inline SourceDescriptor fiber_data(const MarkedDiagram& input) {
  if (!input.diagram.is_classical() || !input.picard_one()) {
    throw InputError("fiber data is available for classical Picard-one spaces only, not " + input.name());
  }
  MarkedDiagram x = normalize_spinor(input);
  if (auto hit = FiberDataCache::instance().find(x.name())) {
    hit->name = input.name();
    return *hit;
  }
  auto b = divisibility(x);
  if (!b.effective) throw InputError("fiber data for " + input.name() + " is not supported");
  if (!b.exact()) throw std::logic_error("g.d. of " + input.name() + " not certified");
  SourceDescriptor out;
  out.name = input.name();
  out.dim = dimension(x);
  out.gd = b.lower;
  out.ed = *b.effective;
  out.method = b.upper_certificate + "; " + b.effective_certificate;
  FiberDataCache::instance().store(x.name(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

struct CheckOptions {
  std::optional<Tag> tag;  // tag-aware mode when present (tag on the fiber diagram)
};

inline void require_classical_picard_one(const MarkedDiagram& x) {
  if (!x.picard_one()) throw InputError(x.name() + " is not of Picard number one");
}

/// The subdiagram {j} u C for the component C of D \ {j} containing t,
/// marked at j.
inline MarkedDiagram extremal_piece(const MarkedDiagram& x, const Component& c) {
  NodeSet nodes = c.nodes();
  nodes.insert(x.node());
  auto pieces = components(x.diagram, nodes);
  if (pieces.size() != 1) throw std::logic_error("extremal piece is disconnected");
  return MarkedDiagram(pieces.front().type, pieces.front().local_index(x.node()));
}

inline Verdict check_splitting_h(const MarkedDiagram& input, const DynkinDiagram& fiber, const CheckOptions& options = {}) {
  require_classical_picard_one(input);
  if (!input.diagram.is_classical()) {
    throw InputError(input.name() + " is exceptional; use the rank criterion for type A fibers");
  }
  if (!fiber.is_classical()) throw InputError("fiber " + fiber.name() + " must be classical");
  if (options.tag && !(options.tag->diagram == fiber)) throw InputError("tag must live on the fiber diagram");

  Verdict v;
  MarkedDiagram x = normalize_spinor(input);
  if (!(x == input)) {
    v.trace.push_back({"normalize", input.name(), x.name(), "isomorphic", "spinor varieties D_n(n-1) = D_n(n)", true});
  }
  const Extended hx = h_of_X(x);
  const int hpi = coxeter_number(fiber);
  auto hyp = detail::compare_step("h-hypothesis", "h(" + x.name() + ")", hx, ">", "h(" + fiber.name() + ")",
                                  Extended(hpi), "Coxeter number criterion");
  const bool tag_mode = options.tag.has_value();
  v.trace.push_back(hyp);
  bool ok = tag_mode || hyp.holds;

  NodeSet required = NodeSet::all(fiber.rank());
  if (tag_mode) {
    NodeSet zeros = zero_set(*options.tag);
    NodeSet rest;
    for (int r : required)
      if (!zeros.contains(r)) rest.insert(r);
    required = rest;
    v.trace.push_back({"tag", "I0(" + options.tag->to_string() + ") = " + zeros.to_string(),
                       "checked nodes " + required.to_string(), "complement",
                       "only nodes with nonzero tag value are checked", true});
  }

  if (x.is_projective_line()) {
    v.trace.push_back({"lines", "M_x", "point", "=", "lines on P^1", true});
    v.result = ok ? Result::Diagonalizable : Result::Inconclusive;
    return v;
  }

  const int j = x.node();
  auto comps = components_minus_node(x.diagram, j);
  for (int t : neighbors(x.diagram, j)) {
    const Component* comp = nullptr;
    for (const auto& c : comps)
      if (c.nodes().contains(t)) comp = &c;
    if (!comp) throw std::logic_error("neighbor without component");
    MarkedDiagram piece = extremal_piece(x, *comp);
    const Extended h_piece = h_of_X(piece);
    if (h_piece < hx) {
      throw std::logic_error("h(" + piece.name() + ") < h(" + x.name() + "); decomposition invariant violated");
    }
    MarkedDiagram m_t(comp->type, comp->local_index(t));
    auto src = fiber_data(m_t);
    v.trace.push_back({"lines", "M_x factor via " + piece.name(), m_t.name(), "ed=" + std::to_string(src.ed) +
                       " gd=" + std::to_string(src.gd) + " dim=" + std::to_string(src.dim),
                       "isotropic lines through a point; " + src.method, true});
    if (!h_piece.is_infinite() && src.ed < h_piece.value() - 1) {
      v.warnings.push_back("ed(" + m_t.name() + ") = " + std::to_string(src.ed) + " < h(" + piece.name() + ") - 1 = " +
                           std::to_string(h_piece.value() - 1));
    }
    for (int r : required) {
      auto check = no_nonconstant_morphisms_cohomological(src, MarkedDiagram(fiber, r));
      for (auto& s : check.steps) v.trace.push_back(std::move(s));
      ok = ok && check.holds;
    }
  }
  if (required.empty()) {
    v.trace.push_back({"tag", "nodes to check", "none", "=", "all tag values vanish", true});
  }
  v.result = ok ? Result::Diagonalizable : Result::Inconclusive;
  return v;
}

/// Stored data for the exceptional spaces defined by an extremal node.
struct ExceptionalRow {
  std::string label;
  MarkedDiagram x;
  int r;
  MarkedDiagram lines;
  int lines_dim;
};

inline std::vector<ExceptionalRow> exceptional_rows() {
  auto md = [](Family f, int n, int node) { return MarkedDiagram(DynkinDiagram(f, n), node); };
  std::vector<ExceptionalRow> rows;
  for (int m = 6; m <= 8; ++m) {
    rows.push_back({"E_m(1)", md(Family::E, m, 1), m - 1, md(Family::D, m - 1, m - 1), (m - 1) * (m - 2) / 2});
  }
  for (int m = 6; m <= 8; ++m) {
    rows.push_back({"E_m(2)", md(Family::E, m, 2), m - 1, md(Family::A, m - 1, 3), 3 * (m - 3)});
  }
  rows.push_back({"E7(7)", md(Family::E, 7, 7), 6, md(Family::E, 6, 6), 16});
  rows.push_back({"E8(8)", md(Family::E, 8, 8), 7, md(Family::E, 7, 7), 27});
  rows.push_back({"F4(1)", md(Family::F, 4, 1), 3, md(Family::C, 3, 3), 6});
  rows.push_back({"F4(4)", md(Family::F, 4, 4), 3, md(Family::B, 3, 3), 6});
  return rows;
}

inline std::optional<ExceptionalRow> find_exceptional_row(const MarkedDiagram& x) {
  for (const auto& row : exceptional_rows())
    if (row.x == x) return row;
  return std::nullopt;
}

inline Verdict check_splitting_r(const MarkedDiagram& input, const DynkinDiagram& fiber) {
  require_classical_picard_one(input);
  if (fiber.family() != Family::A) throw InputError("the rank criterion is stated for type A fibers, not " + fiber.name());
  const int n = fiber.rank();
  Verdict v;
  MarkedDiagram x = normalize_spinor(input);
  const Extended rx = r_of_X(x);
  auto hyp = detail::compare_step("r-hypothesis", "r(" + x.name() + ")", rx, ">", "r(" + fiber.name() + ")",
                                  Extended(n), "rank criterion");
  v.trace.push_back(hyp);
  if (!hyp.holds) {
    v.result = Result::Inconclusive;
    return v;
  }

  if (x.diagram.is_classical()) {
    v.trace.push_back(detail::compare_step("delegate", "h(" + x.name() + ")", h_of_X(x), ">", "r(" + x.name() + ")", rx,
                                           "type A fibers have h = n + 1"));
    auto inner = check_splitting_h(input, fiber);
    for (auto& s : inner.trace) v.trace.push_back(std::move(s));
    for (auto& w : inner.warnings) v.warnings.push_back(std::move(w));
    v.result = inner.result;
    return v;
  }

  bool ok = true;
  if (auto row = find_exceptional_row(x)) {
    auto factors = isotropic_lines_fiber(x);
    bool same_type = factors.size() == 1 && normalize_low_rank(factors.front()) == normalize_low_rank(row->lines);
    v.trace.push_back({"stored-data", "M_x computed = " + (factors.empty() ? std::string("-") : factors.front().name()),
                       "M_x stored = " + row->lines.name(), "=", "exceptional data row " + row->label, same_type});
    int computed_r = rx.value();
    v.trace.push_back(detail::compare_step("stored-data", "r computed", computed_r, "=", "r stored", row->r,
                                           "exceptional data row " + row->label));
    v.trace.push_back(detail::compare_step("stored-data", "dim M_x computed", dimension(row->lines), "=",
                                           "dim M_x stored", row->lines_dim, "exceptional data row " + row->label));
    for (std::size_t k = v.trace.size() - 3; k < v.trace.size(); ++k) {
      if (!v.trace[k].holds) throw std::logic_error("stored exceptional data disagrees with computation");
    }
    // dim M_x > (r(X)/2)^2 >= ((n+1)/2)^2 >= (n - r + 1) r
    Rational rx_sq(computed_r * computed_r, 4);
    Rational n_sq((n + 1) * (n + 1), 4);
    rx_sq.canonicalize();
    n_sq.canonicalize();
    int widest = 0;
    for (int r = 1; r <= n; ++r) widest = std::max(widest, (n - r + 1) * r);
    bool chain = Rational(row->lines_dim) > rx_sq && rx_sq >= n_sq && n_sq >= Rational(widest);
    v.trace.push_back({"dim-chain",
                       "dim M_x = " + std::to_string(row->lines_dim) + " > (r(X)/2)^2 = " + rx_sq.get_str() +
                           " >= ((n+1)/2)^2 = " + n_sq.get_str(),
                       "max dim A_n(r) = " + std::to_string(widest), ">=", "dimension chain for type A targets",
                       chain});
    ok = ok && chain;
  }

  const int j = x.node();
  auto comps = components_minus_node(x.diagram, j);
  for (int t : neighbors(x.diagram, j)) {
    for (const auto& c : comps) {
      if (!c.nodes().contains(t)) continue;
      MarkedDiagram m_t(c.type, c.local_index(t));
      SourceDescriptor src{m_t.name(), 0, 0, dimension(m_t), true, "root count"};
      for (int r = 1; r <= n; ++r) {
        auto check = no_nonconstant_morphisms_dimension(src, MarkedDiagram(fiber, r));
        for (auto& s : check.steps) v.trace.push_back(std::move(s));
        ok = ok && check.holds;
      }
    }
  }
  v.result = ok ? Result::Diagonalizable : Result::Inconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Extremal-node table

enum class RowFamily { A1, B1, Bn, C1, Cn, Dn, D1 };

struct ExtremalRow {
  RowFamily family;
  int n;
  MarkedDiagram x;
  Extended h;
  MarkedDiagram lines;
  SourceDescriptor data;
};

inline std::string row_family_name(RowFamily f) {
  switch (f) {
    case RowFamily::A1: return "A_n(1)";
    case RowFamily::B1: return "B_n(1)";
    case RowFamily::Bn: return "B_n(n)";
    case RowFamily::C1: return "C_n(1)";
    case RowFamily::Cn: return "C_n(n)";
    case RowFamily::Dn: return "D_n(n)";
    case RowFamily::D1: return "D_n(1)";
  }
  return "";
}

inline std::vector<RowFamily> row_families() {
  return {RowFamily::A1, RowFamily::B1, RowFamily::Bn, RowFamily::C1, RowFamily::Cn, RowFamily::Dn, RowFamily::D1};
}

inline int row_min_rank(RowFamily f) { return f == RowFamily::Dn || f == RowFamily::D1 ? 4 : 3; }

inline MarkedDiagram row_space(RowFamily f, int n) {
  switch (f) {
    case RowFamily::A1: return MarkedDiagram(DynkinDiagram(Family::A, n), 1);
    case RowFamily::B1: return MarkedDiagram(DynkinDiagram(Family::B, n), 1);
    case RowFamily::Bn: return MarkedDiagram(DynkinDiagram(Family::B, n), n);
    case RowFamily::C1: return MarkedDiagram(DynkinDiagram(Family::C, n), 1);
    case RowFamily::Cn: return MarkedDiagram(DynkinDiagram(Family::C, n), n);
    case RowFamily::Dn: return MarkedDiagram(DynkinDiagram(Family::D, n), n);
    case RowFamily::D1: return MarkedDiagram(DynkinDiagram(Family::D, n), 1);
  }
  throw InputError("unknown row family");
}

inline ExtremalRow extremal_row(RowFamily f, int n) {
  auto x = row_space(f, n);
  auto factors = isotropic_lines_fiber(x);
  if (factors.size() != 1) throw std::logic_error(x.name() + " is not defined by an extremal node");
  return {f, n, x, h_of_X(x), factors.front(), fiber_data(factors.front())};
}

// ---------------------------------------------------------------------------
// Comparison of the two hypotheses over concrete ranks

enum class XFamily { A1, B1, Bm, C1, Cm, D1, Dm };
enum class FiberFamily { A, B, C, D };

inline std::vector<XFamily> x_families() {
  return {XFamily::A1, XFamily::B1, XFamily::Bm, XFamily::C1, XFamily::Cm, XFamily::D1, XFamily::Dm};
}
inline std::vector<FiberFamily> fiber_families() { return {FiberFamily::A, FiberFamily::B, FiberFamily::C, FiberFamily::D}; }

inline std::string x_family_name(XFamily f) {
  switch (f) {
    case XFamily::A1: return "A_m(1)";
    case XFamily::B1: return "B_m(1)";
    case XFamily::Bm: return "B_m(m)";
    case XFamily::C1: return "C_m(1)";
    case XFamily::Cm: return "C_m(m)";
    case XFamily::D1: return "D_m(1)";
    case XFamily::Dm: return "D_m(m)";
  }
  return "";
}
inline std::string fiber_family_name(FiberFamily f) {
  return std::string(1, "ABCD"[static_cast<int>(f)]) + "_n";
}

inline int x_family_min_rank(XFamily f) { return f == XFamily::D1 || f == XFamily::Dm ? 4 : 2; }
inline int fiber_family_min_rank(FiberFamily f) {
  return f == FiberFamily::A ? 1 : f == FiberFamily::D ? 4 : 2;
}

inline MarkedDiagram x_family_space(XFamily f, int m) {
  switch (f) {
    case XFamily::A1: return MarkedDiagram(DynkinDiagram(Family::A, m), 1);
    case XFamily::B1: return MarkedDiagram(DynkinDiagram(Family::B, m), 1);
    case XFamily::Bm: return MarkedDiagram(DynkinDiagram(Family::B, m), m);
    case XFamily::C1: return MarkedDiagram(DynkinDiagram(Family::C, m), 1);
    case XFamily::Cm: return MarkedDiagram(DynkinDiagram(Family::C, m), m);
    case XFamily::D1: return MarkedDiagram(DynkinDiagram(Family::D, m), 1);
    case XFamily::Dm: return MarkedDiagram(DynkinDiagram(Family::D, m), m);
  }
  throw InputError("unknown family");
}

inline DynkinDiagram fiber_family_diagram(FiberFamily f, int n) {
  static const Family map[] = {Family::A, Family::B, Family::C, Family::D};
  return DynkinDiagram(map[static_cast<int>(f)], n);
}

/// Which hypothesis is the weaker one (so its conjecture is the stronger one).
enum class Stronger { Equivalent, H, R, Neither };

inline std::string to_string(Stronger s) {
  switch (s) {
    case Stronger::Equivalent: return "(r)<=>(h)";
    case Stronger::H: return "(h)";
    case Stronger::R: return "(r)";
    case Stronger::Neither: return "incomparable";
  }
  return "";
}

struct SweepCell {
  FiberFamily fiber;
  XFamily x;
  int instances = 0;
  int h_holds = 0;
  int r_holds = 0;
  bool r_implies_h = true;
  bool h_implies_r = true;
  Stronger observed() const {
    if (r_implies_h && h_implies_r) return Stronger::Equivalent;
    if (r_implies_h) return Stronger::H;
    if (h_implies_r) return Stronger::R;
    return Stronger::Neither;
  }
};

inline SweepCell sweep_cell(FiberFamily ff, XFamily xf, int max_rank) {
  SweepCell cell{ff, xf};
  for (int m = x_family_min_rank(xf); m <= max_rank; ++m) {
    auto x = x_family_space(xf, m);
    Extended hx = h_of_X(x), rx = r_of_X(x);
    for (int n = fiber_family_min_rank(ff); n <= max_rank; ++n) {
      auto d = fiber_family_diagram(ff, n);
      bool h = hx > Extended(coxeter_number(d));
      bool r = rx > Extended(d.rank());
      ++cell.instances;
      cell.h_holds += h;
      cell.r_holds += r;
      if (r && !h) cell.r_implies_h = false;
      if (h && !r) cell.h_implies_r = false;
    }
  }
  return cell;
}

/// The printed comparison table, indexed by (fiber, X).
inline Stronger printed_comparison(FiberFamily ff, XFamily xf) {
  using S = Stronger;
  static const S table[4][7] = {
      {S::Equivalent, S::H, S::Equivalent, S::H, S::Equivalent, S::H, S::Equivalent},
      {S::R, S::Equivalent, S::R, S::Equivalent, S::R, S::R, S::R},
      {S::R, S::Equivalent, S::R, S::Equivalent, S::R, S::R, S::R},
      {S::R, S::H, S::R, S::H, S::R, S::Equivalent, S::R},
  };
  return table[static_cast<int>(ff)][static_cast<int>(xf)];
}

}  // namespace flagcoh
