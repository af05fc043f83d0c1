#pragma once

// Dynkin diagrams of simple type, Cartan matrices, root systems and the
// node combinatorics used to describe homogeneous spaces D(r).
//
// Nodes are numbered 1..rank as in Humphreys:
//
//   A_n   1 - 2 - ... - (n-1) - n
//   B_n   1 - 2 - ... - (n-1) => n        (alpha_n short)
//   C_n   1 - 2 - ... - (n-1) <= n        (alpha_n long)
//   D_n   1 - 2 - ... - (n-2) - (n-1)
//                          |
//                          n
//   E_n   1 - 3 - 4 - 5 - 6 [- 7 [- 8]]
//               |
//               2
//   F_4   1 - 2 => 3 - 4                  (alpha_1, alpha_2 long)
//   G_2   1 <= 2                          (alpha_1 short)
//
// The Cartan matrix entry (i, j) is <alpha_i, alpha_j^vee>, i.e. the
// intersection number -K_i . Gamma_j on the complete flag manifold.

#include <flagcoh/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace flagcoh {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: return std::nullopt;
  }
}

class DynkinDiagram {
 public:
  DynkinDiagram(Family family, int rank) : family_(family), rank_(rank) {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::B:
      case Family::C: ok = rank >= 2; break;
      case Family::D: ok = rank >= 3; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
      case Family::F: ok = rank == 4; break;
      case Family::G: ok = rank == 2; break;
    }
    if (!ok) {
      throw InputError("no simple Dynkin diagram " + std::string(1, static_cast<char>(family)) +
                       std::to_string(rank));
    }
  }

  /// Parses "A3", "D10", "E8".
  static DynkinDiagram parse(std::string_view text) {
    if (text.size() < 2) throw InputError("malformed diagram '" + std::string(text) + "'");
    auto family = family_from_char(text[0]);
    if (!family) throw InputError("unknown diagram family in '" + std::string(text) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9' || rank > 1000) {
        throw InputError("malformed diagram '" + std::string(text) + "'");
      }
      rank = rank * 10 + (text[i] - '0');
    }
    return DynkinDiagram(*family, rank);
  }

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_classical() const {
    return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
           family_ == Family::D;
  }
  bool valid_node(int i) const { return i >= 1 && i <= rank_; }
  std::string name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

  auto operator<=>(const DynkinDiagram&) const = default;

 private:
  Family family_;
  int rank_;
};

/// A subset of the nodes 1..rank of some diagram.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) : nodes_(nodes) { normalize(); }
  explicit NodeSet(std::vector<int> nodes) : nodes_(std::move(nodes)) { normalize(); }

  static NodeSet all(int rank) {
    NodeSet s;
    for (int i = 1; i <= rank; ++i) s.nodes_.push_back(i);
    return s;
  }

  bool contains(int i) const { return std::binary_search(nodes_.begin(), nodes_.end(), i); }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }
  const std::vector<int>& elements() const { return nodes_; }

  void insert(int i) {
    nodes_.push_back(i);
    normalize();
  }
  NodeSet without(int i) const {
    NodeSet s;
    for (int k : nodes_)
      if (k != i) s.nodes_.push_back(k);
    return s;
  }
  bool within(int rank) const { return nodes_.empty() || (nodes_.front() >= 1 && nodes_.back() <= rank); }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(nodes_[k]);
    }
    return out + "}";
  }

  bool operator==(const NodeSet&) const = default;
  auto operator<=>(const NodeSet&) const = default;

 private:
  void normalize() {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  }
  std::vector<int> nodes_;
};

/// Integer matrix indexed by nodes (1-based accessors).
class CartanMatrix {
 public:
  explicit CartanMatrix(int rank) : rank_(rank), entries_(static_cast<std::size_t>(rank * rank), 0) {}
  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[index(i, j)]; }
  int& operator()(int i, int j) { return entries_[index(i, j)]; }
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rank_));
    for (int i = 1; i <= rank_; ++i)
      for (int j = 1; j <= rank_; ++j) out[static_cast<std::size_t>(i - 1)].push_back((*this)(i, j));
    return out;
  }
  bool operator==(const CartanMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  int rank_;
  std::vector<int> entries_;
};

/// Squared length of alpha_i, normalized so that the shortest root of the
/// diagram has squared length 1 (simply laced diagrams: all 1).
inline int root_length_squared(const DynkinDiagram& d, int i) {
  switch (d.family()) {
    case Family::B: return i < d.rank() ? 2 : 1;
    case Family::C: return i < d.rank() ? 1 : 2;
    case Family::F: return i <= 2 ? 2 : 1;
    case Family::G: return i == 1 ? 1 : 3;
    default: return 1;
  }
}

/// Unordered adjacency of the Dynkin graph (ignores bond multiplicity).
inline std::vector<std::pair<int, int>> edges(const DynkinDiagram& d) {
  std::vector<std::pair<int, int>> out;
  const int n = d.rank();
  switch (d.family()) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) out.emplace_back(i, i + 1);
      out.emplace_back(n - 2, n);
      break;
    case Family::E:
      out.emplace_back(1, 3);
      out.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) out.emplace_back(i, i + 1);
      break;
  }
  return out;
}

inline bool adjacent(const DynkinDiagram& d, int i, int j) {
  for (auto [a, b] : edges(d))
    if ((a == i && b == j) || (a == j && b == i)) return true;
  return false;
}

inline NodeSet neighbors(const DynkinDiagram& d, int j) {
  NodeSet out;
  for (auto [a, b] : edges(d)) {
    if (a == j) out.insert(b);
    if (b == j) out.insert(a);
  }
  return out;
}

inline CartanMatrix cartan_matrix(const DynkinDiagram& d) {
  CartanMatrix m(d.rank());
  for (int i = 1; i <= d.rank(); ++i) m(i, i) = 2;
  for (auto [a, b] : edges(d)) {
    int la = root_length_squared(d, a);
    int lb = root_length_squared(d, b);
    m(a, b) = la > lb ? -(la / lb) : -1;
    m(b, a) = lb > la ? -(lb / la) : -1;
  }
  return m;
}

inline std::vector<int> fundamental_degrees(const DynkinDiagram& d) {
  const int n = d.rank();
  std::vector<int> out;
  switch (d.family()) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) out.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= n; ++k) out.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k < n; ++k) out.push_back(2 * k);
      out.push_back(n);
      break;
    case Family::E:
      if (n == 6) out = {2, 5, 6, 8, 9, 12};
      if (n == 7) out = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) out = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: out = {2, 6, 8, 12}; break;
    case Family::G: out = {2, 6}; break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int coxeter_number(const DynkinDiagram& d) {
  auto degrees = fundamental_degrees(d);
  return *std::max_element(degrees.begin(), degrees.end());
}

/// |W| as the product of the fundamental degrees.
inline std::uint64_t weyl_group_order(const DynkinDiagram& d) {
  std::uint64_t order = 1;
  for (int k : fundamental_degrees(d)) order *= static_cast<std::uint64_t>(k);
  return order;
}

// ---------------------------------------------------------------------------
// Root systems

struct Root {
  std::vector<int> coords;  // simple-root coordinates
  bool positive = true;
  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
};

class RootSystem {
 public:
  explicit RootSystem(const DynkinDiagram& d) : diagram_(d) {
    const int n = d.rank();
    const auto cartan = cartan_matrix(d);
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> current;
    for (int i = 0; i < n; ++i) {
      std::vector<int> c(static_cast<std::size_t>(n), 0);
      c[static_cast<std::size_t>(i)] = 1;
      known.insert(c);
      current.push_back(c);
      positive_.push_back(c);
    }
    // Grow by height; the alpha_i-string through beta is beta - p alpha_i,
    // ..., beta + q alpha_i with p - q = <beta, alpha_i^vee>.
    while (!current.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& beta : current) {
        for (int i = 0; i < n; ++i) {
          int pairing = 0;
          for (int j = 0; j < n; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan(j + 1, i + 1);
          int p = 0;
          auto down = beta;
          while (true) {
            down[static_cast<std::size_t>(i)] -= 1;
            if (!known.count(down)) break;
            ++p;
          }
          int q = p - pairing;
          if (q > 0) {
            auto up = beta;
            up[static_cast<std::size_t>(i)] += 1;
            if (known.insert(up).second) {
              next.push_back(up);
              positive_.push_back(up);
            }
          }
        }
      }
      current = std::move(next);
    }
  }

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  std::size_t positive_count() const { return positive_.size(); }

  /// All roots (positive and negative), closed under negation.
  std::vector<Root> roots() const {
    std::vector<Root> out;
    for (const auto& c : positive_) out.push_back({c, true});
    for (const auto& c : positive_) {
      Root r{c, false};
      for (int& v : r.coords) v = -v;
      out.push_back(std::move(r));
    }
    return out;
  }

  /// Coordinates of a root in the x-basis (classical types only):
  /// A_n: alpha_i = x_i - x_{i+1};  B_n: alpha_n = x_n;  C_n: alpha_n = 2 x_n;
  /// D_n: alpha_n = x_{n-1} + x_n.
  std::vector<int> x_coordinates(const std::vector<int>& simple_coords) const {
    return x_coordinates(diagram_, simple_coords);
  }

  static std::vector<int> x_coordinates(const DynkinDiagram& d, const std::vector<int>& c) {
    if (!d.is_classical()) throw InputError("x-coordinates exist only for classical types");
    const int n = d.rank();
    const int dim = d.family() == Family::A ? n + 1 : n;
    std::vector<int> x(static_cast<std::size_t>(dim), 0);
    for (int i = 1; i <= n; ++i) {
      int ci = c[static_cast<std::size_t>(i - 1)];
      if (ci == 0) continue;
      auto xi = simple_root_in_x(d, i);
      for (int k = 0; k < dim; ++k) x[static_cast<std::size_t>(k)] += ci * xi[static_cast<std::size_t>(k)];
    }
    return x;
  }

  static std::vector<int> simple_root_in_x(const DynkinDiagram& d, int i) {
    const int n = d.rank();
    const int dim = d.family() == Family::A ? n + 1 : n;
    std::vector<int> x(static_cast<std::size_t>(dim), 0);
    auto at = [&](int k) -> int& { return x[static_cast<std::size_t>(k - 1)]; };
    if (i < n || d.family() == Family::A) {
      at(i) = 1;
      at(i + 1) = -1;
      return x;
    }
    switch (d.family()) {
      case Family::B: at(n) = 1; break;
      case Family::C: at(n) = 2; break;
      case Family::D:
        at(n - 1) = 1;
        at(n) = 1;
        break;
      default: break;
    }
    return x;
  }

 private:
  DynkinDiagram diagram_;
  std::vector<std::vector<int>> positive_;
};

inline std::size_t positive_root_count(const DynkinDiagram& d) { return RootSystem(d).positive_count(); }

// ---------------------------------------------------------------------------
// Marked diagrams D(Delta \ I) and sub-diagram combinatorics

struct MarkedDiagram {
  DynkinDiagram diagram;
  NodeSet marked;

  MarkedDiagram(DynkinDiagram d, NodeSet m) : diagram(d), marked(std::move(m)) {
    if (marked.empty()) throw InputError("a marked diagram needs at least one marked node");
    if (!marked.within(d.rank())) {
      throw InputError("marked node outside " + d.name() + ": " + marked.to_string());
    }
  }
  MarkedDiagram(DynkinDiagram d, int node) : MarkedDiagram(d, NodeSet{node}) {}

  bool picard_one() const { return marked.size() == 1; }
  int node() const {
    if (!picard_one()) throw InputError(name() + " is not of Picard number one");
    return *marked.begin();
  }
  bool is_projective_line() const {
    return diagram.family() == Family::A && diagram.rank() == 1;
  }

  /// "D6(6)" or "A4(1,3)".
  std::string name() const {
    std::string out = diagram.name() + "(";
    bool first = true;
    for (int i : marked) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + ")";
  }

  /// Parses "B4(2)", "A5(1,3)". Strict: no spaces, nodes must exist.
  static MarkedDiagram parse(std::string_view text) {
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') {
      throw InputError("expected <Family><rank>(<node>), got '" + std::string(text) + "'");
    }
    auto d = DynkinDiagram::parse(text.substr(0, open));
    auto inner = text.substr(open + 1, text.size() - open - 2);
    std::vector<int> nodes;
    int value = -1;
    for (char c : inner) {
      if (c >= '0' && c <= '9') {
        value = (value < 0 ? 0 : value * 10) + (c - '0');
        if (value > 1000) throw InputError("node index too large in '" + std::string(text) + "'");
      } else if (c == ',' && value >= 0) {
        nodes.push_back(value);
        value = -1;
      } else {
        throw InputError("malformed node list in '" + std::string(text) + "'");
      }
    }
    if (value < 0) throw InputError("malformed node list in '" + std::string(text) + "'");
    nodes.push_back(value);
    return MarkedDiagram(d, NodeSet(nodes));
  }

  bool operator==(const MarkedDiagram&) const = default;
  auto operator<=>(const MarkedDiagram&) const = default;
};

/// dim G/P: the number of positive roots with a nonzero coefficient on
/// some marked simple root.
inline int dimension(const MarkedDiagram& x) {
  RootSystem roots(x.diagram);
  int count = 0;
  for (const auto& r : roots.positive_roots()) {
    for (int i : x.marked) {
      if (r[static_cast<std::size_t>(i - 1)] != 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Connected piece of an induced sub-diagram, identified with a simple type.
/// parent_nodes[k] is the parent node carrying local node k + 1.
struct Component {
  DynkinDiagram type;
  std::vector<int> parent_nodes;

  NodeSet nodes() const { return NodeSet(parent_nodes); }
  int local_index(int parent_node) const {
    for (std::size_t k = 0; k < parent_nodes.size(); ++k)
      if (parent_nodes[k] == parent_node) return static_cast<int>(k) + 1;
    throw InputError("node " + std::to_string(parent_node) + " is not in component");
  }
  std::string describe() const { return type.name() + " on " + nodes().to_string(); }
  bool operator==(const Component&) const = default;
};

namespace detail {

inline std::vector<int> walk_arm(const DynkinDiagram& d, const NodeSet& allowed, int from, int start) {
  std::vector<int> arm{start};
  int prev = from;
  int cur = start;
  while (true) {
    int next = -1;
    for (int nb : neighbors(d, cur))
      if (nb != prev && allowed.contains(nb)) next = nb;
    if (next < 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

inline Component classify_connected(const DynkinDiagram& parent, const NodeSet& nodes) {
  const int k = static_cast<int>(nodes.size());
  auto degree = [&](int v) {
    int c = 0;
    for (int nb : neighbors(parent, v))
      if (nodes.contains(nb)) ++c;
    return c;
  };
  if (k == 1) return {DynkinDiagram(Family::A, 1), {*nodes.begin()}};

  std::optional<int> branch;
  for (int v : nodes)
    if (degree(v) >= 3) branch = v;

  if (branch) {
    std::vector<std::vector<int>> arms;
    for (int nb : neighbors(parent, *branch))
      if (nodes.contains(nb)) arms.push_back(walk_arm(parent, nodes, *branch, nb));
    // Longest arm first; ties broken by the smaller far-end node.
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.back() < b.back();
    });
    std::vector<std::size_t> lengths{arms[2].size(), arms[1].size(), arms[0].size()};
    if (lengths[0] == 1 && lengths[1] == 1) {
      std::vector<int> labels(arms[0].rbegin(), arms[0].rend());
      labels.push_back(*branch);
      int a = arms[1].front(), b = arms[2].front();
      labels.push_back(std::min(a, b));
      labels.push_back(std::max(a, b));
      return {DynkinDiagram(Family::D, k), labels};
    }
    if (lengths[0] == 1 && lengths[1] == 2 && lengths[2] >= 2 && lengths[2] <= 4) {
      // E_k: 1 - 3 - 4 - 5 ..., 2 hangs off 4.
      const auto& shortest = arms[2];
      std::vector<int> medium = arms[1];
      std::vector<int> longest = arms[0];
      if (longest.size() == 2 && medium.back() > longest.back()) std::swap(medium, longest);
      std::vector<int> labels(static_cast<std::size_t>(k), 0);
      labels[0] = medium[1];
      labels[1] = shortest[0];
      labels[2] = medium[0];
      labels[3] = *branch;
      for (std::size_t s = 0; s < longest.size(); ++s) labels[4 + s] = longest[s];
      return {DynkinDiagram(Family::E, k), labels};
    }
    throw InputError("sub-diagram " + nodes.to_string() + " of " + parent.name() + " is not of finite type");
  }

  // Path: collect the two ends and walk.
  std::vector<int> ends;
  for (int v : nodes)
    if (degree(v) == 1) ends.push_back(v);
  std::vector<int> path{ends.front()};
  {
    auto rest = walk_arm(parent, nodes, -1, ends.front());
    path = rest;
  }
  auto len = [&](int v) { return root_length_squared(parent, v); };
  // Locate a multiple bond (adjacent nodes of different lengths).
  std::optional<std::size_t> bond;
  for (std::size_t s = 0; s + 1 < path.size(); ++s)
    if (len(path[s]) != len(path[s + 1])) bond = s;

  if (!bond) {
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return {DynkinDiagram(Family::A, k), path};
  }
  int ratio = std::max(len(path[*bond]), len(path[*bond + 1])) /
              std::min(len(path[*bond]), len(path[*bond + 1]));
  if (ratio == 3) {
    if (len(path[0]) > len(path[1])) std::reverse(path.begin(), path.end());
    return {DynkinDiagram(Family::G, 2), path};
  }
  if (k == 4 && *bond == 1) {
    if (len(path[0]) < len(path[3])) std::reverse(path.begin(), path.end());
    return {DynkinDiagram(Family::F, 4), path};
  }
  if (k == 2) {
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
  } else if (*bond == 0) {
    std::reverse(path.begin(), path.end());
  }
  bool last_short = len(path[static_cast<std::size_t>(k - 1)]) < len(path[static_cast<std::size_t>(k - 2)]);
  return {DynkinDiagram(last_short ? Family::B : Family::C, k), path};
}

}  // namespace detail

/// Connected components of the sub-diagram induced on `nodes`, each
/// classified as a simple type with an explicit relabeling.
inline std::vector<Component> components(const DynkinDiagram& d, const NodeSet& nodes) {
  std::vector<Component> out;
  std::set<int> seen;
  for (int start : nodes) {
    if (seen.count(start)) continue;
    std::vector<int> stack{start}, members;
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int nb : neighbors(d, v))
        if (nodes.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    out.push_back(detail::classify_connected(d, NodeSet(members)));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return *std::min_element(a.parent_nodes.begin(), a.parent_nodes.end()) <
           *std::min_element(b.parent_nodes.begin(), b.parent_nodes.end());
  });
  return out;
}

inline std::vector<Component> components_minus_node(const DynkinDiagram& d, int j) {
  if (!d.valid_node(j)) throw InputError("node " + std::to_string(j) + " not in " + d.name());
  return components(d, NodeSet::all(d.rank()).without(j));
}

/// A node is extremal when deleting it leaves a connected diagram.
inline bool is_extremal(const DynkinDiagram& d, int j) { return components_minus_node(d, j).size() <= 1; }

/// Integer or +infinity (the value of h and r on the projective line).
class Extended {
 public:
  Extended() = default;  // +infinity
  Extended(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Extended infinity() { return Extended(); }
  bool is_infinite() const { return !value_.has_value(); }
  int value() const {
    if (!value_) throw std::logic_error("value() on infinite Extended");
    return *value_;
  }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() == b.is_infinite() ? std::strong_ordering::equal
             : a.is_infinite()                  ? std::strong_ordering::greater
                                                : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<int> value_;
};

/// h(X): minimum Coxeter number over the universal flag bundles, +inf on P^1.
inline Extended h_of_X(const MarkedDiagram& x) {
  int j = x.node();
  if (x.is_projective_line()) return Extended::infinity();
  int best = -1;
  for (const auto& c : components_minus_node(x.diagram, j)) {
    int h = coxeter_number(c.type);
    if (best < 0 || h < best) best = h;
  }
  return best;
}

/// r(X): minimum rank over the universal flag bundles, +inf on P^1.
inline Extended r_of_X(const MarkedDiagram& x) {
  int j = x.node();
  if (x.is_projective_line()) return Extended::infinity();
  int best = -1;
  for (const auto& c : components_minus_node(x.diagram, j)) {
    int r = c.type.rank();
    if (best < 0 || r < best) best = r;
  }
  return best;
}

/// D_n(n-1) and D_n(n) are isomorphic; the latter is the canonical form.
inline MarkedDiagram normalize_spinor(const MarkedDiagram& x) {
  if (x.diagram.family() == Family::D && x.picard_one() && x.node() == x.diagram.rank() - 1) {
    return MarkedDiagram(x.diagram, x.diagram.rank());
  }
  return x;
}

/// Explicit identification of low-rank coincidences, applied only on request:
/// D_3 -> A_3 (node 1 -> 2, 2 -> 1, 3 -> 3), C_2 -> B_2 (nodes swapped),
/// then D_n(n-1) -> D_n(n).
inline MarkedDiagram normalize_low_rank(const MarkedDiagram& x) {
  const auto& d = x.diagram;
  if (d.family() == Family::D && d.rank() == 3) {
    std::vector<int> nodes;
    for (int i : x.marked) nodes.push_back(i == 1 ? 2 : i == 2 ? 1 : 3);
    return MarkedDiagram(DynkinDiagram(Family::A, 3), NodeSet(nodes));
  }
  if (d.family() == Family::C && d.rank() == 2) {
    std::vector<int> nodes;
    for (int i : x.marked) nodes.push_back(3 - i);
    return MarkedDiagram(DynkinDiagram(Family::B, 2), NodeSet(nodes));
  }
  return normalize_spinor(x);
}

/// The family of isotropic lines through a point of X = D(j): for each
/// neighbor t of j, the component of D \ {j} containing t, marked at t.
inline std::vector<MarkedDiagram> isotropic_lines_fiber(const MarkedDiagram& x) {
  int j = x.node();
  std::vector<MarkedDiagram> out;
  auto comps = components_minus_node(x.diagram, j);
  for (int t : neighbors(x.diagram, j)) {
    for (const auto& c : comps) {
      if (c.nodes().contains(t)) out.emplace_back(c.type, c.local_index(t));
    }
  }
  return out;
}

}  // namespace flagcoh
