#pragma once

// Tags of flag bundles on P^1: one integer per node of a (sub)diagram.

#include <flagcoh/dynkin.hpp>

#include <string>
#include <vector>

namespace flagcoh {

struct Tag {
  DynkinDiagram diagram;
  NodeSet nodes;            // the nodes carrying values
  std::vector<int> values;  // aligned with nodes

  Tag(DynkinDiagram d, NodeSet n, std::vector<int> v) : diagram(d), nodes(std::move(n)), values(std::move(v)) {
    if (nodes.size() != values.size()) throw InputError("tag values do not match its nodes");
    if (!nodes.within(d.rank())) throw InputError("tag node outside " + d.name());
  }
  Tag(DynkinDiagram d, std::vector<int> v) : Tag(d, NodeSet::all(d.rank()), std::move(v)) {}

  int value(int node) const {
    std::size_t k = 0;
    for (int i : nodes) {
      if (i == node) return values[k];
      ++k;
    }
    throw InputError("node " + std::to_string(node) + " carries no tag value");
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(values[k]);
    }
    return out + ")";
  }
};

/// d_i = a_i - a_{i+1} on A_n for a splitting type (a_1 >= ... >= a_{n+1}).
inline Tag tag_from_splitting_type(const std::vector<int>& splitting) {
  if (splitting.size() < 2) throw InputError("a splitting type needs at least two entries");
  std::vector<int> d;
  for (std::size_t k = 0; k + 1 < splitting.size(); ++k) {
    if (splitting[k] < splitting[k + 1]) throw InputError("splitting type must be non-increasing");
    d.push_back(splitting[k] - splitting[k + 1]);
  }
  return Tag(DynkinDiagram(Family::A, static_cast<int>(d.size())), d);
}

/// I_0: nodes with tag value zero.
inline NodeSet zero_set(const Tag& t) {
  NodeSet out;
  std::size_t k = 0;
  for (int i : t.nodes) {
    if (t.values[k] == 0) out.insert(i);
    ++k;
  }
  return out;
}

/// Tag of the universal bundle on the lines of D(j): d_i = -A(i, j), i != j.
inline Tag universal_tag(const MarkedDiagram& x) {
  int j = x.node();
  auto cartan = cartan_matrix(x.diagram);
  NodeSet rest = NodeSet::all(x.diagram.rank()).without(j);
  std::vector<int> values;
  for (int i : rest) values.push_back(-cartan(i, j));
  return Tag(x.diagram, rest, values);
}

/// Parses "1,0,2" against a diagram.
inline Tag parse_tag(const DynkinDiagram& d, const std::string& text) {
  std::vector<int> values;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw InputError("malformed tag '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw InputError("malformed tag '" + text + "'");
    }
    if (used != cur.size()) throw InputError("malformed tag '" + text + "'");
    values.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  if (static_cast<int>(values.size()) != d.rank()) {
    throw InputError("tag for " + d.name() + " needs " + std::to_string(d.rank()) + " values");
  }
  return Tag(d, values);
}

}  // namespace flagcoh
