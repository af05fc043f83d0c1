#pragma once

// Space strings: "D6(6)" (marked diagram), "A3" (complete flags) and "Q<d>"
// for smooth quadrics.

#include <flagcoh/cohomology.hpp>
#include <flagcoh/dynkin.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace flagcoh {

struct Space {
  std::optional<MarkedDiagram> marked;  // empty for complete flags
  DynkinDiagram diagram;
  std::string text;

  bool full_flag() const { return !marked.has_value(); }
  std::string name() const { return marked ? marked->name() : diagram.name() + "/B"; }
};

/// Q^d as a marked diagram: odd d is B_{(d+1)/2}(1), even d >= 4 is
/// D_{d/2+1}(1), and the conic Q^1 is A1(1).
inline MarkedDiagram quadric(int d) {
  if (d == 1) return MarkedDiagram(DynkinDiagram(Family::A, 1), 1);
  if (d < 3) throw InputError("Q" + std::to_string(d) + " is not a homogeneous space of Picard number one");
  if (d % 2) return MarkedDiagram(DynkinDiagram(Family::B, (d + 1) / 2), 1);
  return MarkedDiagram(DynkinDiagram(Family::D, d / 2 + 1), 1);
}

inline Space parse_space(std::string_view text) {
  if (text.empty()) throw InputError("empty space string");
  if (text.front() == 'Q') {
    auto digits = text.substr(1);
    if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("expected Q<dimension>, got '" + std::string(text) + "'");
    }
    auto x = quadric(std::stoi(std::string(digits)));
    return {x, x.diagram, std::string(text)};
  }
  if (text.find('(') != std::string_view::npos) {
    auto x = MarkedDiagram::parse(text);
    return {x, x.diagram, std::string(text)};
  }
  return {std::nullopt, DynkinDiagram::parse(text), std::string(text)};
}

inline RingPresentation space_presentation(const Space& s) {
  if (s.full_flag()) return presentation_full_flag(s.diagram);
  return presentation_picard_one(normalize_spinor(*s.marked));
}

inline int space_cap(const Space& s, const RingPresentation& p) {
  if (s.full_flag()) return static_cast<int>(positive_root_count(s.diagram)) + 1;
  return full_cap(normalize_spinor(*s.marked), p);
}

}  // namespace flagcoh
