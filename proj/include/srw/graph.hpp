// Combinatorial shape of the stable reduction: a star-shaped component tree
// with one bad central component (inertia of order p) and good tails.

#pragma once

#include <optional>
#include <set>
#include <string>

#include "srw/deformation.hpp"

namespace srw {

enum class ComponentKind { original, tail };
enum class MarkedPoint { zero, one, infinity };

struct ComponentNode {
  std::string id;
  ComponentKind kind = ComponentKind::tail;
  int64_t inertia_order = 1;
  std::optional<FieldElement> attach;   // the lambda where a tail meets the original
  std::set<MarkedPoint> marks;          // branch points specializing here
  std::optional<std::string> parent;    // defaults to the original component

  friend auto operator<=>(const ComponentNode&, const ComponentNode&) = default;
};

struct ReductionGraph {
  Field F;
  std::vector<ComponentNode> nodes;
};

struct GraphCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GraphReport {
  std::vector<GraphCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Named checks, in order:
//   unique-original        exactly one original component (a graph with none
//                          is the excluded exceptional case and is called out
//                          as such)
//   original-inertia-p     the bad component has inertia cyclic of order p
//   tails-inertia-one      every tail is a good component
//   attach-points-distinct tails meet the original in distinct points
//   star-topology          tails attach only to the original component
//   marked-points-assigned 0, 1, inf each live on exactly one component
//   attach-avoids-marks    no tail attaches at a marked point of the original
GraphReport graph_validate_special_shape(const ReductionGraph& g, int64_t p);

// The star graph of a valid datum: one original node with inertia p carrying
// the marks {0, 1, inf}, one inertia-1 tail per lambda_i.
ReductionGraph graph_from_datum(const SpecialDeformationDatum& d);

constexpr const char* mark_name(MarkedPoint m) {
  switch (m) {
    case MarkedPoint::zero: return "0";
    case MarkedPoint::one: return "1";
    case MarkedPoint::infinity: return "inf";
  }
  return "?";
}

}  // namespace srw
