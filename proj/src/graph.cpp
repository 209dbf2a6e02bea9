#include "srw/graph.hpp"

#include <algorithm>

namespace srw {

GraphReport graph_validate_special_shape(const ReductionGraph& g, int64_t p) {
  GraphReport rep;
  auto check = [&](const char* name, bool passed, std::string detail = "") {
    rep.checks.push_back({name, passed, std::move(detail)});
  };

  std::vector<const ComponentNode*> originals;
  std::vector<const ComponentNode*> tails;
  for (const auto& n : g.nodes)
    (n.kind == ComponentKind::original ? originals : tails).push_back(&n);

  if (originals.empty())
    check("unique-original", false,
          "no original component: the exceptional case (bad cover, good curve) is not modeled");
  else
    check("unique-original", originals.size() == 1,
          originals.size() == 1 ? "" : "more than one original component");

  bool inertia_p = originals.size() == 1 && originals[0]->inertia_order == p;
  check("original-inertia-p", inertia_p,
        inertia_p ? "" : "bad component needs inertia cyclic of order exactly p");

  bool tails_good = !tails.empty();
  for (const auto* t : tails)
    if (t->inertia_order != 1) tails_good = false;
  check("tails-inertia-one", tails_good,
        tails_good ? "" : (tails.empty() ? "at least one tail required" : "tail with nontrivial inertia"));

  bool attach_present = true;
  for (const auto* t : tails)
    if (!t->attach.has_value()) attach_present = false;
  bool distinct = attach_present;
  if (attach_present)
    for (size_t i = 0; i < tails.size() && distinct; ++i)
      for (size_t j = i + 1; j < tails.size() && distinct; ++j)
        if (*tails[i]->attach == *tails[j]->attach) distinct = false;
  check("attach-points-distinct", distinct,
        distinct ? "" : "tails must meet the original in distinct points");

  bool star = originals.size() == 1;
  if (star) {
    const std::string& center = originals[0]->id;
    if (originals[0]->parent.has_value()) star = false;  // center has no parent
    for (const auto* t : tails)
      if (t->parent.has_value() && *t->parent != center) star = false;
  }
  check("star-topology", star, star ? "" : "every tail must attach to the original component");

  bool marks_ok = true;
  for (MarkedPoint mp : {MarkedPoint::zero, MarkedPoint::one, MarkedPoint::infinity}) {
    int copies = 0;
    for (const auto& n : g.nodes) copies += n.marks.count(mp);
    if (copies != 1) marks_ok = false;
  }
  check("marked-points-assigned", marks_ok,
        marks_ok ? "" : "each of 0, 1, inf must specialize to exactly one component");

  // a tail may carry a mark (indices prime to p move branch points onto
  // tails), but no tail may attach at a coordinate where the original holds
  // a mark; inf has no affine coordinate on this chart
  bool avoid = true;
  if (originals.size() == 1) {
    const Field& F = g.F;
    for (const auto* t : tails) {
      if (!t->attach.has_value()) continue;
      const FieldElement& at = *t->attach;
      if (originals[0]->marks.count(MarkedPoint::zero) && at.is_zero()) avoid = false;
      if (originals[0]->marks.count(MarkedPoint::one) && at == F.one()) avoid = false;
    }
  }
  check("attach-avoids-marks", avoid,
        avoid ? "" : "tail attaches at a marked point of the original component");

  return rep;
}

ReductionGraph graph_from_datum(const SpecialDeformationDatum& d) {
  ValidationReport v = sdd_validate(d);
  if (!v.ok())
    throw std::invalid_argument("graph_from_datum: invalid datum (" + v.issues[0].check + ")");

  ReductionGraph g{d.F, {}};
  ComponentNode original;
  original.id = "original";
  original.kind = ComponentKind::original;
  original.inertia_order = d.F.p();
  original.marks = {MarkedPoint::zero, MarkedPoint::one, MarkedPoint::infinity};
  g.nodes.push_back(std::move(original));

  for (size_t i = 0; i < d.lambdas.size(); ++i) {
    ComponentNode tail;
    tail.id = "tail-" + std::to_string(i);
    tail.kind = ComponentKind::tail;
    tail.inertia_order = 1;
    tail.attach = d.lambdas[i];
    tail.parent = "original";
    g.nodes.push_back(std::move(tail));
  }
  return g;
}

}  // namespace srw
