#include "srw/serialize.hpp"

#include <stdexcept>

namespace srw {

json to_json(const FieldElement& e) { return json(e.c); }

json to_json(const Field& f) {
  return json{{"p", f.p()}, {"k", f.k()}, {"modulus", f.modulus()}};
}

json to_json(const Poly& f) {
  json arr = json::array();
  for (const auto& c : f.c) arr.push_back(to_json(c));
  return arr;
}

json to_json(const RatFunc& f) {
  return json{{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

json to_json(const Field&, const CyclicCoverDifferential& w) {
  return json{{"n", w.n},
              {"g", to_json(w.g)},
              {"m", w.m},
              {"h_num", to_json(w.h.num)},
              {"h_den", to_json(w.h.den)}};
}

json to_json(const SpecialDeformationDatum& d) {
  json lambdas = json::array();
  for (const auto& l : d.lambdas) lambdas.push_back(to_json(l));
  return json{{"p", d.F.p()},
              {"k", d.F.k()},
              {"modulus", d.F.modulus()},
              {"lambdas", lambdas},
              {"signature", d.sig.a},
              {"c", to_json(d.c)},
              {"variant", d.variant == CoverVariant::half ? "half" : "full"}};
}

json to_json(const ReductionGraph& g) {
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    json jn{{"id", n.id},
            {"kind", n.kind == ComponentKind::original ? "original" : "tail"},
            {"inertia", n.inertia_order}};
    if (n.attach) jn["attach"] = to_json(*n.attach);
    if (n.parent) jn["parent"] = *n.parent;
    json marks = json::array();
    for (MarkedPoint m : n.marks) marks.push_back(mark_name(m));
    jn["marks"] = marks;
    nodes.push_back(std::move(jn));
  }
  return json{{"p", g.F.p()}, {"k", g.F.k()}, {"modulus", g.F.modulus()}, {"nodes", nodes}};
}

json to_json(const ValQ& v) { return json(v.str()); }

FieldElement field_element_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("field element: expected an array");
  std::vector<int64_t> c = j.get<std::vector<int64_t>>();
  if (static_cast<int>(c.size()) != F.k())
    throw std::invalid_argument("field element: expected " + std::to_string(F.k()) +
                                " coefficients");
  FieldElement e{std::move(c)};
  F.validate(e);
  return e;
}

Field field_from_json(const json& j) {
  Field f(j.at("p").get<int64_t>(), j.at("k").get<int>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<int64_t>>() != f.modulus())
    throw std::invalid_argument("field: modulus does not match the canonical choice");
  return f;
}

SpecialDeformationDatum datum_from_json(const json& j) {
  Field F = field_from_json(j);
  std::vector<FieldElement> lambdas;
  for (const auto& l : j.at("lambdas")) lambdas.push_back(field_element_from_json(F, l));
  Signature sig{j.at("signature").get<std::vector<int64_t>>()};
  FieldElement c = field_element_from_json(F, j.at("c"));
  CoverVariant variant =
      j.value("variant", "full") == std::string("half") ? CoverVariant::half : CoverVariant::full;
  return SpecialDeformationDatum{std::move(F), std::move(lambdas), std::move(sig), std::move(c),
                                 variant};
}

ReductionGraph graph_from_json(const json& j) {
  Field F = field_from_json(j);
  ReductionGraph g{F, {}};
  for (const auto& jn : j.at("nodes")) {
    ComponentNode n;
    n.id = jn.at("id").get<std::string>();
    std::string kind = jn.at("kind").get<std::string>();
    if (kind == "original")
      n.kind = ComponentKind::original;
    else if (kind == "tail")
      n.kind = ComponentKind::tail;
    else
      throw std::invalid_argument("graph: unknown component kind '" + kind + "'");
    n.inertia_order = jn.at("inertia").get<int64_t>();
    if (jn.contains("attach")) n.attach = field_element_from_json(F, jn.at("attach"));
    if (jn.contains("parent")) n.parent = jn.at("parent").get<std::string>();
    for (const auto& m : jn.value("marks", json::array())) {
      std::string s = m.get<std::string>();
      if (s == "0")
        n.marks.insert(MarkedPoint::zero);
      else if (s == "1")
        n.marks.insert(MarkedPoint::one);
      else if (s == "inf")
        n.marks.insert(MarkedPoint::infinity);
      else
        throw std::invalid_argument("graph: unknown marked point '" + s + "'");
    }
    g.nodes.push_back(std::move(n));
  }
  return g;
}

}  // namespace srw
