#include "commands.hpp"

#include <fmt/format.h>

#include "catcore/centers.hpp"
#include "catcore/equivariant.hpp"
#include "catcore/strictify.hpp"

namespace cli {

using namespace catcore;

namespace {

InputRef ref(const Workspace& ws, const std::string& name, const std::string& kind) {
  return {name, kind, ws.origin.at(name)};
}

Fin2CatPtr need_cat(const Workspace& ws, const std::string& name) {
  auto it = ws.cats.find(name);
  if (it == ws.cats.end()) throw UsageError(fmt::format("no 2-category named '{}'", name));
  return it->second;
}

std::string group_name(const Workspace& ws, const GroupAction2& a) {
  for (const auto& [n, g] : ws.groups)
    if (g == a.group) return n;
  return {};
}

// Resolves an action and checks that it acts on the named 2-category.
ActionPtr need_action(const Workspace& ws, const std::string& b, const std::string& name,
                      Outcome& out) {
  const Fin2CatPtr cat = need_cat(ws, b);
  auto it = ws.actions.find(name);
  if (it == ws.actions.end()) throw UsageError(fmt::format("no action named '{}'", name));
  if (it->second->base != cat)
    throw UsageError(fmt::format("action '{}' does not act on '{}'", name, b));
  const std::string g = group_name(ws, *it->second);
  if (!g.empty()) out.inputs.push_back(ref(ws, g, "group"));
  out.inputs.push_back(ref(ws, b, "2cat"));
  out.inputs.push_back(ref(ws, name, "action"));
  return it->second;
}

SearchOptions search(const Caps& c) { return {c.budget, c.jobs}; }

StrictifyCaps strictify_caps(const Caps& c) {
  StrictifyCaps s;
  if (c.max_group > 0) s.max_group = c.max_group;
  if (c.max_hom1 > 0) s.max_hom1 = c.max_hom1;
  s.search = search(c);
  return s;
}

EquivariantCaps equivariant_caps(const Caps& c) {
  EquivariantCaps s;
  if (c.max_group > 0) s.max_group = c.max_group;
  if (c.max_hom1 > 0) s.max_hom1 = c.max_hom1;
  s.search = search(c);
  return s;
}

void cell_counts(Outcome& out, const Fin2Cat& b, const std::string& prefix = {}) {
  out.counts[prefix + "zero_cells"] = b.num0();
  out.counts[prefix + "one_cells"] = b.num1();
  out.counts[prefix + "two_cells"] = b.num2();
}

}  // namespace

Outcome run_validate(const Workspace& ws, const std::string& name, const Caps&) {
  Outcome out;
  out.command = "validate";
  if (auto g = ws.groups.find(name); g != ws.groups.end()) {
    out.inputs.push_back(ref(ws, name, "group"));
    out.counts["order"] = g->second.order();
    const FinGroup& G = g->second;
    // Loading already checked the group; this repeats the scan for the report.
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        for (int c = 0; c < G.order(); ++c) {
          out.report.count_check();
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) out.report.add("Associativity", {a, b, c});
        }
    return out;
  }
  if (auto b = ws.cats.find(name); b != ws.cats.end()) {
    out.inputs.push_back(ref(ws, name, "2cat"));
    cell_counts(out, *b->second);
    out.report = validate_2category(*b->second);
    return out;
  }
  if (auto a = ws.actions.find(name); a != ws.actions.end()) {
    const std::string g = group_name(ws, *a->second);
    if (!g.empty()) out.inputs.push_back(ref(ws, g, "group"));
    out.inputs.push_back(ref(ws, name, "action"));
    out.counts["group_order"] = a->second->n();
    out.counts["strict"] = a->second->is_strict();
    out.counts["by_2functors"] = a->second->by_2functors();
    out.report = validate_action(*a->second);
    return out;
  }
  throw UsageError(fmt::format("nothing named '{}' in the workspace", name));
}

Outcome run_strictify(const Workspace& ws, const std::string& b, const std::string& act,
                      const Caps& caps) {
  Outcome out;
  out.command = "strictify";
  const ActionPtr a = need_action(ws, b, act, out);
  const Strictification s = enumerate_BG(a, strictify_caps(caps));
  cell_counts(out, *s.cat, "bg_");
  out.report.merge(validate_2category(*s.cat), "BG.");
  const GroupAction2 l = strict_action_on_BG(s);
  out.report.merge(validate_action(l), "L.");
  out.report.count_check();
  if (!l.is_strict()) out.report.add("LNotStrict", {}, "L_g∘L_h differs from L_{gh}");
  out.report.merge(check_H_biequivalence(s), "H.");
  return out;
}

Outcome run_equivariantize(const Workspace& ws, const std::string& b, const std::string& act,
                           const Caps& caps) {
  Outcome out;
  out.command = "equivariantize";
  const ActionPtr a = need_action(ws, b, act, out);
  const Equivariantization e = enumerate_equivariant(a, equivariant_caps(caps));
  cell_counts(out, *e.cat, "eq_");
  if (e.cat->num0() > 0) {
    out.report.merge(validate_2category(*e.cat), "BG.");
    out.report.merge(validate_pseudofunctor(forgetful_Phi(e)), "Phi.");
  }
  return out;
}

Outcome run_zg(const Workspace& ws, const std::string& b, const std::string& act, const Caps& caps) {
  Outcome out;
  out.command = "zg";
  const ActionPtr a = need_action(ws, b, act, out);
  const GCrossedCat z = build_ZG(a, search(caps));
  out.counts["objects"] = z.mon.cat.num_objects;
  out.counts["morphisms"] = z.mon.cat.num_morphisms();
  for (int g = 0; g < z.group.order(); ++g)
    out.counts["grade_" + z.group.elements[g]] = static_cast<long long>(z.objects_of_grade(g).size());
  out.report = check_g_crossed_axioms(z);
  const BraidedCenter zb = trivial_component_center(a->base, search(caps));
  out.report.merge(compare_trivial_component(z, zb), "TrivialComponent.");
  return out;
}

Outcome run_center(const Workspace& ws, const std::string& b, const Caps& caps) {
  Outcome out;
  out.command = "center";
  const Fin2CatPtr cat = need_cat(ws, b);
  out.inputs.push_back(ref(ws, b, "2cat"));
  const BraidedCenter z = trivial_component_center(cat, search(caps));
  out.counts["objects"] = z.center.mon.cat.num_objects;
  out.counts["morphisms"] = z.center.mon.cat.num_morphisms();
  out.report.merge(validate_monoidal(z.center.mon));
  out.report.merge(validate_braiding(z.center.mon, z.braid), "Braiding.");
  return out;
}

Outcome run_center_theorem(const Workspace& ws, const std::string& b, const std::string& act,
                           const Caps& caps) {
  Outcome out;
  out.command = "check-theorem center-equi";
  const ActionPtr a = need_action(ws, b, act, out);
  CenterTheoremResult r = check_center_theorem(a, equivariant_caps(caps));
  out.counts["bg_zero_cells"] = r.bg_objects;
  out.counts["bg_one_cells"] = r.bg_one_cells;
  out.counts["zphi_objects"] = r.zphi_objects;
  out.counts["center_objects"] = r.lhs_objects;
  out.counts["center_morphisms"] = r.lhs_morphisms;
  out.counts["equivariant_objects"] = r.rhs_objects;
  out.counts["equivariant_morphisms"] = r.rhs_morphisms;
  out.report = std::move(r.report);
  return out;
}

}  // namespace cli
