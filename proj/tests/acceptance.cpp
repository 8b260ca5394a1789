// One line per acceptance criterion; exit status 0 only when all pass.

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <random>

#include "catcore/centers.hpp"
#include "catcore/equivariant.hpp"
#include "catcore/errors.hpp"
#include "catcore/strictify.hpp"
#include "fixture_set.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace catcore;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

FunctorPtr fptr(PseudoFunctor f) { return std::make_shared<const PseudoFunctor>(std::move(f)); }
NatPtr nptr(PseudoNat n) { return std::make_shared<const PseudoNat>(std::move(n)); }

std::vector<std::pair<std::string, FinGroup>> named_groups() {
  return {{"C1", trivial_group()},    {"C2", cyclic_group(2)}, {"C3", cyclic_group(3)},
          {"C4", cyclic_group(4)},    {"C2xC2", klein_four()}, {"S3", symmetric_group3()}};
}

// Strict stand-in for an action: itself when strict, else L on B[G].
ActionPtr strict_form(const ActionPtr& a) {
  if (a->is_strict()) return a;
  return fixtures::ptr(strict_action_on_BG(enumerate_BG(a)));
}

Line kernel_soundness() {
  Line l;
  for (const auto& [name, g] : named_groups()) {
    const auto t0 = Clock::now();
    const Fin2Cat b = delooping(g);
    const ValidationReport r = validate_2category(b);
    if (!r.pass()) l.fail(name + " delooping fails: " + r.summary());
    int witnessed = 0;
    const auto muts = mutation::standard_mutations(b);
    for (const auto& m : muts) {
      const ValidationReport mr = validate_2category(m.cat);
      if (mr.pass())
        l.fail(fmt::format("{}: mutation '{}' passes", name, m.name));
      else if (!mutation::witnessed(mr, m))
        l.fail(fmt::format("{}: mutation '{}' lacks witness {}", name, m.name, m.tag));
      else
        ++witnessed;
    }
    const double s = seconds_since(t0);
    if (s >= 1.0) l.fail(fmt::format("{} took {:.2f}s", name, s));
    l.note(fmt::format("{} {}/{}", name, witnessed, muts.size()));
  }
  return l;
}

Line center_counts() {
  Line l;
  for (const auto& [name, g] : named_groups()) {
    const auto t0 = Clock::now();
    auto b = fixtures::sigma(g);
    const RelativeCenter z = relative_center(fptr(identity_pseudofunctor(b)));
    const int got = z.nats.cat.num_objects, want = oracle::center_size(g);
    if (got != want) l.fail(fmt::format("{}: {} objects, oracle {}", name, got, want));
    const double s = seconds_since(t0);
    if (s >= 1.0) l.fail(fmt::format("{} took {:.2f}s", name, s));
    l.note(fmt::format("{}={}", name, got));
  }
  return l;
}

Line equivariant_counts() {
  Line l;
  const FinGroup c2 = cyclic_group(2), c4 = cyclic_group(4);
  auto run = [&](const std::string& name, ActionPtr a, int oracle_count, int expected) {
    const auto t0 = Clock::now();
    const int got = static_cast<int>(enumerate_equivariant(a).cells0.size());
    if (got != oracle_count || got != expected)
      l.fail(fmt::format("{}: {} 0-cells, oracle {}, expected {}", name, got, oracle_count, expected));
    const double s = seconds_since(t0);
    if (s >= 1.0) l.fail(fmt::format("{} took {:.2f}s", name, s));
    l.note(fmt::format("{}={}", name, got));
  };
  run("SigmaC2/trivial", fixtures::ptr(trivial_action(c2, fixtures::sigma(c2))),
      oracle::equivariant_zero_cells(c2, c2, {oracle::identity_map(2), oracle::identity_map(2)}), 2);
  run("SigmaC4/inversion", fixtures::ptr(inversion_action(fixtures::sigma(c4), c4)),
      oracle::equivariant_zero_cells(c2, c4, {oracle::identity_map(4), oracle::inversion_map(c4)}), 4);
  return l;
}

Line strictification() {
  Line l;
  for (const auto& c : fixtures::action_cases()) {
    const auto t0 = Clock::now();
    try {
      const Strictification s = enumerate_BG(c.action);
      const GroupAction2 L = strict_action_on_BG(s);
      if (!L.is_strict()) l.fail(c.name + ": L is not strict");
      for (int g = 0; g < L.n(); ++g)
        for (int h = 0; h < L.n(); ++h)
          if (!compose_pseudofunctors(L.Fg(g), L.Fg(h)).same_tables(L.Fg(L.group.mul(g, h))))
            l.fail(fmt::format("{}: L_{}L_{} != L_{{gh}}", c.name, g, h));
      const ValidationReport r = check_H_biequivalence(s);
      if (!r.pass()) l.fail(c.name + ": " + r.summary());
      l.note(fmt::format("{} ({} 0-cells)", c.name, s.cat->num0()));
    } catch (const Error& e) {
      l.fail(c.name + ": " + e.what());
    }
    const double s = seconds_since(t0);
    if (s >= 30.0) l.fail(fmt::format("{} took {:.2f}s", c.name, s));
  }
  return l;
}

Line g_crossed() {
  Line l;
  const auto t0 = Clock::now();
  for (const auto& c : fixtures::action_cases()) {
    try {
      const ActionPtr a = strict_form(c.action);
      const GCrossedCat z = build_ZG(a);
      const ValidationReport r = check_g_crossed_axioms(z);
      if (!r.pass()) l.fail(c.name + ": " + r.summary());
      const ValidationReport t = compare_trivial_component(z, trivial_component_center(a->base));
      if (!t.pass()) l.fail(c.name + " trivial component: " + t.summary());
      l.note(fmt::format("{}{} ({} objects)", c.name, a == c.action ? "" : " via B[G]",
                         z.mon.cat.num_objects));
    } catch (const Error& e) {
      l.fail(c.name + ": " + e.what());
    }
  }
  const FinGroup c4 = cyclic_group(4);
  const GCrossedCat inv = build_ZG(fixtures::action_cases()[2].action);
  const int grade_s = static_cast<int>(inv.objects_of_grade(1).size());
  const int want = oracle::twisted_central(c4, oracle::inversion_map(c4));
  if (grade_s != 0 || want != 0) l.fail(fmt::format("InvAct grade s has {} objects, oracle {}", grade_s, want));
  l.note(fmt::format("InvAct grade s = {}", grade_s));
  const double s = seconds_since(t0);
  if (s >= 10.0) l.fail(fmt::format("took {:.2f}s", s));
  return l;
}

Line epsilon_nu() {
  Line l;
  const auto t0 = Clock::now();
  int cells = 0;
  for (const auto& c : fixtures::action_cases()) {
    try {
      const ActionPtr a = strict_form(c.action);
      const ZPhiAction za = action_on_ZPhi(a);
      for (const EqZeroCell& e : za.eq.cells0) {
        ++cells;
        const ValidationReport r = check_epsilon_identities(*a, e, epsilon_data(*a, e));
        if (!r.pass()) l.fail(c.name + ": " + r.summary());
      }
      const ValidationReport m = validate_mon_action(za.action);
      if (!m.pass()) l.fail(c.name + " action on Z(Phi): " + m.summary());
    } catch (const Error& e) {
      l.fail(c.name + ": " + e.what());
    }
  }
  l.note(fmt::format("{} equivariant 0-cells", cells));
  const double s = seconds_since(t0);
  if (s >= 10.0) l.fail(fmt::format("took {:.2f}s", s));
  return l;
}

Line center_theorem() {
  Line l;
  const auto t0 = Clock::now();
  const auto cases = fixtures::action_cases();
  for (int i : {1, 2}) {
    const auto& c = cases[i];
    const CenterTheoremResult r = check_center_theorem(c.action);
    if (!r.report.pass()) l.fail(c.name + ": " + r.report.summary());
    if (r.lhs_objects != r.rhs_objects || r.lhs_morphisms != r.rhs_morphisms)
      l.fail(c.name + ": sizes differ");
    l.note(fmt::format("{}: Z(B^G) {}/{} vs Z(Phi)^G {}/{}", c.name, r.lhs_objects, r.lhs_morphisms,
                       r.rhs_objects, r.rhs_morphisms));
  }
  const double s = seconds_since(t0);
  if (s >= 60.0) l.fail(fmt::format("took {:.2f}s", s));
  return l;
}

// G-pseudonats of the identity G-pseudofunctor, by brute force over θ_g.
std::vector<GPseudoNat> g_pseudonats(const ActionPtr& a) {
  auto h = std::make_shared<const GPseudoFunctor>(identity_g_pseudofunctor(a));
  const Fin2Cat& b = *a->base;
  const int n = a->n();
  std::vector<GPseudoNat> out;
  for (const PseudoNat& th : enumerate_pseudonats(h->H, h->H)) {
    std::vector<std::vector<int>> doms;
    for (int g = 0; g < n; ++g)
      for (int A = 0; A < b.n0; ++A) {
        const int from = b.h1(a->Fg(g).on1(th.c0[A]), h->gamma[g]->c0[A]);
        const int to = b.h1(h->gamma[g]->c0[A], th.c0[a->Fg(g).on0(A)]);
        doms.push_back(from == kNone || to == kNone ? std::vector<int>{} : b.hom2(from, to));
      }
    std::vector<size_t> pick(doms.size(), 0);
    bool empty = false;
    for (const auto& d : doms) empty = empty || d.empty();
    if (empty) continue;
    for (int guard = 0; guard < 4096; ++guard) {
      GPseudoNat t;
      t.from = h;
      t.to = h;
      t.theta = nptr(th);
      t.theta_g.assign(n, std::vector<int>(b.n0));
      for (int g = 0; g < n; ++g)
        for (int A = 0; A < b.n0; ++A) t.theta_g[g][A] = doms[g * b.n0 + A][pick[g * b.n0 + A]];
      if (validate_g_pseudonat(t).pass()) out.push_back(std::move(t));
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == doms[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return out;
}

Line property_suites() {
  Line l;
  constexpr int kSamples = 1000;
  std::mt19937_64 rng(20240601);
  auto any = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
  long long total = 0;
  auto cases = fixtures::action_cases();
  cases.push_back({"2-group/pseudofunctor C2", fixtures::pseudo_functor_action()});
  for (const auto& c : cases) {
    const GroupAction2& a = *c.action;
    // Endofunctors: the F_g and the identity.
    std::vector<FunctorPtr> pool = {fptr(identity_pseudofunctor(a.base))};
    for (const auto& f : a.F)
      if (!same_functor(*f, *pool.front())) pool.push_back(f);
    std::vector<PseudoNat> nats;
    for (const auto& f : pool)
      for (const auto& g : pool)
        for (auto& n : enumerate_pseudonats(f, g)) nats.push_back(std::move(n));
    std::vector<Modification> mods;
    for (size_t i = 0; i < nats.size() && mods.size() < 512; ++i)
      for (size_t j = 0; j < nats.size() && mods.size() < 512; ++j)
        if (nats[i].from == nats[j].from && nats[i].to == nats[j].to)
          for (auto& m : enumerate_modifications(nptr(nats[i]), nptr(nats[j]))) mods.push_back(std::move(m));
    int fails = 0;
    if (!nats.empty()) {
      for (int s = 0; s < kSamples; ++s) {
        const PseudoNat& beta = nats[any(nats.size())];
        const PseudoNat& alpha = nats[any(nats.size())];
        fails += !validate_pseudonat(tensor_pseudonat(beta, alpha)).pass();
        const PseudoNat& g3 = nats[any(nats.size())];
        const PseudoNat& d4 = nats[any(nats.size())];
        fails += !check_pentagon(alpha, beta, g3, d4).pass();
      }
      total += 2 * kSamples;
    }
    if (!mods.empty()) {
      for (int s = 0; s < kSamples; ++s)
        fails += !validate_modification(tensor_modifications(mods[any(mods.size())], mods[any(mods.size())])).pass();
      total += kSamples;
    }
    if (a.by_2functors()) {
      const Equivariantization e = enumerate_equivariant(c.action);
      if (!e.cells1.empty()) {
        std::vector<std::vector<int>> from(e.cells0.size());
        for (size_t i = 0; i < e.cells1.size(); ++i) from[e.cells1[i].src].push_back(static_cast<int>(i));
        for (int s = 0; s < kSamples; ++s) {
          const Eq1Cell& sigma = e.cells1[any(e.cells1.size())];
          const auto& next = from[sigma.tgt];
          const Eq1Cell& theta = e.cells1[next[any(next.size())]];
          const Eq1Cell t = compose_eq_1cells(a, theta, sigma);
          fails += !validate_eq_1cell(a, e.cells0[sigma.src], e.cells0[theta.tgt], t).pass();
        }
        total += kSamples;
      }
    }
    const std::vector<GPseudoNat> gn = g_pseudonats(c.action);
    if (!gn.empty()) {
      for (int s = 0; s < kSamples; ++s)
        fails += !validate_g_pseudonat(compose_g_pseudonats(gn[any(gn.size())], gn[any(gn.size())])).pass();
      total += kSamples;
    }
    if (fails) l.fail(fmt::format("{}: {} failures", c.name, fails));
  }
  l.note(fmt::format("{} samples", total));
  return l;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Line()>>> criteria = {
      {"kernel soundness", kernel_soundness},
      {"center counts", center_counts},
      {"equivariant counts", equivariant_counts},
      {"strictification", strictification},
      {"G-crossed axioms", g_crossed},
      {"epsilon/nu identities", epsilon_nu},
      {"center theorem", center_theorem},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l.fail(std::string("exception: ") + e.what());
    }
    failed += !l.pass;
    fmt::print("criterion {} ({}): {} [{:.2f}s] {}\n", i + 1, criteria[i].first, l.pass ? "PASS" : "FAIL",
               seconds_since(t0), join(l.notes));
  }
  return failed == 0 ? 0 : 1;
}
