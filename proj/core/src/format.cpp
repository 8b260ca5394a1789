#include "catcore/format.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

namespace catcore {

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
  const std::string& at(size_t i) const { return tokens[i].text; }
  size_t size() const { return tokens.size(); }
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      const unsigned char ch = static_cast<unsigned char>(raw[i]);
      if (ch == '#') break;
      if (std::isspace(ch)) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != '#') ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void arity(const Line& l, size_t want) {
  throw ParseError(fmt::format("line {}: '{}' expects {} fields, got {}", l.number, l.at(0), want - 1,
                               l.size() - 1),
                   l.number, l.tokens.back().column);
}

void expect(const Line& l, size_t n) {
  if (l.size() != n) arity(l, n);
}

class NameIndex {
 public:
  NameIndex(std::string kind, std::string path) : kind_(std::move(kind)), path_(std::move(path)) {}
  void add(const std::string& name, const Line& l) {
    if (!ids_.emplace(name, static_cast<int>(names_.size())).second)
      throw SchemaError(fmt::format("line {}: duplicate {} '{}'", l.number, kind_, name), path_);
    names_.push_back(name);
  }
  int operator()(const std::string& name, const Line& l) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
      throw SchemaError(fmt::format("line {}: unknown {} '{}'", l.number, kind_, name),
                        fmt::format("{}.{}", path_, name));
    return it->second;
  }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::string kind_, path_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> names_;
};

[[noreturn]] void fail_report(const ValidationReport& r, const std::string& what) {
  const Violation& v = r.violations().front();
  throw ValidationError(fmt::format("{} fails {}: {}", what, v.tag, v.detail), v.tag, v.cells);
}

FinGroup build_group(const std::string& name, const std::vector<Line>& body) {
  const std::string path = "group." + name;
  NameIndex els("element", path);
  const Line* unit_line = nullptr;
  std::vector<const Line*> rows;
  for (const Line& l : body) {
    if (l.at(0) == "elements") {
      for (size_t i = 1; i < l.size(); ++i) els.add(l.at(i), l);
    } else if (l.at(0) == "unit") {
      expect(l, 2);
      unit_line = &l;
    } else if (l.at(0) == "row") {
      rows.push_back(&l);
    } else {
      throw ParseError(fmt::format("line {}: unknown group statement '{}'", l.number, l.at(0)), l.number,
                       l.tokens[0].column);
    }
  }
  const int n = els.size();
  if (n == 0) throw SchemaError("group has no elements", path + ".elements");
  if (!unit_line) throw SchemaError("group has no unit", path + ".unit");
  Table mult(n, n);
  std::vector<bool> seen(n, false);
  for (const Line* l : rows) {
    expect(*l, static_cast<size_t>(n) + 2);
    const int a = els(l->at(1), *l);
    if (seen[a]) throw SchemaError(fmt::format("line {}: duplicate row", l->number), path + ".row." + l->at(1));
    seen[a] = true;
    for (int b = 0; b < n; ++b) mult.at(a, b) = els(l->at(b + 2), *l);
  }
  for (int a = 0; a < n; ++a)
    if (!seen[a]) throw SchemaError("missing row", path + ".row." + els.names()[a]);
  const int unit = els(unit_line->at(1), *unit_line);
  try {
    return make_fin_group(els.names(), mult, unit, name);
  } catch (const NotAssociative& e) {
    throw SchemaError(e.what(), fmt::format("{}.mult[{},{},{}]", path, els.names()[e.witness()[0]],
                                            els.names()[e.witness()[1]], els.names()[e.witness()[2]]));
  } catch (const WitnessError& e) {
    throw SchemaError(e.what(), path + ".mult");
  } catch (const InvalidTable& e) {
    throw SchemaError(e.what(), path + ".mult");
  }
}

Fin2Cat build_2cat(const std::string& name, const std::vector<Line>& body) {
  const std::string path = "2cat." + name;
  NameIndex o("0-cell", path), c1("1-cell", path), c2("2-cell", path);
  std::vector<const Line*> l1, l2, units, ids, h1s, vs, h2s;
  for (const Line& l : body) {
    const std::string& k = l.at(0);
    if (k == "objects") {
      for (size_t i = 1; i < l.size(); ++i) o.add(l.at(i), l);
    } else if (k == "1cell") {
      expect(l, 4);
      c1.add(l.at(1), l);
      l1.push_back(&l);
    } else if (k == "2cell") {
      expect(l, 4);
      c2.add(l.at(1), l);
      l2.push_back(&l);
    } else if (k == "unit") {
      expect(l, 3);
      units.push_back(&l);
    } else if (k == "id") {
      expect(l, 3);
      ids.push_back(&l);
    } else if (k == "h1" || k == "v" || k == "h2") {
      expect(l, 4);
      (k == "h1" ? h1s : k == "v" ? vs : h2s).push_back(&l);
    } else {
      throw ParseError(fmt::format("line {}: unknown 2cat statement '{}'", l.number, k), l.number,
                       l.tokens[0].column);
    }
  }
  Fin2Cat b;
  b.name = name;
  b.n0 = o.size();
  b.names0 = o.names();
  b.names1 = c1.names();
  b.names2 = c2.names();
  for (const Line* l : l1) {
    b.src1.push_back(o(l->at(2), *l));
    b.tgt1.push_back(o(l->at(3), *l));
  }
  for (const Line* l : l2) {
    b.src2.push_back(c1(l->at(2), *l));
    b.tgt2.push_back(c1(l->at(3), *l));
  }
  b.unit1.assign(b.n0, kNone);
  for (const Line* l : units) b.unit1[o(l->at(1), *l)] = c1(l->at(2), *l);
  b.id2.assign(c1.size(), kNone);
  for (const Line* l : ids) b.id2[c1(l->at(1), *l)] = c2(l->at(2), *l);
  for (int a = 0; a < b.n0; ++a)
    if (b.unit1[a] == kNone) throw SchemaError("missing unit 1-cell", path + ".unit." + o.names()[a]);
  for (int x = 0; x < c1.size(); ++x)
    if (b.id2[x] == kNone) throw SchemaError("missing identity 2-cell", path + ".id." + c1.names()[x]);
  b.hcomp1 = Table(c1.size(), c1.size());
  for (const Line* l : h1s) b.hcomp1.at(c1(l->at(1), *l), c1(l->at(2), *l)) = c1(l->at(3), *l);
  b.vcomp = Table(c2.size(), c2.size());
  for (const Line* l : vs) b.vcomp.at(c2(l->at(1), *l), c2(l->at(2), *l)) = c2(l->at(3), *l);
  b.hcomp2 = Table(c2.size(), c2.size());
  for (const Line* l : h2s) b.hcomp2.at(c2(l->at(1), *l), c2(l->at(2), *l)) = c2(l->at(3), *l);
  const ValidationReport r = validate_2category(b);
  if (!r.pass()) fail_report(r, path);
  b.finalize();
  return b;
}

std::string zero_name(const Fin2Cat& b, int a) {
  return a < static_cast<int>(b.names0.size()) && !b.names0[a].empty() ? b.names0[a] : std::to_string(a);
}

int default_comp(const Fin2Cat& c, const PseudoFunctor& f, int x, int y) {
  const int lhs = c.h1(f.on1(x), f.on1(y));
  const int rhs = f.on1(c.h1(x, y));
  return lhs != kNone && lhs == rhs ? c.id(lhs) : kNone;
}

int default_unitc(const Fin2Cat& c, const PseudoFunctor& f, int a) {
  const int lhs = c.unit(f.on0(a));
  return lhs != kNone && lhs == f.on1(c.unit(a)) ? c.id(lhs) : kNone;
}

bool composable(const Fin2Cat& c, int x, int y) { return c.tgt1[y] == c.src1[x]; }

ActionPtr build_action(const std::string& name, const std::vector<Line>& body, const Workspace& ws) {
  const std::string path = "action." + name;
  const Line* gl = nullptr;
  const Line* bl = nullptr;
  for (const Line& l : body) {
    if (l.at(0) == "group") expect(l, 2), gl = &l;
    if (l.at(0) == "base") expect(l, 2), bl = &l;
  }
  if (!gl) throw SchemaError("action names no group", path + ".group");
  if (!bl) throw SchemaError("action names no base", path + ".base");
  auto git = ws.groups.find(gl->at(1));
  if (git == ws.groups.end())
    throw SchemaError(fmt::format("line {}: unknown group '{}'", gl->number, gl->at(1)), path + ".group");
  auto bit = ws.cats.find(bl->at(1));
  if (bit == ws.cats.end())
    throw SchemaError(fmt::format("line {}: unknown 2cat '{}'", bl->number, bl->at(1)), path + ".base");
  const FinGroup& G = git->second;
  const Fin2CatPtr base = bit->second;
  const Fin2Cat& c = *base;
  const int n = G.order();

  NameIndex els("element", path), o("0-cell", path), c1("1-cell", path), c2("2-cell", path);
  for (const auto& e : G.elements) els.add(e, body.front());
  for (int a = 0; a < c.n0; ++a) o.add(zero_name(c, a), body.front());
  for (int x = 0; x < c.num1(); ++x) c1.add(c.name1(x), body.front());
  for (int a = 0; a < c.num2(); ++a) c2.add(c.name2(a), body.front());

  std::vector<PseudoFunctor> F(n);
  for (int g = 0; g < n; ++g) {
    F[g].name = fmt::format("F_{}", G.elements[g]);
    F[g].src = base;
    F[g].tgt = base;
    F[g].obj.assign(c.n0, kNone);
    F[g].map1.assign(c.num1(), kNone);
    F[g].map2.assign(c.num2(), kNone);
    F[g].comp = Table(c.num1(), c.num1());
    F[g].unitc.assign(c.n0, kNone);
  }
  std::vector<std::vector<int>> chi0(n * n), chi2(n * n), omega(n * n * n);
  std::vector<bool> chi_given(n * n, false), omega_given(n * n * n, false);
  for (int q = 0; q < n * n; ++q) {
    chi0[q].assign(c.n0, kNone);
    chi2[q].assign(c.num1(), kNone);
  }
  for (int q = 0; q < n * n * n; ++q) omega[q].assign(c.n0, kNone);

  for (const Line& l : body) {
    const std::string& k = l.at(0);
    if (k == "group" || k == "base") continue;
    if (k == "F") {
      if (l.size() < 3) arity(l, 5);
      PseudoFunctor& f = F[els(l.at(1), l)];
      const std::string& what = l.at(2);
      if (what == "obj") expect(l, 5), f.obj[o(l.at(3), l)] = o(l.at(4), l);
      else if (what == "map1") expect(l, 5), f.map1[c1(l.at(3), l)] = c1(l.at(4), l);
      else if (what == "map2") expect(l, 5), f.map2[c2(l.at(3), l)] = c2(l.at(4), l);
      else if (what == "comp") expect(l, 6), f.comp.at(c1(l.at(3), l), c1(l.at(4), l)) = c2(l.at(5), l);
      else if (what == "unit") expect(l, 5), f.unitc[o(l.at(3), l)] = c2(l.at(4), l);
      else
        throw ParseError(fmt::format("line {}: unknown functor field '{}'", l.number, what), l.number,
                         l.tokens[2].column);
    } else if (k == "chi") {
      expect(l, 6);
      const int q = els(l.at(1), l) * n + els(l.at(2), l);
      chi_given[q] = true;
      if (l.at(3) == "c0") chi0[q][o(l.at(4), l)] = c1(l.at(5), l);
      else if (l.at(3) == "c2") chi2[q][c1(l.at(4), l)] = c2(l.at(5), l);
      else
        throw ParseError(fmt::format("line {}: expected c0 or c2", l.number), l.number, l.tokens[3].column);
    } else if (k == "omega") {
      expect(l, 6);
      const int q = (els(l.at(1), l) * n + els(l.at(2), l)) * n + els(l.at(3), l);
      omega_given[q] = true;
      omega[q][o(l.at(4), l)] = c2(l.at(5), l);
    } else {
      throw ParseError(fmt::format("line {}: unknown action statement '{}'", l.number, k), l.number,
                       l.tokens[0].column);
    }
  }

  std::vector<FunctorPtr> fp;
  for (int g = 0; g < n; ++g) {
    PseudoFunctor& f = F[g];
    const std::string fpath = fmt::format("{}.F[{}]", path, G.elements[g]);
    for (int a = 0; a < c.n0; ++a)
      if (f.obj[a] == kNone) throw SchemaError("missing obj entry", fpath + ".obj." + zero_name(c, a));
    for (int x = 0; x < c.num1(); ++x)
      if (f.map1[x] == kNone) throw SchemaError("missing map1 entry", fpath + ".map1." + c.name1(x));
    for (int a = 0; a < c.num2(); ++a)
      if (f.map2[a] == kNone) throw SchemaError("missing map2 entry", fpath + ".map2." + c.name2(a));
    for (int x = 0; x < c.num1(); ++x)
      for (int y = 0; y < c.num1(); ++y)
        if (composable(c, x, y) && f.comp(x, y) == kNone) {
          f.comp.at(x, y) = default_comp(c, f, x, y);
          if (f.comp(x, y) == kNone)
            throw SchemaError("compositor needed", fmt::format("{}.comp[{},{}]", fpath, c.name1(x), c.name1(y)));
        }
    for (int a = 0; a < c.n0; ++a)
      if (f.unitc[a] == kNone) {
        f.unitc[a] = default_unitc(c, f, a);
        if (f.unitc[a] == kNone) throw SchemaError("unit constraint needed", fpath + ".unit." + zero_name(c, a));
      }
    const ValidationReport r = validate_pseudofunctor(f);
    if (!r.pass()) fail_report(r, fpath);
    fp.push_back(std::make_shared<const PseudoFunctor>(std::move(f)));
  }

  std::vector<NatPtr> chi;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int q = g * n + h;
      const FunctorPtr to = fp[G.mul(g, h)];
      PseudoNat nat;
      nat.from = std::make_shared<const PseudoFunctor>(compose_pseudofunctors(*fp[g], *fp[h]));
      nat.to = to;
      const std::string cpath = fmt::format("{}.chi[{},{}]", path, G.elements[g], G.elements[h]);
      for (int a = 0; a < c.n0; ++a) {
        if (chi0[q][a] == kNone && chi_given[q]) throw SchemaError("missing c0 entry", cpath + ".c0." + zero_name(c, a));
        nat.c0.push_back(chi_given[q] ? chi0[q][a] : c.unit(to->on0(a)));
      }
      for (int x = 0; x < c.num1(); ++x) {
        if (chi2[q][x] == kNone && chi_given[q]) throw SchemaError("missing c2 entry", cpath + ".c2." + c.name1(x));
        nat.c2.push_back(chi_given[q] ? chi2[q][x] : c.id(to->on1(x)));
      }
      chi.push_back(std::make_shared<const PseudoNat>(std::move(nat)));
    }
  for (int q = 0; q < n * n * n; ++q) {
    const int g = q / (n * n), h = (q / n) % n, f = q % n;
    for (int a = 0; a < c.n0; ++a) {
      if (omega_given[q] && omega[q][a] == kNone)
        throw SchemaError("missing omega entry", fmt::format("{}.omega[{},{},{}].{}", path, G.elements[g],
                                                             G.elements[h], G.elements[f], zero_name(c, a)));
      if (!omega_given[q])
        omega[q][a] = c.id(c.h1(chi[G.mul(g, h) * n + f]->c0[a], chi[g * n + h]->c0[fp[f]->on0(a)]));
    }
  }
  GroupAction2 act = make_action(G, base, std::move(fp), std::move(chi), std::move(omega), name);
  const ValidationReport r = validate_action(act);
  if (!r.pass()) fail_report(r, path);
  return std::make_shared<const GroupAction2>(std::move(act));
}

void check_token(const std::string& s, const std::string& path) {
  if (s.empty() || s.find('#') != std::string::npos ||
      std::any_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }))
    throw SchemaError(fmt::format("'{}' cannot be written as a name", s), path);
}

void check_unique(const std::vector<std::string>& names, const std::string& path) {
  std::set<std::string> seen;
  for (const auto& s : names) {
    check_token(s, path);
    if (!seen.insert(s).second) throw SchemaError(fmt::format("duplicate name '{}'", s), path);
  }
}

}  // namespace

void parse_document(const std::string& text, Workspace& ws, const std::string& origin) {
  const std::vector<Line> lines = tokenize(text);
  size_t i = 0;
  while (i < lines.size()) {
    const Line& head = lines[i];
    const std::string& kind = head.at(0);
    if (kind != "group" && kind != "2cat" && kind != "action")
      throw ParseError(fmt::format("line {}: expected 'group', '2cat' or 'action', got '{}'", head.number, kind),
                       head.number, head.tokens[0].column);
    expect(head, 2);
    const std::string& name = head.at(1);
    if (ws.has(name))
      throw SchemaError(fmt::format("line {}: '{}' is already defined in {}", head.number, name, ws.origin.at(name)),
                        kind + "." + name);
    std::vector<Line> body;
    size_t j = i + 1;
    while (j < lines.size() && lines[j].at(0) != "end") body.push_back(lines[j++]);
    if (j == lines.size())
      throw ParseError(fmt::format("line {}: block '{}' has no 'end'", head.number, name), head.number, 1);
    if (lines[j].size() != 1) arity(lines[j], 1);
    if (body.empty()) throw SchemaError("empty block", kind + "." + name);
    if (kind == "group") ws.groups.emplace(name, build_group(name, body));
    else if (kind == "2cat") ws.cats.emplace(name, std::make_shared<const Fin2Cat>(build_2cat(name, body)));
    else ws.actions.emplace(name, build_action(name, body, ws));
    ws.origin[name] = origin;
    i = j + 1;
  }
}

Workspace parse_document(const std::string& text) {
  Workspace ws;
  parse_document(text, ws);
  return ws;
}

std::string serialize_group(const FinGroup& g, const std::string& name) {
  check_token(name, "group");
  check_unique(g.elements, "group." + name + ".elements");
  std::string out = fmt::format("group {}\n  elements", name);
  for (const auto& e : g.elements) out += " " + e;
  out += fmt::format("\n  unit {}\n", g.elements[g.unit]);
  for (int a = 0; a < g.order(); ++a) {
    out += "  row " + g.elements[a];
    for (int b = 0; b < g.order(); ++b) out += " " + g.elements[g.mul(a, b)];
    out += "\n";
  }
  return out + "end\n";
}

std::string serialize_2cat(const Fin2Cat& b, const std::string& name) {
  const std::string path = "2cat." + name;
  check_token(name, "2cat");
  std::vector<std::string> n0, n1, n2;
  for (int a = 0; a < b.n0; ++a) n0.push_back(zero_name(b, a));
  for (int x = 0; x < b.num1(); ++x) n1.push_back(b.name1(x));
  for (int a = 0; a < b.num2(); ++a) n2.push_back(b.name2(a));
  check_unique(n0, path + ".objects");
  check_unique(n1, path + ".1cell");
  check_unique(n2, path + ".2cell");
  std::string out = fmt::format("2cat {}\n  objects", name);
  for (const auto& s : n0) out += " " + s;
  out += "\n";
  for (int x = 0; x < b.num1(); ++x) out += fmt::format("  1cell {} {} {}\n", n1[x], n0[b.src1[x]], n0[b.tgt1[x]]);
  for (int a = 0; a < b.num2(); ++a) out += fmt::format("  2cell {} {} {}\n", n2[a], n1[b.src2[a]], n1[b.tgt2[a]]);
  for (int a = 0; a < b.n0; ++a) out += fmt::format("  unit {} {}\n", n0[a], n1[b.unit1[a]]);
  for (int x = 0; x < b.num1(); ++x) out += fmt::format("  id {} {}\n", n1[x], n2[b.id2[x]]);
  for (int x = 0; x < b.num1(); ++x)
    for (int y = 0; y < b.num1(); ++y)
      if (b.hcomp1(x, y) != kNone) out += fmt::format("  h1 {} {} {}\n", n1[x], n1[y], n1[b.hcomp1(x, y)]);
  for (int p = 0; p < b.num2(); ++p)
    for (int q = 0; q < b.num2(); ++q)
      if (b.vcomp(p, q) != kNone) out += fmt::format("  v {} {} {}\n", n2[p], n2[q], n2[b.vcomp(p, q)]);
  for (int p = 0; p < b.num2(); ++p)
    for (int q = 0; q < b.num2(); ++q)
      if (b.hcomp2(p, q) != kNone) out += fmt::format("  h2 {} {} {}\n", n2[p], n2[q], n2[b.hcomp2(p, q)]);
  return out + "end\n";
}

std::string serialize_action(const GroupAction2& a, const std::string& name, const std::string& group_name,
                             const std::string& base_name) {
  check_token(name, "action");
  const Fin2Cat& c = *a.base;
  const FinGroup& G = a.group;
  const int n = a.n();
  check_unique(G.elements, "action." + name + ".group");
  auto o = [&](int x) { return zero_name(c, x); };
  std::string out = fmt::format("action {}\n  group {}\n  base {}\n", name, group_name, base_name);
  for (int g = 0; g < n; ++g) {
    const PseudoFunctor& f = a.Fg(g);
    const std::string& e = G.elements[g];
    for (int x = 0; x < c.n0; ++x) out += fmt::format("  F {} obj {} {}\n", e, o(x), o(f.on0(x)));
    for (int x = 0; x < c.num1(); ++x) out += fmt::format("  F {} map1 {} {}\n", e, c.name1(x), c.name1(f.on1(x)));
    for (int x = 0; x < c.num2(); ++x) out += fmt::format("  F {} map2 {} {}\n", e, c.name2(x), c.name2(f.on2(x)));
    for (int x = 0; x < c.num1(); ++x)
      for (int y = 0; y < c.num1(); ++y)
        if (composable(c, x, y) && f.c(x, y) != default_comp(c, f, x, y))
          out += fmt::format("  F {} comp {} {} {}\n", e, c.name1(x), c.name1(y), c.name2(f.c(x, y)));
    for (int x = 0; x < c.n0; ++x)
      if (f.phi(x) != default_unitc(c, f, x)) out += fmt::format("  F {} unit {} {}\n", e, o(x), c.name2(f.phi(x)));
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const PseudoNat& chi = a.chi_at(g, h);
      const PseudoFunctor& to = a.Fg(G.mul(g, h));
      bool trivial = true;
      for (int x = 0; x < c.n0; ++x) trivial = trivial && chi.c0[x] == c.unit(to.on0(x));
      for (int x = 0; x < c.num1(); ++x) trivial = trivial && chi.c2[x] == c.id(to.on1(x));
      if (trivial) continue;
      for (int x = 0; x < c.n0; ++x)
        out += fmt::format("  chi {} {} c0 {} {}\n", G.elements[g], G.elements[h], o(x), c.name1(chi.c0[x]));
      for (int x = 0; x < c.num1(); ++x)
        out += fmt::format("  chi {} {} c2 {} {}\n", G.elements[g], G.elements[h], c.name1(x), c.name2(chi.c2[x]));
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int f = 0; f < n; ++f) {
        bool trivial = true;
        for (int x = 0; x < c.n0; ++x)
          trivial = trivial &&
                    a.om(g, h, f, x) == c.id(c.h1(a.chi0(G.mul(g, h), f, x), a.chi0(g, h, a.Fg(f).on0(x))));
        if (trivial) continue;
        for (int x = 0; x < c.n0; ++x)
          out += fmt::format("  omega {} {} {} {} {}\n", G.elements[g], G.elements[h], G.elements[f], o(x),
                             c.name2(a.om(g, h, f, x)));
      }
  return out + "end\n";
}

void load_file(const std::string& path, Workspace& ws) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  parse_document(buf.str(), ws, path);
}

void load_directory(const std::string& dir, Workspace& ws) {
  namespace fs = std::filesystem;
  std::vector<std::pair<int, std::string>> files;
  const std::vector<std::string> order = {".grp", ".2cat", ".act"};
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto it = std::find(order.begin(), order.end(), entry.path().extension().string());
    if (it != order.end()) files.emplace_back(static_cast<int>(it - order.begin()), entry.path().string());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) load_file(f.second, ws);
}

}  // namespace catcore
