/*
 *   Copyright 2026 The rtk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtk/approx.hpp"
#include "rtk/convex.hpp"
#include "rtk/embed.hpp"
#include "rtk/laws.hpp"
#include "rtk/locality.hpp"
#include "rtk/oracle.hpp"
#include "rtk/theory.hpp"
#include "rtk/theory_file.hpp"

namespace rtk::cli {

namespace {

struct Options {
  std::string file;
  std::string monoid;
  std::vector<std::string> monoids;
  std::string from, to;
  std::vector<std::string> specs;
  std::string dot;
  std::string lumping, lumping_ab, map, embedding, generated_by, local;
  std::string agent, side, of, a, b, iso, u, u_inv;
  std::vector<std::string> swaps;
  std::vector<std::string> seed_sets;
  std::string approx, eps;
  std::vector<std::string> points;
  std::string point;
  std::string order = "ext-int";
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool oracle = false;
  bool all_specs = false;
  bool free = false;
};

/// Human-readable lines followed by a `---` block of key: value pairs.
class Out {
public:
  std::ostringstream text;
  void kv(const std::string& k, const std::string& v) { keys_.emplace_back(k, v); }
  void kv(const std::string& k, std::size_t v) { kv(k, std::to_string(v)); }
  void kv(const std::string& k, bool v) { kv(k, std::string(v ? "yes" : "no")); }
  std::string str() const {
    std::string s = text.str();
    s += "---\n";
    for (const auto& [k, v] : keys_) s += k + ": " + v + "\n";
    return s;
  }

private:
  std::vector<std::pair<std::string, std::string>> keys_;
};

TheoryFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

void need(const std::string& value, const std::string& flag) {
  if (value.empty()) fail(ErrorKind::Usage, "missing " + flag);
}

/// A monoid name gives its elements, anything else one named map.
std::vector<SpecMap> maps_named(const TheoryFile& f, const std::string& name) {
  if (f.has_monoid(name)) return f.monoid(name).elements();
  return {f.map(name)};
}

int verdict(Out& o, bool ok, const std::string& yes, const std::string& no) {
  o.kv("verdict", ok ? yes : no);
  return ok ? kPositive : kNegative;
}

std::string names_of(const TransformationMonoid& t, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    out += (first ? "" : ",") + t.name(i);
    first = false;
  }
  return out + "}";
}

void write_dot(const std::string& path, const std::string& text, Out& o) {
  if (path.empty()) return;
  if (path == "-") {
    o.text << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Usage, "cannot write '" + path + "'");
  out << text;
  o.kv("dot", path);
}

void list_monoid(const TransformationMonoid& t, Out& o) {
  for (std::size_t i = 0; i < t.size(); ++i) o.text << "  " << t.name(i) << ": " << t.element(i).describe() << "\n";
}

void report_lines(const Report& r, Out& o) {
  std::istringstream in(r.format());
  for (std::string line; std::getline(in, line);) o.text << "  " << line << "\n";
}

std::string count_of(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

int oracle_na(const Options& op, Out& o) {
  if (op.oracle) o.kv("oracle", std::string("not available for this command"));
  return 0;
}

int cmd_check(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  bool ok = true;
  const std::size_t states = f.states ? f.states->size() : 0;
  o.text << "states: " << states << "\n";
  for (const auto& m : f.maps) o.text << "map " << m.name << ": " << m.map.describe() << "\n";
  for (const auto& l : f.lumpings)
    o.text << "lumping " << l.name << ": " << (Lumping(l.map).is_partition() ? "partition" : "non-partition") << "\n";
  for (const auto& e : f.embeddings)
    o.text << "embedding " << e.name << ": " << e.map.source().size() << " → " << e.map.target().size() << " states\n";
  for (const auto& d : f.monoids) o.text << "monoid " << d.name << ": " << count_of(f.monoid(d.name).size(), "element") << "\n";
  for (const auto& d : f.approximations) {
    const StructureReport r = verify_structure(f.approximation(d.name));
    ok = ok && r.ok();
    o.text << "approx " << d.name << ": " << (r.ok() ? "valid" : "invalid") << "\n";
    if (!r.ok()) report_lines(r.report, o);
  }
  for (const auto& p : f.point_sets) o.text << "points " << p.name << ": " << p.points.size() << " in dimension " << p.points.dim() << "\n";
  for (const auto& i : f.isos) o.text << "iso " << i.name << ": " << i.pairs.size() << " pairs\n";
  o.kv("states", states);
  o.kv("maps", f.maps.size());
  o.kv("monoids", f.monoids.size());
  oracle_na(op, o);
  return verdict(o, ok, "valid", "invalid");
}

ReachWitness reach_with(const Options& op, const ResourceTheory& t, const Specification& v, const Specification& w) {
  return op.oracle ? oracle::reaches(t, v, w) : reaches(t, v, w);
}

int cmd_reach(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  need(op.monoid, "--monoid");
  const ResourceTheory t(f.monoid(op.monoid));
  const Specification v = f.spec(op.from), w = f.spec(op.to);
  const ReachWitness r = reach_with(op, t, v, w);
  o.text << v.to_string() << " → " << w.to_string() << ": " << (r.found ? "reachable" : "unreachable") << "\n";
  if (r.found) o.text << "  via " << r.name << ": " << r.map->describe() << "\n";
  o.kv("monoid_size", t.monoid().size());
  o.kv("engine", std::string(op.oracle ? "oracle" : "kernel"));
  if (r.found) o.kv("witness", r.name);
  return verdict(o, r.found, "reachable", "unreachable");
}

int cmd_free(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  need(op.monoid, "--monoid");
  if (op.specs.size() != 1) fail(ErrorKind::Usage, "free takes one --spec");
  const ResourceTheory t(f.monoid(op.monoid));
  const Specification v = f.spec(op.specs[0]);
  const ReachWitness r = reach_with(op, t, Specification::full(t.space()), v);
  o.text << v.to_string() << " is " << (r.found ? "free" : "not free") << "\n";
  if (r.found) o.text << "  prepared by " << r.name << "\n";
  o.kv("engine", std::string(op.oracle ? "oracle" : "kernel"));
  if (r.found) o.kv("witness", r.name);
  return verdict(o, r.found, "free", "not free");
}

int cmd_quotient(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  need(op.monoid, "--monoid");
  const ResourceTheory t(f.monoid(op.monoid));
  std::vector<Specification> cand;
  for (const auto& s : op.specs) cand.push_back(f.spec(s));
  if (cand.empty() && !op.all_specs) fail(ErrorKind::Usage, "give --spec candidates or --all-specs");
  const Quotient q = op.all_specs ? quotient_all(t) : quotient(t, cand);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    std::string l;
    for (auto i : q.classes[c]) l += (l.empty() ? "" : " ~ ") + q.specs[i].to_string();
    labels.push_back(l);
    o.text << "class " << c << (c == q.top_class ? " (free)" : "") << ": " << l << "\n";
  }
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    for (std::size_t j = 0; j < q.classes.size(); ++j)
      if (i != j && q.reach[i][j]) o.text << "  " << i << " → " << j << "\n";
  write_dot(op.dot, export_dot(labels, q.reach, "quotient"), o);
  o.kv("specifications", q.specs.size());
  o.kv("classes", q.classes.size());
  oracle_na(op, o);
  return verdict(o, true, "computed", "");
}

int cmd_conserved(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  need(op.monoid, "--monoid");
  if (op.specs.size() != 1) fail(ErrorKind::Usage, "conserved takes one --spec");
  const ResourceTheory t(f.monoid(op.monoid));
  const Specification v = f.spec(op.specs[0]);
  const bool c = is_conserved(t, v);
  o.text << v.to_string() << " is " << (c ? "conserved" : "not conserved") << "\n";
  const auto ri = resource_independent_maps(t);
  for (const auto& r : ri) o.text << "  resource-independent: " << t.monoid().name(r.index) << " ↦ " << r.value.to_string() << "\n";
  o.kv("resource_independent", ri.size());
  oracle_na(op, o);
  return verdict(o, c, "conserved", "not conserved");
}

int cmd_combine(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  if (!op.monoids.empty()) {
    if (op.monoids.size() != 2) fail(ErrorKind::Usage, "combine takes two --monoid-of values");
    const ResourceTheory c = combine_theories(ResourceTheory(f.monoid(op.monoids[0])), ResourceTheory(f.monoid(op.monoids[1])));
    o.text << "combined theory has " << c.monoid().size() << " elements\n";
    list_monoid(c.monoid(), o);
    o.kv("elements", c.monoid().size());
    return verdict(o, true, "combined", "");
  }
  if (op.specs.size() < 2) fail(ErrorKind::Usage, "combine takes at least two --spec values");
  Specification acc = f.spec(op.specs[0]);
  for (std::size_t i = 1; i < op.specs.size(); ++i) {
    const Specification next = f.spec(op.specs[i]);
    try {
      acc = rtk::combine(acc, next);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Incompatible) throw;
      o.text << "incompatible: " << acc.to_string() << " and " << next.to_string() << " share no state\n";
      o.kv("error", std::string("Incompatible"));
      return verdict(o, false, "", "incompatible");
    }
  }
  o.text << "combined: " << acc.to_string() << "\n";
  o.kv("result", acc.to_string());
  return verdict(o, true, "compatible", "");
}

int cmd_lumping(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  if (!op.generated_by.empty()) {
    const GeneratedLumping g = lumping_from_maps(f.space(), maps_named(f, op.generated_by));
    o.text << "generated lumping: " << g.lumping.map().describe() << "\n";
    o.kv("iterations", g.iterations);
    o.kv("partition", g.lumping.is_partition());
    return verdict(o, true, "lumping", "");
  }
  const std::string name = !op.lumping.empty() ? op.lumping : op.map;
  need(name, "--lumping or --map");
  const SpecMap m = f.map(name);
  const Report r = verify_lumping(m);
  report_lines(r, o);
  if (!r.ok()) return verdict(o, false, "", "not a lumping");
  const Lumping l(m);
  o.kv("partition", l.is_partition());
  if (!op.local.empty()) {
    const bool loc = is_local(l, f.spec(op.local));
    o.text << f.spec(op.local).to_string() << " is " << (loc ? "local" : "not local") << "\n";
    o.kv("local", loc);
    return verdict(o, loc, "local", "not local");
  }
  return verdict(o, true, "lumping", "");
}

int cmd_embed(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  if (!op.lumping.empty()) {
    const GaloisInsertion ins = insertion_from_lumping(f.lumping(op.lumping));
    o.text << "e: " << ins.e().describe() << "\nh: " << ins.h().describe() << "\n";
    const Report r = verify_insertion(ins, op.seed);
    report_lines(r, o);
    o.kv("small_states", ins.small().size());
    o.kv("lumping_recovered", ins.lumping_map() == f.lumping(op.lumping).map());
    return verdict(o, r.ok(), "insertion", "not an insertion");
  }
  need(op.embedding, "--embedding or --lumping");
  const Embedding e = classify_embedding(f.embedding(op.embedding));
  o.text << op.embedding << ": " << to_string(e.kind) << "\n";
  if (e.adjoint) o.text << "  adjoint h: " << e.adjoint->describe() << "\n";
  o.kv("kind", to_string(e.kind));
  return verdict(o, true, "embedding", "");
}

int cmd_decompose(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.embedding, "--embedding");
  FactorOrder order = FactorOrder::ExtensiveAfterIntensive;
  if (op.order == "int-ext") order = FactorOrder::IntensiveAfterExtensive;
  else if (op.order != "ext-int") fail(ErrorKind::Usage, "--order is ext-int or int-ext");
  const SpecMap& e = f.embedding(op.embedding);
  const Decomposition d = decompose_embedding(e, order);
  std::string mid;
  for (const auto& l : d.middle.labels()) mid += (mid.empty() ? "" : " ") + l;
  o.text << "middle space: " << mid << "\n";
  o.text << "extensive: " << d.extensive.describe() << " (" << to_string(classify_embedding(d.extensive).kind) << ")\n";
  o.text << "intensive: " << d.intensive.describe() << " (" << to_string(classify_embedding(d.intensive).kind) << ")\n";
  const bool same = d.product() == e;
  o.kv("order", op.order);
  o.kv("middle_states", d.middle.size());
  o.kv("product_matches", same);
  return verdict(o, same, "decomposed", "product differs");
}

int cmd_nest(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.lumping, "--lumping (A)");
  need(op.lumping_ab, "--lumping-ab (AB)");
  const GaloisInsertion to_a = insertion_from_lumping(f.lumping(op.lumping));
  const GaloisInsertion to_ab = insertion_from_lumping(f.lumping(op.lumping_ab));
  const GaloisInsertion mid = nest_middle(to_a, to_ab);
  o.text << "A into AB: e " << mid.e().describe() << "\n            h " << mid.h().describe() << "\n";
  const Report r = verify_insertion(mid, op.seed);
  report_lines(r, o);
  const GaloisInsertion again = nest_compose(mid, to_ab);
  const bool same = again.lumping_map() == to_a.lumping_map();
  o.text << "composing back through AB " << (same ? "recovers" : "does not recover") << " the lumping of A\n";
  o.kv("middle_insertion", r.ok());
  o.kv("roundtrip", same);
  return verdict(o, r.ok() && same, "nested", "not nested");
}

int cmd_restrict(const Options& op, Out& o, bool effective) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.monoid, "--monoid");
  need(op.agent, "--agent");
  need(op.lumping, "--lumping");
  const ResourceTheory t(f.monoid(op.monoid));
  const TransformationMonoid agent = f.monoid(op.agent);
  const GaloisInsertion ins = insertion_from_lumping(f.lumping(op.lumping));
  const ResourceTheory r = effective ? effective_theory(t, agent, ins, f.spec(op.side)) : restrict_theory(t, agent, ins);
  std::string small;
  for (const auto& l : r.space().labels()) small += (small.empty() ? "" : " ") + l;
  o.text << "reduced space: " << small << "\n";
  list_monoid(r.monoid(), o);
  o.kv("reduced_states", r.space().size());
  o.kv("elements", r.monoid().size());
  return verdict(o, true, "restricted", "");
}

Subsystem subsystem_named(const TheoryFile& f, const TransformationMonoid& t, const std::string& name) {
  return subsystem_of(t, maps_named(f, name));
}

int cmd_commutant(const Options& op, Out& o, bool bi) {
  const TheoryFile f = load(op.file);
  need(op.monoid, "--monoid");
  need(op.of, "--of");
  const TransformationMonoid t = f.monoid(op.monoid);
  const Subsystem a = subsystem_named(f, t, op.of);
  if (!bi) {
    ElementSet members;
    if (op.oracle) {
      members = ElementSet(t.size());
      for (auto i : oracle::commutant(t, a.maps())) members.insert(i);
    } else {
      members = commutant(a).members();
    }
    o.text << "commutant of " << op.of << ": " << names_of(t, members) << "\n";
    o.kv("engine", std::string(op.oracle ? "oracle" : "kernel"));
    o.kv("size", members.size());
    return verdict(o, true, "computed", "");
  }
  oracle_na(op, o);
  const Subsystem bc = bicommutant(a);
  o.text << "bicommutant of " << op.of << ": " << bc.describe() << "\n";
  const bool complete = bc == a;
  o.kv("size", bc.size());
  o.kv("complete", complete);
  return verdict(o, complete, "complete", "not complete");
}

int cmd_subsystems(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.monoid, "--monoid");
  const TransformationMonoid t = f.monoid(op.monoid);
  std::vector<std::vector<SpecMap>> seeds;
  for (const auto& s : op.seed_sets) seeds.push_back(maps_named(f, s));
  const SubsystemLattice lat = enumerate_complete(t, seeds);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const std::string tag = i == lat.bottom ? " (bottom)" : i == lat.top ? " (top)" : "";
    const std::string what = lat.nodes[i].size() <= 8 ? lat.nodes[i].describe() : count_of(lat.nodes[i].size(), "element");
    o.text << "node " << i << tag << ": " << what << "\n";
    labels.push_back(what);
  }
  const Report r = verify_lattice(lat, op.seed);
  report_lines(r, o);
  write_dot(op.dot, export_dot(labels, lat.leq, "subsystems"), o);
  o.kv("nodes", lat.nodes.size());
  o.kv("centreless", is_centreless(whole(t)));
  return verdict(o, r.ok(), "bounded lattice", "lattice laws fail");
}

int cmd_independence(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.monoid, "--monoid");
  need(op.a, "--a");
  need(op.b, "--b");
  const TransformationMonoid t = f.monoid(op.monoid);
  const Subsystem a = subsystem_named(f, t, op.a), b = subsystem_named(f, t, op.b);
  const bool ind = are_independent(a, b);
  o.text << op.a << " and " << op.b << " are " << (ind ? "independent" : "not independent") << "\n";
  o.kv("independent", ind);
  if (op.free) {
    const FreeComposition fc = check_freely_composable(a, b);
    o.text << "free composition condition: " << (fc.condition ? "holds" : "fails (" + fc.witness + ")") << "\n";
    report_lines(fc.conclusion, o);
    o.kv("free_condition", fc.condition);
    if (!fc.condition || !fc.conclusion.ok()) return verdict(o, false, "freely composable", "not freely composable");
  }
  if (!ind || !is_complete(a) || !is_complete(b)) return verdict(o, ind, "independent", "not independent");
  const Agents ag = derive_agents(a, b);
  o.text << "agent A reduced monoid:\n";
  list_monoid(ag.theory_a.monoid(), o);
  o.text << "agent B reduced monoid:\n";
  list_monoid(ag.theory_b.monoid(), o);
  report_lines(ag.certificate, o);
  const Report thm = check_agents_theorem_all(ag);
  report_lines(thm, o);
  o.kv("agent_a_elements", ag.theory_a.monoid().size());
  o.kv("agent_b_elements", ag.theory_b.monoid().size());
  return verdict(o, ag.certificate.ok() && thm.ok(), "independent agents", "certificate fails");
}

int cmd_swap(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.monoid, "--monoid");
  need(op.iso, "--iso");
  need(op.u, "--u");
  const TransformationMonoid t = f.monoid(op.monoid);
  const Subsystem a = subsystem_named(f, t, op.a), b = subsystem_named(f, t, op.b);
  const SpecMap u = f.map(op.u), u_inv = f.map(op.u_inv.empty() ? op.u : op.u_inv);
  const Report r = verify_swap(a, b, f.iso(op.iso), u, u_inv);
  report_lines(r, o);
  return verdict(o, r.ok(), "swap", "not a swap");
}

int cmd_copies(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.lumping, "--lumping");
  if (op.specs.size() != 1) fail(ErrorKind::Usage, "copies takes one --spec on the reduced space");
  const GaloisInsertion ins = insertion_from_lumping(f.lumping(op.lumping));
  std::vector<std::string> names;
  std::istringstream in(op.specs[0]);
  for (std::string w; in >> w;) names.push_back(w);
  const Specification v = make_spec(ins.small(), names);
  std::vector<SpecMap> swaps;
  for (const auto& s : op.swaps) swaps.push_back(f.map(s));
  o.kv("copies", swaps.size());
  try {
    const Specification c = n_copies(ins, v, swaps);
    o.text << swaps.size() << " copies of " << v.to_string() << ": " << c.to_string() << "\n";
    o.kv("result", c.to_string());
    return verdict(o, true, "copied", "");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Incompatible) throw;
    o.text << e.what() << "\n";
    return verdict(o, false, "", "incompatible");
  }
}

int cmd_approx_verify(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.approx, "--approx");
  const ApproximationStructure s = f.approximation(op.approx);
  const StructureReport r = verify_structure(s);
  report_lines(r.report, o);
  bool ok = r.ok();
  if (!s.index().chains().empty()) {
    const Report tri = check_triangle(s, op.seed);
    report_lines(tri, o);
    ok = ok && tri.ok();
  }
  const auto space = approximation_space(s);
  o.text << "approximation space:";
  for (const auto& v : space) o.text << " " << v.to_string();
  o.text << "\n";
  o.kv("attainable", r.attainable);
  o.kv("approximation_space", space.size());
  o.kv("seed", std::to_string(op.seed));
  return verdict(o, ok, "valid", "invalid");
}

int cmd_approx_robust(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.monoid, "--monoid");
  need(op.approx, "--approx");
  need(op.eps, "--eps");
  if (op.specs.size() != 1) fail(ErrorKind::Usage, "approx-robust takes one --spec");
  const ResourceTheory t(f.monoid(op.monoid));
  const ApproximationStructure s = f.approximation(op.approx);
  const Specification v = f.spec(op.specs[0]);
  const std::size_t e = s.index().index(op.eps);
  const Report st = is_stable(t, s);
  report_lines(st, o);
  const bool rob = is_robust(t, s, v, e);
  o.text << v.to_string() << "^" << op.eps << " = " << approximate(s, v, e).to_string() << " is "
         << (rob ? "not free" : "free") << "\n";
  o.kv("stable", st.ok());
  o.kv("robust", rob);
  return verdict(o, rob, "robust", "not robust");
}

int cmd_approx_reduce(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  need(op.approx, "--approx");
  need(op.lumping, "--lumping");
  const ApproximationStructure s = f.approximation(op.approx);
  const GaloisInsertion ins = insertion_from_lumping(f.lumping(op.lumping));
  const ApproximationStructure red = reduce_structure(s, ins);
  for (std::size_t e = 0; e < red.index().size(); ++e)
    o.text << "ε=" << red.index().label(e) << ": " << red.at(e).describe() << "\n";
  const StructureReport r = verify_structure(red);
  report_lines(r.report, o);
  o.kv("preserves", preserves_approximations(s, ins));
  o.kv("attainable", r.attainable);
  return verdict(o, r.ok(), "valid", "invalid");
}

RationalPoint parse_point(const std::string& text) {
  std::vector<Rational> c;
  std::istringstream in(text);
  for (std::string w; in >> w;) c.push_back(parse_rational(w));
  return RationalPoint(std::move(c));
}

int cmd_hull(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  if (op.points.size() != 1) fail(ErrorKind::Usage, "hull takes one --points");
  need(op.point, "--point");
  const PointSpec& v = f.points(op.points[0]);
  const RationalPoint x = parse_point(op.point);
  const bool in = op.oracle ? oracle::hull_contains(v, x) : hull_contains(v, x);
  o.text << "(" << x.to_string() << ") is " << (in ? "inside" : "outside") << " the hull of " << op.points[0] << "\n";
  o.kv("engine", std::string(op.oracle ? "oracle" : "simplex"));
  return verdict(o, in, "inside", "outside");
}

int cmd_extreme(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  if (op.points.size() != 1) fail(ErrorKind::Usage, "extreme takes one --points");
  const PointSpec e = extreme_points(f.points(op.points[0]));
  o.text << format_points(e);
  o.kv("extreme_points", e.size());
  return verdict(o, true, "computed", "");
}

int cmd_prob_equiv(const Options& op, Out& o) {
  const TheoryFile f = load(op.file);
  oracle_na(op, o);
  if (op.points.size() != 2) fail(ErrorKind::Usage, "prob-equiv takes two --points");
  const bool eq = prob_equivalent(f.points(op.points[0]), f.points(op.points[1]));
  o.text << op.points[0] << " and " << op.points[1] << " are " << (eq ? "" : "not ") << "probabilistically equivalent\n";
  return verdict(o, eq, "equivalent", "not equivalent");
}

int cmd_laws(const Options& op, Out& o) {
  oracle_na(op, o);
  static const std::map<std::string, std::function<Report(std::uint64_t)>> suites = {
      {"preorder", [](std::uint64_t s) { return laws::preorder(s); }},
      {"lumpings", [](std::uint64_t s) { return laws::lumpings(s); }},
      {"decompositions", [](std::uint64_t s) { return laws::decompositions(s); }},
      {"free-composition", [](std::uint64_t s) { return laws::free_composition(s); }},
      {"robustness", [](std::uint64_t s) { return laws::robustness(s); }},
      {"mixtures", [](std::uint64_t s) { return laws::mixtures(s); }},
      {"hulls", [](std::uint64_t s) { return laws::hulls(s); }},
      {"all", [](std::uint64_t s) { return laws::all(s); }},
  };
  auto it = suites.find(op.suite);
  if (it == suites.end()) fail(ErrorKind::Usage, "unknown suite '" + op.suite + "'");
  const Report r = it->second(op.seed);
  o.text << r.format();
  o.kv("seed", std::to_string(op.seed));
  o.kv("checks", r.checks().size());
  return verdict(o, r.ok(), "all laws hold", "counterexample found");
}

int exit_for(const Error& e) { return e.kind() == ErrorKind::CapExceeded ? kCapExceeded : kInputError; }

} // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite resource theories of knowledge: reachability, embeddings, subsystems, approximations and convexity."};
  app.name("rtk");
  app.require_subcommand(1);
  Options op;

  using Handler = std::function<int(const Options&, Out&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const std::string& name, const std::string& help, Handler h, bool file = true) {
    CLI::App* c = app.add_subcommand(name, help);
    if (file) c->add_option("file", op.file, "theory file")->required();
    c->add_flag("--oracle", op.oracle, "use the serial reference implementation");
    c->add_option("--seed", op.seed, "seed for sampled checks");
    commands.emplace_back(c, std::move(h));
    return c;
  };

  auto* c = add("check", "parse and validate a theory file", cmd_check);
  c = add("reach", "decide V → W", cmd_reach);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--from", op.from)->required();
  c->add_option("--to", op.to)->required();
  c = add("free", "decide Ω → V", cmd_free);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--spec", op.specs)->required();
  c = add("quotient", "mutual-convertibility classes", cmd_quotient);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--spec", op.specs, "candidate specification");
  c->add_flag("--all-specs", op.all_specs, "every specification (at most five states)");
  c->add_option("--dot", op.dot, "write the class order as DOT, - for the report");
  c = add("conserved", "decide f(V) = V for all f", cmd_conserved);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--spec", op.specs)->required();
  c = add("combine", "combine specifications, or theories with --monoid-of", cmd_combine);
  c->add_option("--spec", op.specs);
  c->add_option("--monoid-of", op.monoids);
  c = add("lumping", "verify a lumping or generate one", cmd_lumping);
  c->add_option("--lumping", op.lumping);
  c->add_option("--map", op.map);
  c->add_option("--generated-by", op.generated_by);
  c->add_option("--local", op.local, "test a specification for locality");
  c = add("embed", "classify an embedding or build the insertion of a lumping", cmd_embed);
  c->add_option("--embedding", op.embedding);
  c->add_option("--lumping", op.lumping);
  c = add("decompose", "factor an embedding", cmd_decompose);
  c->add_option("--embedding", op.embedding)->required();
  c->add_option("--order", op.order, "ext-int or int-ext");
  c = add("nest", "embed A into AB from lumpings of A and AB", cmd_nest);
  c->add_option("--lumping", op.lumping)->required();
  c->add_option("--lumping-ab", op.lumping_ab)->required();
  for (bool eff : {false, true}) {
    c = add(eff ? "effective" : "restrict", eff ? "effective theory with a side resource" : "restricted agent theory",
            [eff](const Options& o2, Out& out2) { return cmd_restrict(o2, out2, eff); });
    c->add_option("--monoid", op.monoid)->required();
    c->add_option("--agent", op.agent)->required();
    c->add_option("--lumping", op.lumping)->required();
    if (eff) c->add_option("--side", op.side)->required();
  }
  for (bool bi : {false, true}) {
    c = add(bi ? "bicommutant" : "commutant", bi ? "bicommutant and completeness" : "commutant in the monoid",
            [bi](const Options& o2, Out& out2) { return cmd_commutant(o2, out2, bi); });
    c->add_option("--monoid", op.monoid)->required();
    c->add_option("--of", op.of)->required();
  }
  c = add("subsystems", "lattice of complete subsystems", cmd_subsystems);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--seed-set", op.seed_sets, "complete these instead of singletons");
  c->add_option("--dot", op.dot, "write the lattice as DOT, - for the report");
  c = add("independence", "independence and derived agents", cmd_independence);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--a", op.a)->required();
  c->add_option("--b", op.b)->required();
  c->add_flag("--free", op.free, "also check the freely composable condition and its consequence");
  c = add("swap", "verify a swap between identical subsystems", cmd_swap);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--a", op.a)->required();
  c->add_option("--b", op.b)->required();
  c->add_option("--iso", op.iso)->required();
  c->add_option("--u", op.u)->required();
  c->add_option("--u-inv", op.u_inv);
  c = add("copies", "intersection of swapped copies", cmd_copies);
  c->add_option("--lumping", op.lumping)->required();
  c->add_option("--spec", op.specs)->required();
  c->add_option("--swap", op.swaps);
  c = add("approx-verify", "approximation structure laws", cmd_approx_verify);
  c->add_option("--approx", op.approx)->required();
  c = add("approx-robust", "stability and robustness", cmd_approx_robust);
  c->add_option("--monoid", op.monoid)->required();
  c->add_option("--approx", op.approx)->required();
  c->add_option("--spec", op.specs)->required();
  c->add_option("--eps", op.eps)->required();
  c = add("approx-reduce", "reduce a structure through a lumping", cmd_approx_reduce);
  c->add_option("--approx", op.approx)->required();
  c->add_option("--lumping", op.lumping)->required();
  c = add("hull", "convex hull membership", cmd_hull);
  c->add_option("--points", op.points)->required();
  c->add_option("--point", op.point)->required();
  c = add("extreme", "extreme points", cmd_extreme);
  c->add_option("--points", op.points)->required();
  c = add("prob-equiv", "equal convex hulls", cmd_prob_equiv);
  c->add_option("--points", op.points)->required();
  c = add("laws", "run the seeded property suite", cmd_laws, false);
  c->add_option("--suite", op.suite, "preorder, lumpings, decompositions, free-composition, robustness, mixtures, hulls or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg, help;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? kPositive : kInputError;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Out o;
    o.kv("command", sub->get_name());
    try {
      const int code = handler(op, o);
      o.kv("exit", std::to_string(code));
      out << o.str();
      return code;
    } catch (const Error& e) {
      const int code = exit_for(e);
      err << "rtk " << sub->get_name() << ": " << e.what() << "\n";
      Out f;
      f.kv("command", sub->get_name());
      f.kv("error", std::string(to_string(e.kind())));
      f.kv("exit", std::to_string(code));
      out << f.str();
      return code;
    }
  }
  return kInputError;
}

} // namespace rtk::cli
