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


/*
 * Acceptance run: one line per criterion with its verdict and wall time.
 * Exit status 0 iff every criterion passes within its time budget.
 */

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rtk/approx.hpp"
#include "rtk/convex.hpp"
#include "rtk/embed.hpp"
#include "rtk/laws.hpp"
#include "rtk/locality.hpp"
#include "rtk/models.hpp"
#include "rtk/spec.hpp"
#include "rtk/theory.hpp"

namespace {

using namespace rtk;

constexpr std::uint64_t kSeed = 2026;
constexpr double kBudgetSeconds = 10.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_report(const Report& r, std::string detail = {}) {
  if (const Check* c = r.first_failure()) return {false, c->name + (c->witness.empty() ? "" : ": " + c->witness)};
  return {true, std::move(detail)};
}

/// Accumulates named sub-checks and keeps the first failure.
struct Steps {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (!ok && out.ok) out = {false, what};
  }
};

Outcome animals() {
  const StateSpace sp({"cheetah", "leopard", "jaguar", "puma", "lynx"});
  Steps s;
  const auto both = combine(make_spec(sp, {"cheetah", "leopard"}), make_spec(sp, {"jaguar", "leopard"}));
  s.expect(both == make_spec(sp, {"leopard"}), "combination is " + both.to_string());
  bool raised = false;
  try {
    combine(both, make_spec(sp, {"puma", "lynx"}));
  } catch (const Error& e) {
    raised = e.kind() == ErrorKind::Incompatible;
  }
  s.expect(raised, "adding {puma,lynx} did not raise Incompatible");
  if (s.out.ok) s.out.detail = "{leopard}; {puma,lynx} incompatible";
  return s.out;
}

Outcome preorder() { return from_report(laws::preorder(kSeed, 500, 8), "500 theories"); }
Outcome lumpings() { return from_report(laws::lumpings(kSeed, 200), "200 lumpings"); }
Outcome decompositions() { return from_report(laws::decompositions(kSeed, 100), "100 embeddings"); }
Outcome free_composition() { return from_report(laws::free_composition(kSeed, 200), "200 pairs"); }

TransformationMonoid full_two_bits() {
  const StateSpace sp = models::bit_strings(2);
  auto gens = models::bit_maps(2, 1);
  for (const auto& f : models::bit_maps(2, 2)) gens.push_back(f);
  for (const auto& f : models::all_deterministic_maps(sp)) gens.push_back(f);
  return close_monoid(sp, gens);
}

Outcome locality() {
  const TransformationMonoid t = full_two_bits();
  const Subsystem a = subsystem_of(t, models::bit_maps(2, 1));
  const Subsystem b = subsystem_of(t, models::bit_maps(2, 2));
  Steps s;
  s.expect(t.size() == 256, "T has " + std::to_string(t.size()) + " elements");
  s.expect(commutant(a) == b, "commutant(A) = " + commutant(a).describe());
  s.expect(bicommutant(a) == a, "bicommutant(A) = " + bicommutant(a).describe());
  s.expect(join(a, b) == whole(t), "join(A,B) is not T");
  s.expect(centre(whole(t)).describe() == "{id}", "centre(T) = " + centre(whole(t)).describe());
  const Agents ag = derive_agents(a, b);
  for (const auto* th : {&ag.theory_a, &ag.theory_b}) {
    const StateSpace& small = th->space();
    const auto one_bit = close_monoid(small, models::all_deterministic_maps(small));
    s.expect(small.size() == 2 && same_elements(th->monoid(), one_bit),
             "reduced monoid has " + std::to_string(th->monoid().size()) + " elements");
  }
  s.expect(ag.certificate.ok(), "independence certificate fails");
  const Report thm = check_agents_theorem_all(ag);
  if (const Check* c = thm.first_failure()) s.expect(false, c->name + ": " + c->witness);
  if (s.out.ok) s.out.detail = "agents see 4 one-bit maps each";
  return s.out;
}

Outcome lattice() {
  const TransformationMonoid t = full_two_bits();
  const SubsystemLattice l = enumerate_complete(t);
  Steps s;
  const Report r = verify_lattice(l, kSeed);
  if (const Check* c = r.first_failure()) s.expect(false, c->name + ": " + c->witness);
  s.expect(l.nodes[l.bottom] == commutant(whole(t)), "bottom is not commutant(T)");
  s.expect(l.nodes[l.top] == whole(t), "top is not T");
  if (s.out.ok) s.out.detail = std::to_string(l.nodes.size()) + " complete subsystems";
  return s.out;
}

Outcome copies() {
  const TransformationMonoid t = full_two_bits();
  const Subsystem a = subsystem_of(t, models::bit_maps(2, 1));
  const Subsystem b = subsystem_of(t, models::bit_maps(2, 2));
  SubsystemIso iso;
  for (std::size_t i = 0; i < 4; ++i) iso.emplace_back(models::bit_maps(2, 1)[i], models::bit_maps(2, 2)[i]);
  const SpecMap u = models::exchange_bits(2, 1, 2);
  const SpecMap id = SpecMap::identity(t.space());
  Steps s;
  const Report r = verify_swap(a, b, iso, u, u);
  if (const Check* c = r.first_failure()) s.expect(false, c->name + ": " + c->witness);
  const GaloisInsertion ins = insertion_from_lumping(generated_lumping(b).lumping);
  const Specification v(ins.small(), ins.h().image(0));
  const auto two = n_copies(ins, v, {id, u});
  s.expect(two == make_spec(t.space(), {"00"}), "two copies give " + two.to_string());
  s.expect(n_copies(ins, v, {}).is_full(), "zero copies is not Ω");
  if (s.out.ok) s.out.detail = "16 pairs; two copies {00}; none Ω";
  return s.out;
}

Outcome approximations() {
  const ApproximationStructure h = models::hamming_structure(2);
  const StateSpace& sp = h.space();
  Steps s;
  const StructureReport vr = verify_structure(h);
  s.expect(vr.ok() && vr.attainable, "Hamming structure invalid or not attainable");
  s.expect(check_triangle(h, kSeed).ok(), "triangle check fails");
  const auto v = make_spec(sp, {"00"});
  s.expect(is_robust(ResourceTheory(close_monoid(sp, {})), h, v, 1), "{00} not robust under {id}");
  const SpecMap to_ball = SpecMap::constant(sp, make_spec(sp, {"00", "01", "10"}));
  s.expect(!is_robust(ResourceTheory(close_monoid(sp, {to_ball})), h, v, 1), "{00} robust with a constant into its ball");
  const auto red = reduce_structure(h, insertion_from_lumping(models::prefix_lumping(2, 1)));
  s.expect(verify_structure(red).ok(), "reduced structure invalid");
  const Report law = laws::robustness(kSeed, 200);
  std::string note;
  for (const auto& c : law.checks()) {
    if (c.name.find("informational") != std::string::npos) {
      note = "; literal converse refuted (" + c.witness + ")";
      continue;
    }
    if (!c.ok) s.expect(false, c.name + ": " + c.witness);
  }
  if (s.out.ok) s.out.detail = "200 instances" + note;
  return s.out;
}

Outcome convexity() {
  Steps s;
  const Report mix = laws::mixtures(kSeed, 1000);
  if (const Check* c = mix.first_failure()) s.expect(false, c->name + ": " + c->witness);
  const PointSpec seg({RationalPoint{0}, RationalPoint{Rational(1, 2)}, RationalPoint{1}});
  s.expect(extreme_points(seg) == PointSpec({RationalPoint{0}, RationalPoint{1}}), "extreme points of {0,1/2,1}");
  const Report hull = laws::hulls(kSeed, 200);
  if (const Check* c = hull.first_failure()) s.expect(false, c->name + ": " + c->witness);
  if (s.out.ok) s.out.detail = "1000 mixtures, 200 hulls";
  return s.out;
}

std::pair<int, std::string> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (p == nullptr) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli() {
  std::ifstream in(RTK_CLI_CASES);
  if (!in) return {false, "cannot read " + std::string(RTK_CLI_CASES)};
  std::string line;
  std::size_t cases = 0;
  Steps s;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int want = 0;
    ls >> want;
    std::string args;
    std::getline(ls, args);
    for (auto pos = args.find("@DATA@"); pos != std::string::npos; pos = args.find("@DATA@"))
      args.replace(pos, 6, "'" RTK_DATA_DIR "'");
    const std::string cmd = "'" RTK_CLI_PATH "'" + args;
    const auto first = run(cmd), second = run(cmd);
    s.expect(first.second == second.second, "output differs between runs:" + args);
    s.expect(first.first == want, "exit " + std::to_string(first.first) + " instead of " + std::to_string(want) + ":" + args);
    s.expect(first.first == second.first, "exit differs between runs:" + args);
    ++cases;
  }
  s.expect(cases > 0, "no cases");
  if (s.out.ok) s.out.detail = std::to_string(cases) + " invocations, each run twice";
  return s.out;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"animal combination", animals},
      {"pre-order laws", preorder},
      {"lumping gives Galois insertion", lumpings},
      {"decomposition into extensive and intensive factors", decompositions},
      {"free-composition conditions agree", free_composition},
      {"locality derivation on 2-bit strings", locality},
      {"complete subsystems form a bounded lattice", lattice},
      {"copies via coordinate exchange", copies},
      {"approximation structures and robustness", approximations},
      {"convexity laws", convexity},
      {"CLI determinism and exit codes", cli},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kBudgetSeconds) {
      o.ok = false;
      o.detail = "over the time budget; " + o.detail;
    }
    all = all && o.ok;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.0f ms", secs * 1000);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << ms << ")"
              << (o.detail.empty() ? "" : ": " + o.detail) << "\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
