/*
 * Copyright (c) 2026, The gscbench Authors
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


// Acceptance run: one line per criterion, exit status 1 if any fails.
// Pass criterion numbers as arguments to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsc/axioms.hpp"
#include "gsc/composer.hpp"
#include "gsc/derived.hpp"
#include "gsc/equivalence.hpp"
#include "gsc/error.hpp"
#include "gsc/fixtures.hpp"
#include "gsc/generate.hpp"
#include "gsc/properties.hpp"
#include "gsc/protocol.hpp"
#include "gsc/semantics.hpp"
#include "gsc/synthesizer.hpp"

namespace gsc {
namespace {

const ObjectSemantics& S = sequence_semantics();
const Fences kPush{true, false};
const Fences kPull{false, true};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    ok = false;
    if (failures.size() < 10) failures.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<std::string> update_ids(const Log& log) {
  std::vector<std::string> out;
  for (const LogEntry& e : log)
    if (S.is_update(e.op)) out.push_back(e.id);
  return out;
}

const Value& rval_of(const World& w, const std::string& id) {
  for (const SimEvent& e : w.events)
    if (e.event.id == id) return e.event.rval;
  throw ModelError("no event " + id);
}

bool vis_equal(const AbstractExecution& a, const AbstractExecution& b) {
  // Matched by event id.
  for (EventIdx e = 0; e < a.history.size(); ++e)
    for (EventIdx f = 0; f < a.history.size(); ++f)
      if (a.vis.contains(e, f) !=
          b.vis.contains(b.history.index_of(a.history[e].id), b.history.index_of(a.history[f].id)))
        return false;
  return true;
}

bool projections_match(const PerObjectWitnesses& w, const AbstractExecution& c) {
  for (const auto& [x, a] : w.per_object) {
    const auto map = projection_map(w.history, x);
    for (EventIdx p = 0; p < map.size(); ++p)
      for (EventIdx q = 0; q < map.size(); ++q)
        if (c.vis.contains(map[p], map[q]) != a.vis.contains(p, q)) return false;
  }
  return true;
}

// Shared between criteria 3-5 and 7.
struct Corpus {
  std::vector<Program> programs;
  std::vector<std::pair<FencePattern, History>> histories;
  std::vector<AbstractExecution> executions;
  std::size_t states = 0;
  bool built = false;
};

Corpus& corpus() {
  static Corpus c;
  if (c.built) return c;
  CorpusOptions opts;
  const auto patterns = opts.fences;
  c.programs = corpus_programs(opts);
  for (std::size_t i = 0; i < c.programs.size(); ++i) {
    EnumerationResult r = enumerate_histories(c.programs[i], S);
    const FencePattern f = patterns[i % patterns.size()];
    for (History& h : r.histories) c.histories.push_back({f, std::move(h)});
    for (AbstractExecution& a : r.executions) c.executions.push_back(std::move(a));
    c.states += r.states;
  }
  c.built = true;
  return c;
}

void litmus(Outcome& o) {
  struct Row {
    const char* label;
    History h;
    bool member;
  };
  const std::vector<Row> rows = {
      {"fig3a", fig3a(), true},
      {"fig3b", fig3b(), true},
      {"fig3c", fig3c(), true},
      {"fig3d", fig3d(), false},
      {"fig3a pull on f2", set_fences(fig3a(), {{"f2", kPull}}), false},
      {"fig3b push on e1", set_fences(fig3b(), {{"e1", kPush}}), false},
      {"fig3c push appends, pull reads",
       set_fences(fig3c(), {{"e1", kPush}, {"f1", kPush}, {"e2", kPull}, {"f2", kPull}}), false},
  };
  double slowest = 0;
  for (const Row& r : rows) {
    const auto t = Clock::now();
    const MembershipResult m = is_gsc(r.h, S);
    const double dt = seconds_since(t);
    slowest = std::max(slowest, dt);
    o.expect(m.member == r.member, std::string(r.label) + ": expected " +
                                       (r.member ? "member" : "non-member"));
    o.expect(dt <= 1.0, std::string(r.label) + " took " + std::to_string(dt) + "s");
  }
  o.detail << rows.size() << " verdicts, slowest " << slowest * 1000 << " ms";
}

void traces(Outcome& o) {
  using Strings = std::vector<std::string>;
  const World a1 = run_schedule(trace_a1(), S);
  o.expect(rval_of(a1, "e2") == seq({1, 2}) && rval_of(a1, "f2") == seq({2}), "A.1 return values");
  o.expect(same_history(extract_history(a1), fig3a()), "A.1 history differs from fig3a");
  const World a2 = run_schedule(trace_a2(), S);
  o.expect(rval_of(a2, "f2") == seq({2, 1}), "A.2 return value");
  o.expect(same_history(extract_history(a2), fig3b()), "A.2 history differs from fig3b");
  const World a3 = run_schedule(trace_a3(), S);
  o.expect(rval_of(a3, "e2") == seq({}) && rval_of(a3, "f2") == seq({}), "A.3 return values");
  o.expect(same_history(extract_history(a3), fig3c()), "A.3 history differs from fig3c");
  // Final states as tabulated, which list updates only.
  struct Final {
    const World* w;
    Strings log;
    const char* name;
  };
  for (const Final& f : {Final{&a1, {"e1", "f1"}, "A.1"}, Final{&a2, {"f1", "e1"}, "A.2"},
                         Final{&a3, {"e1", "f1"}, "A.3"}}) {
    o.expect(update_ids(f.w->server_log) == f.log, std::string(f.name) + " server log");
    for (const auto& [c, st] : f.w->clients) {
      o.expect(update_ids(st.known) == f.log, std::string(f.name) + " known of " + c);
      o.expect(update_ids(st.unacked).empty(), std::string(f.name) + " unacked of " + c);
      o.expect(update_ids(st.pending).empty(), std::string(f.name) + " pending of " + c);
    }
  }
  o.detail << "3 traces";
}

void soundness(Outcome& o) {
  const auto t = Clock::now();
  Corpus& c = corpus();
  std::size_t failed = 0, nonmember = 0;
  for (const AbstractExecution& a : c.executions) {
    const AxiomReport r = check_axioms(a, S);
    if (!r.all_pass()) {
      ++failed;
      o.fail(r.summary(a.history));
    }
  }
  for (const auto& [f, h] : c.histories) {
    if (!is_gsc(h, S).member) {
      ++nonmember;
      o.fail("enumerated history rejected: " + canonical_key(h));
    }
  }
  o.detail << c.programs.size() << " programs, " << c.states << " states, " << c.histories.size()
           << " histories, " << c.executions.size() << " executions, " << failed
           << " axiom failures, " << nonmember << " rejected histories (" << seconds_since(t)
           << " s)";
}

void completeness(Outcome& o) {
  Corpus& c = corpus();
  std::size_t diverged = 0;
  for (const auto& [f, h] : c.histories) {
    const MembershipResult m = is_gsc(h, S);
    if (!m.member) {
      o.fail("not a member: " + canonical_key(h));
      continue;
    }
    try {
      const Schedule s = synthesize_schedule(*m.witness, S);
      const AbstractExecution b = extract_execution(run_schedule(s, S));
      std::string why;
      const bool same = same_history(b.history, h, &why) && b.history.rt.count() == h.rt.count();
      if (!same || !vis_equal(*m.witness, b)) {
        ++diverged;
        o.fail("divergence on " + canonical_key(h) + " " + why);
      }
    } catch (const std::exception& e) {
      ++diverged;
      o.fail(std::string("synthesis failed: ") + e.what());
    }
  }
  // Every enumerated execution as well, not just one witness per history.
  std::size_t replayed = 0;
  for (const AbstractExecution& a : c.executions) {
    try {
      const AbstractExecution b = extract_execution(run_schedule(synthesize_schedule(a, S), S));
      if (!same_history(b.history, a.history) || !vis_equal(a, b)) {
        ++diverged;
        o.fail("execution divergence on " + canonical_key(a.history));
      }
      ++replayed;
    } catch (const std::exception& e) {
      ++diverged;
      o.fail(std::string("synthesis failed: ") + e.what());
    }
  }
  o.detail << c.histories.size() << " member histories and " << replayed
           << " executions replayed, " << diverged << " divergences";
}

void theorem1(Outcome& o) {
  Corpus& c = corpus();
  std::size_t plain = 0, erased = 0;
  for (const auto& [f, h] : c.histories) {
    if (h.size() > 5) continue;
    if (f == FencePattern::None) {
      const MembershipResult m = is_gsc(h, S);
      if (!m.member) continue;
      ++plain;
      const AbstractExecution d = to_dual_tso(*m.witness, S);
      const AbstractExecution t = to_tso(*m.witness, S);
      o.expect(check_axioms(d, S).all_pass(), "to_dual_tso output fails: " + canonical_key(h));
      o.expect(check_axioms(t, S).all_pass(), "to_tso output fails: " + canonical_key(h));
    } else if (f == FencePattern::AllPush || f == FencePattern::AllPull) {
      if (!is_gsc(h, S).member) continue;
      ++erased;
      o.expect(is_gsc(erase_fences(h), S).member, "erased history rejected: " + canonical_key(h));
    }
  }
  o.expect(is_gsc(mk_fence_transform(fig3a(), FenceKind::Push), S).member, "fig3a all-push");
  o.expect(!is_gsc(mk_fence_transform(fig3a(), FenceKind::Pull), S).member, "fig3a all-pull");
  o.expect(is_gsc(mk_fence_transform(fig3b(), FenceKind::Pull), S).member, "fig3b all-pull");
  o.expect(!is_gsc(mk_fence_transform(fig3b(), FenceKind::Push), S).member, "fig3b all-push");
  o.detail << plain << " fence-free members transformed, " << erased
           << " fenced members erased, fixed-rt strictness checked";
}

std::vector<PerObjectWitnesses>& instances() {
  static std::vector<PerObjectWitnesses> v;
  if (!v.empty()) return v;
  Rng rng(2026);
  RandomProgramOptions po;
  po.clients = 3;
  po.max_ops = 3;
  while (v.size() < 500) {
    PerObjectWitnesses w = random_well_fenced_instance(po, S, rng);
    // Only instances that really involve both objects.
    if (w.per_object.size() < 2 || w.history.objects().size() < 2) continue;
    v.push_back(std::move(w));
  }
  return v;
}

void theorem2(Outcome& o) {
  std::size_t ok = 0;
  for (const PerObjectWitnesses& w : instances()) {
    try {
      const AbstractExecution c = compose_witnesses(w, S);
      const bool pass = check_axioms(c, S).all_pass() && projections_match(w, c);
      o.expect(pass, "composed execution fails on " + canonical_key(w.history));
      ok += pass;
    } catch (const std::exception& e) {
      o.fail(std::string("compose failed: ") + e.what());
    }
  }
  const History d = fig3d();
  PerObjectWitnesses w{d, {}};
  for (const std::string x : {"x", "y"}) w.per_object[x] = *is_gsc(project(d, x), S).witness;
  try {
    compose_witnesses(w, S);
    o.fail("compose accepted fig3d");
  } catch (const ModelError& e) {
    o.expect(std::string(e.what()).find("not well-fenced") != std::string::npos,
             std::string("wrong refusal: ") + e.what());
  }
  o.detail << ok << "/" << instances().size() << " instances composed, fig3d refused";
}

void lemmas(Outcome& o) {
  std::size_t checks = 0, violations = 0;
  auto run = [&](const std::vector<LawCheck>& laws) {
    for (const LawCheck& l : laws) {
      ++checks;
      if (!l.ok) {
        ++violations;
        o.fail(l.name + ": " + l.detail);
      }
    }
  };
  for (const PerObjectWitnesses& w : instances()) {
    const UnionRelations u = union_relations(w);
    const AbstractExecution c = compose_witnesses(w, S);
    run(composer_laws(w.history, u, c.ar));
    run(synthesis_laws(c));
    run(execution_laws(c));
  }
  for (const AbstractExecution& a : corpus().executions) {
    run(synthesis_laws(a));
    run(execution_laws(a));
  }
  o.detail << checks << " law checks, " << violations << " violations";
}

void correspondences(Outcome& o) {
  std::set<std::string> seen;
  std::size_t lin_n = 0, osc_n = 0, lin_yes = 0, osc_yes = 0;
  for (std::size_t na = 1; na <= 4; ++na) {
    for (std::size_t nb = na; na + nb <= 5; ++nb) {
      for (const Program& shape : distinct_program_shapes(na, nb, {"x", "y"})) {
        for (FencePattern f : {FencePattern::AllBoth, FencePattern::Osc}) {
          for (const History& base : enumerate_histories(with_pattern(shape, f), S).histories) {
            std::vector<History> hs = rval_variants(base);
            hs.push_back(base);
            for (const History& h : hs) {
              if (!seen.insert(canonical_key(h)).second) continue;
              const MembershipResult g = is_gsc(h, S);
              if (f == FencePattern::AllBoth) {
                ++lin_n;
                const LinResult l = check_lin(h, S);
                lin_yes += l.ok;
                o.expect(l.ok == g.member, "check_lin disagrees on " + canonical_key(h));
              } else {
                ++osc_n;
                const LinResult l = check_osc(h, S);
                osc_yes += l.ok;
                o.expect(l.ok == g.member, "check_osc disagrees on " + canonical_key(h));
                if (l.ok)
                  o.expect(check_axioms(osc_execution_from_lin(*l.witness, S), S).all_pass(),
                           "osc_execution_from_lin output fails on " + canonical_key(h));
                if (g.member)
                  o.expect(osc_axioms_hold(lin_from_osc_execution(*g.witness, S), S),
                           "lin_from_osc_execution output fails on " + canonical_key(h));
              }
            }
          }
        }
      }
    }
  }
  o.detail << lin_n << " lin histories (" << lin_yes << " members), " << osc_n
           << " osc histories (" << osc_yes << " members)";
}

void differential(Outcome& o) {
  Rng rng(9);
  RandomProgramOptions po;
  po.clients = 3;
  po.min_ops = 1;
  po.max_ops = 2;
  std::size_t n = 0, members = 0;
  GscOptions fast, slow;
  fast.path = SearchPath::Fast;
  slow.path = SearchPath::Slow;
  while (n < 1000) {
    History h = extract_history(random_run(random_program(po, rng), S, rng));
    if (h.size() > 6) continue;
    h = mutate_rvals(h, 0.7, rng);
    const bool a = is_gsc(h, S, fast).member;
    const bool b = is_gsc(h, S, slow).member;
    o.expect(a == b, "fast and slow disagree on " + canonical_key(h));
    members += a;
    ++n;
  }
  o.detail << n << " histories, " << members << " members";
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace gsc

int main(int argc, char** argv) {
  using namespace gsc;
  const std::vector<Criterion> all = {
      {1, "litmus verdicts", litmus},
      {2, "simulator golden traces", traces},
      {3, "enumerated executions satisfy the axioms", soundness},
      {4, "synthesized schedules replay member histories", completeness},
      {5, "all-push and all-pull translations", theorem1},
      {6, "composition of well-fenced histories", theorem2},
      {7, "relational laws", lemmas},
      {8, "linearizability and OSC correspondences", correspondences},
      {9, "fast and slow membership paths agree", differential},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all_ok = true;
  for (const Criterion& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto t = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.ok;
    std::printf("[%s] AC%d %s: %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title,
                o.detail.str().c_str(), seconds_since(t));
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
