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


#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "gsc/axioms.hpp"
#include "gsc/error.hpp"
#include "gsc/fixtures.hpp"
#include "gsc/generate.hpp"
#include "gsc/protocol.hpp"
#include "gsc/semantics.hpp"
#include "test_util.hpp"

namespace gsc {
namespace {

using test::id_pairs;
using test::IdPairs;

const ObjectSemantics& S = sequence_semantics();

std::vector<std::string> log_ids(const Log& log) {
  std::vector<std::string> out;
  for (const LogEntry& e : log) out.push_back(e.id);
  return out;
}

std::vector<std::string> update_ids(const Log& log) {
  std::vector<std::string> out;
  for (const LogEntry& e : log)
    if (S.is_update(e.op)) out.push_back(e.id);
  return out;
}

const Value& rval(const World& w, const std::string& id) {
  for (const SimEvent& e : w.events)
    if (e.event.id == id) return e.event.rval;
  throw ModelError("no event " + id);
}

using Strings = std::vector<std::string>;

TEST(Step, PushMovesOldestPending) {
  World w;
  step(w, Token::call("A", "x", Op::append(1), {}, "i"), S);
  step(w, Token::body("A"), S);
  step(w, Token::ret("A"), S);
  step(w, Token::push("A"), S);
  EXPECT_EQ(log_ids(w.server_log), Strings{"i"});
  EXPECT_EQ(log_ids(w.clients["A"].unacked), Strings{"i"});
  EXPECT_TRUE(w.clients["A"].pending.empty());
  step(w, Token::pull("A"), S);
  EXPECT_EQ(log_ids(w.clients["A"].known), Strings{"i"});
  EXPECT_TRUE(w.clients["A"].unacked.empty());
}

TEST(Step, DisabledTokensAreErrors) {
  World w;
  w.clients["A"];
  EXPECT_THROW(step(w, Token::pull("A"), S), StepError);
  EXPECT_THROW(step(w, Token::push("A"), S), StepError);
  EXPECT_THROW(step(w, Token::body("A"), S), StepError);
  EXPECT_THROW(step(w, Token::ret("A"), S), StepError);
  step(w, Token::call("A", "x", Op::read()), S);
  EXPECT_THROW(step(w, Token::call("A", "x", Op::read()), S), StepError);
  EXPECT_THROW(step(w, Token::ret("A"), S), StepError);
  try {
    run_schedule({Token::call("A", "x", Op::read()), Token::body("A"), Token::pull("A")}, S);
    FAIL();
  } catch (const StepError& e) {
    EXPECT_EQ(e.index(), 2u);
    EXPECT_NE(std::string(e.what()).find("pull not enabled"), std::string::npos);
  }
}

TEST(Step, DuplicateIdsAndUnknownOps) {
  EXPECT_THROW(run_schedule({Token::call("A", "x", Op::append(1), {}, "e"), Token::body("A"),
                             Token::ret("A"), Token::call("B", "x", Op::read(), {}, "e")},
                            S),
               StepError);
  EXPECT_THROW(run_schedule({Token::call("A", "x", Op::write(1))}, S), StepError);
}

TEST(Step, BodyEvaluatesConjoinedLogs) {
  World w = run_schedule({Token::call("B", "x", Op::append(1), {}, "k"), Token::body("B"),
                          Token::ret("B"), Token::push("B"), Token::pull("A"),
                          Token::call("A", "x", Op::append(2), {}, "p"), Token::body("A"),
                          Token::ret("A"), Token::call("A", "x", Op::read(), {}, "r"),
                          Token::body("A")},
                         S);
  EXPECT_EQ(rval(w, "r"), seq({1, 2}));
  EXPECT_EQ(w.events.back().observed, (Strings{"k", "p"}));
}

TEST(Step, FencesPullBeforeAndPushAfter) {
  World w = run_schedule({Token::call("B", "x", Op::append(1), {}, "k"), Token::body("B"),
                          Token::ret("B"), Token::push("B"),
                          Token::call("A", "x", Op::read(), {false, true}, "r"),
                          Token::body("A"), Token::ret("A"),
                          Token::call("A", "x", Op::append(2), {true, false}, "p"),
                          Token::body("A"), Token::ret("A")},
                         S);
  EXPECT_EQ(rval(w, "r"), seq({1}));
  EXPECT_EQ(log_ids(w.server_log), (Strings{"k", "r", "p"}));
  EXPECT_TRUE(w.clients["A"].pending.empty());
}

TEST(Trace, A1MatchesFig3a) {
  const World w = run_schedule(trace_a1(), S);
  EXPECT_EQ(rval(w, "e2"), seq({1, 2}));
  EXPECT_EQ(rval(w, "f2"), seq({2}));
  // Final state as tabulated; the tables list updates only.
  EXPECT_EQ(update_ids(w.server_log), (Strings{"e1", "f1"}));
  EXPECT_EQ(update_ids(w.clients.at("A").known), (Strings{"e1", "f1"}));
  EXPECT_EQ(update_ids(w.clients.at("B").known), (Strings{"e1", "f1"}));
  EXPECT_TRUE(w.clients.at("A").unacked.empty());
  EXPECT_TRUE(w.clients.at("B").unacked.empty());
  EXPECT_TRUE(update_ids(w.clients.at("A").pending).empty());
  EXPECT_TRUE(update_ids(w.clients.at("B").pending).empty());

  const History h = extract_history(w);
  std::string why;
  EXPECT_TRUE(same_history(h, fig3a(), &why)) << why;
  EXPECT_EQ(id_pairs(h, h.rt), id_pairs(fig3a(), fig3a().rt));

  World done = w;
  for (const Token& t : flush_suffix(w)) step(done, t, S);
  EXPECT_TRUE(done.is_quiescent());
  const AbstractExecution a = extract_execution(done);
  const IdPairs vis = id_pairs(a.history, a.vis);
  for (const auto& p : IdPairs{{"e1", "e2"}, {"f1", "e2"}, {"f1", "f2"}}) EXPECT_TRUE(vis.count(p));
  EXPECT_TRUE(a.ar.before(a.history.index_of("e1"), a.history.index_of("f1")));
  EXPECT_TRUE(check_axioms(a, S).all_pass());
}

TEST(Trace, A2ReturnsReversed) {
  const World w = run_schedule(trace_a2(), S);
  EXPECT_EQ(rval(w, "f2"), seq({2, 1}));
  EXPECT_EQ(update_ids(w.server_log), (Strings{"f1", "e1"}));
  EXPECT_EQ(update_ids(w.clients.at("A").known), (Strings{"f1", "e1"}));
  EXPECT_EQ(update_ids(w.clients.at("B").known), (Strings{"f1", "e1"}));
  EXPECT_TRUE(w.clients.at("A").pending.empty());
  EXPECT_TRUE(w.clients.at("B").unacked.empty());
  EXPECT_TRUE(same_history(extract_history(w), fig3b()));
}

TEST(Trace, A3BothReadsEmpty) {
  const World w = run_schedule(trace_a3(), S);
  EXPECT_EQ(rval(w, "e2"), seq({}));
  EXPECT_EQ(rval(w, "f2"), seq({}));
  EXPECT_EQ(update_ids(w.server_log), (Strings{"e1", "f1"}));
  EXPECT_EQ(update_ids(w.clients.at("A").known), (Strings{"e1", "f1"}));
  EXPECT_EQ(update_ids(w.clients.at("B").known), (Strings{"e1", "f1"}));
  EXPECT_TRUE(same_history(extract_history(w), fig3c()));
  World done = w;
  for (const Token& t : flush_suffix(w)) step(done, t, S);
  const AbstractExecution a = extract_execution(done);
  EXPECT_EQ(id_pairs(a.history, a.vis), id_pairs(a.history, a.history.so()));
}

TEST(Run, Deterministic) {
  const World a = run_schedule(trace_a2(), S);
  const World b = run_schedule(trace_a2(), S);
  EXPECT_EQ(a.server_log, b.server_log);
  EXPECT_TRUE(same_history(extract_history(a), extract_history(b)));
}

TEST(Extract, SmallRuns) {
  World one = run_schedule({Token::call("A", "x", Op::append(1)), Token::body("A"), Token::ret("A")}, S);
  const History h1 = extract_history(one);
  EXPECT_TRUE(h1.rt.empty());
  EXPECT_THROW(extract_execution(one), ModelError);

  World two = run_schedule({Token::call("A", "x", Op::append(1)), Token::body("A"), Token::ret("A"),
                            Token::call("A", "x", Op::read()), Token::body("A"), Token::ret("A"),
                            Token::push("A"), Token::push("A"), Token::pull("A"), Token::pull("A")},
                           S);
  const AbstractExecution a = extract_execution(two);
  EXPECT_EQ(a.history.rt, a.history.so());
  EXPECT_EQ(a.history.rt.count(), 1u);
  EXPECT_EQ(a.vis, a.history.so());

  World open = run_schedule({Token::call("A", "x", Op::read())}, S);
  EXPECT_THROW(extract_history(open), ModelError);
}

Program single_client() {
  return {{"A", {{"x", Op::append(1), {}}, {"x", Op::read(), {}}}}};
}

TEST(Enumerate, ReadYourWrites) {
  const auto r = enumerate_histories(single_client(), S);
  ASSERT_EQ(r.histories.size(), 1u);
  EXPECT_EQ(r.histories[0][1].rval, seq({1}));
}

TEST(Enumerate, Fig3cIsProduced) {
  Program p = {{"A", {{"x", Op::append(1), {}}, {"y", Op::read(), {}}}},
               {"B", {{"y", Op::append(1), {}}, {"x", Op::read(), {}}}}};
  const auto r = enumerate_histories(p, S);
  bool found = false;
  for (const History& h : r.histories) found = found || canonical_key(h) == canonical_key(fig3c());
  EXPECT_TRUE(found);
}

// Return values depend only on the order of bodies and communication, so
// exploring runs whose execs are atomic covers every outcome.
std::set<std::map<std::string, Value>> atomic_outcomes(const Program& p) {
  std::set<std::map<std::string, Value>> out;
  std::set<std::string> seen;
  std::function<void(const World&)> dfs = [&](const World& w) {
    std::string key;
    for (const auto& [name, c] : w.clients)
      key += name + std::to_string(c.counter) + ":" + std::to_string(c.known.size()) + ":" +
             std::to_string(c.unacked.size()) + ":" + std::to_string(c.pending.size()) + ";";
    for (const LogEntry& e : w.server_log) key += e.id + ",";
    for (const SimEvent& e : w.events) key += to_string(e.event.rval);
    if (!seen.insert(key).second) return;
    bool finished = true;
    for (const auto& [name, ops] : p) {
      const ClientState& c = w.clients.at(name);
      if (c.counter < ops.size()) {
        finished = false;
        World next = w;
        const ProgramOp& po = ops[c.counter];
        step(next, Token::call(name, po.obj, po.op, po.fences), S);
        step(next, Token::body(name), S);
        step(next, Token::ret(name), S);
        dfs(next);
      }
      bool pending_update = false;
      for (const LogEntry& e : c.pending) pending_update = pending_update || S.is_update(e.op);
      bool reads_left = false;
      for (std::size_t k = c.counter; k < ops.size(); ++k)
        reads_left = reads_left || !S.is_update(ops[k].op);
      // Moving only reads around, or pulling into a client that will not
      // read again, changes no return value.
      if (pending_update && w.push_enabled(name)) {
        World next = w;
        step(next, Token::push(name), S);
        dfs(next);
      }
      if (reads_left && w.pull_enabled(name)) {
        World next = w;
        step(next, Token::pull(name), S);
        dfs(next);
      }
    }
    if (finished) {
      std::map<std::string, Value> rvals;
      for (const SimEvent& e : w.events) rvals[e.event.id] = e.event.rval;
      out.insert(rvals);
    }
  };
  World w;
  for (const auto& [name, ops] : p) w.clients[name];
  dfs(w);
  return out;
}

TEST(Enumerate, Fig3dIsNotProduced) {
  Program p = {{"C1", {{"x", Op::append(1), {}}}},
               {"C2", {{"y", Op::append(1), {}}}},
               {"C3", {{"x", Op::read(), {}}, {"y", Op::read(), {}}}},
               {"C4", {{"y", Op::read(), {}}, {"x", Op::read(), {}}}}};
  const auto outcomes = atomic_outcomes(p);
  std::size_t c_fig = 0, d_fig = 0;
  for (const auto& rv : outcomes) {
    const bool c = rv.at("C31") == seq({1}) && rv.at("C32") == seq({});
    const bool d = rv.at("C41") == seq({1}) && rv.at("C42") == seq({});
    c_fig += c;
    d_fig += d;
    EXPECT_FALSE(c && d);
  }
  // Each half of the figure is reachable on its own.
  EXPECT_GT(c_fig, 0u);
  EXPECT_GT(d_fig, 0u);
}

TEST(Enumerate, StateCap) {
  EnumerateOptions opts;
  opts.max_states = 3;
  EXPECT_THROW(enumerate_histories(single_client(), S, opts), ModelError);
}

// Deferring communication keeps the set of outcomes.
TEST(EnumerateProperty, ReductionPreservesOutcomes) {
  Rng rng(19);
  RandomProgramOptions po;
  po.max_ops = 2;
  for (int i = 0; i < 12; ++i) {
    const Program p = random_program(po, rng);
    EnumerateOptions full;
    full.reduce = false;
    const auto a = enumerate_histories(p, S);
    const auto b = enumerate_histories(p, S, full);
    auto keys = [](const EnumerationResult& r) {
      std::set<std::string> hs, xs;
      for (const History& h : r.histories) hs.insert(canonical_key(h));
      for (const AbstractExecution& x : r.executions) {
        std::string k = canonical_key(x.history) + "|";
        for (const auto& [e, f] : id_pairs(x.history, x.vis)) k += e + ">" + f + ",";
        for (const auto& id : test::ids_of(x.history, x.ar)) k += id + ",";
        xs.insert(k);
      }
      return std::pair{hs, xs};
    };
    ASSERT_EQ(keys(a), keys(b));
    ASSERT_LE(a.states, b.states);
  }
}

TEST(ProtocolProperty, RandomRunsSatisfyAxioms) {
  Rng rng(23);
  RandomProgramOptions po;
  po.clients = 3;
  po.max_ops = 3;
  for (int i = 0; i < 300; ++i) {
    const Program p = random_program(po, rng);
    const World w = random_run(p, S, rng);
    ASSERT_TRUE(w.is_quiescent());
    const AbstractExecution a = extract_execution(w);
    ASSERT_TRUE(validate_history(a.history).empty());
    const AxiomReport rep = check_axioms(a, S);
    ASSERT_TRUE(rep.all_pass()) << rep.summary(a.history);
  }
}

}  // namespace
}  // namespace gsc
