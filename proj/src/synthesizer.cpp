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

#include "gsc/synthesizer.hpp"

#include <algorithm>

#include "gsc/axioms.hpp"
#include "gsc/error.hpp"

namespace gsc {

Relation ar_bar(const AbstractExecution& a) {
  const History& h = a.history;
  return a.ar.to_relation().restrict(EventSet::all(h.size()), h.epush());
}

Relation compute_lt(const AbstractExecution& a) { return compute_lt(a, a.history.epull()); }

Relation compute_lt(const AbstractExecution& a, const EventSet& epull) {
  const History& h = a.history;
  const std::size_t n = h.size();
  const Relation so = h.so();
  const Relation arq = optional(a.ar.to_relation());
  const Relation vis_ext = a.vis - so;
  const EventSet epush = h.epush();
  // forced[f]: events g' that running f would push to the server.
  std::vector<EventSet> forced(n, EventSet(n));
  const Relation via_vis = compose(arq, vis_ext);
  for (EventIdx f = 0; f < n; ++f) {
    forced[f] = via_vis.predecessors(f);
    if (epush.contains(f)) forced[f] = forced[f] | arq.predecessors(f);
  }
  Relation blocked(n);  // (e', f)
  for (EventIdx ep : epull.members())
    for (EventIdx f = 0; f < n; ++f)
      for (EventIdx g : forced[f].members())
        if (g != ep && !a.vis.contains(g, ep)) {
          blocked.insert(ep, f);
          break;
        }
  return compose(optional(so), blocked);
}

TotalOrder build_Q(const AbstractExecution& a) {
  const History& h = a.history;
  const Relation u = h.rt | a.vis | ar_bar(a) | compute_lt(a);
  GSC_ASSERT(is_acyclic(u), "rt ∪ vis ∪ ar-bar ∪ < is cyclic");
  return extend_to_total(u);
}

SynthPlan interleave_calls_returns(const History& h, const TotalOrder& q) {
  const std::size_t n = h.size();
  SynthPlan plan;
  plan.q = q;
  std::vector<std::vector<EventIdx>> sessions;
  for (const auto& [c, s] : h.sessions) sessions.push_back(s);
  std::vector<std::size_t> next(sessions.size(), 0);
  std::vector<bool> called(n, false), returned(n, false);
  std::size_t n_called = 0, n_returned = 0, rr = 0;
  auto uncalled_all_after = [&](EventIdx e) {
    for (EventIdx f = 0; f < n; ++f)
      if (!called[f] && !h.rt.contains(e, f)) return false;
    return true;
  };
  while (n_returned < n) {
    bool progress = false;
    for (EventIdx e = 0; e < n; ++e) {
      if (called[e] && !returned[e] && uncalled_all_after(e)) {
        returned[e] = true;
        ++n_returned;
        plan.call_return.push_back({TokenKind::Ret, e});
        progress = true;
      }
    }
    if (n_called == n) {
      GSC_ASSERT(progress || n_returned == n, "call/return interleaving is stuck");
      continue;
    }
    for (std::size_t k = 0; k < sessions.size(); ++k) {
      const std::size_t s = (rr + k) % sessions.size();
      if (next[s] == sessions[s].size()) continue;
      const EventIdx f = sessions[s][next[s]];
      bool blocked = false;
      for (std::size_t t = 0; t < sessions.size() && !blocked; ++t)
        if (next[t] < sessions[t].size() && h.rt.contains(sessions[t][next[t]], f)) blocked = true;
      for (EventIdx g = 0; g < n && !blocked; ++g)
        if (called[g] && !returned[g] && h.rt.contains(g, f)) blocked = true;
      if (blocked) continue;
      called[f] = true;
      ++n_called;
      ++next[s];
      plan.call_return.push_back({TokenKind::Call, f});
      rr = s + 1;
      progress = true;
      break;
    }
    GSC_ASSERT(progress, "call/return interleaving is stuck");
  }

  // Nodes: call(e) = e, body(e) = n + e, ret(e) = 2n + e.
  auto node = [n](const PlanStep& p) -> EventIdx {
    const std::size_t base = p.kind == TokenKind::Call ? 0 : p.kind == TokenKind::Body ? n : 2 * n;
    return static_cast<EventIdx>(base + p.event);
  };
  Relation order(3 * n);
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    order.insert(static_cast<EventIdx>(n + q.sequence()[i]),
                 static_cast<EventIdx>(n + q.sequence()[i + 1]));
  for (std::size_t i = 0; i + 1 < plan.call_return.size(); ++i)
    order.insert(node(plan.call_return[i]), node(plan.call_return[i + 1]));
  for (EventIdx e = 0; e < n; ++e) {
    order.insert(e, static_cast<EventIdx>(n + e));
    order.insert(static_cast<EventIdx>(n + e), static_cast<EventIdx>(2 * n + e));
  }
  GSC_ASSERT(is_acyclic(order), "Q ∪ Q' ∪ Q'' is cyclic");
  const TotalOrder merged = extend_to_total(order);
  for (EventIdx v : merged.sequence()) {
    const TokenKind k = v < n ? TokenKind::Call : v < 2 * n ? TokenKind::Body : TokenKind::Ret;
    plan.steps.push_back({k, static_cast<EventIdx>(v % n)});
  }
  std::vector<std::size_t> ret_at(n), call_at(n);
  for (std::size_t i = 0; i < plan.call_return.size(); ++i)
    (plan.call_return[i].kind == TokenKind::Call ? call_at : ret_at)[plan.call_return[i].event] = i;
  for (EventIdx e = 0; e < n; ++e)
    for (EventIdx f = 0; f < n; ++f)
      if (e != f)
        GSC_ASSERT(h.rt.contains(e, f) == (ret_at[e] < call_at[f]),
                   "interleaving disagrees with rt on (" + h[e].id + "," + h[f].id + ")");
  return plan;
}

namespace {

void check_replay(const AbstractExecution& a, const World& w) {
  const History& h = a.history;
  AbstractExecution r = extract_execution(w);
  std::string why;
  if (!same_history(r.history, h, &why)) throw InvariantViolation("replay history differs: " + why);
  Relation vis(h.size());
  for (auto [p, q] : r.vis.pairs())
    vis.insert(h.index_of(r.history[p].id), h.index_of(r.history[q].id));
  if (!(vis == a.vis)) throw InvariantViolation("replay visibility differs");
  std::vector<EventIdx> log;
  for (const LogEntry& le : w.server_log) log.push_back(h.index_of(le.id));
  if (log != a.ar.sequence()) throw InvariantViolation("replay server log differs from ar");
}

}  // namespace

Schedule synthesize_schedule(const AbstractExecution& a, const ObjectSemantics& sem,
                             SynthPlan* plan_out) {
  const History& h = a.history;
  const std::size_t n = h.size();
  const AxiomReport rep = check_axioms(a, sem);
  if (!rep.all_pass()) throw ModelError("execution does not satisfy the axioms: " + rep.summary(h));
  SynthPlan plan = interleave_calls_returns(h, build_Q(a));
  plan.pushes_before.assign(n, {});
  plan.pull_to.assign(n, 0);
  const Relation vis_ext = a.vis - h.so();
  const EventSet epush = h.epush();

  Schedule out;
  World w;
  std::size_t pushed = 0;
  auto emit = [&](Token t) {
    try {
      step(w, t, sem);
    } catch (const ModelError& err) {
      throw InvariantViolation(std::string("synthesized schedule is not enabled: ") + err.what());
    }
    out.push_back(std::move(t));
  };
  auto push_to = [&](std::size_t target, std::vector<EventIdx>* record) {
    for (; pushed < target; ++pushed) {
      const EventIdx f = a.ar.sequence()[pushed];
      if (record) record->push_back(f);
      emit(Token::push(h[f].client));
    }
  };
  for (const PlanStep& p : plan.steps) {
    const Event& ev = h[p.event];
    switch (p.kind) {
      case TokenKind::Call:
        emit(Token::call(ev.client, ev.obj, ev.op, ev.fences, ev.id));
        break;
      case TokenKind::Ret:
        emit(Token::ret(ev.client));
        break;
      default: {
        std::size_t need = 0;
        for (EventIdx g : vis_ext.predecessors(p.event).members())
          need = std::max(need, a.ar.position(g) + 1);
        std::size_t target = std::max(pushed, need);
        if (epush.contains(p.event)) target = std::max(target, a.ar.position(p.event));
        push_to(target, &plan.pushes_before[p.event]);
        plan.pull_to[p.event] = need;
        while (w.clients[ev.client].known.size() < need) emit(Token::pull(ev.client));
        emit(Token::body(ev.client));
        if (epush.contains(p.event)) pushed = w.server_log.size();
        break;
      }
    }
  }
  push_to(n, nullptr);
  for (const Token& t : flush_suffix(w)) emit(t);
  GSC_ASSERT(w.is_quiescent(), "flush did not reach quiescence");
  check_replay(a, w);
  if (plan_out) *plan_out = std::move(plan);
  return out;
}

}  // namespace gsc
