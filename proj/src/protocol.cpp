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

#include "gsc/protocol.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gsc/error.hpp"

namespace gsc {

std::string_view token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Call: return "call";
    case TokenKind::Body: return "body";
    case TokenKind::Ret: return "ret";
    case TokenKind::Push: return "push";
    case TokenKind::Pull: return "pull";
  }
  return "?";
}

std::string to_string(const Token& t) {
  std::string s = std::string(token_kind_name(t.kind)) + "(" + t.client;
  if (t.kind == TokenKind::Call) {
    s += ", " + t.obj + "." + to_string(t.op);
    if (t.fences != Fences::none()) s += " " + to_string(t.fences);
    if (t.id) s += ", " + *t.id;
  }
  return s + ")";
}

bool World::push_enabled(const std::string& c) const {
  auto it = clients.find(c);
  return it != clients.end() && !it->second.pending.empty();
}

bool World::pull_enabled(const std::string& c) const {
  auto it = clients.find(c);
  const std::size_t known = it == clients.end() ? 0 : it->second.known.size();
  return known < server_log.size();
}

bool World::is_quiescent() const {
  for (const auto& [name, c] : clients)
    if (c.in_progress || !c.pending.empty() || c.known.size() != server_log.size()) return false;
  return true;
}

namespace {

void do_push(World& w, ClientState& c) {
  LogEntry e = c.pending.front();
  c.pending.erase(c.pending.begin());
  w.server_log.push_back(e);
  c.unacked.push_back(std::move(e));
}

void do_pull(World& w, ClientState& c) {
  const LogEntry& e = w.server_log[c.known.size()];
  c.known.push_back(e);
  if (!c.unacked.empty() && c.unacked.front().id == e.id) c.unacked.erase(c.unacked.begin());
}

}  // namespace

void step(World& w, const Token& t, const ObjectSemantics& sem) {
  const std::size_t idx = w.steps;
  ClientState& c = w.clients[t.client];
  switch (t.kind) {
    case TokenKind::Call: {
      if (c.in_progress) throw StepError(idx, "call not enabled: " + t.client + " is executing");
      if ((t.op.kind == OpKind::Read) == t.op.value.has_value())
        throw StepError(idx, "malformed operation " + to_string(t.op));
      try {
        sem.check_op(t.op);
      } catch (const ModelError& e) {
        throw StepError(idx, e.what());
      }
      ++c.counter;
      std::string id = t.id ? *t.id : t.client + std::to_string(c.counter);
      for (const auto& ev : w.events)
        if (ev.event.id == id) throw StepError(idx, "duplicate event id " + id);
      SimEvent ev;
      ev.event = Event{id, t.client, t.obj, t.op, unit(), t.fences};
      ev.call_step = idx;
      w.events.push_back(std::move(ev));
      c.in_progress = w.events.size() - 1;
      c.body_done = false;
      break;
    }
    case TokenKind::Body: {
      if (!c.in_progress || c.body_done) throw StepError(idx, "body not enabled at " + t.client);
      SimEvent& ev = w.events[*c.in_progress];
      if (ev.event.fences.pull)
        while (c.known.size() < w.server_log.size()) do_pull(w, c);
      std::vector<Op> ctx;
      for (const Log* log : {&c.known, &c.unacked, &c.pending}) {
        for (const LogEntry& le : *log) {
          ev.observed.push_back(le.id);
          if (le.obj == ev.event.obj) ctx.push_back(le.op);
        }
      }
      ev.event.rval = sem.eval(ctx, ev.event.op);
      c.pending.push_back(LogEntry{ev.event.id, ev.event.obj, ev.event.op});
      if (ev.event.fences.push)
        while (!c.pending.empty()) do_push(w, c);
      ev.body_step = idx;
      c.body_done = true;
      break;
    }
    case TokenKind::Ret: {
      if (!c.in_progress || !c.body_done) throw StepError(idx, "ret not enabled at " + t.client);
      w.events[*c.in_progress].ret_step = idx;
      c.in_progress.reset();
      c.body_done = false;
      break;
    }
    case TokenKind::Push:
      if (c.pending.empty()) throw StepError(idx, "push not enabled at " + t.client);
      do_push(w, c);
      break;
    case TokenKind::Pull:
      if (c.known.size() >= w.server_log.size())
        throw StepError(idx, "pull not enabled at " + t.client);
      do_pull(w, c);
      break;
  }
  GSC_ASSERT(c.known.size() <= w.server_log.size() &&
                 std::equal(c.known.begin(), c.known.end(), w.server_log.begin()),
             "known is not a prefix of server_log");
  ++w.steps;
}

World run_schedule(const Schedule& s, const ObjectSemantics& sem) {
  World w;
  for (const Token& t : s) step(w, t, sem);
  return w;
}

Schedule flush_suffix(const World& w) {
  Schedule out;
  std::map<std::string, std::size_t> known;
  for (const auto& [name, c] : w.clients) {
    for (std::size_t i = 0; i < c.pending.size(); ++i) out.push_back(Token::push(name));
  }
  std::size_t server = w.server_log.size();
  for (const auto& [name, c] : w.clients) server += c.pending.size();
  for (const auto& [name, c] : w.clients) known[name] = c.known.size();
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& [name, k] : known) {
      if (k < server) {
        out.push_back(Token::pull(name));
        ++k;
        progress = true;
      }
    }
  }
  return out;
}

History extract_history(const World& w) {
  const std::size_t n = w.events.size();
  std::vector<Event> events;
  std::vector<Interval> iv;
  for (const SimEvent& e : w.events) {
    if (e.ret_step == kNoStep)
      throw ModelError("exec of " + e.event.id + " has not returned");
    events.push_back(e.event);
    iv.push_back({static_cast<double>(e.call_step), static_cast<double>(e.ret_step)});
  }
  History h = make_history(std::move(events), Relation(n));
  for (EventIdx a = 0; a < n; ++a)
    for (EventIdx b = 0; b < n; ++b)
      if (w.events[a].ret_step < w.events[b].call_step) h.rt.insert(a, b);
  h.intervals = std::move(iv);
  return h;
}

AbstractExecution extract_execution(const World& w) {
  for (const auto& [name, c] : w.clients)
    if (!c.pending.empty())
      throw ModelError("run is not quiescent: " + c.pending.front().id + " was never pushed");
  AbstractExecution a;
  a.history = extract_history(w);
  const std::size_t n = a.history.size();
  a.vis = Relation(n);
  for (EventIdx f = 0; f < n; ++f)
    for (const std::string& id : w.events[f].observed) a.vis.insert(a.history.index_of(id), f);
  std::vector<EventIdx> order;
  for (const LogEntry& le : w.server_log) order.push_back(a.history.index_of(le.id));
  a.ar = TotalOrder(std::move(order));
  return a;
}

namespace {

struct Explorer {
  const Program& program;
  const ObjectSemantics& sem;
  const EnumerateOptions& opts;
  std::unordered_set<std::string> visited;
  std::set<std::string> history_keys;
  std::set<std::string> execution_keys;
  EnumerationResult result;

  std::string key(const World& w) const {
    std::string k;
    auto ids = [&k](const Log& log) {
      for (const auto& le : log) k += le.id + ",";
      k += ";";
    };
    for (const auto& [name, c] : w.clients) {
      k += name + ":" + std::to_string(c.counter) + (c.in_progress ? "*" : "-") +
           (c.body_done ? "b" : "-") + std::to_string(c.known.size()) + "/";
      ids(c.unacked);
      ids(c.pending);
    }
    ids(w.server_log);
    for (std::size_t i = 0; i < w.events.size(); ++i) {
      const SimEvent& e = w.events[i];
      k += e.event.id + (e.ret_step == kNoStep ? "?" : "!") + to_string(e.event.rval) + "{";
      std::vector<std::string> obs = e.observed;
      std::sort(obs.begin(), obs.end());
      for (const auto& o : obs) k += o + ",";
      k += "}<";
      for (std::size_t j = 0; j < w.events.size(); ++j)
        if (w.events[j].ret_step < e.call_step) k += std::to_string(j) + ",";
      k += ">";
    }
    return k;
  }

  // Pulls only affect their client's next body, and pushes only matter to a
  // later pull or fenced body. Both are deferred to just before a body, or
  // to the end of the run, which keeps the reachable leaves the same.
  std::vector<Token> enabled(const World& w) const {
    std::vector<Token> out;
    bool waiting_body = false, finished = true;
    for (const auto& [name, ops] : program) {
      const ClientState& c = w.clients.at(name);
      if (c.in_progress && !c.body_done) waiting_body = true;
      if (c.in_progress || c.counter < ops.size()) finished = false;
    }
    const bool comm = !opts.reduce || waiting_body || finished;
    for (const auto& [name, ops] : program) {
      const ClientState& c = w.clients.at(name);
      if (!c.in_progress && c.counter < ops.size()) {
        const ProgramOp& po = ops[c.counter];
        out.push_back(Token::call(name, po.obj, po.op, po.fences));
      }
      if (c.in_progress && !c.body_done) out.push_back(Token::body(name));
      if (c.in_progress && c.body_done) out.push_back(Token::ret(name));
      if (comm && !c.pending.empty()) out.push_back(Token::push(name));
      const bool may_pull = !opts.reduce || finished || (c.in_progress && !c.body_done);
      if (may_pull && c.known.size() < w.server_log.size()) out.push_back(Token::pull(name));
    }
    return out;
  }

  void leaf(const World& w) {
    AbstractExecution a = extract_execution(w);
    std::string hk = canonical_key(a.history);
    if (history_keys.insert(hk).second) result.histories.push_back(a.history);
    std::vector<std::string> vis;
    for (auto [x, y] : a.vis.pairs()) vis.push_back(a.history[x].id + ">" + a.history[y].id);
    std::sort(vis.begin(), vis.end());
    std::string ek = hk + "|";
    for (const auto& v : vis) ek += v + ",";
    ek += "|";
    for (EventIdx e : a.ar.sequence()) ek += a.history[e].id + ",";
    if (execution_keys.insert(ek).second) result.executions.push_back(std::move(a));
  }

  void dfs(const World& w) {
    if (!visited.insert(key(w)).second) return;
    if (opts.max_states && visited.size() > opts.max_states)
      throw ModelError("exploration cap of " + std::to_string(opts.max_states) +
                       " states exceeded");
    auto tokens = enabled(w);
    if (tokens.empty()) {
      leaf(w);
      return;
    }
    for (const Token& t : tokens) {
      World next = w;
      step(next, t, sem);
      dfs(next);
    }
  }
};

}  // namespace

EnumerationResult enumerate_histories(const Program& p, const ObjectSemantics& sem,
                                      const EnumerateOptions& opts) {
  Explorer ex{p, sem, opts, {}, {}, {}, {}};
  World w;
  for (const auto& [name, ops] : p) w.clients[name];
  ex.dfs(w);
  ex.result.states = ex.visited.size();
  return std::move(ex.result);
}

}  // namespace gsc
