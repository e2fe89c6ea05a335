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

#include "gsc/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gsc/error.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

Relation History::so() const {
  Relation r(size());
  for (const auto& [client, ids] : sessions)
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) r.insert(ids[i], ids[j]);
  return r;
}

EventSet History::epush() const {
  EventSet s(size());
  for (EventIdx e = 0; e < size(); ++e)
    if (events[e].fences.push) s.insert(e);
  return s;
}

EventSet History::epull() const {
  EventSet s(size());
  for (EventIdx e = 0; e < size(); ++e)
    if (events[e].fences.pull) s.insert(e);
  return s;
}

EventSet History::on_object(std::string_view obj) const {
  EventSet s(size());
  for (EventIdx e = 0; e < size(); ++e)
    if (events[e].obj == obj) s.insert(e);
  return s;
}

Relation History::same_object() const {
  Relation r(size());
  for (EventIdx a = 0; a < size(); ++a)
    for (EventIdx b = 0; b < size(); ++b)
      if (events[a].obj == events[b].obj) r.insert(a, b);
  return r;
}

std::optional<EventIdx> History::find(std::string_view id) const {
  for (EventIdx e = 0; e < size(); ++e)
    if (events[e].id == id) return e;
  return std::nullopt;
}

EventIdx History::index_of(std::string_view id) const {
  auto e = find(id);
  if (!e) throw ModelError("unknown event id '" + std::string(id) + "'");
  return *e;
}

std::vector<std::string> History::objects() const {
  std::set<std::string> objs;
  for (const auto& e : events) objs.insert(e.obj);
  return {objs.begin(), objs.end()};
}

namespace {

std::map<std::string, std::vector<EventIdx>> sessions_by_appearance(
    const std::vector<Event>& events) {
  std::map<std::string, std::vector<EventIdx>> sessions;
  for (EventIdx e = 0; e < events.size(); ++e) sessions[events[e].client].push_back(e);
  return sessions;
}

}  // namespace

History make_history(std::vector<Event> events, const Relation& rt) {
  History h;
  h.sessions = sessions_by_appearance(events);
  h.events = std::move(events);
  h.rt = rt;
  return h;
}

History make_history(std::vector<Event> events, const std::vector<Interval>& intervals) {
  if (intervals.size() != events.size())
    throw ModelError("every event needs an interval");
  History h = make_history(std::move(events), rt_from_intervals(intervals));
  h.intervals = intervals;
  return h;
}

std::vector<std::string> validate_history(const History& h) {
  std::vector<std::string> out;
  const std::size_t n = h.size();
  std::set<std::string> ids;
  for (const auto& e : h.events) {
    if (!ids.insert(e.id).second) out.push_back("duplicate event id: " + e.id);
    if ((e.op.kind == OpKind::Read) == e.op.value.has_value())
      out.push_back("malformed operation on " + e.id);
  }
  std::vector<int> seen(n, 0);
  for (const auto& [client, idxs] : h.sessions) {
    for (EventIdx e : idxs) {
      if (e >= n) {
        out.push_back("session " + client + " names an unknown event");
        continue;
      }
      ++seen[e];
      if (h.events[e].client != client)
        out.push_back("event " + h.events[e].id + " listed in session " + client +
                      " but issued by " + h.events[e].client);
    }
  }
  for (EventIdx e = 0; e < n; ++e)
    if (seen[e] != 1) out.push_back("sessions do not partition events at " + h.events[e].id);
  if (h.rt.domain_size() != n) {
    out.push_back("rt domain does not match event count");
    return out;
  }
  if (!is_interval_order(h.rt)) out.push_back("rt not interval order");
  if (!out.empty() && std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    return out;
  for (auto [a, b] : h.so().pairs())
    if (!h.rt.contains(a, b))
      out.push_back("so ⊄ rt: (" + h.events[a].id + "," + h.events[b].id + ")");
  return out;
}

Relation rt_from_intervals(const std::vector<Interval>& intervals) {
  Relation r(intervals.size());
  for (EventIdx a = 0; a < intervals.size(); ++a) {
    if (!(intervals[a].start < intervals[a].end))
      throw ModelError("interval start must precede its end");
    for (EventIdx b = 0; b < intervals.size(); ++b)
      if (intervals[a].end < intervals[b].start) r.insert(a, b);
  }
  return r;
}

std::vector<std::string> validate_execution(const AbstractExecution& a) {
  std::vector<std::string> out;
  const std::size_t n = a.history.size();
  if (a.vis.domain_size() != n) out.push_back("vis domain does not match event count");
  if (a.ar.size() != n) out.push_back("ar does not cover every event");
  if (!out.empty()) return out;
  if (!is_acyclic(a.vis)) out.push_back("vis is cyclic");
  for (auto [e, f] : a.vis.pairs()) {
    if (e != f && !a.ar.before(e, f)) {
      out.push_back("vis ⊄ ar: (" + a.history[e].id + "," + a.history[f].id + ")");
      break;
    }
  }
  return out;
}

std::vector<EventIdx> projection_map(const History& h, std::string_view x) {
  std::vector<EventIdx> keep;
  for (EventIdx e = 0; e < h.size(); ++e)
    if (h.events[e].obj == x) keep.push_back(e);
  return keep;
}

History project(const History& h, std::string_view x) {
  const auto keep = projection_map(h, x);
  std::vector<EventIdx> remap(h.size(), static_cast<EventIdx>(-1));
  for (EventIdx i = 0; i < keep.size(); ++i) remap[keep[i]] = i;
  History p;
  for (EventIdx e : keep) p.events.push_back(h.events[e]);
  for (const auto& [client, idxs] : h.sessions) {
    std::vector<EventIdx> s;
    for (EventIdx e : idxs)
      if (remap[e] != static_cast<EventIdx>(-1)) s.push_back(remap[e]);
    if (!s.empty()) p.sessions[client] = std::move(s);
  }
  p.rt = Relation(keep.size());
  for (auto [a, b] : h.rt.pairs())
    if (remap[a] != static_cast<EventIdx>(-1) && remap[b] != static_cast<EventIdx>(-1))
      p.rt.insert(remap[a], remap[b]);
  if (h.intervals) {
    std::vector<Interval> iv;
    for (EventIdx e : keep) iv.push_back((*h.intervals)[e]);
    p.intervals = std::move(iv);
  }
  return p;
}

History with_fences(const History& h, const std::vector<Fences>& fences) {
  if (fences.size() != h.size()) throw ModelError("fence list does not match event count");
  History out = h;
  for (EventIdx e = 0; e < h.size(); ++e) out.events[e].fences = fences[e];
  return out;
}

History mk_fence_transform(const History& h, FenceKind target) {
  const Fences f = target == FenceKind::Push ? Fences{true, false} : Fences{false, true};
  return with_fences(h, std::vector<Fences>(h.size(), f));
}

History erase_fences(const History& h) {
  return with_fences(h, std::vector<Fences>(h.size(), Fences::none()));
}

Model parse_model(std::string_view name) {
  if (name == "gsc") return Model::Gsc;
  if (name == "gsp") return Model::Gsp;
  if (name == "tso") return Model::Tso;
  if (name == "dual-tso" || name == "dual_tso") return Model::DualTso;
  if (name == "osc") return Model::Osc;
  if (name == "lin") return Model::Lin;
  throw ModelError("unknown model '" + std::string(name) + "'");
}

std::string_view model_name(Model m) {
  switch (m) {
    case Model::Gsc: return "gsc";
    case Model::Gsp: return "gsp";
    case Model::Tso: return "tso";
    case Model::DualTso: return "dual-tso";
    case Model::Osc: return "osc";
    case Model::Lin: return "lin";
  }
  return "?";
}

namespace {

Fences mandated(Model m, const Op& op, const ObjectSemantics& sem) {
  switch (m) {
    case Model::Gsc:
    case Model::Gsp: return Fences::none();
    case Model::Tso: return {false, true};
    case Model::DualTso: return {true, false};
    case Model::Osc: return {true, sem.is_update(op)};
    case Model::Lin: return Fences::both();
  }
  return Fences::none();
}

}  // namespace

bool check_fence_preset(const History& h, Model m, const ObjectSemantics& sem) {
  if (m == Model::Osc && !sem.has_classify())
    throw ModelError("osc preset needs an operation classification");
  for (const auto& e : h.events) {
    if (m == Model::Gsp) {
      if (e.fences != Fences::none()) return false;
      continue;
    }
    const Fences need = mandated(m, e.op, sem);
    if ((need.push && !e.fences.push) || (need.pull && !e.fences.pull)) return false;
  }
  return true;
}

History apply_fence_preset(const History& h, Model m, const ObjectSemantics& sem) {
  if (m == Model::Osc && !sem.has_classify())
    throw ModelError("osc preset needs an operation classification");
  History out = h;
  for (auto& e : out.events)
    e.fences = m == Model::Gsp ? Fences::none() : e.fences | mandated(m, e.op, sem);
  return out;
}

WellFencedResult is_well_fenced(const History& h) {
  for (const auto& [client, idxs] : h.sessions) {
    for (std::size_t i = 0; i < idxs.size(); ++i) {
      for (std::size_t j = i + 1; j < idxs.size(); ++j) {
        const Event& e = h.events[idxs[i]];
        const Event& f = h.events[idxs[j]];
        if (e.obj == f.obj) continue;
        // Need p < q in [i, j] with a push on obj(e) at p and a pull on obj(f) at q.
        bool ok = false;
        for (std::size_t p = i; p < j && !ok; ++p) {
          const Event& ep = h.events[idxs[p]];
          if (!ep.fences.push || ep.obj != e.obj) continue;
          for (std::size_t q = p + 1; q <= j && !ok; ++q) {
            const Event& fq = h.events[idxs[q]];
            ok = fq.fences.pull && fq.obj == f.obj;
          }
        }
        if (!ok) return {false, EventPair{idxs[i], idxs[j]}};
      }
    }
  }
  return {true, std::nullopt};
}

std::string to_string(const Op& op) {
  switch (op.kind) {
    case OpKind::Append: return "append(" + std::to_string(op.value.value_or(0)) + ")";
    case OpKind::Write: return "write(" + std::to_string(op.value.value_or(0)) + ")";
    case OpKind::Read: return "read";
  }
  return "?";
}

std::string to_string(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "()";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  const auto& xs = std::get<std::vector<std::int64_t>>(v);
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

std::string to_string(Fences f) {
  if (f.push && f.pull) return "{push,pull}";
  if (f.push) return "{push}";
  if (f.pull) return "{pull}";
  return "{}";
}

std::string describe(const Event& e) {
  std::string s = e.id + "=" + e.client + ":" + e.obj + "." + to_string(e.op);
  if (e.op.kind == OpKind::Read) s += ":" + to_string(e.rval);
  if (e.fences != Fences::none()) s += to_string(e.fences);
  return s;
}

std::string canonical_key(const History& h) {
  std::vector<EventIdx> order;
  for (const auto& [client, idxs] : h.sessions) order.insert(order.end(), idxs.begin(), idxs.end());
  std::vector<EventIdx> rank(h.size());
  for (EventIdx i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::ostringstream os;
  std::string prev;
  for (EventIdx e : order) {
    const Event& ev = h.events[e];
    if (ev.client != prev) os << "|" << ev.client << ":";
    prev = ev.client;
    os << ev.obj << "." << to_string(ev.op) << "=" << to_string(ev.rval) << to_string(ev.fences)
       << ";";
  }
  std::vector<EventPair> rt;
  for (auto [a, b] : h.rt.pairs()) rt.emplace_back(rank[a], rank[b]);
  std::sort(rt.begin(), rt.end());
  os << "#";
  for (auto [a, b] : rt) os << a << "<" << b << ",";
  return os.str();
}

bool same_history(const History& a, const History& b, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (a.size() != b.size()) return fail("event counts differ");
  std::vector<EventIdx> map(a.size());
  for (EventIdx e = 0; e < a.size(); ++e) {
    auto f = b.find(a.events[e].id);
    if (!f) return fail("event " + a.events[e].id + " missing");
    if (!(a.events[e] == b.events[*f]))
      return fail("event differs: " + describe(a.events[e]) + " vs " + describe(b.events[*f]));
    map[e] = *f;
  }
  if (a.sessions.size() != b.sessions.size()) return fail("session sets differ");
  for (const auto& [client, idxs] : a.sessions) {
    auto it = b.sessions.find(client);
    if (it == b.sessions.end() || it->second.size() != idxs.size())
      return fail("session " + client + " differs");
    for (std::size_t i = 0; i < idxs.size(); ++i)
      if (map[idxs[i]] != it->second[i]) return fail("session " + client + " order differs");
  }
  for (EventIdx x = 0; x < a.size(); ++x)
    for (EventIdx y = 0; y < a.size(); ++y)
      if (a.rt.contains(x, y) != b.rt.contains(map[x], map[y]))
        return fail("rt differs at (" + a.events[x].id + "," + a.events[y].id + ")");
  return true;
}

}  // namespace gsc
