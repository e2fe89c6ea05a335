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

#include "gsc/derived.hpp"

#include <algorithm>

#include "gsc/axioms.hpp"
#include "gsc/error.hpp"

namespace gsc {

std::vector<Op> pred(const Linearization& l, EventIdx e) {
  std::vector<Op> ops;
  for (EventIdx f : l.lin.sequence()) {
    if (f == e) break;
    if (l.history[f].obj == l.history[e].obj) ops.push_back(l.history[f].op);
  }
  return ops;
}

namespace {

EventSet updates(const History& h, const ObjectSemantics& sem) {
  EventSet s(h.size());
  for (EventIdx e = 0; e < h.size(); ++e)
    if (sem.is_update(h[e].op)) s.insert(e);
  return s;
}

bool order_holds(const Relation& r, const TotalOrder& lin, const History& h, const char* name,
                 std::string* why) {
  for (auto [a, b] : r.pairs()) {
    if (!lin.before(a, b)) {
      if (why) *why = std::string(name) + " requires " + h[a].id + " before " + h[b].id;
      return false;
    }
  }
  return true;
}

bool retval_holds(const Linearization& l, const ObjectSemantics& sem, std::string* why) {
  for (EventIdx e = 0; e < l.history.size(); ++e) {
    Value v = sem.eval(pred(l, e), l.history[e].op);
    if (v != l.history[e].rval) {
      if (why)
        *why = l.history[e].id + " returns " + to_string(l.history[e].rval) + " but pred gives " +
               to_string(v);
      return false;
    }
  }
  return true;
}

/// Orders forced by sequence-read return values on any linearization.
std::optional<Relation> decoded_lin_order(const History& h, const ObjectSemantics& sem) {
  Relation r(h.size());
  if (sem.name() != "sequence" || !sem.rval_determines_visibility(h)) return r;
  for (EventIdx e = 0; e < h.size(); ++e) {
    if (h[e].op.kind != OpKind::Read) continue;
    const auto* xs = std::get_if<std::vector<std::int64_t>>(&h[e].rval);
    if (!xs) return std::nullopt;
    std::vector<EventIdx> seen;
    for (std::int64_t v : *xs) {
      std::optional<EventIdx> src;
      for (EventIdx f = 0; f < h.size(); ++f)
        if (h[f].obj == h[e].obj && h[f].op == Op::append(v)) src = f;
      if (!src || std::find(seen.begin(), seen.end(), *src) != seen.end()) return std::nullopt;
      if (!seen.empty()) r.insert(seen.back(), *src);
      r.insert(*src, e);
      seen.push_back(*src);
    }
    for (EventIdx f = 0; f < h.size(); ++f)
      if (h[f].obj == h[e].obj && h[f].op.kind == OpKind::Append &&
          std::find(seen.begin(), seen.end(), f) == seen.end())
        r.insert(e, f);
  }
  return r;
}

LinResult search(const History& h, const ObjectSemantics& sem, const Relation& base,
                 bool (*accept)(const Linearization&, const ObjectSemantics&, std::string*)) {
  LinResult res;
  auto decoded = decoded_lin_order(h, sem);
  if (!decoded) return res;
  const Relation p = base | *decoded;
  if (!is_acyclic(p)) return res;
  for_each_linear_extension(p, [&](const std::vector<EventIdx>& seq) {
    ++res.explored;
    Linearization l{h, TotalOrder(seq)};
    if (!accept(l, sem, nullptr)) return false;
    res.ok = true;
    res.witness = std::move(l);
    return true;
  });
  return res;
}

void require_osc_fences(const History& h, const ObjectSemantics& sem) {
  if (!sem.has_classify()) throw ModelError("osc needs an operation classification");
  for (const Event& e : h.events)
    if (!e.fences.push || (sem.is_update(e.op) && !e.fences.pull))
      throw ModelError("osc requires push on every event and pull on every update; " + e.id +
                       " has " + to_string(e.fences));
}

}  // namespace

bool lin_axioms_hold(const Linearization& l, const ObjectSemantics& sem, std::string* why) {
  const History& h = l.history;
  return order_holds(h.so(), l.lin, h, "LINRYW", why) &&
         order_holds(h.rt, l.lin, h, "LINRT", why) && retval_holds(l, sem, why);
}

bool osc_axioms_hold(const Linearization& l, const ObjectSemantics& sem, std::string* why) {
  const History& h = l.history;
  const Relation rt_upd = h.rt.restrict(EventSet::all(h.size()), updates(h, sem));
  return order_holds(h.so(), l.lin, h, "OSCRYW", why) &&
         order_holds(rt_upd, l.lin, h, "OSCRT", why) && retval_holds(l, sem, why);
}

LinResult check_lin(const History& h, const ObjectSemantics& sem) {
  for (const Event& e : h.events)
    if (!e.fences.push || !e.fences.pull)
      throw ModelError("linearizability requires {push,pull} on every event; " + e.id + " has " +
                       to_string(e.fences));
  return search(h, sem, h.so() | h.rt, &lin_axioms_hold);
}

LinResult check_osc(const History& h, const ObjectSemantics& sem) {
  require_osc_fences(h, sem);
  const Relation rt_upd = h.rt.restrict(EventSet::all(h.size()), updates(h, sem));
  return search(h, sem, h.so() | rt_upd, &osc_axioms_hold);
}

Linearization lin_from_osc_execution(const AbstractExecution& a, const ObjectSemantics& sem) {
  const History& h = a.history;
  require_osc_fences(h, sem);
  if (!check_axioms(a, sem).all_pass())
    throw ModelError("execution does not satisfy the axioms");
  const EventSet upd = updates(h, sem);
  // slot[e]: ar position of the last update visible to e, or -1.
  std::vector<long> slot(h.size(), -1);
  for (EventIdx e = 0; e < h.size(); ++e) {
    if (upd.contains(e)) continue;
    for (EventIdx f : upd.members())
      if (a.vis.contains(f, e))
        slot[e] = std::max(slot[e], static_cast<long>(a.ar.position(f)));
  }
  std::vector<EventIdx> reads;
  for (EventIdx e = 0; e < h.size(); ++e)
    if (!upd.contains(e)) reads.push_back(e);
  // so ⊆ ar, so ordering reads by ar within a slot also respects so.
  std::sort(reads.begin(), reads.end(), [&](EventIdx x, EventIdx y) {
    if (slot[x] != slot[y]) return slot[x] < slot[y];
    return a.ar.position(x) < a.ar.position(y);
  });
  std::vector<EventIdx> seq;
  std::size_t ri = 0;
  while (ri < reads.size() && slot[reads[ri]] == -1) seq.push_back(reads[ri++]);
  for (EventIdx u : a.ar.sequence()) {
    if (!upd.contains(u)) continue;
    seq.push_back(u);
    const long pos = static_cast<long>(a.ar.position(u));
    while (ri < reads.size() && slot[reads[ri]] == pos) seq.push_back(reads[ri++]);
  }
  Linearization l{h, TotalOrder(std::move(seq))};
  std::string why;
  GSC_ASSERT(osc_axioms_hold(l, sem, &why), "converted linearization violates " + why);
  return l;
}

AbstractExecution osc_execution_from_lin(const Linearization& l, const ObjectSemantics& sem) {
  const History& h = l.history;
  require_osc_fences(h, sem);
  std::string why;
  if (!osc_axioms_hold(l, sem, &why)) throw ModelError("linearization violates " + why);
  const std::size_t n = h.size();
  const EventSet all = EventSet::all(n);
  const EventSet upd = updates(h, sem);
  const Relation r = l.lin.to_relation().restrict(upd, all);
  const Relation base = r | h.rt;
  GSC_ASSERT(is_acyclic(base), "R ∪ rt is cyclic");
  TotalOrder ar = extend_to_total(base, l.lin);
  const Relation so = h.so();
  const Relation arr = ar.to_relation();
  const Relation soq = optional(so);
  const Relation arq = optional(arr);
  const Relation r_so = r - so;
  Relation vis = so | compose({&arq, &r_so, &soq});
  const Relation ar_upd = arr.restrict(all, upd);
  vis |= compose(ar_upd, soq);
  AbstractExecution a{h, vis, ar};
  GSC_ASSERT(check_axioms(a, sem).all_pass(), "converted execution violates an axiom");
  return a;
}

}  // namespace gsc
