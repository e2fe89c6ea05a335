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

#include "gsc/composer.hpp"

#include "gsc/axioms.hpp"
#include "gsc/error.hpp"

namespace gsc {

UnionRelations union_relations(const PerObjectWitnesses& w) {
  const History& h = w.history;
  const std::size_t n = h.size();
  UnionRelations u{Relation(n), Relation(n), Relation(n)};
  for (const auto& [x, a] : w.per_object) {
    const History proj = project(h, x);
    std::string why;
    if (!same_history(proj, a.history, &why))
      throw ModelError("event-id mismatch for object " + x + ": " + why);
    std::vector<EventIdx> g(a.history.size());
    for (EventIdx i = 0; i < a.history.size(); ++i) g[i] = h.index_of(a.history[i].id);
    for (auto [p, q] : a.history.so().pairs()) u.so0.insert(g[p], g[q]);
    for (auto [p, q] : a.vis.pairs()) u.vis0.insert(g[p], g[q]);
    const auto& s = a.ar.sequence();
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) u.ar0.insert(g[s[i]], g[s[j]]);
  }
  for (const std::string& x : h.objects())
    if (!w.per_object.count(x)) throw ModelError("no witness for object " + x);
  return u;
}

Relation rt_bar(const History& h) {
  return h.rt.restrict(h.epush(), EventSet::all(h.size()));
}

namespace {

/// {(e, f) | exists g. obj(f) = obj(g), (f, g) not in vis0, (e, g) in reach}.
Relation prec_from_reach(const History& h, const Relation& vis0, const Relation& reach) {
  const std::size_t n = h.size();
  Relation prec(n);
  for (EventIdx f = 0; f < n; ++f)
    for (EventIdx g = 0; g < n; ++g) {
      if (h[f].obj != h[g].obj || vis0.contains(f, g)) continue;
      for (EventIdx e : reach.predecessors(g).members()) prec.insert(e, f);
    }
  return prec;
}

}  // namespace

Relation compute_prec(const History& h, const Relation& vis0, const Relation& so0) {
  const std::size_t n = h.size();
  const EventSet all = EventSet::all(n);
  const Relation so = h.so();
  const Relation vis_ext = vis0 - so;
  const Relation rt_pull = h.rt.restrict(all, h.epull());
  const Relation rt_pp = h.rt.restrict(h.epush(), h.epull());
  const Relation so0q = optional(so0);
  const Relation reach = compose({&vis_ext, &rt_pull, &so0q}) | compose(rt_pp, so0q);
  return prec_from_reach(h, vis0, reach);
}

Relation compute_prec_folded(const History& h, const Relation& vis0, const Relation& so0) {
  const std::size_t n = h.size();
  const Relation head = (vis0 - h.so()) | Relation::identity_on(h.epush());
  const Relation rt_pull = h.rt.restrict(EventSet::all(n), h.epull());
  const Relation so0q = optional(so0);
  return prec_from_reach(h, vis0, compose({&head, &rt_pull, &so0q}));
}

Relation build_R(const History& h, const Relation& /*so0*/, const Relation& vis0,
                 const Relation& ar0, const Relation& prec) {
  const Relation so = h.so();
  return rt_bar(h) | so | ar0 | compose(vis0 - so, h.rt) | prec;
}

Relation lemma5_vis(const History& h, const Relation& vis0, const TotalOrder& ar,
                    const Relation& ar0) {
  const std::size_t n = h.size();
  const Relation arr = ar.to_relation();
  if (!ar0.subset_of(arr)) throw ModelError("ar does not contain ar0");
  const EventSet all = EventSet::all(n);
  const Relation so = h.so();
  const Relation arq = optional(arr);
  const Relation soq = optional(so);
  const Relation vis_ext = vis0 - so;
  const Relation rt_pullq = optional(h.rt.restrict(all, h.epull()));
  const Relation pp = optional(h.rt) & Relation::product(h.epush(), h.epull());
  Relation vis = so | compose({&arq, &vis_ext, &rt_pullq, &soq});
  vis |= compose({&arq, &pp, &soq}) - Relation::identity(n);
  return vis;
}

AbstractExecution compose_witnesses(const PerObjectWitnesses& w, const ObjectSemantics& sem) {
  const History& h = w.history;
  const auto wf = is_well_fenced(h);
  if (!wf.ok)
    throw ModelError("not well-fenced: (" + h[wf.witness->first].id + "," +
                     h[wf.witness->second].id + ")");
  for (const auto& [x, a] : w.per_object)
    if (!check_axioms(a, sem).all_pass())
      throw ModelError("witness for object " + x + " violates the axioms");
  const UnionRelations u = union_relations(w);
  const Relation prec = compute_prec(h, u.vis0, u.so0);
  GSC_ASSERT(prec == compute_prec_folded(h, u.vis0, u.so0), "the two forms of prec differ");
  const Relation r = build_R(h, u.so0, u.vis0, u.ar0, prec);
  GSC_ASSERT(is_acyclic(r), "R is cyclic on a well-fenced input");
  const TotalOrder ar = extend_to_total(r);
  AbstractExecution out{h, lemma5_vis(h, u.vis0, ar, u.ar0), ar};
  const AxiomReport rep = check_axioms(out, sem);
  GSC_ASSERT(rep.all_pass(), "composed execution fails: " + rep.summary(h));
  for (const auto& [x, a] : w.per_object) {
    const EventSet on = h.on_object(x);
    const Relation proj = out.vis.restrict(on, on);
    Relation want(h.size());
    for (auto [p, q] : a.vis.pairs())
      want.insert(h.index_of(a.history[p].id), h.index_of(a.history[q].id));
    GSC_ASSERT(proj == want, "composed vis differs from the witness on object " + x);
  }
  return out;
}

}  // namespace gsc
