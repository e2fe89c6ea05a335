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

#include "gsc/equivalence.hpp"

#include <algorithm>

#include "gsc/axioms.hpp"
#include "gsc/error.hpp"
#include "gsc/synthesizer.hpp"

namespace gsc {

namespace {

void require_plain(const AbstractExecution& a, const ObjectSemantics& sem) {
  for (const Event& e : a.history.events)
    if (e.fences != Fences::none()) throw ModelError("event " + e.id + " carries fences");
  const AxiomReport rep = check_axioms(a, sem);
  if (!rep.all_pass())
    throw ModelError("execution does not satisfy the axioms: " + rep.summary(a.history));
}

/// Copy of a with fences f everywhere and rt the given total order.
AbstractExecution retime(const AbstractExecution& a, Fences f, const TotalOrder& rt) {
  const std::size_t n = a.history.size();
  AbstractExecution out = a;
  out.history = with_fences(a.history, std::vector<Fences>(n, f));
  std::vector<Interval> iv(n);
  for (EventIdx e = 0; e < n; ++e) {
    const double p = static_cast<double>(rt.position(e));
    iv[e] = {2 * p, 2 * p + 1};
  }
  out.history.rt = rt.to_relation();
  out.history.intervals = std::move(iv);
  return out;
}

}  // namespace

AbstractExecution to_dual_tso(const AbstractExecution& a, const ObjectSemantics& sem) {
  require_plain(a, sem);
  AbstractExecution out = retime(a, Fences{true, false}, a.ar);
  const AxiomReport rep = check_axioms(out, sem);
  GSC_ASSERT(rep.all_pass(), "dual TSO form fails: " + rep.summary(out.history));
  return out;
}

AbstractExecution to_tso(const AbstractExecution& a, const ObjectSemantics& sem) {
  require_plain(a, sem);
  const std::size_t n = a.history.size();
  const Relation lt = compute_lt(a, EventSet::all(n));
  const Relation base = a.vis | lt;
  GSC_ASSERT(is_acyclic(base), "vis ∪ < is cyclic");
  std::vector<EventIdx> by_id(n);
  for (EventIdx e = 0; e < n; ++e) by_id[e] = e;
  std::sort(by_id.begin(), by_id.end(),
            [&](EventIdx x, EventIdx y) { return a.history[x].id < a.history[y].id; });
  const TotalOrder rt = extend_to_total(base, TotalOrder(std::move(by_id)));
  AbstractExecution out = retime(a, Fences{false, true}, rt);
  const AxiomReport rep = check_axioms(out, sem);
  GSC_ASSERT(rep.all_pass(), "TSO form fails: " + rep.summary(out.history));
  return out;
}

}  // namespace gsc
