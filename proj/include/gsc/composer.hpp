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

#ifndef GSC_COMPOSER_HPP_
#define GSC_COMPOSER_HPP_

#include <map>
#include <string>

#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

/// A global history with one execution per object over its projection.
struct PerObjectWitnesses {
  History history;
  std::map<std::string, AbstractExecution> per_object;
};

/// so0, vis0 and ar0 lifted to the global event indices.
struct UnionRelations {
  Relation so0;
  Relation vis0;
  Relation ar0;
};

/// Throws ModelError if a witness does not match the projection it covers.
UnionRelations union_relations(const PerObjectWitnesses& w);

/// e prec f iff some g on the object of f, with (f, g) outside vis0, is
/// reached from e through (vis0 \ so);(rt into EPull);so0? or
/// (rt from EPush into EPull);so0?.
Relation compute_prec(const History& h, const Relation& vis0, const Relation& so0);
/// Same relation through ((vis0 \ so) ∪ <EPush>);(rt into EPull);so0?.
Relation compute_prec_folded(const History& h, const Relation& vis0, const Relation& so0);

/// rt into EPush sources, written rt-bar.
Relation rt_bar(const History& h);

Relation build_R(const History& h, const Relation& so0, const Relation& vis0, const Relation& ar0,
                 const Relation& prec);

/// Least vis over ar containing vis0 and closed under RYW to PUSHEDVIS.
/// Throws ModelError unless ar0 ⊆ ar.
Relation lemma5_vis(const History& h, const Relation& vis0, const TotalOrder& ar,
                    const Relation& ar0);

/// Global execution from per-object ones. Refuses histories that are not
/// well-fenced and inputs whose witnesses fail the axioms.
AbstractExecution compose_witnesses(const PerObjectWitnesses& w, const ObjectSemantics& sem);

}  // namespace gsc

#endif  // GSC_COMPOSER_HPP_
