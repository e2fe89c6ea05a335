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

#ifndef GSC_DERIVED_HPP_
#define GSC_DERIVED_HPP_

#include <optional>
#include <string>

#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

struct Linearization {
  History history;
  TotalOrder lin;
};

struct LinResult {
  bool ok = false;
  std::optional<Linearization> witness;
  std::size_t explored = 0;
};

/// Same-object operations preceding e in lin.
std::vector<Op> pred(const Linearization& l, EventIdx e);

/// so ⊆ lin, rt ⊆ lin and every return value matches pred.
bool lin_axioms_hold(const Linearization& l, const ObjectSemantics& sem, std::string* why = nullptr);
/// so ⊆ lin, rt into updates ⊆ lin and every return value matches pred.
bool osc_axioms_hold(const Linearization& l, const ObjectSemantics& sem, std::string* why = nullptr);

/// Requires every event to carry both fences.
LinResult check_lin(const History& h, const ObjectSemantics& sem);
/// Requires push on every event and pull on every update.
LinResult check_osc(const History& h, const ObjectSemantics& sem);

Linearization lin_from_osc_execution(const AbstractExecution& a, const ObjectSemantics& sem);
AbstractExecution osc_execution_from_lin(const Linearization& l, const ObjectSemantics& sem);

}  // namespace gsc

#endif  // GSC_DERIVED_HPP_
