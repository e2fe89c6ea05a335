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

#ifndef GSC_EQUIVALENCE_HPP_
#define GSC_EQUIVALENCE_HPP_

#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

/// All events push, rt replaced by ar. Needs a fence-free execution that
/// satisfies the axioms.
AbstractExecution to_dual_tso(const AbstractExecution& a, const ObjectSemantics& sem);

/// All events pull, rt replaced by a total order containing vis and the
/// synthesis order computed as if every event pulled.
AbstractExecution to_tso(const AbstractExecution& a, const ObjectSemantics& sem);

}  // namespace gsc

#endif  // GSC_EQUIVALENCE_HPP_
