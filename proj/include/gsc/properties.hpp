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

#ifndef GSC_PROPERTIES_HPP_
#define GSC_PROPERTIES_HPP_

#include <string>
#include <vector>

#include "gsc/composer.hpp"
#include "gsc/model.hpp"

namespace gsc {

/// Outcome of one relational law on one input.
struct LawCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Laws relating the relations built while composing per-object
/// executions: acyclicity of R, the closed forms of R+, and the algebra of
/// prec. `ar` is the composed arbitration.
std::vector<LawCheck> composer_laws(const History& h, const UnionRelations& u,
                                    const TotalOrder& ar);

/// Laws about the synthesis order < of an execution that satisfies the axioms.
std::vector<LawCheck> synthesis_laws(const AbstractExecution& a);

/// Transitivity of vis, acyclicity of vis ∪ rt and rt;S;rt ⊆ rt.
std::vector<LawCheck> execution_laws(const AbstractExecution& a);

/// Names of the failed laws, or an empty string.
std::string failed_laws(const std::vector<LawCheck>& checks);

}  // namespace gsc

#endif  // GSC_PROPERTIES_HPP_
