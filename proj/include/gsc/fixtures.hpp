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

#ifndef GSC_FIXTURES_HPP_
#define GSC_FIXTURES_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/model.hpp"
#include "gsc/protocol.hpp"

namespace gsc {

/// One row of a fixture's verdict table.
struct ExpectedVerdict {
  std::string label;
  /// "gsc", "lin" or "osc".
  std::string checker;
  History history;
  bool member = false;
};

struct Fixture {
  std::string name;
  History history;
  std::optional<AbstractExecution> witness;
  std::optional<Schedule> schedule;
  std::vector<ExpectedVerdict> verdicts;
  /// For fig5: per-object witnesses over the projections.
  std::map<std::string, AbstractExecution> per_object;
};

/// fig3a, fig3b, fig3c, fig3d or fig5.
Fixture fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Litmus histories of the four store-buffering style examples.
History fig3a();
History fig3b();
History fig3c();
History fig3d();
History fig5();

/// Protocol traces that reproduce fig3a, fig3b and fig3c.
Schedule trace_a1();
Schedule trace_a2();
Schedule trace_a3();

/// Copy of `h` with the fences of the named events replaced.
History set_fences(const History& h, const std::map<std::string, Fences>& fences);

}  // namespace gsc

#endif  // GSC_FIXTURES_HPP_
