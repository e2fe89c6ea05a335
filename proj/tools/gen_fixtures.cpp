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


// Regenerates the JSON files under fixtures/ from the built-in fixtures.

#include <iostream>
#include <string>

#include "gsc/axioms.hpp"
#include "gsc/fixtures.hpp"
#include "gsc/io.hpp"
#include "gsc/semantics.hpp"

int main(int argc, char** argv) {
  using namespace gsc;
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <dir>\n";
    return 2;
  }
  const std::string d = std::string(argv[1]) + "/";
  for (const auto& n : fixture_names()) {
    const Fixture fx = fixture(n);
    write_text_file(d + n + ".json", emit_history(fx.history));
    if (fx.witness) write_text_file(d + n + "-witness.json", emit_execution(*fx.witness));
    for (const auto& [x, a] : fx.per_object)
      write_text_file(d + n + "-" + x + ".json", emit_execution(a));
  }
  // The projections of fig3d are members on their own.
  const History h = fig3d();
  for (const std::string x : {"x", "y"}) {
    const MembershipResult r = is_gsc(project(h, x), sequence_semantics());
    write_text_file(d + "fig3d-" + x + ".json", emit_execution(*r.witness));
  }
  write_text_file(d + "a1-schedule.json", emit_schedule(trace_a1()));
  write_text_file(d + "a2-schedule.json", emit_schedule(trace_a2()));
  write_text_file(d + "a3-schedule.json", emit_schedule(trace_a3()));
  return 0;
}
