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

#ifndef GSC_GENERATE_HPP_
#define GSC_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsc/composer.hpp"
#include "gsc/model.hpp"
#include "gsc/protocol.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

using Rng = std::mt19937_64;

/// Random closed intervals with integer endpoints in [0, 2n).
std::vector<Interval> random_intervals(std::size_t n, Rng& rng);
Relation random_relation(std::size_t n, double density, Rng& rng);

struct RandomProgramOptions {
  std::size_t clients = 2;
  std::size_t min_ops = 1;
  std::size_t max_ops = 2;
  std::vector<std::string> objects{"x", "y"};
  double p_append = 0.5;
  double p_push = 0.25;
  double p_pull = 0.25;
};

/// Sequence programs; append values are distinct per object.
Program random_program(const RandomProgramOptions& opts, Rng& rng);

/// Runs `p` under a random schedule, then flushes to quiescence.
World random_run(const Program& p, const ObjectSemantics& sem, Rng& rng);

/// Copy of `h` with reads given other sequences over the values appended
/// to their object.
std::vector<History> rval_variants(const History& h);
/// With probability `p_mutate`, one random read gets a random other value.
History mutate_rvals(const History& h, double p_mutate, Rng& rng);

/// A random well-fenced history over the given objects, with one protocol
/// execution per object run against the projection.
PerObjectWitnesses random_well_fenced_instance(const RandomProgramOptions& opts,
                                               const ObjectSemantics& sem, Rng& rng);

enum class FencePattern {
  None,
  AllPush,
  AllPull,
  AllBoth,
  AppendsPushReadsPull,
  AppendsPullReadsPush,
  FirstPushSecondPull,
  Osc,
};

std::string_view fence_pattern_name(FencePattern p);
std::vector<FencePattern> all_fence_patterns();

struct CorpusOptions {
  std::size_t ops_per_client = 2;
  std::vector<std::string> objects{"x", "y"};
  std::vector<FencePattern> fences = all_fence_patterns();
};

/// Two-client programs, one per shape up to swapping the clients and
/// renaming objects, for each fence pattern.
std::vector<Program> corpus_programs(const CorpusOptions& opts);

/// Every two-client shape with ops_a and ops_b ops.
std::vector<Program> program_shapes(std::size_t ops_a, std::size_t ops_b,
                                    const std::vector<std::string>& objects);

/// One shape per class under renaming objects (and swapping the clients
/// when both have the same number of ops).
std::vector<Program> distinct_program_shapes(std::size_t ops_a, std::size_t ops_b,
                                             const std::vector<std::string>& objects);
Program with_pattern(const Program& p, FencePattern f);

}  // namespace gsc

#endif  // GSC_GENERATE_HPP_
