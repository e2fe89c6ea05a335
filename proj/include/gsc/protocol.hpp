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

#ifndef GSC_PROTOCOL_HPP_
#define GSC_PROTOCOL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsc/error.hpp"
#include "gsc/model.hpp"
#include "gsc/semantics.hpp"

namespace gsc {

struct LogEntry {
  std::string id;
  std::string obj;
  Op op;

  bool operator==(const LogEntry&) const = default;
};

using Log = std::vector<LogEntry>;

struct ClientState {
  Log known;
  Log unacked;
  Log pending;
  /// Index into World::events of the exec in progress, if any.
  std::optional<std::size_t> in_progress;
  bool body_done = false;
  std::size_t counter = 0;
};

enum class TokenKind { Call, Body, Ret, Push, Pull };

struct Token {
  TokenKind kind = TokenKind::Body;
  std::string client;
  // Only meaningful for calls.
  std::string obj;
  Op op;
  Fences fences;
  std::optional<std::string> id;

  static Token call(std::string client, std::string obj, Op op, Fences f = {},
                    std::optional<std::string> id = std::nullopt) {
    return {TokenKind::Call, std::move(client), std::move(obj), op, f, std::move(id)};
  }
  static Token body(std::string client) { return {TokenKind::Body, std::move(client)}; }
  static Token ret(std::string client) { return {TokenKind::Ret, std::move(client)}; }
  static Token push(std::string client) { return {TokenKind::Push, std::move(client)}; }
  static Token pull(std::string client) { return {TokenKind::Pull, std::move(client)}; }

  bool operator==(const Token&) const = default;
};

using Schedule = std::vector<Token>;

std::string_view token_kind_name(TokenKind k);
std::string to_string(const Token& t);

inline constexpr std::size_t kNoStep = static_cast<std::size_t>(-1);

struct SimEvent {
  Event event;
  std::size_t call_step = kNoStep;
  std::size_t body_step = kNoStep;
  std::size_t ret_step = kNoStep;
  /// Ids in known·unacked·pending of the client when the body evaluated.
  std::vector<std::string> observed;
};

/// Server plus clients. A finished World is the result of a run.
struct World {
  std::map<std::string, ClientState> clients;
  Log server_log;
  std::vector<SimEvent> events;
  std::size_t steps = 0;

  bool is_quiescent() const;
  bool push_enabled(const std::string& c) const;
  bool pull_enabled(const std::string& c) const;
};

/// Disabled or malformed token. `index` is the step position in the schedule.
class StepError : public ModelError {
 public:
  StepError(std::size_t index, const std::string& msg)
      : ModelError("step " + std::to_string(index) + ": " + msg), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Applies one token in place. Throws StepError if the token is not enabled.
void step(World& w, const Token& t, const ObjectSemantics& sem);

World run_schedule(const Schedule& s, const ObjectSemantics& sem);

/// Pushes every pending entry, then pulls round-robin until quiescent.
Schedule flush_suffix(const World& w);

/// Requires every started exec to have returned.
History extract_history(const World& w);
/// Requires a quiescent run: ar is the server log order.
AbstractExecution extract_execution(const World& w);

struct ProgramOp {
  std::string obj;
  Op op;
  Fences fences;
};

/// A client program: the ops each client issues in order.
using Program = std::map<std::string, std::vector<ProgramOp>>;

struct EnumerateOptions {
  /// Cap on distinct explored states; 0 means unbounded.
  std::size_t max_states = 0;
  /// Defer pushes and pulls to the points where they can matter. Leaves the
  /// returned histories and executions unchanged.
  bool reduce = true;
};

struct EnumerationResult {
  std::vector<History> histories;
  /// Distinct executions extracted from maximal runs.
  std::vector<AbstractExecution> executions;
  std::size_t states = 0;
};

/// Every history produced by some maximal schedule of `p`.
EnumerationResult enumerate_histories(const Program& p, const ObjectSemantics& sem,
                                      const EnumerateOptions& opts = {});

}  // namespace gsc

#endif  // GSC_PROTOCOL_HPP_
