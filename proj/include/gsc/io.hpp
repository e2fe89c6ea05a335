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

#ifndef GSC_IO_HPP_
#define GSC_IO_HPP_

#include <string>
#include <string_view>

#include "gsc/error.hpp"
#include "gsc/model.hpp"
#include "gsc/protocol.hpp"

namespace gsc {

/// Malformed document. Syntax errors carry "line:col"; structural ones a
/// path such as events[2].op.kind.
class ParseError : public ModelError {
 public:
  using ModelError::ModelError;
};

struct HistoryDoc {
  History history;
  std::string semantics = "sequence";
};

struct ExecutionDoc {
  AbstractExecution execution;
  std::string semantics = "sequence";
};

/// Canonical text: sorted keys, sorted pair lists, two-space indent.
std::string emit_history(const History& h, std::string_view semantics = "sequence");
std::string emit_execution(const AbstractExecution& a, std::string_view semantics = "sequence");
std::string emit_schedule(const Schedule& s);

HistoryDoc parse_history(std::string_view text, std::string_view source = "<input>");
ExecutionDoc parse_execution(std::string_view text, std::string_view source = "<input>");
Schedule parse_schedule(std::string_view text, std::string_view source = "<input>");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace gsc

#endif  // GSC_IO_HPP_
