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

#ifndef GSC_ERROR_HPP_
#define GSC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace gsc {

/// Raised when caller-supplied input violates an operation's precondition.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant does not hold.
/// Seeing one of these means a bug in this library, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define GSC_ASSERT(cond, msg)                                          \
  do {                                                                 \
    if (!(cond)) throw ::gsc::InvariantViolation(std::string(msg));    \
  } while (0)

}  // namespace gsc

#endif  // GSC_ERROR_HPP_
