/**
 * Copyright 2026 grex authors
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

#ifndef GREX_ERROR_HPP
#define GREX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grex {

/// Coarse failure classes, mapped to process exit codes by the CLI:
/// input -> 2, resource -> 3, internal -> 2 (it is still the caller's data
/// or a bug, never a PASS).
enum class errc { input, resource, internal };

/// All engine failures carry a stable kind tag ("RingMismatch",
/// "ResourceExceeded", ...) so callers and tests can match on it without
/// parsing prose.
class Error : public std::runtime_error {
public:
  Error(errc code, std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), code_(code), kind_(std::move(kind)) {}

  errc code() const { return code_; }
  const std::string& kind() const { return kind_; }

private:
  errc code_;
  std::string kind_;
};

[[noreturn]] inline void fail_input(const std::string& kind, const std::string& msg) {
  throw Error(errc::input, kind, msg);
}
[[noreturn]] inline void fail_resource(const std::string& kind, const std::string& msg) {
  throw Error(errc::resource, kind, msg);
}
[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(errc::internal, "Internal", msg);
}

/// Invariant checks that must hold if the engine is correct. Violations are
/// bugs, not user errors.
inline void require_internal(bool cond, const std::string& msg) {
  if (!cond) fail_internal(msg);
}

}  // namespace grex

#endif
