/*
 *   Copyright 2026 The rtk Authors
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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rtk {

/// One named check with the first counterexample found, if any.
struct Check {
  std::string name;
  bool ok = true;
  std::string witness;
};

/// Ordered list of checks; passes when every check passes.
class Report {
public:
  Report& add(std::string name, bool ok, std::string witness = {}) {
    checks_.push_back({std::move(name), ok, std::move(witness)});
    return *this;
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.ok, c.witness});
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.ok) return false;
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->ok;
  }
  /// First failing check, or nullptr.
  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.ok) return &c;
    return nullptr;
  }

  /// "name: pass" / "name: FAIL (witness)" lines.
  std::string format() const;

private:
  std::vector<Check> checks_;
};

} // namespace rtk
