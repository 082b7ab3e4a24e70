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

#include "rtk/report.hpp"

namespace rtk {

std::string Report::format() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.name;
    out += c.ok ? ": pass" : ": FAIL";
    if (!c.witness.empty()) out += " (" + c.witness + ")";
    out += '\n';
  }
  return out;
}

} // namespace rtk
