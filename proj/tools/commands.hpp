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

#include <ostream>

namespace rtk::cli {

/// Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
/// 3 monoid cap exceeded.
enum Exit { kPositive = 0, kNegative = 1, kInputError = 2, kCapExceeded = 3 };

/// Runs one `rtk` invocation. The report goes to `out`, diagnostics to `err`.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rtk::cli
