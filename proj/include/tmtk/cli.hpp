// Copyright 2026 The tmtk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tmtk {

/// Runs the `tm` command line (validate, simulate, render, fmt) without the
/// process-level wrapper, so tests can drive it directly.
///
/// Exit codes: 0 ok; 1 model diagnostics (error severity present);
/// 2 usage, IO or parse failure. Diagnostics go to `out` (they are the
/// product); usage errors go to `err`. `out_is_tty` feeds the
/// TM_COLOR=auto decision.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, bool out_is_tty = false);

}  // namespace tmtk
