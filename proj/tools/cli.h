// Copyright 2026 The cliffc Authors
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

#ifndef CLIFFC_TOOLS_CLI_H
#define CLIFFC_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffc {

/// Runs the command line tool on `args` (without the program name). Returns the exit code:
/// 0 on success, 1 on a semantic failure, 2 on a usage or parse error.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace cliffc

#endif
