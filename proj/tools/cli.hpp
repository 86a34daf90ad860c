// Copyright 2026 The qaescale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qae::cli {

/// Runs one command line (args[0] is the program name). Returns 0 on
/// success, 1 on usage errors and 2 on domain, capability or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Merges `--config path` key=value lines into `args` as `--key value`,
/// skipping keys already given on the command line. The --config option
/// itself is removed. Throws qae::LookupError if the file cannot be read.
std::vector<std::string> apply_config(const std::vector<std::string>& args);

}  // namespace qae::cli
