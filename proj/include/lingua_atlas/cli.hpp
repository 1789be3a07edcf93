// Copyright 2026 The Lingua Atlas Authors. All Rights Reserved.
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

#ifndef LINGUA_ATLAS_CLI_HPP
#define LINGUA_ATLAS_CLI_HPP

#include <string>
#include <vector>

namespace lingua_atlas {

/// Entry point of the `lingua-atlas` tool. Returns the process exit code:
/// 0 on success, otherwise the Stage value of the failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace lingua_atlas

#endif  // LINGUA_ATLAS_CLI_HPP
