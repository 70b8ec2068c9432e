// Copyright 2026 The ising-nqs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISINGNQS_TOOLS_COMMANDS_HPP
#define ISINGNQS_TOOLS_COMMANDS_HPP

#include "manifest.hpp"

namespace isingnqs::cli {

void cmd_train(const Manifest& m);
void cmd_sample(const Manifest& m);
void cmd_analyze(const Manifest& m);
void cmd_project(const Manifest& m);
void cmd_barrier(const Manifest& m);
void cmd_oracle(const Manifest& m);

}  // namespace isingnqs::cli

#endif  // ISINGNQS_TOOLS_COMMANDS_HPP
