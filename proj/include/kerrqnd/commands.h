// Copyright 2026 The kerrqnd Authors
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

#ifndef KERRQND_COMMANDS_H
#define KERRQND_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kerrqnd/config.h"

namespace kerrqnd {

inline constexpr std::uint64_t kDefaultSeed = 20180101;

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitRegimeViolation = 2,
};

/// Options that come from command-line flags rather than the config file.
struct RunOptions {
    /// Flag values win over the config file's `seed` / `trials` keys.
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> trials;
    bool noise = true;
    /// Wall-clock stamp for meta.timestamp; null keeps outputs reproducible.
    std::optional<std::string> timestamp;
};

struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::ordered_json document;
    /// Tabular view of the command's outcome histogram, for --format csv.
    std::string csv;
    std::vector<std::string> warnings;
    std::string error;
};

CommandResult cmd_params_check(const KeyValueConfig &cfg, const RunOptions &opts = {});
CommandResult cmd_qnd_verify(const KeyValueConfig &cfg, const RunOptions &opts = {});
CommandResult cmd_concentrate(const KeyValueConfig &cfg, const RunOptions &opts = {});
CommandResult cmd_purify(const KeyValueConfig &cfg, const RunOptions &opts = {});

/// Dispatches on the subcommand name; unknown names give kExitInputError.
CommandResult run_command(const std::string &name, const KeyValueConfig &cfg, const RunOptions &opts = {});

const char *library_version();

}  // namespace kerrqnd

#endif
