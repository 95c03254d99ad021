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

// kerrqnd: feasibility checks, QND readout verification, and concentration /
// purification experiments.
//
//   kerrqnd params-check --config circuit.cfg
//   kerrqnd concentrate --set r=0.9 --seed 7 --trials 100000 --out run.json

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kerrqnd/commands.h"

namespace {

std::string utc_now() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cross-Kerr QND entanglement concentration and purification simulator", "kerrqnd"};
    app.set_version_flag("--version", kerrqnd::library_version());
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    std::string format = "json";
    std::string out_path;
    bool no_noise = false;
    bool stamp = false;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
        sub->add_option("--set", overrides, "override a config key (key=value); repeatable");
        sub->add_option("--seed", seed, "64-bit RNG seed");
        sub->add_option("--trials", trials, "Monte Carlo trial count")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write results here instead of stdout");
        sub->add_flag("--no-noise", no_noise, "disable homodyne vacuum noise");
        sub->add_flag("--timestamp", stamp, "record wall-clock time in meta.timestamp");
    };
    std::vector<CLI::App *> subs = {
        app.add_subcommand("params-check", "circuit feasibility: chi, regime ratios, window, imperfections"),
        app.add_subcommand("qnd-verify", "ODE vs steady state vs first-order readout comparison"),
        app.add_subcommand("concentrate", "ideal outcome table and Monte Carlo concentration run"),
        app.add_subcommand("purify", "trajectory-branch purification Monte Carlo run"),
    };
    for (auto *sub : subs) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kerrqnd::kExitInputError;
    }

    CLI::App *chosen = app.get_subcommands().front();
    try {
        kerrqnd::KeyValueConfig cfg;
        if (!config_path.empty()) {
            cfg = kerrqnd::KeyValueConfig::load_file(config_path);
        }
        for (const auto &assignment : overrides) {
            cfg.apply_override(assignment);
        }

        kerrqnd::RunOptions opts;
        if (chosen->count("--seed")) opts.seed = seed;
        if (chosen->count("--trials")) opts.trials = trials;
        opts.noise = !no_noise;
        if (stamp) opts.timestamp = utc_now();

        kerrqnd::CommandResult result = kerrqnd::run_command(chosen->get_name(), cfg, opts);
        for (const auto &w : result.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        if (!result.error.empty()) {
            std::cerr << "error: " << result.error << "\n";
        }
        if (!result.document.is_null()) {
            std::string payload = format == "csv" ? result.csv : result.document.dump(2) + "\n";
            if (out_path.empty()) {
                std::cout << payload;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write '" << out_path << "'\n";
                    return kerrqnd::kExitInputError;
                }
                out << payload;
            }
        }
        return result.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kerrqnd::kExitInputError;
    }
}
