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

#include "kerrqnd/commands.h"

#include <gtest/gtest.h>

#include "kerrqnd/config.h"

using namespace kerrqnd;

namespace {

const char *kCircuit = R"(
g1_over_2pi_hz = 300e6
g2_over_2pi_hz = 300e6
delta_big_over_2pi_hz = 1.5e9
omega_c_over_2pi_hz = 1.5e9
kappa1_over_2pi_hz = 100e6
kappa2_over_2pi_hz = 20e3
g_mag = 50
much_less_threshold = 0.25
)";

KeyValueConfig cfg(const std::string &text) { return KeyValueConfig::parse_string(text, "test.cfg"); }

}  // namespace

TEST(config, parse_basic) {
    auto c = cfg("# comment\n a = 1.5 \n\nb=2 # trailing\nflag = yes\n");
    EXPECT_EQ(c.get_double("a"), 1.5);
    EXPECT_EQ(c.get_int("b", 0), 2);
    EXPECT_TRUE(c.get_bool("flag", false));
    EXPECT_EQ(c.get_double("missing", 7.0), 7.0);
    EXPECT_FALSE(c.find_double("missing"));
    EXPECT_EQ(c.entries().at("a").origin, "test.cfg:2");
}

TEST(config, parse_errors_carry_location) {
    try {
        cfg("a = 1\nnot a pair\n");
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("test.cfg:2"), std::string::npos);
    }
    EXPECT_THROW(cfg("a = 1\na = 2\n"), ConfigError);
    EXPECT_THROW(cfg("bad key = 1\n"), ConfigError);
    EXPECT_THROW(cfg("a =\n"), ConfigError);
}

TEST(config, typed_getters_reject_garbage) {
    auto c = cfg("x = 1.5abc\nn = 2.5\nb = maybe\ninf = inf\n");
    EXPECT_THROW(c.get_double("x"), ConfigError);
    EXPECT_THROW(c.get_int("n", 0), ConfigError);
    EXPECT_THROW(c.get_bool("b", false), ConfigError);
    EXPECT_THROW(c.get_double("inf"), ConfigError);
    EXPECT_THROW(c.get_double("absent"), ConfigError);
}

TEST(config, overrides_and_unknown_keys) {
    auto c = cfg("a = 1\n");
    c.apply_override("a=3");
    c.apply_override("b = 4");
    EXPECT_EQ(c.get_double("a"), 3);
    EXPECT_EQ(c.get_double("b"), 4);
    EXPECT_THROW(c.apply_override("novalue"), ConfigError);
    EXPECT_THROW(c.apply_override("=1"), ConfigError);
    EXPECT_NO_THROW(c.require_known({"a", "b"}));
    EXPECT_THROW(c.require_known({"a"}), ConfigError);
}

TEST(config, load_missing_file) {
    EXPECT_THROW(KeyValueConfig::load_file("/nonexistent/kerrqnd.cfg"), ConfigError);
}

TEST(commands, params_check_reference) {
    auto r = cmd_params_check(cfg(kCircuit));
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    const auto &res = r.document["results"];
    EXPECT_NEAR(res["chi_over_2pi_hz"].get<double>(), -2.4e6, 1e-3);
    EXPECT_NEAR(res["measurement_window"]["tau_min_s"].get<double>(), 1.72694165681310e-11, 1e-23);
    EXPECT_TRUE(res["all_passed"].get<bool>());
    EXPECT_EQ(r.document["meta"]["command"], "params-check");
    EXPECT_TRUE(r.document["meta"]["timestamp"].is_null());
}

TEST(commands, params_check_exit_codes) {
    EXPECT_EQ(cmd_params_check(KeyValueConfig{}).exit_code, kExitInputError);
    auto strict = cfg(kCircuit);
    strict.set("much_less_threshold", "0.1");
    EXPECT_EQ(cmd_params_check(strict).exit_code, kExitRegimeViolation);
    auto unknown = cfg(kCircuit);
    unknown.set("bogus", "1");
    EXPECT_EQ(cmd_params_check(unknown).exit_code, kExitInputError);
    auto negative = cfg(kCircuit);
    negative.set("kappa1_over_2pi_hz", "-5");
    EXPECT_EQ(cmd_params_check(negative).exit_code, kExitInputError);
    auto zero = cfg(kCircuit);
    zero.set("g1_over_2pi_hz", "0");
    EXPECT_EQ(cmd_params_check(zero).exit_code, kExitRegimeViolation);
    auto phase = cfg(kCircuit);
    phase.set("phase_instability_rad", "0.2");
    EXPECT_EQ(cmd_params_check(phase).exit_code, kExitRegimeViolation);
}

TEST(commands, qnd_verify_defaults) {
    auto r = cmd_qnd_verify(KeyValueConfig{});
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    const auto &res = r.document["results"];
    EXPECT_EQ(res["rows"].size(), 21u);
    EXPECT_LT(res["max_ode_rel_dev"].get<double>(), 1e-6);
    EXPECT_TRUE(res["decode_identity_0_to_10"].get<bool>());
    EXPECT_TRUE(res["all_within_tolerance"].get<bool>());
}

TEST(commands, qnd_verify_exit_codes) {
    EXPECT_EQ(cmd_qnd_verify(cfg("chi = 0.3\n")).exit_code, kExitRegimeViolation);
    EXPECT_EQ(cmd_qnd_verify(cfg("dt_kappa = 0.5\n")).exit_code, kExitInputError);
    EXPECT_EQ(cmd_qnd_verify(cfg("kappa1 = 0\n")).exit_code, kExitInputError);
}

TEST(commands, concentrate_document) {
    RunOptions opts;
    opts.trials = 2000;
    auto r = cmd_concentrate(cfg("r = 0.9\n"), opts);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    const auto &res = r.document["results"];
    EXPECT_EQ(res["smallest_improving_m"], 4);
    EXPECT_NEAR(res["threshold"].get<double>(), 3.14888087450003, 1e-11);
    EXPECT_NEAR(res["success_probability"].get<double>(), 0.204281039158977, 1e-9);
    EXPECT_EQ(res["monte_carlo"]["trials"], 2000);
    EXPECT_EQ(r.document["meta"]["seed"], kDefaultSeed);
    EXPECT_EQ(r.csv.rfind("m,probability,entanglement_nats,improved,decoded_count,true_count\n", 0), 0u);
}

TEST(commands, concentrate_exit_codes) {
    EXPECT_EQ(cmd_concentrate(KeyValueConfig{}).exit_code, kExitInputError);
    EXPECT_EQ(cmd_concentrate(cfg("r = -1\n")).exit_code, kExitInputError);
    EXPECT_EQ(cmd_concentrate(cfg("r = abc\n")).exit_code, kExitInputError);
    EXPECT_EQ(cmd_concentrate(cfg("r = 0.9\nchi = 0.3\n")).exit_code, kExitRegimeViolation);
}

TEST(commands, flags_override_config) {
    RunOptions opts;
    opts.seed = 5;
    opts.trials = 100;
    auto r = cmd_concentrate(cfg("r = 0.9\nseed = 9\ntrials = 50\n"), opts);
    ASSERT_EQ(r.exit_code, kExitOk);
    EXPECT_EQ(r.document["meta"]["seed"], 5);
    EXPECT_EQ(r.document["results"]["monte_carlo"]["trials"], 100);
    auto from_cfg = cmd_concentrate(cfg("r = 0.9\nseed = 9\ntrials = 50\n"));
    EXPECT_EQ(from_cfg.document["meta"]["seed"], 9);
    EXPECT_EQ(from_cfg.document["results"]["monte_carlo"]["trials"], 50);
}

TEST(commands, same_seed_same_bytes) {
    RunOptions opts;
    opts.seed = 123;
    opts.trials = 3000;
    auto c = cfg("r = 0.9\n");
    EXPECT_EQ(cmd_concentrate(c, opts).document.dump(2), cmd_concentrate(c, opts).document.dump(2));
    auto p = cfg("r = 0.9\neta_a_per_s = 5000\neta_b_per_s = 5000\nt_tx_s = 1e-6\n");
    auto a = cmd_purify(p, opts);
    ASSERT_EQ(a.exit_code, kExitOk) << a.error;
    EXPECT_EQ(a.document.dump(2), cmd_purify(p, opts).document.dump(2));
    EXPECT_EQ(a.csv, cmd_purify(p, opts).csv);
    opts.seed = 124;
    EXPECT_NE(a.document.dump(2), cmd_purify(p, opts).document.dump(2));
}

TEST(commands, purify_document) {
    RunOptions opts;
    opts.trials = 5000;
    opts.noise = false;
    auto r = cmd_purify(cfg("r = 0.9\neta_a_per_s = 5000\neta_b_per_s = 5000\nt_tx_s = 1e-6\n"), opts);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    const auto &res = r.document["results"];
    EXPECT_EQ(res["false_accepts"], 0);
    EXPECT_NEAR(res["p_no_closed_form"].get<double>(), 0.979355537214864, 1e-13);
    EXPECT_EQ(res["branches"].size(), 5u);
    EXPECT_FALSE(r.document["inputs"]["readout"]["noise_enabled"].get<bool>());
}

TEST(commands, purify_lossless_keeps_everything) {
    RunOptions opts;
    opts.trials = 500;
    opts.noise = false;
    auto r = cmd_purify(cfg("r = 0.9\n"), opts);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    EXPECT_EQ(r.document["results"]["yield"].get<double>(), 1.0);
}

TEST(commands, purify_exit_codes) {
    EXPECT_EQ(cmd_purify(KeyValueConfig{}).exit_code, kExitInputError);
    EXPECT_EQ(cmd_purify(cfg("r = 0.9\neta_a_per_s = -1\n")).exit_code, kExitInputError);
    auto heavy = cfg("r = 0.9\neta_a_per_s = 5000\neta_b_per_s = 5000\nt_tx_s = 1e-4\n");
    EXPECT_EQ(cmd_purify(heavy).exit_code, kExitRegimeViolation);
}

TEST(commands, timestamp_is_opt_in) {
    RunOptions opts;
    opts.timestamp = "2026-01-01T00:00:00Z";
    auto r = cmd_qnd_verify(KeyValueConfig{}, opts);
    EXPECT_EQ(r.document["meta"]["timestamp"], "2026-01-01T00:00:00Z");
}

TEST(commands, dispatch) {
    EXPECT_EQ(run_command("qnd-verify", KeyValueConfig{}).exit_code, kExitOk);
    auto r = run_command("frobnicate", KeyValueConfig{});
    EXPECT_EQ(r.exit_code, kExitInputError);
    EXPECT_FALSE(r.error.empty());
    EXPECT_STRNE(library_version(), "0.0.0");
}
