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

#include <cmath>
#include <functional>
#include <sstream>

#include "kerrqnd/concentration.h"
#include "kerrqnd/kerr_params.h"
#include "kerrqnd/purification.h"
#include "kerrqnd/qnd_readout.h"

#ifndef KERRQND_VERSION
#define KERRQND_VERSION "0.0.0"
#endif

namespace kerrqnd {

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kDefaultTrials = 10000;

// Normalized readout defaults: kappa1 = 1 with chi/kappa1 and |g| taken from
// the reference circuit (chi/2pi = 2.4 MHz, kappa1/2pi = 100 MHz, |g| = 50).
constexpr double kDefaultChi = 0.024;
constexpr double kDefaultKappa1 = 1.0;
constexpr double kDefaultGMag = 50.0;
constexpr double kDefaultTauFactor = 100.0;

const std::set<std::string> kRunKeys = {"seed", "trials"};

const std::set<std::string> kReadoutKeys = {"chi",   "kappa1",          "chi_over_2pi_hz", "kappa1_over_2pi_hz",
                                            "g_mag", "tau",             "tau_s",           "tau_factor",
                                            "noise", "much_less_threshold"};

std::set<std::string> merge(std::initializer_list<std::set<std::string>> sets) {
    std::set<std::string> out;
    for (const auto &s : sets) {
        out.insert(s.begin(), s.end());
    }
    return out;
}

json meta(const std::string &command, std::uint64_t seed, const RunOptions &opts) {
    json m;
    m["seed"] = seed;
    m["version"] = KERRQND_VERSION;
    m["command"] = command;
    m["timestamp"] = opts.timestamp ? json(*opts.timestamp) : json(nullptr);
    return m;
}

std::uint64_t resolve_seed(const KeyValueConfig &cfg, const RunOptions &opts) {
    if (opts.seed) {
        return *opts.seed;
    }
    if (cfg.has("seed")) {
        std::int64_t s = cfg.get_int("seed", 0);
        if (s < 0) {
            throw ConfigError(cfg.entries().at("seed").origin + ": seed must be nonnegative");
        }
        return static_cast<std::uint64_t>(s);
    }
    return kDefaultSeed;
}

std::int64_t resolve_trials(const KeyValueConfig &cfg, const RunOptions &opts) {
    std::int64_t trials = opts.trials ? *opts.trials : cfg.get_int("trials", kDefaultTrials);
    if (trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    return trials;
}

double positive(const KeyValueConfig &cfg, const std::string &key, std::optional<double> fallback = std::nullopt) {
    double v = fallback ? cfg.get_double(key, *fallback) : cfg.get_double(key);
    if (!(v > 0)) {
        throw ConfigError((cfg.has(key) ? cfg.entries().at(key).origin + ": " : "") + key + " must be positive");
    }
    return v;
}

double nonnegative(const KeyValueConfig &cfg, const std::string &key, double fallback) {
    double v = cfg.get_double(key, fallback);
    if (v < 0) {
        throw ConfigError(cfg.entries().at(key).origin + ": " + key + " must be nonnegative");
    }
    return v;
}

/// Readout config in normalized units (chi, kappa1) or SI units
/// (chi_over_2pi_hz, kappa1_over_2pi_hz, tau_s).
ReadoutConfig parse_readout(const KeyValueConfig &cfg, const RunOptions &opts) {
    bool si = cfg.has("chi_over_2pi_hz") || cfg.has("kappa1_over_2pi_hz");
    if (si && (cfg.has("chi") || cfg.has("kappa1") || cfg.has("tau"))) {
        throw ConfigError("mix of normalized (chi, kappa1, tau) and SI (*_over_2pi_hz, tau_s) readout keys");
    }
    if (!si && cfg.has("tau_s")) {
        throw ConfigError(cfg.entries().at("tau_s").origin + ": tau_s requires SI readout keys");
    }
    ReadoutConfig r;
    if (si) {
        r.chi = to_angular(cfg.get_double("chi_over_2pi_hz"));
        r.kappa1 = to_angular(positive(cfg, "kappa1_over_2pi_hz"));
    } else {
        r.chi = cfg.get_double("chi", kDefaultChi);
        r.kappa1 = positive(cfg, "kappa1", kDefaultKappa1);
    }
    r.g_mag = positive(cfg, "g_mag", kDefaultGMag);
    const char *tau_key = si ? "tau_s" : "tau";
    if (cfg.has(tau_key) && cfg.has("tau_factor")) {
        throw ConfigError("set either " + std::string(tau_key) + " or tau_factor, not both");
    }
    if (cfg.has(tau_key)) {
        r.tau = positive(cfg, tau_key);
    } else {
        if (r.chi == 0) {
            throw ConfigError("chi = 0: tau_factor needs a nonzero chi, give tau explicitly");
        }
        double tau_min = r.kappa1 / (64.0 * r.g_mag * r.g_mag * r.chi * r.chi);
        r.tau = positive(cfg, "tau_factor", kDefaultTauFactor) * tau_min;
    }
    r.noise_enabled = cfg.get_bool("noise", true) && opts.noise;
    return r;
}

json readout_json(const ReadoutConfig &r) {
    json j;
    j["chi"] = r.chi;
    j["kappa1"] = r.kappa1;
    j["g_mag"] = r.g_mag;
    j["tau"] = r.tau;
    j["noise_enabled"] = r.noise_enabled;
    j["noise_variance"] = homodyne_noise_variance(r);
    j["per_photon_step"] = per_photon_step(r);
    j["misidentification_prob"] = misidentification_prob(r);
    return j;
}

void require_adiabatic(const ReadoutConfig &r, double threshold) {
    if (!adiabatic_regime_ok(r, threshold)) {
        std::ostringstream msg;
        msg << "adiabatic regime violated: |chi|/kappa1 = " << std::abs(r.chi) / r.kappa1 << " >= " << threshold;
        throw RegimeError(msg.str());
    }
}

json check_json(const FeasibilityCheck &c) {
    json j;
    j["name"] = c.name;
    j["ratio"] = std::isfinite(c.ratio) ? json(c.ratio) : json(nullptr);
    j["bound"] = std::isfinite(c.bound) ? json(c.bound) : json(nullptr);
    j["status"] = to_string(c.status);
    return j;
}

std::string csv_number(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

/// Runs `body`, translating exceptions into the exit-code contract.
CommandResult guarded(const std::function<CommandResult()> &body) {
    try {
        return body();
    } catch (const RegimeError &e) {
        CommandResult r;
        r.exit_code = kExitRegimeViolation;
        r.error = e.what();
        return r;
    } catch (const ConfigError &e) {
        CommandResult r;
        r.exit_code = kExitInputError;
        r.error = e.what();
        return r;
    } catch (const std::logic_error &e) {
        CommandResult r;
        r.exit_code = kExitInputError;
        r.error = e.what();
        return r;
    }
}

CircuitParams parse_circuit(const KeyValueConfig &cfg) {
    CircuitParams p;
    p.g1_hz = cfg.get_double("g1_over_2pi_hz");
    p.g2_hz = cfg.get_double("g2_over_2pi_hz");
    p.delta_big_hz = cfg.get_double("delta_big_over_2pi_hz");
    p.delta_small_hz = cfg.get_double("delta_small_over_2pi_hz", 0.0);
    p.omega_c_hz = cfg.get_double("omega_c_over_2pi_hz");
    p.kappa1_hz = cfg.get_double("kappa1_over_2pi_hz");
    p.kappa2_hz = cfg.get_double("kappa2_over_2pi_hz");
    p.validate();
    return p;
}

}  // namespace

const char *library_version() { return KERRQND_VERSION; }

CommandResult cmd_params_check(const KeyValueConfig &cfg, const RunOptions &opts) {
    return guarded([&] {
        cfg.require_known(merge({{"g1_over_2pi_hz", "g2_over_2pi_hz", "delta_big_over_2pi_hz", "delta_small_over_2pi_hz",
                                  "omega_c_over_2pi_hz", "kappa1_over_2pi_hz", "kappa2_over_2pi_hz", "g_mag",
                                  "much_less_threshold", "phase_instability_rad", "kappa_r1_over_2pi_hz",
                                  "kappa_r2_over_2pi_hz", "chi1_over_2pi_hz", "chi2_over_2pi_hz",
                                  "gamma1_over_2pi_hz", "gamma2_over_2pi_hz", "n_b1", "n_b2"},
                                 kRunKeys}));
        if (cfg.empty()) {
            throw ConfigError("empty config: circuit parameters are required");
        }
        CircuitParams p = parse_circuit(cfg);
        double g_mag = positive(cfg, "g_mag");
        double threshold = positive(cfg, "much_less_threshold", kMuchLessThreshold);

        CommandResult out;
        FeasibilityReport regime = validate_regime(p, threshold);
        double chi_hz = regime.chi_hz;

        ImperfectionParams imp;
        imp.phase_instability_rad = nonnegative(cfg, "phase_instability_rad", 0.0);
        imp.kappa_r1_hz = nonnegative(cfg, "kappa_r1_over_2pi_hz", p.kappa1_hz);
        imp.kappa_r2_hz = nonnegative(cfg, "kappa_r2_over_2pi_hz", p.kappa1_hz);
        double chi_mag = std::isfinite(chi_hz) ? std::abs(chi_hz) : 0.0;
        imp.chi1_hz = cfg.get_double("chi1_over_2pi_hz", chi_mag);
        imp.chi2_hz = cfg.get_double("chi2_over_2pi_hz", chi_mag);
        imp.gamma1_hz = nonnegative(cfg, "gamma1_over_2pi_hz", 0.0);
        imp.gamma2_hz = nonnegative(cfg, "gamma2_over_2pi_hz", 0.0);
        imp.n_b1 = nonnegative(cfg, "n_b1", 0.0);
        imp.n_b2 = nonnegative(cfg, "n_b2", 0.0);
        imp.validate();
        FeasibilityReport imperfections = check_imperfections(p, imp);

        bool regime_ok = regime.all_passed() && imperfections.all_passed();

        json window = nullptr;
        if (std::isfinite(chi_hz) && chi_hz != 0) {
            MeasurementWindow w = measurement_window(p, g_mag);
            window = json::object();
            window["tau_min_s"] = w.tau_min_s;
            window["tau_max_s"] = w.tau_max_s;
            window["feasible"] = w.feasible();
            if (!w.feasible()) {
                regime_ok = false;
                out.warnings.push_back("measurement window is empty: tau_min >= tau_max");
            }
        } else {
            regime_ok = false;
            out.warnings.push_back("chi = 0: no measurement window exists");
        }

        json inputs;
        inputs["g1_over_2pi_hz"] = p.g1_hz;
        inputs["g2_over_2pi_hz"] = p.g2_hz;
        inputs["delta_big_over_2pi_hz"] = p.delta_big_hz;
        inputs["delta_small_over_2pi_hz"] = p.delta_small_hz;
        inputs["omega_c_over_2pi_hz"] = p.omega_c_hz;
        inputs["kappa1_over_2pi_hz"] = p.kappa1_hz;
        inputs["kappa2_over_2pi_hz"] = p.kappa2_hz;
        inputs["g_mag"] = g_mag;
        inputs["much_less_threshold"] = threshold;
        inputs["phase_instability_rad"] = imp.phase_instability_rad;
        inputs["kappa_r1_over_2pi_hz"] = imp.kappa_r1_hz;
        inputs["kappa_r2_over_2pi_hz"] = imp.kappa_r2_hz;
        inputs["chi1_over_2pi_hz"] = imp.chi1_hz;
        inputs["chi2_over_2pi_hz"] = imp.chi2_hz;
        inputs["gamma1_over_2pi_hz"] = imp.gamma1_hz;
        inputs["gamma2_over_2pi_hz"] = imp.gamma2_hz;
        inputs["n_b1"] = imp.n_b1;
        inputs["n_b2"] = imp.n_b2;

        json results;
        results["chi_over_2pi_hz"] = std::isfinite(chi_hz) ? json(chi_hz) : json(nullptr);
        results["regime_checks"] = json::array();
        results["imperfection_checks"] = json::array();
        std::ostringstream csv;
        csv << "group,name,ratio,bound,status\n";
        for (const auto &c : regime.checks) {
            results["regime_checks"].push_back(check_json(c));
            csv << "regime," << c.name << ',' << csv_number(c.ratio) << ',' << csv_number(c.bound) << ','
                << to_string(c.status) << '\n';
            if (c.status == CheckStatus::kFail) {
                out.warnings.push_back("regime check " + c.name + " failed: " + csv_number(c.ratio) +
                                       " is not below " + csv_number(c.bound));
            }
        }
        for (const auto &c : imperfections.checks) {
            results["imperfection_checks"].push_back(check_json(c));
            csv << "imperfection," << c.name << ',' << csv_number(c.ratio) << ',' << csv_number(c.bound) << ','
                << to_string(c.status) << '\n';
            if (c.status == CheckStatus::kFail) {
                out.warnings.push_back("imperfection check " + c.name + " failed: " + csv_number(c.ratio) +
                                       " is not below " + csv_number(c.bound));
            }
        }
        results["measurement_window"] = window;
        results["all_passed"] = regime_ok;

        out.document["meta"] = meta("params-check", resolve_seed(cfg, opts), opts);
        out.document["inputs"] = inputs;
        out.document["results"] = results;
        out.csv = csv.str();
        out.exit_code = regime_ok ? kExitOk : kExitRegimeViolation;
        return out;
    });
}

CommandResult cmd_qnd_verify(const KeyValueConfig &cfg, const RunOptions &opts) {
    return guarded([&] {
        cfg.require_known(merge({kReadoutKeys, kRunKeys, {"t_end_kappa", "dt_kappa", "n_total_max", "ode_tolerance"}}));
        ReadoutConfig r = parse_readout(cfg, opts);
        double threshold = positive(cfg, "much_less_threshold", kMuchLessThreshold);
        require_adiabatic(r, threshold);
        r.validate();
        double t_end = positive(cfg, "t_end_kappa", 100.0) / r.kappa1;
        double dt = positive(cfg, "dt_kappa", kDefaultStepKappa) / r.kappa1;
        std::int64_t n_total_max = cfg.get_int("n_total_max", 5);
        if (n_total_max < 0 || n_total_max > 1000) {
            throw ConfigError("n_total_max must lie in 0..1000");
        }
        double ode_tol = positive(cfg, "ode_tolerance", 1e-6);

        CommandResult out;
        json rows = json::array();
        std::ostringstream csv;
        csv << "n1,n2,exact_re,exact_im,ode_re,ode_im,ode_rel_dev,first_order_signal,exact_signal,"
               "first_order_rel_dev,first_order_bound\n";
        bool all_ok = true;
        double max_ode = 0, max_first = 0;
        for (int n_total = 0; n_total <= n_total_max; ++n_total) {
            for (int n1 = 0; n1 <= n_total; ++n1) {
                int n2 = n_total - n1;
                auto exact = cascade_steady_output(n1, n2, r);
                auto ode = simulate_cascade_ode(n1, n2, r, t_end, dt);
                double ode_dev = std::abs(ode - exact) / std::abs(exact);
                double first_dev = first_order_relative_deviation(n1, n2, r);
                double bound = first_order_deviation_bound(n_total, r);
                bool ok = ode_dev < ode_tol && first_dev <= bound;
                all_ok = all_ok && ok;
                max_ode = std::max(max_ode, ode_dev);
                max_first = std::max(max_first, first_dev);
                json row;
                row["n1"] = n1;
                row["n2"] = n2;
                row["exact_re"] = exact.real();
                row["exact_im"] = exact.imag();
                row["ode_re"] = ode.real();
                row["ode_im"] = ode.imag();
                row["ode_rel_dev"] = ode_dev;
                row["first_order_signal"] = expected_signal(n_total, r);
                row["exact_signal"] = std::sqrt(2.0) * exact.real();
                row["first_order_rel_dev"] = first_dev;
                row["first_order_bound"] = bound;
                row["within_tolerance"] = ok;
                rows.push_back(row);
                csv << n1 << ',' << n2 << ',' << csv_number(exact.real()) << ',' << csv_number(exact.imag()) << ','
                    << csv_number(ode.real()) << ',' << csv_number(ode.imag()) << ',' << csv_number(ode_dev) << ','
                    << csv_number(expected_signal(n_total, r)) << ',' << csv_number(std::sqrt(2.0) * exact.real())
                    << ',' << csv_number(first_dev) << ',' << csv_number(bound) << '\n';
            }
        }
        bool decode_ok = true;
        double step = per_photon_step(r);
        for (int n = 0; n <= 10; ++n) {
            decode_ok = decode_ok && decode_photon_number(expected_signal(n, r), step) == n;
        }
        all_ok = all_ok && decode_ok;

        json inputs = readout_json(r);
        inputs["t_end"] = t_end;
        inputs["dt"] = dt;
        inputs["n_total_max"] = n_total_max;
        inputs["much_less_threshold"] = threshold;

        json results;
        results["rows"] = rows;
        results["max_ode_rel_dev"] = max_ode;
        results["max_first_order_rel_dev"] = max_first;
        results["tolerances"] = {{"ode_rel_dev", ode_tol}, {"first_order_rel_dev", "phi^2/4, phi = 4|chi|n_total/kappa1"}};
        results["decode_identity_0_to_10"] = decode_ok;
        results["all_within_tolerance"] = all_ok;

        out.document["meta"] = meta("qnd-verify", resolve_seed(cfg, opts), opts);
        out.document["inputs"] = inputs;
        out.document["results"] = results;
        out.csv = csv.str();
        if (!all_ok) {
            out.warnings.push_back("one or more deviations exceed their tolerance");
            out.exit_code = kExitRegimeViolation;
        }
        return out;
    });
}

CommandResult cmd_concentrate(const KeyValueConfig &cfg, const RunOptions &opts) {
    return guarded([&] {
        cfg.require_known(merge({kReadoutKeys, kRunKeys, {"r", "tail_tol"}}));
        auto sp = SqueezedParams::from_r(cfg.get_double("r"));
        double tail_tol = positive(cfg, "tail_tol", 1e-10);
        if (tail_tol >= 1) {
            throw ConfigError("tail_tol must lie in (0, 1)");
        }
        ReadoutConfig r = parse_readout(cfg, opts);
        require_adiabatic(r, positive(cfg, "much_less_threshold", kMuchLessThreshold));
        r.validate();
        std::uint64_t seed = resolve_seed(cfg, opts);
        std::int64_t trials = resolve_trials(cfg, opts);

        int n_max = outcome_cutoff(sp, tail_tol);
        auto outcomes = run_ideal(sp, n_max);
        Rng rng(seed);
        ConcentrationStats stats = run_monte_carlo(sp, r, trials, rng);

        json table = json::array();
        std::ostringstream csv;
        csv << "m,probability,entanglement_nats,improved,decoded_count,true_count\n";
        for (const auto &o : outcomes) {
            json row;
            row["m"] = o.m;
            row["probability"] = o.probability;
            row["entanglement_nats"] = o.entanglement_nats;
            row["improved"] = o.improved;
            table.push_back(row);
            auto count = [](const std::map<int, std::int64_t> &h, int m) {
                auto it = h.find(m);
                return it == h.end() ? std::int64_t{0} : it->second;
            };
            csv << o.m << ',' << csv_number(o.probability) << ',' << csv_number(o.entanglement_nats) << ','
                << (o.improved ? "true" : "false") << ',' << count(stats.outcome_histogram, o.m) << ','
                << count(stats.true_histogram, o.m) << '\n';
        }

        json histogram = json::object();
        for (const auto &[m, count] : stats.outcome_histogram) {
            histogram[std::to_string(m)] = count;
        }
        json mc;
        mc["trials"] = stats.trials;
        mc["decoded_histogram"] = histogram;
        mc["misdecode_count"] = stats.misdecode_count;
        mc["empirical_success_rate"] = stats.empirical_success_rate;
        mc["raw_success_rate"] = stats.raw_success_rate;
        mc["keep_all_rate"] = stats.keep_all_rate;
        mc["mean_kept_entanglement_nats"] = stats.mean_kept_entanglement;

        json inputs;
        inputs["r"] = sp.r();
        inputs["lambda"] = sp.lambda();
        inputs["tail_tol"] = tail_tol;
        inputs["trials"] = trials;
        inputs["readout"] = readout_json(r);

        json results;
        results["squeezed_pair_entanglement_nats"] = squeezed_pair_entropy(sp);
        results["threshold"] = entanglement_threshold(sp);
        results["smallest_improving_m"] = smallest_improving_m(sp);
        results["success_probability"] = success_probability(sp, n_max);
        results["n_max"] = n_max;
        results["tail_mass"] = outcome_tail_mass(sp, n_max);
        results["outcomes"] = table;
        results["monte_carlo"] = mc;

        CommandResult out;
        out.document["meta"] = meta("concentrate", seed, opts);
        out.document["inputs"] = inputs;
        out.document["results"] = results;
        out.csv = csv.str();
        return out;
    });
}

CommandResult cmd_purify(const KeyValueConfig &cfg, const RunOptions &opts) {
    return guarded([&] {
        cfg.require_known(merge({kReadoutKeys, kRunKeys, {"r", "eta_a_per_s", "eta_b_per_s", "t_tx_s", "tail_tol"}}));
        auto sp = SqueezedParams::from_r(cfg.get_double("r"));
        ChannelParams ch;
        ch.eta_a = nonnegative(cfg, "eta_a_per_s", 0.0);
        ch.eta_b = nonnegative(cfg, "eta_b_per_s", 0.0);
        ch.t_tx = nonnegative(cfg, "t_tx_s", 0.0);
        ch.validate();
        double tail_tol = positive(cfg, "tail_tol", kPurificationTailTol);
        if (tail_tol >= 1) {
            throw ConfigError("tail_tol must lie in (0, 1)");
        }
        ReadoutConfig r = parse_readout(cfg, opts);
        require_adiabatic(r, positive(cfg, "much_less_threshold", kMuchLessThreshold));
        r.validate();
        std::uint64_t seed = resolve_seed(cfg, opts);
        std::int64_t trials = resolve_trials(cfg, opts);

        PurificationSimulator sim(sp, ch, r, r, tail_tol);
        Rng rng(seed);
        PurificationStats stats = sim.run_batch(trials, rng);
        const BranchSet &set = sim.branches();

        CommandResult out;
        if (!set.small_loss_ok) {
            out.warnings.push_back("small-loss indicator nbar*eta_x*t_tx exceeds 0.1 on at least one side");
        }
        if (!set.jump_weight_ok) {
            out.warnings.push_back("total jump weight exceeds 0.1; single-jump model is approximate");
        }

        json branches = json::array();
        std::ostringstream csv;
        csv << "branch,weight,count\n";
        for (const auto &b : set.branches) {
            json row;
            row["name"] = b.name();
            row["weight"] = b.weight;
            branches.push_back(row);
            auto it = stats.branch_histogram.find(b.name());
            csv << b.name() << ',' << csv_number(b.weight) << ','
                << (it == stats.branch_histogram.end() ? 0 : it->second) << '\n';
        }
        json histogram = json::object();
        for (const auto &[name, count] : stats.branch_histogram) {
            histogram[name] = count;
        }

        json inputs;
        inputs["r"] = sp.r();
        inputs["lambda"] = sp.lambda();
        inputs["eta_a_per_s"] = ch.eta_a;
        inputs["eta_b_per_s"] = ch.eta_b;
        inputs["t_tx_s"] = ch.t_tx;
        inputs["tail_tol"] = tail_tol;
        inputs["trials"] = trials;
        inputs["readout"] = readout_json(r);

        json results;
        results["n_max"] = sim.n_max();
        results["mean_photon_number"] = sp.mean_photon_number();
        results["branches"] = branches;
        results["total_jump_weight"] = set.total_jump_weight;
        results["p_no_closed_form"] = set.p_no_closed_form;
        results["small_loss_ok"] = set.small_loss_ok;
        results["yield"] = stats.yield();
        results["kept"] = stats.kept;
        results["discarded"] = stats.discarded;
        results["false_accepts"] = stats.false_accepts;
        results["kept_entanglement_mean_nats"] = stats.kept_entanglement_mean;
        results["kept_fidelity_mean"] = stats.kept_fidelity_mean;
        results["branch_histogram"] = histogram;

        out.document["meta"] = meta("purify", seed, opts);
        out.document["inputs"] = inputs;
        out.document["results"] = results;
        out.csv = csv.str();
        return out;
    });
}

CommandResult run_command(const std::string &name, const KeyValueConfig &cfg, const RunOptions &opts) {
    if (name == "params-check") return cmd_params_check(cfg, opts);
    if (name == "qnd-verify") return cmd_qnd_verify(cfg, opts);
    if (name == "concentrate") return cmd_concentrate(cfg, opts);
    if (name == "purify") return cmd_purify(cfg, opts);
    CommandResult r;
    r.exit_code = kExitInputError;
    r.error = "unknown command '" + name + "'";
    return r;
}

}  // namespace kerrqnd
