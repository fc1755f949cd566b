// Copyright 2026 The qec5 Authors
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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qec5/channels.hpp"
#include "qec5/claims.hpp"
#include "qec5/code.hpp"
#include "qec5/io.hpp"
#include "qec5/metrics.hpp"
#include "qec5/sweep.hpp"

namespace qec5 {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    std::string subcommand;
    std::string channel;
    std::vector<double> betas_pi{0.0, 0.25};
    double alpha_min_pi = 0.0;
    double alpha_max_pi = 0.5;
    std::size_t alpha_count = 65;
    double delta_min = 0.0;
    double delta_max = 1.0;
    std::size_t delta_count = 101;
    std::string metric = "most-negative";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string out = "-";
    std::string format = "csv";

    NegativityVariant variant() const {
        return metric == "sum-negative" ? NegativityVariant::SumNegative : NegativityVariant::MostNegative;
    }

    SweepConfig sweep_config(ChannelKind kind) const {
        SweepConfig c;
        c.channel = kind;
        c.delta = Grid{delta_min, delta_max, delta_count};
        c.alpha = Grid{alpha_min_pi * std::numbers::pi, alpha_max_pi * std::numbers::pi, alpha_count};
        c.betas.clear();
        for (double b : betas_pi) {
            c.betas.push_back(b * std::numbers::pi);
        }
        c.variant = variant();
        c.workers = workers;
        return c;
    }
};

namespace detail {

class OutputTarget {
   public:
    OutputTarget(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) {
                throw std::runtime_error("cannot open output file '" + path + "'");
            }
            stream_ = file_.get();
        }
    }

    std::ostream &stream() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) {
            throw std::runtime_error("failed while writing output");
        }
    }

   private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_;
};

inline void add_grid_options(CLI::App &sub, CliConfig &cfg) {
    sub.add_option("--alpha-count", cfg.alpha_count, "Number of alpha samples")->check(CLI::Range(2, 100000));
    sub.add_option("--delta-count", cfg.delta_count, "Number of delta samples")->check(CLI::Range(2, 100000));
    sub.add_option("--metric", cfg.metric, "Negativity variant")
        ->check(CLI::IsMember({"most-negative", "sum-negative"}));
    sub.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 1024u));
}

inline int run_sweep_command(const CliConfig &cfg, std::ostream &out) {
    const auto kind = parse_channel(cfg.channel.empty() ? "dephasing" : cfg.channel);
    const auto config = cfg.sweep_config(*kind);
    const auto tables = build_code_tables();
    const auto records = run_sweep(config, tables);
    OutputTarget target(cfg.out, out);
    if (cfg.format == "json") {
        write_json(target.stream(), records);
    } else {
        write_csv(target.stream(), records, config.specs);
    }
    target.finish();
    return kExitOk;
}

inline int run_claims_command(const CliConfig &cfg, std::ostream &out) {
    std::vector<ChannelKind> kinds;
    if (cfg.channel.empty()) {
        kinds.assign(kAllChannels.begin(), kAllChannels.end());
    } else {
        kinds.push_back(*parse_channel(cfg.channel));
    }
    const auto tables = build_code_tables();
    std::vector<SweepRecord> records;
    for (auto kind : kinds) {
        auto part = run_sweep(cfg.sweep_config(kind), tables);
        records.insert(records.end(), part.begin(), part.end());
    }
    const auto report = extract_claim_report(records);
    for (const auto &ch : report.channels) {
        out << channel_name(ch.channel) << " (delta step " << format_number(ch.delta_spacing) << ")\n";
        for (const auto &c : ch.claims) {
            out << "  " << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.description << " | measured "
                << c.measured << '\n';
        }
    }
    return report.all_passed() ? kExitOk : kExitClaimFailure;
}

}  // namespace detail

/// Entry point shared by the qec5 binary and the tests.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Five-qubit code decoherence sweeps", "qec5"};
    app.require_subcommand(1);
    CliConfig cfg;
    const std::vector<std::string> channels{"dephasing", "amplitude", "depolarizing"};

    auto *sweep = app.add_subcommand("sweep", "Evaluate fidelity and negativities over an (alpha, beta, delta) grid");
    sweep->add_option("--channel", cfg.channel, "Noise model (default dephasing)")->check(CLI::IsMember(channels));
    sweep->add_option("--beta", cfg.betas_pi, "Beta values in units of pi")->delimiter(',');
    sweep->add_option("--alpha-min", cfg.alpha_min_pi, "Smallest alpha, units of pi");
    sweep->add_option("--alpha-max", cfg.alpha_max_pi, "Largest alpha, units of pi");
    sweep->add_option("--delta-min", cfg.delta_min, "Smallest delta");
    sweep->add_option("--delta-max", cfg.delta_max, "Largest delta");
    detail::add_grid_options(*sweep, cfg);
    sweep->add_option("--out", cfg.out, "Output path, '-' for stdout");
    sweep->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    auto *claims = app.add_subcommand("claims", "Run default sweeps and check the reference claims");
    claims->add_option("--channel", cfg.channel, "Only this noise model")->check(CLI::IsMember(channels));
    detail::add_grid_options(*claims, cfg);

    auto *tables = app.add_subcommand("tables", "Print the syndrome table");
    tables->add_option("--out", cfg.out, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "qec5: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            cfg.subcommand = "sweep";
            return detail::run_sweep_command(cfg, out);
        }
        if (claims->parsed()) {
            cfg.subcommand = "claims";
            return detail::run_claims_command(cfg, out);
        }
        cfg.subcommand = "tables";
        detail::OutputTarget target(cfg.out, out);
        target.stream() << syndrome_table_text(build_code_tables());
        target.finish();
        return kExitOk;
    } catch (const std::exception &e) {
        err << "qec5: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qec5
