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
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qec5/channels.hpp"
#include "qec5/code.hpp"
#include "qec5/metrics.hpp"
#include "qec5/states.hpp"

namespace qec5 {

/// `count` evenly spaced samples from `start` to `stop`, both included.
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    std::size_t count = 2;

    double at(std::size_t i) const {
        if (i + 1 == count) {
            return stop;
        }
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }

    double spacing() const { return (stop - start) / static_cast<double>(count - 1); }

    std::vector<double> values() const {
        std::vector<double> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(at(i));
        }
        return out;
    }

    void validate(const char *name, double lo, double hi) const {
        if (count < 2) {
            throw std::invalid_argument(std::string(name) + " grid needs at least 2 points");
        }
        if (!(start >= lo && stop <= hi && start < stop)) {
            throw std::invalid_argument(
                std::string(name) + " grid [" + std::to_string(start) + ", " + std::to_string(stop) +
                "] must be increasing and inside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
    }
};

struct SweepConfig {
    ChannelKind channel = ChannelKind::PhaseDamping;
    Grid delta{0.0, 1.0, 101};
    Grid alpha{0.0, std::numbers::pi / 2, 65};
    std::vector<double> betas{0.0, std::numbers::pi / 4};
    std::vector<NegativitySpec> specs = default_negativity_specs();
    NegativityVariant variant = NegativityVariant::MostNegative;
    unsigned workers = 1;

    void validate() const {
        delta.validate("delta", 0.0, 1.0);
        alpha.validate("alpha", 0.0, std::numbers::pi / 2);
        if (betas.empty()) {
            throw std::invalid_argument("sweep needs at least one beta value");
        }
        for (double b : betas) {
            StateParams{0.0, b}.validate();
        }
        if (workers == 0) {
            throw std::invalid_argument("sweep needs at least one worker");
        }
    }

    std::size_t point_count() const { return betas.size() * alpha.count * delta.count; }
};

struct SweepRecord {
    ChannelKind channel;
    double alpha;
    double beta;
    double delta;
    /// Of the decoded qubit.
    double fidelity;
    /// Of the noisy five-qubit state before decoding, one per requested spec.
    std::vector<std::pair<NegativitySpec, double>> negativities;

    double negativity(const NegativitySpec &spec) const {
        for (const auto &[s, v] : negativities) {
            if (s == spec) {
                return v;
            }
        }
        throw std::out_of_range("SweepRecord: no " + spec.label() + " column");
    }
};

inline SweepRecord evaluate_point(
    ChannelKind channel,
    double delta,
    const StateParams &params,
    std::span<const NegativitySpec> specs,
    const CodeTables &tables,
    NegativityVariant variant = NegativityVariant::MostNegative) {
    const auto noisy = apply_independent(DensityMatrix::from_pure(encode(params, tables)), make_channel(channel, delta));
    SweepRecord record{channel, params.alpha, params.beta, delta, fidelity(decode(noisy, tables), params), {}};
    record.negativities.reserve(specs.size());
    for (const auto &spec : specs) {
        record.negativities.emplace_back(spec, negativity(noisy, spec, variant));
    }
    return record;
}

/// Evaluates the full (beta, alpha, delta) grid. Records come back in row-major order with delta
/// varying fastest, independent of the worker count.
inline std::vector<SweepRecord> run_sweep(const SweepConfig &config, const CodeTables &tables) {
    config.validate();
    const std::size_t na = config.alpha.count;
    const std::size_t nd = config.delta.count;
    const std::size_t total = config.point_count();

    std::vector<std::optional<SweepRecord>> slots(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
            try {
                const std::size_t b = i / (na * nd);
                const std::size_t a = (i / nd) % na;
                const std::size_t d = i % nd;
                slots[i] = evaluate_point(
                    config.channel, config.delta.at(d), StateParams{config.alpha.at(a), config.betas[b]},
                    config.specs, tables, config.variant);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(total);
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(config.workers, total));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<SweepRecord> records;
    records.reserve(total);
    for (auto &slot : slots) {
        records.push_back(std::move(*slot));
    }
    return records;
}

}  // namespace qec5
