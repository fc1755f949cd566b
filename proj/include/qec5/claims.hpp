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
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qec5/channels.hpp"
#include "qec5/metrics.hpp"
#include "qec5/sweep.hpp"

namespace qec5 {

/// Reference values and tolerances for the scalar claims checked against a sweep.
struct ClaimTargets {
    double fidelity_threshold = 0.95;
    double dephasing_crossing_low = 0.18;
    double dephasing_crossing_high = 0.64;
    double location_tol = 0.02;
    double dephasing_high_entanglement_floor = 0.85;
    double dephasing_low_entanglement_endpoint = 0.5;
    double endpoint_tol = 0.02;
    double dephasing_tilted_esd_floor = 0.8;
    double amplitude_turnaround = 0.56;
    double amplitude_turnaround_tol = 0.03;
    double amplitude_endpoint = 0.875;
    double amplitude_endpoint_tol = 0.005;
    double amplitude_deep_minimum_ceiling = 0.2;
    double depolarizing_endpoint = 0.5;
    double depolarizing_endpoint_tol = 1e-6;
    double depolarizing_esd_ceiling = 0.5;
    double depolarizing_onset_fidelity_low = 0.55;
    double depolarizing_onset_fidelity_high = 0.6;
    double onset_fidelity_tol = 0.02;
    double n2_flatness_tol = 1e-9;
    double grid_match_tol = 1e-9;
};

struct Claim {
    std::string id;
    std::string description;
    std::string measured;
    bool passed = false;
};

struct ChannelClaims {
    ChannelKind channel;
    double delta_spacing = 0.0;
    std::vector<Claim> claims;

    bool all_passed() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.passed; });
    }
};

struct ClaimReport {
    std::vector<ChannelClaims> channels;

    bool all_passed() const {
        return std::all_of(channels.begin(), channels.end(), [](const ChannelClaims &c) { return c.all_passed(); });
    }

    const Claim &find(const std::string &id) const {
        for (const auto &ch : channels) {
            for (const auto &c : ch.claims) {
                if (c.id == id) {
                    return c;
                }
            }
        }
        throw std::out_of_range("ClaimReport: no claim " + id);
    }
};

/// A (channel, beta, alpha) slice of a sweep: fidelity and negativity curves over delta.
struct Curve {
    double alpha = 0.0;
    std::vector<double> deltas;
    std::vector<double> fidelity;
    std::map<NegativitySpec, std::vector<double>> negativity;

    std::optional<double> esd(const NegativitySpec &spec) const {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(deltas.size());
        const auto &n = negativity.at(spec);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            pts.emplace_back(deltas[i], n[i]);
        }
        return esd_threshold(pts);
    }

    std::optional<double> first_below(double level) const {
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (fidelity[i] < level) {
                return deltas[i];
            }
        }
        return std::nullopt;
    }

    double fidelity_at(double delta, double tol) const {
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (std::abs(deltas[i] - delta) <= tol) {
                return fidelity[i];
            }
        }
        throw std::out_of_range("Curve: delta " + std::to_string(delta) + " not sampled");
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

inline std::string fmt(const std::optional<double> &v) { return v ? fmt(*v) : std::string("none"); }

inline bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

/// Curves for one channel and beta, ordered by alpha.
inline std::vector<Curve> slice(std::span<const SweepRecord> records, ChannelKind channel, double beta, double tol) {
    std::map<double, Curve> by_alpha;
    for (const auto &r : records) {
        if (r.channel != channel || std::abs(r.beta - beta) > tol) {
            continue;
        }
        auto &curve = by_alpha[r.alpha];
        curve.alpha = r.alpha;
        curve.deltas.push_back(r.delta);
        curve.fidelity.push_back(r.fidelity);
        for (const auto &[spec, v] : r.negativities) {
            curve.negativity[spec].push_back(v);
        }
    }
    std::vector<Curve> out;
    for (auto &[alpha, curve] : by_alpha) {
        std::vector<std::size_t> order(curve.deltas.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](auto x, auto y) { return curve.deltas[x] < curve.deltas[y]; });
        Curve sorted;
        sorted.alpha = alpha;
        for (auto i : order) {
            sorted.deltas.push_back(curve.deltas[i]);
            sorted.fidelity.push_back(curve.fidelity[i]);
        }
        for (auto &[spec, values] : curve.negativity) {
            auto &dst = sorted.negativity[spec];
            for (auto i : order) {
                dst.push_back(values[i]);
            }
        }
        out.push_back(std::move(sorted));
    }
    return out;
}

inline const Curve *find_alpha(const std::vector<Curve> &curves, double alpha, double tol) {
    for (const auto &c : curves) {
        if (std::abs(c.alpha - alpha) <= tol) {
            return &c;
        }
    }
    return nullptr;
}

class CoverageCheck {
   public:
    explicit CoverageCheck(std::string channel) : channel_(std::move(channel)) {}

    void need(bool ok, const std::string &what) {
        if (!ok) {
            missing_.push_back(what);
        }
    }

    void raise_if_missing() const {
        if (missing_.empty()) {
            return;
        }
        std::string msg = "extract_claim_report: " + channel_ + " sweep is missing";
        for (std::size_t i = 0; i < missing_.size(); ++i) {
            msg += (i == 0 ? " " : "; ") + missing_[i];
        }
        throw std::invalid_argument(msg);
    }

   private:
    std::string channel_;
    std::vector<std::string> missing_;
};

inline bool has_spec(const std::vector<Curve> &curves, const NegativitySpec &spec) {
    return !curves.empty() && curves.front().negativity.count(spec) != 0;
}

inline bool spans_delta(const std::vector<Curve> &curves, double tol) {
    return !curves.empty() && std::abs(curves.front().deltas.front()) <= tol &&
           std::abs(curves.front().deltas.back() - 1.0) <= tol;
}

inline ChannelClaims dephasing_claims(std::span<const SweepRecord> records, const ClaimTargets &t) {
    constexpr double pi = std::numbers::pi;
    const auto flat = slice(records, ChannelKind::PhaseDamping, 0.0, t.grid_match_tol);
    const auto tilted = slice(records, ChannelKind::PhaseDamping, pi / 4, t.grid_match_tol);
    const NegativitySpec n1{1}, n2{2};

    CoverageCheck cov("dephasing");
    cov.need(!flat.empty(), "beta = 0 records");
    cov.need(!tilted.empty(), "beta = pi/4 records");
    cov.need(spans_delta(flat, t.grid_match_tol), "a delta grid from 0 to 1");
    cov.need(find_alpha(flat, 0.0, t.grid_match_tol) != nullptr, "alpha = 0");
    cov.need(find_alpha(flat, pi / 4, t.grid_match_tol) != nullptr, "alpha = pi/4");
    cov.need(has_spec(flat, n1) && has_spec(flat, n2), "N_1 and N_2 columns");
    cov.need(has_spec(tilted, n1), "N_1 column at beta = pi/4");
    cov.raise_if_missing();

    ChannelClaims out{ChannelKind::PhaseDamping, flat.front().deltas[1] - flat.front().deltas[0], {}};
    const double step = out.delta_spacing;

    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        std::size_t never = 0;
        for (const auto &c : flat) {
            if (auto d = c.first_below(t.fidelity_threshold)) {
                lo = std::min(lo, *d);
                hi = std::max(hi, *d);
            } else {
                ++never;
            }
        }
        const bool ok = std::isfinite(lo) && within(lo, t.dephasing_crossing_low, t.location_tol) &&
                        within(hi, t.dephasing_crossing_high, t.location_tol);
        out.claims.push_back(
            {"dephasing.crossing",
             "beta=0: delta where F first drops below " + fmt(t.fidelity_threshold) + " spans [" +
                 fmt(t.dephasing_crossing_low) + ", " + fmt(t.dephasing_crossing_high) + "] +/- " + fmt(t.location_tol),
             "[" + fmt(lo) + ", " + fmt(hi) + "]" + (never ? " (" + std::to_string(never) + " alphas never cross)" : ""),
             ok});
    }
    {
        const double f = find_alpha(flat, 0.0, t.grid_match_tol)->fidelity_at(1.0, t.grid_match_tol);
        out.claims.push_back(
            {"dephasing.endpoint_alpha0", "beta=0: F(alpha=0, delta=1) >= " + fmt(t.dephasing_high_entanglement_floor),
             fmt(f), f >= t.dephasing_high_entanglement_floor});
    }
    {
        const double f = find_alpha(flat, pi / 4, t.grid_match_tol)->fidelity_at(1.0, t.grid_match_tol);
        out.claims.push_back(
            {"dephasing.endpoint_alpha_pi4",
             "beta=0: F(alpha=pi/4, delta=1) = " + fmt(t.dephasing_low_entanglement_endpoint) + " +/- " +
                 fmt(t.endpoint_tol),
             fmt(f), within(f, t.dephasing_low_entanglement_endpoint, t.endpoint_tol)});
    }
    {
        // Which specs reach zero strictly before the last grid step, for some alpha.
        std::string early;
        bool n1_early = false;
        bool other_early = false;
        for (const auto &[spec, values] : flat.front().negativity) {
            std::optional<double> first;
            for (const auto &c : flat) {
                auto e = c.esd(spec);
                if (e && *e < 1.0 - step - t.grid_match_tol) {
                    first = first ? std::min(*first, *e) : *e;
                }
            }
            if (first) {
                early += (early.empty() ? "" : ", ") + spec.label() + "@" + fmt(*first);
                (spec == n1 ? n1_early : other_early) = true;
            }
        }
        out.claims.push_back(
            {"dephasing.esd_only_n1", "beta=0: only N_1 reaches zero before delta = 1 - step",
             early.empty() ? std::string("no early ESD") : early, n1_early && !other_early});
    }
    {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto &c : flat) {
            const double v = c.negativity.at(n2).front();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.claims.push_back(
            {"dephasing.n2_initial_flat", "beta=0: N_2 at delta=0 is alpha-independent within " + fmt(t.n2_flatness_tol),
             "spread " + fmt(hi - lo), hi - lo <= t.n2_flatness_tol});
    }
    {
        std::optional<double> earliest;
        for (const auto &c : tilted) {
            if (auto e = c.esd(n1)) {
                earliest = earliest ? std::min(*earliest, *e) : *e;
            }
        }
        const bool ok = earliest && *earliest >= t.dephasing_tilted_esd_floor - step - t.grid_match_tol;
        out.claims.push_back(
            {"dephasing.tilted_n1_esd",
             "beta=pi/4: N_1 undergoes ESD, and only at delta >= " + fmt(t.dephasing_tilted_esd_floor) + " - step",
             "earliest " + fmt(earliest), ok});
    }
    return out;
}

inline ChannelClaims amplitude_claims(std::span<const SweepRecord> records, const ClaimTargets &t) {
    constexpr double pi = std::numbers::pi;
    const auto flat = slice(records, ChannelKind::AmplitudeDamping, 0.0, t.grid_match_tol);

    CoverageCheck cov("amplitude");
    cov.need(!flat.empty(), "beta = 0 records");
    cov.need(spans_delta(flat, t.grid_match_tol), "a delta grid from 0 to 1");
    cov.need(find_alpha(flat, 0.0, t.grid_match_tol) != nullptr, "alpha = 0");
    cov.need(find_alpha(flat, pi / 2, t.grid_match_tol) != nullptr, "alpha = pi/2");
    cov.raise_if_missing();

    ChannelClaims out{ChannelKind::AmplitudeDamping, flat.front().deltas[1] - flat.front().deltas[0], {}};
    const Curve &ground = *find_alpha(flat, 0.0, t.grid_match_tol);
    const Curve &excited = *find_alpha(flat, pi / 2, t.grid_match_tol);
    {
        const auto it = std::min_element(ground.fidelity.begin(), ground.fidelity.end());
        const auto at = static_cast<std::size_t>(it - ground.fidelity.begin());
        bool rising = true;
        for (std::size_t i = at; i + 1 < ground.fidelity.size(); ++i) {
            rising = rising && ground.fidelity[i + 1] >= ground.fidelity[i] - 1e-12;
        }
        const double where = ground.deltas[at];
        out.claims.push_back(
            {"amplitude.turnaround",
             "F(alpha=0) is minimal at delta = " + fmt(t.amplitude_turnaround) + " +/- " +
                 fmt(t.amplitude_turnaround_tol) + " and rises afterwards",
             "minimum " + fmt(*it) + " at " + fmt(where) + (rising ? ", rising after" : ", not monotone after"),
             within(where, t.amplitude_turnaround, t.amplitude_turnaround_tol) && rising &&
                 at + 1 < ground.fidelity.size()});
    }
    {
        const double f = ground.fidelity_at(1.0, t.grid_match_tol);
        out.claims.push_back(
            {"amplitude.endpoint_alpha0",
             "F(alpha=0, delta=1) = " + fmt(t.amplitude_endpoint) + " +/- " + fmt(t.amplitude_endpoint_tol), fmt(f),
             within(f, t.amplitude_endpoint, t.amplitude_endpoint_tol)});
    }
    {
        const double f = *std::min_element(excited.fidelity.begin(), excited.fidelity.end());
        out.claims.push_back(
            {"amplitude.deep_minimum", "min over delta of F(alpha=pi/2) < " + fmt(t.amplitude_deep_minimum_ceiling),
             fmt(f), f < t.amplitude_deep_minimum_ceiling});
    }
    return out;
}

inline ChannelClaims depolarizing_claims(std::span<const SweepRecord> records, const ClaimTargets &t) {
    const auto flat = slice(records, ChannelKind::Depolarizing, 0.0, t.grid_match_tol);

    CoverageCheck cov("depolarizing");
    cov.need(!flat.empty(), "beta = 0 records");
    cov.need(spans_delta(flat, t.grid_match_tol), "a delta grid from 0 to 1");
    cov.need(!flat.empty() && !flat.front().negativity.empty(), "negativity columns");
    cov.raise_if_missing();

    ChannelClaims out{ChannelKind::Depolarizing, flat.front().deltas[1] - flat.front().deltas[0], {}};
    const double step = out.delta_spacing;
    {
        double worst = 0.0;
        for (const auto &c : flat) {
            worst = std::max(worst, std::abs(c.fidelity_at(1.0, t.grid_match_tol) - t.depolarizing_endpoint));
        }
        out.claims.push_back(
            {"depolarizing.endpoint",
             "F(alpha, delta=1) = " + fmt(t.depolarizing_endpoint) + " within " + fmt(t.depolarizing_endpoint_tol) +
                 " for every alpha",
             "max deviation " + fmt(worst), worst <= t.depolarizing_endpoint_tol});
    }

    std::optional<double> latest;
    bool every_state_dies = true;
    double onset_f_lo = std::numeric_limits<double>::infinity();
    double onset_f_hi = -onset_f_lo;
    for (const auto &c : flat) {
        std::optional<double> onset;  // every tracked negativity is zero from here on
        for (const auto &[spec, values] : c.negativity) {
            const auto e = c.esd(spec);
            if (!e) {
                every_state_dies = false;
                onset.reset();
                break;
            }
            onset = onset ? std::max(*onset, *e) : *e;
            latest = latest ? std::max(*latest, *e) : *e;
        }
        if (!every_state_dies) {
            break;
        }
        const double f = c.fidelity_at(*onset, t.grid_match_tol);
        onset_f_lo = std::min(onset_f_lo, f);
        onset_f_hi = std::max(onset_f_hi, f);
    }
    out.claims.push_back(
        {"depolarizing.esd_all",
         "every negativity and every alpha reaches zero by delta <= " + fmt(t.depolarizing_esd_ceiling) + " + step",
         every_state_dies ? "latest " + fmt(latest) : std::string("some negativity never vanishes"),
         every_state_dies && latest && *latest <= t.depolarizing_esd_ceiling + step + t.grid_match_tol});
    const double lo = t.depolarizing_onset_fidelity_low - t.onset_fidelity_tol;
    const double hi = t.depolarizing_onset_fidelity_high + t.onset_fidelity_tol;
    out.claims.push_back(
        {"depolarizing.onset_fidelity",
         "F at each state's ESD onset lies in (" + fmt(lo) + ", " + fmt(hi) + ")",
         every_state_dies ? "[" + fmt(onset_f_lo) + ", " + fmt(onset_f_hi) + "]" : std::string("no onset"),
         every_state_dies && onset_f_lo > lo && onset_f_hi < hi});
    return out;
}

}  // namespace detail

/// Checks the scalar claims for every channel present in `records`. Throws std::invalid_argument
/// naming the missing grid points when a present channel's sweep cannot support its claims.
inline ClaimReport extract_claim_report(std::span<const SweepRecord> records, const ClaimTargets &targets = {}) {
    ClaimReport report;
    for (auto kind : kAllChannels) {
        const bool present =
            std::any_of(records.begin(), records.end(), [&](const SweepRecord &r) { return r.channel == kind; });
        if (!present) {
            continue;
        }
        switch (kind) {
            case ChannelKind::PhaseDamping:
                report.channels.push_back(detail::dephasing_claims(records, targets));
                break;
            case ChannelKind::AmplitudeDamping:
                report.channels.push_back(detail::amplitude_claims(records, targets));
                break;
            case ChannelKind::Depolarizing:
                report.channels.push_back(detail::depolarizing_claims(records, targets));
                break;
        }
    }
    if (report.channels.empty()) {
        throw std::invalid_argument("extract_claim_report: no records");
    }
    return report;
}

}  // namespace qec5
