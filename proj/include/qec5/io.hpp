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

#include <charconv>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <system_error>

#include "json.hpp"
#include "qec5/code.hpp"
#include "qec5/metrics.hpp"
#include "qec5/sweep.hpp"

namespace qec5 {

/// Shortest "%.12g"-style rendering; locale independent, never "-0".
inline std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return std::string(buf, res.ptr);
}

inline std::string csv_header(std::span<const NegativitySpec> specs) {
    std::string h = "channel,alpha,beta,delta,fidelity";
    for (const auto &s : specs) {
        h += "," + s.label();
    }
    return h;
}

/// One header line, then one row per record; angles in radians, '\n' line endings.
inline void write_csv(std::ostream &out, std::span<const SweepRecord> records, std::span<const NegativitySpec> specs) {
    out << csv_header(specs) << '\n';
    for (const auto &r : records) {
        out << channel_name(r.channel) << ',' << format_number(r.alpha) << ',' << format_number(r.beta) << ','
            << format_number(r.delta) << ',' << format_number(r.fidelity);
        for (const auto &s : specs) {
            out << ',' << format_number(r.negativity(s));
        }
        out << '\n';
    }
}

inline nlohmann::ordered_json to_json(const SweepRecord &r) {
    nlohmann::ordered_json negs = nlohmann::ordered_json::object();
    for (const auto &[spec, v] : r.negativities) {
        negs[spec.label()] = v;
    }
    return {
        {"channel", channel_name(r.channel)},
        {"alpha", r.alpha},
        {"beta", r.beta},
        {"delta", r.delta},
        {"fidelity", r.fidelity},
        {"negativities", std::move(negs)},
    };
}

inline void write_json(std::ostream &out, std::span<const SweepRecord> records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        arr.push_back(to_json(r));
    }
    out << arr.dump(2) << '\n';
}

/// error label, syndrome index, recovery label; one row per correctable error.
inline std::string syndrome_table_text(const CodeTables &tables) {
    std::string text = "# error syndrome recovery\n";
    for (std::size_t s = 0; s < tables.syndrome_count(); ++s) {
        text += tables.errors[s].label + ' ' + std::to_string(s) + ' ' + tables.recovery_label(s) + '\n';
    }
    return text;
}

}  // namespace qec5
