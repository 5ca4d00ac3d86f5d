/**
 * \file bounds.hpp
 *
 * Closed-form bounds and known exact values for the matching game.
 *
 *  - upper bound ((2t-1+(t-3)*log2(t-2))/(t+1)) * n for t colours on K_n,
 *    with log2(0) := 0; exact rational whenever the log term is an integer
 *  - lower bound 3(sum of targets - t + 1) - n
 *  - the classical Ramsey number of matchings
 *    R(r_1 K_2,...,r_t K_2) = max r_i + 1 + sum (r_i - 1)
 *  - the regression table of known game values on diagonal targets
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_BOUNDS_HPP
#define RAMATCH_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramatch/game.hpp"
#include "ramatch/painter.hpp"

namespace ramatch {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
    long long ceil_value() const { return (num + den - 1) / (den); }
    bool operator==(const Rational&) const = default;
};

struct UpperBound {
    bool exact = false;
    Rational value;      ///< meaningful when exact
    double approx = 0.0;
    std::string note;    ///< precision caveat when not exact
};

/// log2(x) when integral, for the exactness test of the upper bound.
inline std::optional<int> integral_log2(int x) {
    if (x < 1) return std::nullopt;
    if ((x & (x - 1)) != 0) return std::nullopt;
    int k = 0;
    while ((1 << k) < x) ++k;
    return k;
}

/// Upper bound ((2t-1+(t-3)*log2(t-2))/(t+1)) * n with log2(0) := 0.
/// Exact rational when t-2 is 0, 1 or a power of two; otherwise a long
/// double evaluation with a stated precision caveat.
inline UpperBound theorem1_upper(int t, int n) {
    if (t < 2) throw std::invalid_argument("upper bound needs at least 2 colours");
    UpperBound out;
    if (t == 2) {  // log2(0) := 0 by convention
        out.exact = true;
        out.value = Rational(static_cast<long long>(2 * t - 1) * n, t + 1);
    } else if (auto k = integral_log2(t - 2)) {
        out.exact = true;
        out.value = Rational(static_cast<long long>(2 * t - 1 + (t - 3) * *k) * n, t + 1);
    }
    if (out.exact) {
        out.approx = out.value.approx();
    } else {
        const long double coeff =
            (2.0L * t - 1 + (t - 3) * std::log2(static_cast<long double>(t - 2))) / (t + 1);
        out.approx = static_cast<double>(coeff * n);
        out.note = "log2(t-2) is irrational; value correct to +/-1 ulp";
    }
    return out;
}

/// Lower bound 3(sum of targets - t + 1) - n. Guaranteed meaningful for
/// t >= 2 and n at least the Ramsey number; computed for any input.
inline int theorem3_lower(int t, const std::vector<int>& targets, int n) {
    if (static_cast<int>(targets.size()) != t)
        throw std::invalid_argument("targets list length must equal colour count");
    const int sum = std::accumulate(targets.begin(), targets.end(), 0);
    return 3 * (sum - t + 1) - n;
}

/// Classical Ramsey number of matchings: max r_i + 1 + sum (r_i - 1).
inline int cockayne_lorimer(const std::vector<int>& targets) {
    if (targets.empty()) throw std::invalid_argument("at least one target required");
    for (int r : targets)
        if (r < 1) throw std::invalid_argument("every target must be >= 1");
    const int sum = std::accumulate(targets.begin(), targets.end(), 0);
    return *std::max_element(targets.begin(), targets.end()) + 1 +
           (sum - static_cast<int>(targets.size()));
}

/// Known exact value or two-element range for a configuration.
struct KnownValue {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    bool operator==(const KnownValue&) const = default;
};

/// Regression entries: diagonal targets r at the Ramsey-threshold board.
///   t=2, n=3r-1 -> 3r-2      t=3, n=4r-2 -> 5r-4
///   t=4, n=5r-3 -> {7r-6, 7r-5}
inline std::optional<KnownValue> known_value(const GameConfig& config) {
    if (config.targets.empty()) return std::nullopt;
    const int r = config.targets.front();
    for (int ri : config.targets)
        if (ri != r) return std::nullopt;
    switch (config.colors) {
        case 2:
            if (config.n == 3 * r - 1) return KnownValue{3 * r - 2, 3 * r - 2};
            break;
        case 3:
            if (config.n == 4 * r - 2) return KnownValue{5 * r - 4, 5 * r - 4};
            break;
        case 4:
            if (config.n == 5 * r - 3) return KnownValue{7 * r - 6, 7 * r - 5};
            break;
        default:
            break;
    }
    return std::nullopt;
}

struct KnownValueRow {
    GameConfig config;
    KnownValue value;
};

/// The regression table for diagonal targets r = 1..max_r.
inline std::vector<KnownValueRow> known_values(int max_r) {
    std::vector<KnownValueRow> rows;
    for (int r = 1; r <= max_r; ++r)
        for (int t : {2, 3, 4}) {
            GameConfig config{t, std::vector<int>(static_cast<size_t>(t), r), 0};
            config.n = cockayne_lorimer(config.targets);
            rows.push_back({config, *known_value(config)});
        }
    return rows;
}

struct BoundReport {
    int lower = 0;            ///< closed-form lower bound
    bool lower_valid = false; ///< t >= 2 and n >= ramsey_n
    UpperBound upper;         ///< defined for t >= 2 only
    bool upper_valid = false;
    int ramsey_n = 0;
    int survival_t = 0;       ///< horizon the fixed Painter survives
    std::optional<KnownValue> known;
};

inline BoundReport bound_report(const GameConfig& config) {
    config.validate();
    BoundReport report;
    report.ramsey_n = cockayne_lorimer(config.targets);
    report.lower = theorem3_lower(config.colors, config.targets, config.n);
    report.lower_valid = config.colors >= 2 && config.n >= report.ramsey_n;
    if (config.colors >= 2) {
        report.upper = theorem1_upper(config.colors, config.n);
        report.upper_valid = config.n >= report.ramsey_n;
    }
    report.survival_t = survival_horizon(config);
    report.known = known_value(config);
    return report;
}

}  // namespace ramatch

#endif  // RAMATCH_BOUNDS_HPP
