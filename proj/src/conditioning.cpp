#include "jumpspec/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jumpspec/kernels.hpp"

namespace jumpspec {

std::vector<JumpEvent> detect_jumps(const JumpTrace& trace) {
    trace.validate();
    std::vector<JumpEvent> events;
    const auto& s = trace.states;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k - 1] == s[k]) continue;
        events.push_back({k, s[k] ? JumpDirection::up : JumpDirection::down});
    }
    return events;
}

std::vector<std::uint32_t> find_pattern_matches(std::span<const std::uint8_t> states,
                                                const SelectionPattern& pattern) {
    pattern.validate();
    const std::size_t plen = pattern.size();
    std::vector<std::uint32_t> matches;
    if (states.size() < plen) return matches;
    const auto& req = pattern.required_states;
    for (std::size_t k = plen - 1; k < states.size(); ++k) {
        bool ok = true;
        for (std::size_t j = 0; j < plen; ++j) {
            if (states[k - plen + 1 + j] != req[j]) {
                ok = false;
                break;
            }
        }
        if (ok) matches.push_back(static_cast<std::uint32_t>(k));
    }
    return matches;
}

// ---- ConditionedAccumulator -------------------------------------------

ConditionedAccumulator::ConditionedAccumulator(std::int64_t lag_begin, std::int64_t lag_end)
    : lag_begin_(lag_begin), lag_end_(lag_end) {
    if (lag_end <= lag_begin) throw std::invalid_argument("empty lag range");
    const auto span = static_cast<std::size_t>(lag_end - lag_begin);
    sums_.assign(span, 0);
    counts_.assign(span, 0);
    ss_.assign(span, 0.0);
    sc_.assign(span, 0.0);
    cc_.assign(span, 0.0);
}

void ConditionedAccumulator::add(std::span<const std::uint8_t> values,
                                 const std::vector<std::uint32_t>& matches) {
    ++n_traces_;
    if (matches.empty()) return;
    total_matches_ += matches.size();

    const auto span = static_cast<std::size_t>(lag_end_ - lag_begin_);
    std::vector<std::uint32_t> local(span, 0);
    kernels::accumulate_window_sums(values.data(), values.size(), matches.data(), matches.size(),
                                    lag_begin_, lag_end_, local.data());

    // Per-lag contributing-match counts from the sorted match indices:
    // lag m contributes for matches k with 0 <= k+m < n.
    const auto n = static_cast<std::int64_t>(values.size());
    for (std::size_t j = 0; j < span; ++j) {
        const std::int64_t m = lag_begin_ + static_cast<std::int64_t>(j);
        // number of matches with k >= -m and k < n - m
        const std::uint32_t lo_idx = static_cast<std::uint32_t>(std::max<std::int64_t>(0, -m));
        const std::int64_t hi_val = n - m;  // exclusive
        auto lo_it = std::lower_bound(matches.begin(), matches.end(), lo_idx);
        auto hi_it = hi_val <= 0 ? matches.begin()
                                 : std::lower_bound(matches.begin(), matches.end(),
                                                    static_cast<std::uint32_t>(std::min<std::int64_t>(
                                                        hi_val, std::int64_t(UINT32_MAX))));
        const auto c = static_cast<std::uint64_t>(std::distance(lo_it, hi_it));
        const std::uint64_t s = local[j];
        sums_[j] += s;
        counts_[j] += c;
        ss_[j] += static_cast<double>(s) * static_cast<double>(s);
        sc_[j] += static_cast<double>(s) * static_cast<double>(c);
        cc_[j] += static_cast<double>(c) * static_cast<double>(c);
    }
}

void ConditionedAccumulator::merge(const ConditionedAccumulator& other) {
    if (other.lag_begin_ != lag_begin_ || other.lag_end_ != lag_end_)
        throw std::invalid_argument("cannot merge accumulators with different lag ranges");
    n_traces_ += other.n_traces_;
    total_matches_ += other.total_matches_;
    for (std::size_t j = 0; j < sums_.size(); ++j) {
        sums_[j] += other.sums_[j];
        counts_[j] += other.counts_[j];
        ss_[j] += other.ss_[j];
        sc_[j] += other.sc_[j];
        cc_[j] += other.cc_[j];
    }
}

ConditionedTrajectory ConditionedAccumulator::finalize(double dt_strobe) const {
    ConditionedTrajectory out;
    const auto span = static_cast<std::size_t>(lag_end_ - lag_begin_);
    for (std::size_t j = 0; j < span; ++j) {
        if (counts_[j] == 0) continue;
        const double c = static_cast<double>(counts_[j]);
        const double mean = static_cast<double>(sums_[j]) / c;
        double se;
        if (n_traces_ > 1) {
            // cluster (per-trace) variance of the ratio estimator
            const double var_num = ss_[j] - 2.0 * mean * sc_[j] + mean * mean * cc_[j];
            se = std::sqrt(std::max(var_num, 0.0)) / c;
        } else {
            se = std::sqrt(std::max(mean * (1.0 - mean), 0.0) / c);
        }
        out.lags.push_back(static_cast<double>(lag_begin_ + static_cast<std::int64_t>(j)) *
                           dt_strobe);
        out.mean_excited.push_back(mean);
        out.counts.push_back(counts_[j]);
        out.std_err.push_back(se);
    }
    return out;
}

// ---- conditioned averages ---------------------------------------------

namespace {

std::int64_t lag_count(double horizon, double dt) {
    // number of positive lags: largest m with m*dt <= horizon (+ rounding slack)
    return static_cast<std::int64_t>(std::floor(horizon / dt + 1e-9));
}

}  // namespace

ConditionedTrajectory condition_average(const JumpTrace& trace, const SelectionPattern& pattern,
                                        double horizon, double include_pre) {
    trace.validate();
    if (horizon < trace.dt_strobe)
        throw std::invalid_argument("horizon must be at least one strobe interval");
    const std::int64_t m_hi = lag_count(horizon, trace.dt_strobe);
    const std::int64_t m_lo = include_pre > 0.0 ? -lag_count(include_pre, trace.dt_strobe) : 0;

    const auto matches = find_pattern_matches(trace.states, pattern);
    if (matches.empty())
        throw std::runtime_error("selection pattern '" + pattern.to_string() +
                                 "' never matches in the trace");
    ConditionedAccumulator acc(m_lo, m_hi + 1);
    acc.add(trace.states, matches);
    return acc.finalize(trace.dt_strobe);
}

std::map<SelectionPattern, ConditionedTrajectory> batch_condition(
    std::span<const JumpTrace> traces, std::span<const SelectionPattern> patterns,
    double horizon, double include_pre) {
    std::map<SelectionPattern, ConditionedTrajectory> out;
    if (patterns.empty()) return out;
    if (traces.empty()) throw std::invalid_argument("no traces given");
    const double dt = traces[0].dt_strobe;
    for (const auto& t : traces) {
        t.validate();
        if (t.dt_strobe != dt)
            throw std::invalid_argument("traces have inconsistent strobe intervals");
    }
    if (horizon < dt) throw std::invalid_argument("horizon must be at least one strobe interval");
    const std::int64_t m_hi = lag_count(horizon, dt);
    const std::int64_t m_lo = include_pre > 0.0 ? -lag_count(include_pre, dt) : 0;

    for (const auto& pattern : patterns) {
        ConditionedAccumulator acc(m_lo, m_hi + 1);
        for (const auto& t : traces) acc.add(t.states, find_pattern_matches(t.states, pattern));
        if (acc.total_matches() == 0)
            throw std::runtime_error("selection pattern '" + pattern.to_string() +
                                     "' never matches in any trace");
        out.emplace(pattern, acc.finalize(dt));
    }
    return out;
}

// ---- g2 ----------------------------------------------------------------

G2Accumulator::G2Accumulator(std::uint64_t max_lag_strobes) : max_lag_(max_lag_strobes) {
    if (max_lag_ == 0) throw std::invalid_argument("g2 needs at least one lag");
    pairs_.assign(max_lag_, 0);
    denom_.assign(max_lag_, 0);
    ss_.assign(max_lag_, 0.0);
    sc_.assign(max_lag_, 0.0);
    cc_.assign(max_lag_, 0.0);
}

void G2Accumulator::add(const JumpTrace& trace) {
    trace.validate();
    const std::size_t n = trace.n_strobes();
    if (max_lag_ > n - 1)
        throw std::invalid_argument("max_lag exceeds the trace duration");
    ++n_traces_;
    strobe_pairs_ += n - 1;

    // down-jump indicator per strobe
    std::vector<std::uint8_t> ev(n, 0);
    std::vector<std::uint32_t> idx;
    for (std::size_t k = 1; k < n; ++k) {
        if (trace.states[k - 1] == 1 && trace.states[k] == 0) {
            ev[k] = 1;
            idx.push_back(static_cast<std::uint32_t>(k));
        }
    }
    downs_ += idx.size();
    if (idx.empty()) return;

    std::vector<std::uint64_t> local(max_lag_, 0);
    kernels::pair_count_lags(ev.data(), n, max_lag_, local.data());

    for (std::uint64_t m = 1; m <= max_lag_; ++m) {
        // events whose partner strobe k+m is still inside the trace
        const std::int64_t hi_val = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m);
        const auto hi_it = hi_val <= 0
                               ? idx.begin()
                               : std::lower_bound(idx.begin(), idx.end(),
                                                  static_cast<std::uint32_t>(hi_val));
        const auto d = static_cast<std::uint64_t>(std::distance(idx.begin(), hi_it));
        const std::uint64_t p = local[m - 1];
        const std::size_t j = static_cast<std::size_t>(m - 1);
        pairs_[j] += p;
        denom_[j] += d;
        ss_[j] += static_cast<double>(p) * static_cast<double>(p);
        sc_[j] += static_cast<double>(p) * static_cast<double>(d);
        cc_[j] += static_cast<double>(d) * static_cast<double>(d);
    }
}

G2Curve G2Accumulator::finalize(double dt_strobe) const {
    if (downs_ == 0) throw std::runtime_error("no decay events: g2 is undefined");
    G2Curve out;
    out.p_down = static_cast<double>(downs_) / static_cast<double>(strobe_pairs_);
    for (std::uint64_t m = 1; m <= max_lag_; ++m) {
        const std::size_t j = static_cast<std::size_t>(m - 1);
        if (denom_[j] == 0) continue;
        const double d = static_cast<double>(denom_[j]);
        const double cond = static_cast<double>(pairs_[j]) / d;
        double se_cond;
        if (n_traces_ > 1) {
            const double var_num = ss_[j] - 2.0 * cond * sc_[j] + cond * cond * cc_[j];
            se_cond = std::sqrt(std::max(var_num, 0.0)) / d;
        } else {
            se_cond = std::sqrt(std::max(cond * (1.0 - cond), 0.0) / d);
        }
        out.lags.push_back(static_cast<double>(m) * dt_strobe);
        out.g2.push_back(cond / out.p_down);
        out.std_err.push_back(se_cond / out.p_down);
        out.counts.push_back(denom_[j]);
    }
    return out;
}

G2Curve g2_estimate(const JumpTrace& trace, double max_lag) {
    trace.validate();
    if (max_lag > trace.duration() + 1e-12)
        throw std::invalid_argument("max_lag exceeds the trace duration");
    const auto m = static_cast<std::uint64_t>(std::floor(max_lag / trace.dt_strobe + 1e-9));
    G2Accumulator acc(m);
    acc.add(trace);
    return acc.finalize(trace.dt_strobe);
}

G2Curve g2_estimate_pooled(std::span<const JumpTrace> traces, double max_lag) {
    if (traces.empty()) throw std::invalid_argument("no traces given");
    const double dt = traces[0].dt_strobe;
    const auto m = static_cast<std::uint64_t>(std::floor(max_lag / dt + 1e-9));
    G2Accumulator acc(m);
    for (const auto& t : traces) {
        if (t.dt_strobe != dt)
            throw std::invalid_argument("traces have inconsistent strobe intervals");
        acc.add(t);
    }
    return acc.finalize(dt);
}

}  // namespace jumpspec
