#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "jumpspec/pattern.hpp"
#include "jumpspec/trace.hpp"

namespace jumpspec {

/// Averaged excited-state probability vs lag after pattern occurrences.
/// Lags are multiples of dt_strobe and may include negative values (strobes
/// before the selection anchor). Lags with zero contributing matches are
/// dropped, so counts > 0 on every reported row.
struct ConditionedTrajectory {
    std::vector<double> lags;          // s
    std::vector<double> mean_excited;
    std::vector<std::uint64_t> counts;
    std::vector<double> std_err;

    std::size_t size() const { return lags.size(); }
};

/// g2(tau) for tau = m*dt_strobe, m >= 1: conditional probability of a down
/// jump at lag tau after a down jump, normalized by the unconditional
/// per-strobe down-jump probability p_down. Pairs extending past the end of
/// a trace are excluded from both numerator and denominator.
struct G2Curve {
    std::vector<double> lags;          // s, strictly increasing
    std::vector<double> g2;
    std::vector<double> std_err;
    std::vector<std::uint64_t> counts; // conditioning events per lag
    double p_down = 0.0;
};

enum class JumpDirection : std::uint8_t { up, down };

struct JumpEvent {
    std::uint64_t index;       // strobe at which the new state was first seen
    JumpDirection direction;
};

/// Down event at k iff states[k-1]=1 and states[k]=0; up analogous.
/// The first strobe is never an event.
std::vector<JumpEvent> detect_jumps(const JumpTrace& trace);

/// Indices k of the final pattern element for every (overlapping) occurrence
/// of the pattern in states. Sorted ascending.
std::vector<std::uint32_t> find_pattern_matches(std::span<const std::uint8_t> states,
                                                const SelectionPattern& pattern);

/// Pools conditioned window sums over one or more traces. Lag range is
/// [lag_begin, lag_end) in strobes, lag 0 being the pattern anchor.
/// Standard errors: binomial for a single trace; for pooled traces a
/// per-trace (cluster) ratio variance, since overlapping windows within one
/// trace are strongly correlated and a binomial error would understate the
/// uncertainty of the mean.
class ConditionedAccumulator {
public:
    ConditionedAccumulator(std::int64_t lag_begin, std::int64_t lag_end);

    // values must be 0/1 and matches sorted ascending (as produced by
    // find_pattern_matches on the same trace).
    void add(std::span<const std::uint8_t> values, const std::vector<std::uint32_t>& matches);

    // Pools another accumulator with the same lag range. All internal sums
    // are exact, so the result does not depend on merge order.
    void merge(const ConditionedAccumulator& other);

    std::uint64_t total_matches() const { return total_matches_; }
    ConditionedTrajectory finalize(double dt_strobe) const;

private:
    std::int64_t lag_begin_, lag_end_;
    std::uint64_t n_traces_ = 0;
    std::uint64_t total_matches_ = 0;
    std::vector<std::uint64_t> sums_, counts_;
    // per-trace second moments for the cluster variance
    std::vector<double> ss_, sc_, cc_;
};

/// Conditioned average of a trace on one selection pattern. horizon and
/// include_pre are times; lags run from -include_pre to +horizon inclusive.
/// Throws if the pattern never matches.
ConditionedTrajectory condition_average(const JumpTrace& trace, const SelectionPattern& pattern,
                                        double horizon, double include_pre = 0.0);

/// Same estimator pooled over traces; counts accumulate across the whole
/// collection. Throws per pattern if it never matches anywhere.
std::map<SelectionPattern, ConditionedTrajectory> batch_condition(
    std::span<const JumpTrace> traces, std::span<const SelectionPattern> patterns,
    double horizon, double include_pre = 0.0);

/// Pools g2 statistics over one or more traces.
class G2Accumulator {
public:
    explicit G2Accumulator(std::uint64_t max_lag_strobes);

    void add(const JumpTrace& trace);

    std::uint64_t total_down_jumps() const { return downs_; }
    G2Curve finalize(double dt_strobe) const;  // throws if no down jumps

private:
    std::uint64_t max_lag_;
    std::uint64_t n_traces_ = 0;
    std::uint64_t downs_ = 0;
    std::uint64_t strobe_pairs_ = 0;  // sum of (n_strobes - 1)
    std::vector<std::uint64_t> pairs_, denom_;
    std::vector<double> ss_, sc_, cc_;
};

G2Curve g2_estimate(const JumpTrace& trace, double max_lag);
G2Curve g2_estimate_pooled(std::span<const JumpTrace> traces, double max_lag);

}  // namespace jumpspec
