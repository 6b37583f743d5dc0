#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jumpspec/conditioning.hpp"
#include "jumpspec/fitting.hpp"

namespace jumpspec {

struct SweepMeta {
    double f_q_hz = 0.0;
    double field_v_per_m = 0.0;
};

struct TraceStats {
    std::uint64_t n_strobes = 0;
    std::uint64_t n_down_jumps = 0;
};

/// One sweep point ready for fitting: the two conditioned trajectories plus
/// bookkeeping about the underlying trace.
struct SweepDataset {
    SweepMeta meta;
    ConditionedTrajectory ground;
    ConditionedTrajectory postjump;
    TraceStats stats;
};

struct SweepPoint {
    double f_q_hz = 0.0;
    double field_v_per_m = 0.0;
    FitResult fit;
    TraceStats stats;
    bool failed = false;
    std::string fail_reason;
};

struct SpectroscopyMap {
    std::vector<SweepPoint> points;       // sorted by (field, f_q)
    std::vector<double> f_axis;           // sorted unique frequencies
    std::vector<double> field_axis;       // sorted unique fields
};

/// Fits every dataset independently (parallel across points); failed fits
/// are flagged and kept. Throws on duplicate (f_q, field) cells.
SpectroscopyMap run_sweep(const std::vector<SweepDataset>& datasets, const FitSpec& spec,
                          int workers = 1);

enum class PeakChannel { gamma_qt, gamma_q };

struct TlsPeak {
    double field_v_per_m = 0.0;
    double f_center_hz = 0.0;
    double fwhm_hz = 0.0;
    double gamma_qt_max = 0.0;   // channel value at the peak, 1/s
    double prominence = 0.0;     // 1/s
    std::string track_id;        // empty until linked
};

/// Prominence-based peak detection on the chosen rate channel vs frequency
/// at one field value. A peak needs prominence >= max(3*MAD of the channel,
/// 3*median parameter stderr); widths come from half-prominence crossings
/// with linear interpolation. Needs at least 5 frequency points.
std::vector<TlsPeak> detect_peaks(const SpectroscopyMap& map, double field_v_per_m,
                                  PeakChannel channel);

/// Greedy nearest-neighbour linking of peaks across adjacent field values.
/// Gate: gate_scale * median fwhm of all peaks. Unmatched peaks start new
/// tracks; a missing field point terminates a track (no gap bridging).
/// Track ids are assigned A, B, ... in order of first appearance.
std::map<double, std::vector<TlsPeak>> link_tracks(
    const std::map<double, std::vector<TlsPeak>>& peaks_per_field, double gate_scale = 2.0);

}  // namespace jumpspec
