#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jumpspec/conditioning.hpp"
#include "jumpspec/trace.hpp"

namespace jumpspec {

struct IqDataset {
    std::vector<std::complex<double>> points;
    double dt_strobe = 6e-6;
    TraceMeta meta;

    void validate() const;  // non-empty, dt > 0
};

/// Two-cluster readout discriminator: cluster centers, per-cluster isotropic
/// standard deviations, and the decision threshold along the inter-center
/// axis (coordinates: projection of z - center_g onto the unit vector from
/// center_g to center_e, so center_g sits at 0).
struct DiscriminationModel {
    std::complex<double> center_g;
    std::complex<double> center_e;
    double threshold = 0.0;
    double sigma_g = 0.0;
    double sigma_e = 0.0;
    double fidelity_estimate = 0.0;

    double project(std::complex<double> z) const;
    void validate() const;
};

struct DiscriminatorOptions {
    // Fig-style convention for p_th < 0.5: the more populated cluster is the
    // ground state. Set false when the excited state dominates the data.
    bool majority_is_ground = true;
};

/// 2-means (farthest-pair seeded) followed by isotropic two-component
/// Gaussian-mixture EM refinement; threshold at the equal-posterior point on
/// the inter-center axis. Throws "insufficient readout separation" when the
/// centers are closer than one pooled standard deviation.
DiscriminationModel fit_discriminator(const IqDataset& data,
                                      const DiscriminatorOptions& options = {});

/// Thresholded projection per point; ties assign ground. dt and meta carry
/// through from the dataset.
JumpTrace discriminate(const IqDataset& data, const DiscriminationModel& model);

/// Optional 3-point majority smoothing. Off by default everywhere: it biases
/// g2 at short lags by erasing single-strobe excursions.
JumpTrace majority_filter3(const JumpTrace& trace);

// ---- file formats ----------------------------------------------------
//
// Trace CSV:      header "index,state" (plus ",tls_0,tls_1,..." when hidden
//                 states are recorded), one row per strobe, values 0/1.
// IQ CSV:         header "index,i,q".
// Curve CSV:      header "lag_s,mean,stderr,count" (conditioned trajectories
//                 and g2 curves share the schema).
// Sidecar:        every trace/IQ file <name>.csv has <name>.meta.json with
//                 {dt_strobe_s, f_q_hz, field_v_per_m, source, seed}.
// Reals are written with 17 significant digits so write->read round-trips
// are lossless; integers are written exactly.

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

void write_trace_csv(const std::filesystem::path& path, const JumpTrace& trace);
JumpTrace read_trace_csv(const std::filesystem::path& path);

void write_iq_csv(const std::filesystem::path& path, const IqDataset& data);
IqDataset read_iq_csv(const std::filesystem::path& path);

void write_trajectory_csv(const std::filesystem::path& path, const ConditionedTrajectory& curve);
ConditionedTrajectory read_trajectory_csv(const std::filesystem::path& path);

// g2 curves reuse the trajectory schema; p_down goes to a sidecar.
void write_g2_csv(const std::filesystem::path& path, const G2Curve& curve);
G2Curve read_g2_csv(const std::filesystem::path& path);

enum class CsvKind { trace, iq, curve, unknown };
CsvKind sniff_csv(const std::filesystem::path& path);

// 17-significant-digit decimal; shortest exact form for round-tripping.
std::string format_double(double v);

}  // namespace jumpspec
