#pragma once

#include <span>
#include <vector>

#include "owc/propagation.hpp"
#include "owc/vec3.hpp"

namespace owc {

inline constexpr double kElectronCharge = 1.602176634e-19;  // C

/// One ADR photodetector: aperture plus responsivity.
struct ReceiverBranch {
  ReceiverAperture aperture;
  double responsivity = 0.4;  // A/W
};

/// Seven-branch angle-diversity receiver: six detectors tilted to 40
/// degrees elevation at 60-degree azimuth spacing (25-degree FOV) and one
/// facing straight up (30-degree FOV). Each detector is 4 mm^2, 0.4 A/W.
struct AngleDiversityReceiver {
  Vec3 position;
  std::vector<ReceiverBranch> branches;  // exactly 7
};

AngleDiversityReceiver make_adr(const Vec3& position);

inline constexpr std::size_t kAdrBranchCount = 7;
inline constexpr double kAdrSideElevationDeg = 40.0;
inline constexpr double kAdrTopElevationDeg = 90.0;
inline constexpr double kAdrSideFovDeg = 25.0;
inline constexpr double kAdrTopFovDeg = 30.0;
inline constexpr double kAdrBranchAreaM2 = 4e-6;
inline constexpr double kAdrResponsivity = 0.4;

/// Receiver-noise configuration for one cell system.
struct NoiseParams {
  double bandwidth_hz = 30e6;
  double preamp_density_a_sqrthz = 2e-12;  // sigma_pr = density * sqrt(B)
  double background_current_a = 10e-6;     // sigma_bn^2 = 2 q I_bg B

  bool operator==(const NoiseParams&) const = default;
};

/// OOK power levels seen by a detector. For ideal OOK the logic-1 level is
/// twice the average received optical power and the logic-0 level is zero.
struct OokSignal {
  double p1 = 0.0;  // W on logic 1
  double p0 = 0.0;  // W on logic 0

  static OokSignal from_average_power(double p_avg) { return {2.0 * p_avg, 0.0}; }
  double swing() const { return p1 - p0; }
};

struct BranchMetrics {
  double snr = 0.0;
  double sinr = 0.0;
  OokSignal signal;
  std::vector<OokSignal> interferers;  // one entry per interfering system
  double sigma_total = 0.0;            // A
};

/// Gaussian tail probability, evaluated as erfc(x/sqrt(2))/2.
double q_function(double x);

/// Inverse of q_function on p in (0, 0.5]; q_function(inverse_q(p)) == p.
double inverse_q(double p);

/// OOK bit error rate Q(sqrt(SINR)).
double ber_from_sinr(double sinr);

/// Total noise current: quadrature sum of preamplifier noise, background
/// shot noise and signal shot noise on the received power.
double noise_sigma(double p_received_w, const NoiseParams& params, double responsivity);

/// R^2 (Ps1-Ps0)^2 / (sigma^2 + sum_c R^2 (Pi1-Pi0)^2); the plain SNR when
/// the interferer list is empty.
double branch_sinr(const OokSignal& signal, std::span<const OokSignal> interferers,
                   double sigma_total, double responsivity);

/// Selection combining: best branch.
double combine_sc(std::span<const double> branch_sinrs);

/// Maximum ratio combining, modeled as the sum of per-branch SINRs.
double combine_mrc(std::span<const double> branch_sinrs);

struct AdrEvaluation {
  double sc_snr = 0.0;
  double mrc_snr = 0.0;
  double sc_sinr = 0.0;
  double mrc_sinr = 0.0;
  std::vector<BranchMetrics> branches;
};

/// Evaluate all seven branches against a scene: per branch, the received
/// power from the serving sources and from each interfering system group
/// feeds the SINR expression; SC and MRC combine the branch values.
/// Source groups are indices into the scene's source list.
AdrEvaluation evaluate_adr(const AngleDiversityReceiver& adr,
                           std::span<const std::size_t> serving_sources,
                           std::span<const std::vector<std::size_t>> interfering_systems,
                           const SceneEngine& scene, const NoiseParams& noise);

/// Bandwidth-limited OOK rate: efficiency * bandwidth when the link BER
/// meets the target, zero otherwise.
double max_rate_at_ber(double sinr, double bandwidth_hz, double target_ber,
                       double spectral_efficiency = 1.0);

}  // namespace owc
