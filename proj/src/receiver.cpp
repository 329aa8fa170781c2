#include "owc/receiver.hpp"

#include <cmath>
#include <stdexcept>

namespace owc {

AngleDiversityReceiver make_adr(const Vec3& position) {
  AngleDiversityReceiver adr;
  adr.position = position;
  adr.branches.reserve(kAdrBranchCount);
  for (double az : {0.0, 60.0, 120.0, 180.0, 240.0, 300.0})
    adr.branches.push_back(
        {{position, az_el_to_direction(az, kAdrSideElevationDeg), kAdrSideFovDeg, kAdrBranchAreaM2},
         kAdrResponsivity});
  adr.branches.push_back(
      {{position, az_el_to_direction(0.0, kAdrTopElevationDeg), kAdrTopFovDeg, kAdrBranchAreaM2},
       kAdrResponsivity});
  return adr;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double inverse_q(double p) {
  if (p <= 0.0 || p > 0.5) throw std::invalid_argument("inverse_q: p must be in (0, 0.5]");
  double lo = 0.0, hi = 45.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (q_function(mid) > p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ber_from_sinr(double sinr) {
  if (sinr < 0.0) throw std::invalid_argument("ber_from_sinr: negative sinr");
  return q_function(std::sqrt(sinr));
}

double noise_sigma(double p_received_w, const NoiseParams& params, double responsivity) {
  if (p_received_w < 0.0) throw std::invalid_argument("noise_sigma: negative power");
  const double b = params.bandwidth_hz;
  const double var_pr = params.preamp_density_a_sqrthz * params.preamp_density_a_sqrthz * b;
  const double var_bn = 2.0 * kElectronCharge * params.background_current_a * b;
  const double var_sig = 2.0 * kElectronCharge * responsivity * p_received_w * b;
  return std::sqrt(var_pr + var_bn + var_sig);
}

double branch_sinr(const OokSignal& signal, std::span<const OokSignal> interferers,
                   double sigma_total, double responsivity) {
  if (sigma_total <= 0.0) throw std::invalid_argument("branch_sinr: sigma must be positive");
  const double rs = responsivity * signal.swing();
  double den = sigma_total * sigma_total;
  for (const OokSignal& i : interferers) {
    const double ri = responsivity * i.swing();
    den += ri * ri;
  }
  return rs * rs / den;
}

double combine_sc(std::span<const double> branch_sinrs) {
  if (branch_sinrs.empty()) throw std::invalid_argument("combine_sc: no branches");
  double best = branch_sinrs[0];
  for (double v : branch_sinrs)
    if (v > best) best = v;
  return best;
}

double combine_mrc(std::span<const double> branch_sinrs) {
  if (branch_sinrs.empty()) throw std::invalid_argument("combine_mrc: no branches");
  double sum = 0.0;
  for (double v : branch_sinrs) sum += v;
  return sum;
}

AdrEvaluation evaluate_adr(const AngleDiversityReceiver& adr,
                           std::span<const std::size_t> serving_sources,
                           std::span<const std::vector<std::size_t>> interfering_systems,
                           const SceneEngine& scene, const NoiseParams& noise) {
  AdrEvaluation eval;
  eval.branches.reserve(adr.branches.size());
  std::vector<double> snrs, sinrs;
  snrs.reserve(adr.branches.size());
  sinrs.reserve(adr.branches.size());

  for (const ReceiverBranch& branch : adr.branches) {
    const std::vector<PathBudget> budgets = scene.received_all(branch.aperture);

    double serving_avg = 0.0;
    for (std::size_t idx : serving_sources) serving_avg += budgets[idx].total;

    BranchMetrics m;
    m.signal = OokSignal::from_average_power(serving_avg);
    for (const std::vector<std::size_t>& group : interfering_systems) {
      double group_avg = 0.0;
      for (std::size_t idx : group) group_avg += budgets[idx].total;
      m.interferers.push_back(OokSignal::from_average_power(group_avg));
    }
    m.sigma_total = noise_sigma(m.signal.p1, noise, branch.responsivity);
    m.snr = branch_sinr(m.signal, {}, m.sigma_total, branch.responsivity);
    m.sinr = branch_sinr(m.signal, m.interferers, m.sigma_total, branch.responsivity);
    snrs.push_back(m.snr);
    sinrs.push_back(m.sinr);
    eval.branches.push_back(std::move(m));
  }

  eval.sc_snr = combine_sc(snrs);
  eval.mrc_snr = combine_mrc(snrs);
  eval.sc_sinr = combine_sc(sinrs);
  eval.mrc_sinr = combine_mrc(sinrs);
  return eval;
}

double max_rate_at_ber(double sinr, double bandwidth_hz, double target_ber,
                       double spectral_efficiency) {
  if (target_ber <= 0.0 || target_ber >= 0.5)
    throw std::invalid_argument("max_rate_at_ber: target BER must be in (0, 0.5)");
  return ber_from_sinr(sinr) <= target_ber ? spectral_efficiency * bandwidth_hz : 0.0;
}

}  // namespace owc
