#include "owc/propagation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "owc/parallel.hpp"

namespace owc {

namespace {

constexpr double kInvPi = 1.0 / std::numbers::pi;
constexpr double kMinDistance = 1e-12;

struct RxPrecomp {
  Vec3 position;
  Vec3 orientation;
  double cos_fov;
  double area;

  explicit RxPrecomp(const ReceiverAperture& rx)
      : position(rx.position),
        orientation(rx.orientation),
        cos_fov(std::cos(rx.fov_deg * kDegToRad)),
        area(rx.area_m2) {}
};

// Power incident on a surface element from a point Lambertian source.
double arriving_power(const LambertianSource& src, const SurfaceElement& e) {
  const Vec3 v = e.centre - src.position;
  const double d2 = v.norm2();
  if (d2 < kMinDistance * kMinDistance) return 0.0;
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_phi = Vec3::dot(src.orientation, u);
  if (cos_phi <= 0.0) return 0.0;
  const double cos_theta = -Vec3::dot(e.normal, u);
  if (cos_theta <= 0.0) return 0.0;
  return src.optical_power_w * lambertian_pattern(src.order_n, cos_phi) * cos_theta * e.area / d2;
}

// Diffuse (order 1) re-emission gain from an element to the receiver.
double element_to_rx_gain(const SurfaceElement& e, const RxPrecomp& rx) {
  const Vec3 v = rx.position - e.centre;
  const double d2 = v.norm2();
  if (d2 < kMinDistance * kMinDistance) return 0.0;
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_phi = Vec3::dot(e.normal, u);
  if (cos_phi <= 0.0) return 0.0;
  const double cos_theta = -Vec3::dot(rx.orientation, u);
  if (cos_theta < rx.cos_fov || cos_theta <= 0.0) return 0.0;
  return kInvPi * cos_phi * cos_theta * rx.area / d2;
}

// Diffuse transfer between two elements; the point-patch approximation is
// invalid below one element diagonal, such pairs are excluded.
double element_transfer(const SurfaceElement& from, const SurfaceElement& to) {
  const Vec3 v = to.centre - from.centre;
  const double d2 = v.norm2();
  if (d2 < 2.0 * std::max(from.area, to.area)) return 0.0;
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_phi = Vec3::dot(from.normal, u);
  if (cos_phi <= 0.0) return 0.0;
  const double cos_theta = -Vec3::dot(to.normal, u);
  if (cos_theta <= 0.0) return 0.0;
  return kInvPi * cos_phi * cos_theta * to.area / d2;
}

}  // namespace

double los_gain(const LambertianSource& src, const ReceiverAperture& rx) {
  const Vec3 v = rx.position - src.position;
  const double d2 = v.norm2();
  if (d2 < kMinDistance * kMinDistance)
    throw std::invalid_argument("los_gain: coincident source and receiver");
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_phi = Vec3::dot(src.orientation, u);
  if (cos_phi <= 0.0) return 0.0;
  const double cos_theta = -Vec3::dot(rx.orientation, u);
  if (cos_theta < std::cos(rx.fov_deg * kDegToRad) || cos_theta <= 0.0) return 0.0;
  return lambertian_pattern(src.order_n, cos_phi) * cos_theta * rx.area_m2 / d2;
}

double first_order_power(const LambertianSource& src, const ReceiverAperture& rx,
                         std::span<const SurfaceElement> elements, bool* warned_empty) {
  if (warned_empty != nullptr) *warned_empty = elements.empty();
  const RxPrecomp pre(rx);
  double sum = 0.0;
  for (const SurfaceElement& e : elements)
    sum += e.reflectivity * arriving_power(src, e) * element_to_rx_gain(e, pre);
  return sum;
}

double second_order_power(const LambertianSource& src, const ReceiverAperture& rx,
                          std::span<const SurfaceElement> elements_coarse, bool* warned_empty) {
  if (warned_empty != nullptr) *warned_empty = elements_coarse.empty();
  const RxPrecomp pre(rx);
  std::vector<double> exit1(elements_coarse.size());
  for (std::size_t i = 0; i < elements_coarse.size(); ++i)
    exit1[i] = elements_coarse[i].reflectivity * arriving_power(src, elements_coarse[i]);

  double sum = 0.0;
  for (std::size_t j = 0; j < elements_coarse.size(); ++j) {
    const SurfaceElement& e2 = elements_coarse[j];
    double onto_e2 = 0.0;
    for (std::size_t i = 0; i < elements_coarse.size(); ++i) {
      if (i == j) continue;
      onto_e2 += exit1[i] * element_transfer(elements_coarse[i], e2);
    }
    sum += e2.reflectivity * onto_e2 * element_to_rx_gain(e2, pre);
  }
  return sum;
}

SceneEngine::SceneEngine(const Room& room, const DiscretizationPolicy& policy,
                         std::vector<LambertianSource> sources, int max_reflection_order)
    : room_(room), policy_(policy), max_order_(max_reflection_order), sources_(std::move(sources)) {
  if (max_order_ < 0 || max_order_ > 2)
    throw std::invalid_argument("reflection order must be 0, 1 or 2");
  const std::size_t ns = sources_.size();

  if (max_order_ >= 1) {
    fine_ = discretize_room(room_, policy_.first_order_element);
    exit1_fine_.assign(ns, std::vector<double>(fine_.size()));
    parallel_for(ns, [this](std::size_t s) {
      for (std::size_t e = 0; e < fine_.size(); ++e)
        exit1_fine_[s][e] = fine_[e].reflectivity * arriving_power(sources_[s], fine_[e]);
    });
  }

  if (max_order_ >= 2) {
    coarse_ = discretize_room(room_, policy_.second_order_element);
    const std::size_t ne = coarse_.size();
    std::vector<std::vector<double>> exit1_coarse(ns, std::vector<double>(ne));
    for (std::size_t s = 0; s < ns; ++s)
      for (std::size_t e = 0; e < ne; ++e)
        exit1_coarse[s][e] = coarse_[e].reflectivity * arriving_power(sources_[s], coarse_[e]);

    exit2_coarse_.assign(ns, std::vector<double>(ne));
    // One pass over element pairs serves every source; each j row is an
    // independent work item with a fixed-order inner reduction.
    parallel_for(ne, [this, ns, ne, &exit1_coarse](std::size_t j) {
      const SurfaceElement& e2 = coarse_[j];
      std::vector<double> onto(ns, 0.0);
      for (std::size_t i = 0; i < ne; ++i) {
        if (i == j) continue;
        const double t = element_transfer(coarse_[i], e2);
        if (t == 0.0) continue;
        for (std::size_t s = 0; s < ns; ++s) onto[s] += exit1_coarse[s][i] * t;
      }
      for (std::size_t s = 0; s < ns; ++s) exit2_coarse_[s][j] = e2.reflectivity * onto[s];
    });
  }
}

PathBudget SceneEngine::received(std::size_t source_index, const ReceiverAperture& rx) const {
  const LambertianSource& src = sources_[source_index];
  const RxPrecomp pre(rx);

  PathBudget b;
  b.los = los_gain(src, rx) * src.optical_power_w;
  if (max_order_ >= 1) {
    const std::vector<double>& w1 = exit1_fine_[source_index];
    for (std::size_t e = 0; e < fine_.size(); ++e)
      b.first_order += w1[e] * element_to_rx_gain(fine_[e], pre);
  }
  if (max_order_ >= 2) {
    const std::vector<double>& w2 = exit2_coarse_[source_index];
    for (std::size_t e = 0; e < coarse_.size(); ++e)
      b.second_order += w2[e] * element_to_rx_gain(coarse_[e], pre);
  }
  b.total = b.los + b.first_order + b.second_order;
  return b;
}

std::vector<PathBudget> SceneEngine::received_all(const ReceiverAperture& rx) const {
  const RxPrecomp pre(rx);
  std::vector<double> g_fine(fine_.size());
  for (std::size_t e = 0; e < fine_.size(); ++e) g_fine[e] = element_to_rx_gain(fine_[e], pre);
  std::vector<double> g_coarse(coarse_.size());
  for (std::size_t e = 0; e < coarse_.size(); ++e)
    g_coarse[e] = element_to_rx_gain(coarse_[e], pre);

  std::vector<PathBudget> out(sources_.size());
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    PathBudget& b = out[s];
    b.los = los_gain(sources_[s], rx) * sources_[s].optical_power_w;
    if (max_order_ >= 1) {
      const std::vector<double>& w1 = exit1_fine_[s];
      for (std::size_t e = 0; e < g_fine.size(); ++e) b.first_order += w1[e] * g_fine[e];
    }
    if (max_order_ >= 2) {
      const std::vector<double>& w2 = exit2_coarse_[s];
      for (std::size_t e = 0; e < g_coarse.size(); ++e) b.second_order += w2[e] * g_coarse[e];
    }
    b.total = b.los + b.first_order + b.second_order;
  }
  return out;
}

PathBudget received_power(const LambertianSource& src, const ReceiverAperture& rx,
                          const DiscretizationPolicy& policy, const Room& room,
                          int max_reflection_order) {
  const SceneEngine engine(room, policy, {src}, max_reflection_order);
  return engine.received(0, rx);
}

}  // namespace owc
