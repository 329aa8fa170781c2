#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "owc/emitters.hpp"
#include "owc/room.hpp"
#include "owc/vec3.hpp"

namespace owc {

/// One photodetector aperture: accepts rays whose incidence angle against
/// the orientation axis is within the field of view.
struct ReceiverAperture {
  Vec3 position;
  Vec3 orientation;  // unit
  double fov_deg = 90.0;
  double area_m2 = 4e-6;
};

/// Received optical power split by path order.
struct PathBudget {
  double los = 0.0;
  double first_order = 0.0;
  double second_order = 0.0;
  double total = 0.0;
};

/// Channel DC gain of the direct source->receiver link:
/// (n+1)/(2*pi) * cos^n(phi) * cos(theta) * A / d^2, zero outside the source
/// forward hemisphere or the receiver FOV. Received power = gain * P_src.
/// Throws std::invalid_argument for coincident source and receiver.
double los_gain(const LambertianSource& src, const ReceiverAperture& rx);

/// Power reflected to the receiver off each surface element (one bounce).
/// Elements re-emit diffusely with order 1, scaled by their reflectivity.
/// An empty element list yields 0 and sets *warned_empty when provided.
double first_order_power(const LambertianSource& src, const ReceiverAperture& rx,
                         std::span<const SurfaceElement> elements,
                         bool* warned_empty = nullptr);

/// Power via ordered element pairs (two bounces). Pairs closer than the
/// diagonal of the larger element are skipped to avoid the near-field 1/d^2
/// blow-up of the point-patch approximation.
double second_order_power(const LambertianSource& src, const ReceiverAperture& rx,
                          std::span<const SurfaceElement> elements_coarse,
                          bool* warned_empty = nullptr);

/// Precomputed reflection state for a fixed scene (room + sources).
///
/// Per source, the power leaving every fine element after one bounce and
/// every coarse element after two bounces is cached at construction, so a
/// receiver query costs one pass over the elements regardless of how many
/// queries a sweep makes. Queries are pure and safe to issue from multiple
/// threads; all internal reductions run in a fixed element order, so results
/// are identical for any thread count.
class SceneEngine {
 public:
  SceneEngine(const Room& room, const DiscretizationPolicy& policy,
              std::vector<LambertianSource> sources, int max_reflection_order);

  std::size_t source_count() const { return sources_.size(); }
  const LambertianSource& source(std::size_t i) const { return sources_[i]; }
  int max_reflection_order() const { return max_order_; }
  const Room& room() const { return room_; }
  const DiscretizationPolicy& policy() const { return policy_; }

  /// Path budget from one source.
  PathBudget received(std::size_t source_index, const ReceiverAperture& rx) const;

  /// Path budgets from every source, sharing the receiver-side element
  /// geometry across sources.
  std::vector<PathBudget> received_all(const ReceiverAperture& rx) const;

 private:
  Room room_;
  DiscretizationPolicy policy_;
  int max_order_;
  std::vector<LambertianSource> sources_;
  std::vector<SurfaceElement> fine_, coarse_;
  std::vector<std::vector<double>> exit1_fine_;    // [src][e]: rho*P arriving, fine
  std::vector<std::vector<double>> exit2_coarse_;  // [src][e2]: rho*P after 2nd bounce
};

/// Assemble the LOS + first + second order budget for a single link.
/// Deterministic for fixed inputs; equivalent to querying a one-source
/// SceneEngine.
PathBudget received_power(const LambertianSource& src, const ReceiverAperture& rx,
                          const DiscretizationPolicy& policy, const Room& room,
                          int max_reflection_order = 2);

}  // namespace owc
