#ifndef STICKKNOT_SAMPLER_HPP
#define STICKKNOT_SAMPLER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "stickknot/errors.hpp"
#include "stickknot/polygon.hpp"

namespace stickknot {

struct SamplerConfig {
  std::size_t n = 10;
  double radius = 2.0;
  std::uint64_t seed = 1;
  std::size_t burn_in = 10000;
  std::size_t stride = 100;
  std::size_t max_attempts_per_sample = 1000000;  // proposals allowed without an emission
};

inline void validate(const SamplerConfig& c) {
  if (c.n < 3) throw InputError("sampler needs n >= 3");
  if (!(c.radius >= 0.5)) throw InputError("confinement radius must be at least 1/2");
  if (c.burn_in < 1 || c.stride < 1) throw InputError("burn_in and stride must be at least 1");
}

/// Rotates the vertices strictly between i and j about the line through
/// vertices i and j. Edge lengths and closure are preserved.
inline std::vector<Vec3> crankshaft_step(const std::vector<Vec3>& v, std::size_t i, std::size_t j, double angle) {
  const std::size_t n = v.size();
  if (!(i < j && j < n)) throw InputError("crankshaft pivots need 0 <= i < j < n");
  const Vec3 axis = v[j] - v[i];
  if (!(norm(axis) > 0)) throw DegenerateError("crankshaft axis endpoints coincide");
  const Mat3 R = rotation_matrix(normalized(axis), angle);
  std::vector<Vec3> out = v;
  for (std::size_t k = i + 1; k < j; ++k) out[k] = v[i] + R * (v[k] - v[i]);
  return out;
}

inline Polygon crankshaft_step(const Polygon& p, std::size_t i, std::size_t j, double angle) {
  return Polygon(crankshaft_step(std::vector<Vec3>(p.vertices().begin(), p.vertices().end()), i, j, angle));
}

/// Regular planar n-gon with unit edges, centered at the origin.
inline std::vector<Vec3> regular_polygon(std::size_t n) {
  const double R = 0.5 / std::sin(std::numbers::pi / static_cast<double>(n));
  std::vector<Vec3> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    v[k] = {R * std::cos(t), R * std::sin(t), 0};
  }
  return v;
}

/// Metropolis chain of crankshaft moves confined to the ball of the given
/// radius around the centroid. Deterministic in the seed.
class ConfinedSampler {
 public:
  explicit ConfinedSampler(const SamplerConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    validate(cfg_);
    v_ = regular_polygon(cfg_.n);
    const double circumradius = 0.5 / std::sin(std::numbers::pi / static_cast<double>(cfg_.n));
    if (cfg_.radius < circumradius) shrink_into_ball(circumradius);
    for (std::size_t k = 0; k < cfg_.burn_in; ++k) step(cfg_.radius);
  }

  const SamplerConfig& config() const { return cfg_; }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t accepted() const { return accepted_; }

  /// Advances `stride` accepted moves and returns the current polygon.
  Polygon next() {
    std::size_t moved = 0, tries = 0;
    while (moved < cfg_.stride) {
      if (++tries > cfg_.max_attempts_per_sample)
        throw DegenerateError("sampler stalled: no admissible move found for radius " + std::to_string(cfg_.radius));
      if (step(cfg_.radius)) ++moved;
    }
    return Polygon(v_);
  }

  /// One proposal against confinement radius r. Returns true if accepted.
  bool step(double r) {
    ++steps_;
    const std::size_t n = cfg_.n;
    // Pivots i < j with at least one vertex strictly between them.
    std::size_t i = 0, j = 0;
    do {
      i = uniform_index(n);
      j = uniform_index(n);
      if (i > j) std::swap(i, j);
    } while (j < i + 2);
    const double angle = 2 * std::numbers::pi * uniform01();
    std::vector<Vec3> cand = crankshaft_step(v_, i, j, angle);
    if (!inside(cand, r)) return false;
    v_ = std::move(cand);
    if (++accepted_ % 10000 == 0) correct_drift();
    return true;
  }

 private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::size_t uniform_index(std::size_t n) {
    // Rejection keeps the draw exactly uniform and platform independent.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  static bool inside(const std::vector<Vec3>& v, double r) {
    Vec3 c;
    for (const Vec3& p : v) c += p;
    c = c / static_cast<double>(v.size());
    for (const Vec3& p : v)
      if (dot(p - c, p - c) > r * r) return false;
    return true;
  }

  /// Starts in a looser ball and contracts it to the target radius, never
  /// above the current polygon's extent.
  void shrink_into_ball(double start) {
    double r = start + 1;
    std::size_t since_progress = 0;
    while (r > cfg_.radius) {
      if (++since_progress > cfg_.max_attempts_per_sample)
        throw DegenerateError("confinement radius " + std::to_string(cfg_.radius) + " looks infeasible for n = " + std::to_string(cfg_.n) +
                              ": contraction stalled at radius " + std::to_string(r));
      if (!step(r)) continue;
      const double far = extent(v_);
      if (far < r) {
        r = std::max(cfg_.radius, far);
        since_progress = 0;
      }
    }
  }

  static double extent(const std::vector<Vec3>& v) {
    Vec3 c;
    for (const Vec3& p : v) c += p;
    c = c / static_cast<double>(v.size());
    double far = 0;
    for (const Vec3& p : v) far = std::max(far, norm(p - c));
    return far;
  }

  /// Renormalizes edges to unit length and restores closure.
  void correct_drift() {
    const std::size_t n = v_.size();
    std::vector<Vec3> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = v_[(k + 1) % n] - v_[k];
    double moved = 0;
    for (int round = 0; round < 8; ++round) {
      Vec3 sum;
      for (Vec3& x : e) {
        const double l = norm(x);
        moved = std::max(moved, std::abs(l - 1));
        x = x / l;
        sum += x;
      }
      if (norm(sum) == 0) break;
      moved = std::max(moved, norm(sum) / static_cast<double>(n));
      for (Vec3& x : e) x -= sum / static_cast<double>(n);
    }
    for (Vec3& x : e) x = x / norm(x);
    if (moved > 1e-9) throw DegenerateError("drift correction exceeded 1e-9");
    std::vector<Vec3> out(n);
    out[0] = v_[0];
    for (std::size_t k = 1; k < n; ++k) out[k] = out[k - 1] + e[k - 1];
    v_ = std::move(out);
  }

  SamplerConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<Vec3> v_;
  std::uint64_t steps_ = 0, accepted_ = 0;
};

}  // namespace stickknot

#endif  // STICKKNOT_SAMPLER_HPP
