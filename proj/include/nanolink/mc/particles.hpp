// SPDX-License-Identifier: Apache-2.0
//
// nanolink: link-level simulator for hybrid intra-body to cloud communication
// Copyright (C) 2026 The nanolink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NANOLINK_MC_PARTICLES_HPP
#define NANOLINK_MC_PARTICLES_HPP

#include "nanolink/core/random.hpp"
#include "nanolink/core/vec3.hpp"
#include "nanolink/mc/config.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nanolink::mc
{

/// Free molecules in an unbounded medium. The receiver sphere sits at the origin.
struct ParticleEnsemble
{
    std::vector<Vec3> positions;
    std::vector<std::uint32_t> birth_bit_index;
    std::vector<std::uint8_t> alive;

    std::size_t size() const noexcept { return positions.size(); }
    std::size_t alive_count() const noexcept;

    /// Appends `count` live molecules at `at`, tagged with the emitting bit.
    void emit(const Vec3 &at, std::uint64_t count, std::uint32_t bit_index);

    /// Removes dead molecules. Order of the survivors is preserved.
    void compact();
};

/// Sensor k at angle 2*pi*k/n on the ring (z = 0), receiver at the origin.
std::vector<Vec3> place_sensors(const McLinkConfig &cfg);

/// Adds an independent N(0, 2*D*dt) increment to every coordinate of every
/// live molecule. Throws ParameterError unless dt > 0 and D >= 0.
void brownian_step(ParticleEnsemble &ensemble, double dt, double diffusion_coeff, RandomSource &rng);

/// Kills live molecules with |p| <= receiver_radius and returns how many.
std::uint64_t absorb(ParticleEnsemble &ensemble, double receiver_radius);

/// Live molecules with |p| <= receiver_radius. Does not modify the ensemble.
std::uint64_t passive_count(const ParticleEnsemble &ensemble, double receiver_radius);

/// Probability that a molecule released at distance r from the centre of a
/// perfectly absorbing sphere of radius a has been absorbed by time t:
/// (a/r) * erfc((r - a) / (2 sqrt(D t))).
/// Throws ParameterError unless r >= a > 0, D > 0 and t >= 0.
double analytic_hit_fraction(double a, double r, double diffusion_coeff, double t);

/// Probability that a 1-D Brownian bridge with increment variance 2*D*dt
/// touches a plane it starts `gap0` from and ends `gap1` from (both > 0).
double bridge_crossing_probability(double gap0, double gap1, double diffusion_coeff, double dt) noexcept;

/// Exact distance from the origin after adding N(0, sigma^2) to each axis of a
/// point at distance `r`: sqrt((r + sigma Z)^2 + 2 sigma^2 E), Z normal, E
/// unit exponential.
double radial_step(double r, double sigma, RandomSource &rng);

/// Single-molecule walk towards a perfectly absorbing sphere.
///
/// Only the distance to the receiver centre matters, so the walk advances that
/// distance directly (see radial_step). Step std is
/// max(near_step_fraction * a, step_fraction * gap). Steps no larger than the
/// near-zone size get the planar Brownian-bridge crossing test. Once the
/// distance exceeds far_field_factor * a the molecule is finished with the
/// closed-form free-space first-passage law.
class AbsorptionWalker
{
  public:
    AbsorptionWalker(double receiver_radius, double diffusion_coeff, double step_fraction, double near_step_fraction,
                     double far_field_factor);
    explicit AbsorptionWalker(const McLinkConfig &cfg);

    /// Absorption time measured from release at distance `start_distance`, or
    /// nullopt if the molecule is still free after `horizon` seconds.
    std::optional<double> operator()(double start_distance, double horizon, RandomSource &rng) const;

  private:
    double radius_;
    double diffusion_;
    double step_fraction_;
    double near_sigma_;
    double far_radius_; // +inf when continuation is disabled
};

} // namespace nanolink::mc

#endif
