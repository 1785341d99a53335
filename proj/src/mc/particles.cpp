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

#include "nanolink/mc/particles.hpp"

#include "nanolink/core/error.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nanolink::mc
{

std::size_t ParticleEnsemble::alive_count() const noexcept
{
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), std::uint8_t{1}));
}

void ParticleEnsemble::emit(const Vec3 &at, std::uint64_t count, std::uint32_t bit_index)
{
    positions.insert(positions.end(), count, at);
    birth_bit_index.insert(birth_bit_index.end(), count, bit_index);
    alive.insert(alive.end(), count, std::uint8_t{1});
}

void ParticleEnsemble::compact()
{
    std::size_t out = 0;
    for (std::size_t i = 0; i < size(); ++i)
    {
        if (!alive[i])
            continue;
        positions[out] = positions[i];
        birth_bit_index[out] = birth_bit_index[i];
        alive[out] = 1;
        ++out;
    }
    positions.resize(out);
    birth_bit_index.resize(out);
    alive.resize(out);
}

std::vector<Vec3> place_sensors(const McLinkConfig &cfg)
{
    if (cfg.n_sensors < 1)
        throw ParameterError("place_sensors: n_sensors must be at least 1");
    std::vector<Vec3> sensors;
    sensors.reserve(cfg.n_sensors);
    for (std::uint32_t k = 0; k < cfg.n_sensors; ++k)
    {
        const double angle = 2.0 * std::numbers::pi * k / cfg.n_sensors;
        sensors.push_back({cfg.ring_radius * std::cos(angle), cfg.ring_radius * std::sin(angle), 0.0});
    }
    return sensors;
}

void brownian_step(ParticleEnsemble &ensemble, double dt, double diffusion_coeff, RandomSource &rng)
{
    if (!(dt > 0.0))
        throw ParameterError("brownian_step: dt must be positive");
    if (!(diffusion_coeff >= 0.0))
        throw ParameterError("brownian_step: diffusion coefficient must be nonnegative");
    const double sigma = std::sqrt(2.0 * diffusion_coeff * dt);
    for (std::size_t i = 0; i < ensemble.size(); ++i)
    {
        if (!ensemble.alive[i])
            continue;
        Vec3 &p = ensemble.positions[i];
        p.x += sigma * rng.normal();
        p.y += sigma * rng.normal();
        p.z += sigma * rng.normal();
    }
}

std::uint64_t absorb(ParticleEnsemble &ensemble, double receiver_radius)
{
    const double r2 = receiver_radius * receiver_radius;
    std::uint64_t absorbed = 0;
    for (std::size_t i = 0; i < ensemble.size(); ++i)
    {
        if (ensemble.alive[i] && ensemble.positions[i].norm2() <= r2)
        {
            ensemble.alive[i] = 0;
            ++absorbed;
        }
    }
    return absorbed;
}

std::uint64_t passive_count(const ParticleEnsemble &ensemble, double receiver_radius)
{
    const double r2 = receiver_radius * receiver_radius;
    std::uint64_t inside = 0;
    for (std::size_t i = 0; i < ensemble.size(); ++i)
        inside += (ensemble.alive[i] && ensemble.positions[i].norm2() <= r2) ? 1 : 0;
    return inside;
}

double analytic_hit_fraction(double a, double r, double diffusion_coeff, double t)
{
    if (!(a > 0.0) || !(r >= a))
        throw ParameterError("analytic_hit_fraction: requires r >= a > 0");
    if (!(diffusion_coeff > 0.0) || !(t >= 0.0))
        throw ParameterError("analytic_hit_fraction: requires D > 0 and t >= 0");
    if (t == 0.0)
        return r == a ? 1.0 : 0.0;
    return (a / r) * std::erfc((r - a) / (2.0 * std::sqrt(diffusion_coeff * t)));
}

double bridge_crossing_probability(double gap0, double gap1, double diffusion_coeff, double dt) noexcept
{
    return std::exp(-gap0 * gap1 / (diffusion_coeff * dt));
}

double radial_step(double r, double sigma, RandomSource &rng)
{
    const double along = r + sigma * rng.normal();
    return std::sqrt(along * along + 2.0 * sigma * sigma * rng.exponential());
}

AbsorptionWalker::AbsorptionWalker(double receiver_radius, double diffusion_coeff, double step_fraction,
                                   double near_step_fraction, double far_field_factor)
    : radius_(receiver_radius), diffusion_(diffusion_coeff), step_fraction_(step_fraction),
      near_sigma_(near_step_fraction * receiver_radius),
      far_radius_(far_field_factor > 0 ? far_field_factor * receiver_radius : INFINITY)
{
    if (!(receiver_radius > 0.0) || !(diffusion_coeff > 0.0) || !(step_fraction > 0.0) || !(near_step_fraction > 0.0))
        throw ParameterError("AbsorptionWalker: radius, diffusion and step fractions must be positive");
    if (!(far_field_factor == 0.0 || far_field_factor > 1.0))
        throw ParameterError("AbsorptionWalker: far_field_factor must be 0 or greater than 1");
}

AbsorptionWalker::AbsorptionWalker(const McLinkConfig &cfg)
    : AbsorptionWalker(cfg.receiver_radius, cfg.diffusion_coeff, cfg.adaptive_step_fraction, cfg.near_step_fraction,
                       cfg.far_field_factor)
{
}

std::optional<double> AbsorptionWalker::operator()(double r, double horizon, RandomSource &rng) const
{
    double gap = r - radius_;
    if (gap <= 0.0)
        return 0.0;

    // Bridge probabilities below exp(-kSkip) are not worth a uniform draw.
    constexpr double kSkip = 40.0;
    const double end_slack = horizon * 1e-12;
    double t = 0.0;
    while (horizon - t > end_slack)
    {
        if (r > far_radius_)
        {
            // Free-space first passage from r: absorbed with probability a/r,
            // and then at the time whose erfc-law quantile is uniform.
            if (rng.uniform() >= radius_ / r)
                return std::nullopt;
            const double x = boost::math::erfc_inv(1.0 - rng.uniform());
            const double tau = gap * gap / (4.0 * diffusion_ * x * x);
            return t + tau <= horizon ? std::optional<double>(t + tau) : std::nullopt;
        }

        const bool near = step_fraction_ * gap <= near_sigma_;
        const double sigma_target = near ? near_sigma_ : step_fraction_ * gap;
        const double dt = std::min(sigma_target * sigma_target / (2.0 * diffusion_), horizon - t);
        const double sigma = std::sqrt(2.0 * diffusion_ * dt);
        r = radial_step(r, sigma, rng);
        t += dt;

        const double next_gap = r - radius_;
        if (next_gap <= 0.0)
            return t;
        if (near)
        {
            const double exponent = gap * next_gap / (diffusion_ * dt);
            if (exponent < kSkip && rng.uniform() < std::exp(-exponent))
                return t;
        }
        gap = next_gap;
    }
    return std::nullopt;
}

} // namespace nanolink::mc
