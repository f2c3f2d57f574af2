// SPDX-License-Identifier: Apache-2.0
//
// risfeed: simulator for near-field fed RIS beamforming antennas
// Copyright (C) 2026 The risfeed authors
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

#include "risfeed/channel.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace risfeed;

TEST_CASE("single-element links")
{
    const auto t = build_channel(make_scene(1, 1, 10.0));
    CHECK(t.entries(0, 0).real() == doctest::Approx(0.063662).epsilon(1e-5));
    CHECK(std::abs(t.entries(0, 0).imag()) < 1e-12);

    const auto off = build_channel(make_scene(1, 1, 10.0, patch_6dbi, patch_6dbi, 10.0));
    CHECK(std::abs(off.entries(0, 0)) == doctest::Approx(0.022508).epsilon(1e-4));

    CHECK(free_space_coupling(make_scene(1, 1, 10.0)) == doctest::Approx(4.0528e-3).epsilon(1e-4));
    CHECK(free_space_coupling(make_scene(1, 1, 20.0)) ==
          doctest::Approx(free_space_coupling(make_scene(1, 1, 10.0)) / 4.0).epsilon(1e-12));
}

TEST_CASE("entries match the Friis oracle")
{
    const Scene s = make_scene(16, 3, 7.5, patch_8dbi, patch_6dbi, 1.25);
    const auto t = build_channel(s);
    REQUIRE(t.rows() == 16);
    REQUIRE(t.cols() == 3);
    for (int n = 0; n < 16; ++n)
        for (int m = 0; m < 3; ++m)
        {
            const auto ref = oracle::friis_entry(s.ris.position(n), s.amaf.position(m) + 1.25, 7.5, 4.0, 2.0, 6.3, 4.0);
            CHECK(std::abs(t.entries(n, m) - ref) < 1e-13);
        }
}

TEST_CASE("phase follows pi r and magnitudes are bounded")
{
    const Scene s = make_scene(64, 4, 30.0);
    const auto t = build_channel(s);
    const double bound = std::sqrt(4.0 * 4.0) / (2.0 * pi * 30.0);
    for (int n = 0; n < t.rows(); ++n)
        for (int m = 0; m < t.cols(); ++m)
        {
            const double dx = s.ris.position(n) - s.amaf.position(m);
            const double r = std::sqrt(30.0 * 30.0 + dx * dx);
            const double diff = std::remainder(std::arg(t.entries(n, m)) - pi * r, 2.0 * pi);
            CHECK(std::abs(diff) < 1e-9);
            CHECK(std::abs(t.entries(n, m)) > 0.0);
            CHECK(std::abs(t.entries(n, m)) <= bound * (1.0 + 1e-12));
        }
}

TEST_CASE("centro-symmetry for a centered feeder")
{
    const auto t = build_channel(make_scene(37, 4, 12.0));
    for (int n = 0; n < 37; ++n)
        for (int m = 0; m < 4; ++m)
        {
            const auto a = t.entries(n, m);
            const auto b = t.entries(36 - n, 3 - m);
            CHECK(std::abs(std::abs(a) - std::abs(b)) <= 1e-12 * std::abs(a));
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        }
}

TEST_CASE("Frobenius norm equals the singular value energy")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> np(4, 96);
    std::uniform_int_distribution<int> na(1, 4);
    std::uniform_real_distribution<double> dist(1.0, 200.0);
    for (int i = 0; i < 20; ++i)
    {
        const Scene s = make_scene(np(rng), na(rng), dist(rng));
        const auto t = build_channel(s);
        const auto dec = decompose(t);
        const double energy = dec.sigmas.squaredNorm();
        CHECK(std::abs(energy - free_space_coupling(t)) <= 1e-10 * energy);
    }
}

TEST_CASE("columns are unimodal at the Rayleigh distance")
{
    const int n_p = 64;
    const auto t = build_channel(make_scene(n_p, 4, rayleigh_distance(n_p)));
    for (int m = 0; m < 4; ++m)
    {
        int k = 0;
        while (k + 1 < n_p && std::abs(t.entries(k + 1, m)) > std::abs(t.entries(k, m)))
            ++k;
        while (k + 1 < n_p && std::abs(t.entries(k + 1, m)) < std::abs(t.entries(k, m)))
            ++k;
        CHECK(k == n_p - 1);
    }
}

TEST_CASE("sigma_1^2 drops 6 dB per distance doubling in the far field")
{
    const int n_p = 32;
    const double rd = rayleigh_distance(n_p);
    const double a = decompose(build_channel(make_scene(n_p, 4, rd))).sigmas(0);
    const double b = decompose(build_channel(make_scene(n_p, 4, 2.0 * rd))).sigmas(0);
    CHECK(pow_to_db(a * a) - pow_to_db(b * b) == doctest::Approx(6.02).epsilon(0.1 / 6.02));
}

TEST_CASE("Table I scene sigma_1^2")
{
    const double s1 = decompose(build_channel(make_scene(128, 4, 80.0))).sigmas(0);
    CHECK(pow_to_db(s1 * s1) == doctest::Approx(-20.2).epsilon(0.05 / 20.2));
}

TEST_CASE("invalid scenes")
{
    CHECK_THROWS_AS(build_channel(make_scene(4, 2, 0.0)), InvalidScene);
    CHECK_THROWS_AS(build_channel(make_scene(4, 2, -3.0)), InvalidScene);
    CHECK_THROWS_AS(build_channel(make_scene(4, 2, std::nan(""))), InvalidScene);
}
