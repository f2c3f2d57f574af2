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

#include "risfeed/arrays.hpp"
#include "risfeed/channel.hpp"
#include "risfeed/eigenmodes.hpp"
#include "risfeed/error.hpp"
#include "risfeed/farfield.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace risfeed;

namespace
{
    double max_offdiag_identity(const Eigen::MatrixXcd &q)
    {
        const Eigen::MatrixXcd g = q.adjoint() * q;
        return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
    }

    Eigen::MatrixXcd reconstruct(const EigenDecomposition &dec)
    {
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dec.ris_size(), dec.amaf_size());
        for (int i = 0; i < dec.modes(); ++i)
            t += dec.sigmas(i) * dec.u.col(i) * dec.v.col(i).adjoint();
        return t;
    }
}

TEST_CASE("scalar decomposition")
{
    const auto dec = decompose(build_channel(make_scene(1, 1, 10.0)));
    CHECK(dec.sigmas(0) == doctest::Approx(0.063662).epsilon(1e-5));
    CHECK(std::abs(dec.u(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(dec.v(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("unitarity and reconstruction on random matrices")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> rows(2, 80);
    std::uniform_int_distribution<int> cols(1, 6);
    for (auto convention : {PhaseConvention::CentralFeedElement, PhaseConvention::LargestRisEntry})
        for (int i = 0; i < 25; ++i)
        {
            const int r = rows(rng);
            const int c = std::min(cols(rng), r);
            const Eigen::MatrixXcd t = oracle::random_matrix(r, c, rng);
            const auto dec = decompose(t, convention);
            CHECK(max_offdiag_identity(dec.u) < 1e-10);
            CHECK(max_offdiag_identity(dec.v) < 1e-10);
            CHECK((t - reconstruct(dec)).norm() / t.norm() < 1e-10);
            for (int k = 1; k < dec.modes(); ++k)
                CHECK(dec.sigmas(k) <= dec.sigmas(k - 1));
            CHECK(dec.sigmas.minCoeff() >= 0.0);
        }
}

TEST_CASE("scene decompositions reconstruct T")
{
    for (double d : {5.0, 30.0, 80.0, 400.0})
    {
        const auto t = build_channel(make_scene(128, 4, d));
        const auto dec = decompose(t);
        CHECK(max_offdiag_identity(dec.u) < 1e-10);
        CHECK((t.entries - reconstruct(dec)).norm() / t.entries.norm() < 1e-10);
        CHECK(std::abs(dec.sigmas.squaredNorm() - free_space_coupling(t)) < 1e-10 * free_space_coupling(t));
    }
}

TEST_CASE("phase conventions")
{
    const auto t = build_channel(make_scene(64, 4, 30.0));

    const auto ris = decompose(t, PhaseConvention::LargestRisEntry);
    for (int i = 0; i < ris.modes(); ++i)
    {
        // lowest index among entries tied with the largest magnitude
        const double peak = ris.u.col(i).cwiseAbs().maxCoeff();
        Eigen::Index k = 0;
        while (std::abs(ris.u(k, i)) < peak * (1.0 - 1e-12))
            ++k;
        CHECK(ris.u(k, i).imag() == 0.0);
        CHECK(ris.u(k, i).real() >= 0.0);
    }

    const auto feed = decompose(t, PhaseConvention::CentralFeedElement);
    const int centre = (4 - 1) / 2;
    for (int i = 0; i < feed.modes(); ++i)
    {
        const auto v = feed.v(centre, i);
        if (std::abs(v) > 1e-9)
        {
            CHECK(v.imag() == 0.0);
            CHECK(v.real() > 0.0);
        }
    }

    CHECK(parse_phase_convention("central-feed") == PhaseConvention::CentralFeedElement);
    CHECK(parse_phase_convention("largest-ris-entry") == PhaseConvention::LargestRisEntry);
    CHECK_FALSE(parse_phase_convention("random").has_value());
    CHECK(to_string(PhaseConvention::LargestRisEntry) == "largest-ris-entry");
}

TEST_CASE("decomposition is deterministic")
{
    const auto t = build_channel(make_scene(96, 4, 50.0));
    const auto a = decompose(t);
    const auto b = decompose(t);
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(a.sigmas == b.sigmas);
}

TEST_CASE("mode symmetry for a centered feeder")
{
    const auto dec = decompose(build_channel(make_scene(128, 4, 80.0)));
    const int n = dec.ris_size();
    for (int k = 0; k < n; ++k)
    {
        CHECK(std::abs(std::abs(dec.u(k, 0)) - std::abs(dec.u(n - 1 - k, 0))) <= 1e-9 * std::abs(dec.u(k, 0)));
        CHECK(std::abs(std::abs(dec.u(k, 1)) - std::abs(dec.u(n - 1 - k, 1))) <= 1e-9 * std::abs(dec.u(k, 0)));
    }
    CHECK(std::abs(dec.u.col(1).sum()) < 1e-10);
}

TEST_CASE("2x2 antisymmetric mode")
{
    const auto dec = decompose(build_channel(make_scene(2, 2, 3.0)));
    CHECK(std::abs(dec.u.col(0).dot(dec.u.col(1))) < 1e-12);
    CHECK(std::abs(steering_vector(2, 0.0).dot(dec.u.col(1))) < 1e-10);
}

TEST_CASE("design 1 focuses the excitation")
{
    const auto t = build_channel(make_scene(128, 4, 80.0));
    const auto dec = decompose(t);
    const auto d1 = design1_pencil(dec);
    CHECK(d1.label == "pencil");
    const Eigen::VectorXcd w = ris_excitation(d1, t);
    CHECK(w.imag().cwiseAbs().maxCoeff() < 1e-10);
    CHECK(w.real().minCoeff() >= 0.0);
    CHECK((w.real() - dec.sigmas(0) * dec.u.col(0).cwiseAbs()).norm() < 1e-12);
    for (int k = 0; k < d1.ris_phases.size(); ++k)
        CHECK(std::abs(std::abs(d1.ris_phases(k)) - 1.0) < 1e-12);
    CHECK(taper_db(w) == doctest::Approx(21.1).epsilon(0.05 / 21.1));

    const auto t8 = build_channel(make_scene(128, 4, 80.0, patch_8dbi, patch_8dbi));
    CHECK(taper_db(ris_excitation(design1_pencil(decompose(t8)), t8)) == doctest::Approx(21.6).epsilon(0.1 / 21.6));
}

TEST_CASE("design 1 beats random RIS phases at broadside")
{
    const auto t = build_channel(make_scene(64, 4, 30.0));
    const auto dec = decompose(t);
    const auto d1 = design1_pencil(dec);
    const double best = std::norm(array_factor(ris_excitation(d1, t), 0.0));
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i)
    {
        BeamDesign r{dec.v.col(0), oracle::random_unit_phases(64, rng), "random"};
        CHECK(std::norm(array_factor(ris_excitation(r, t), 0.0)) <= best * (1.0 + 1e-12));
    }
}

TEST_CASE("design 1 rejects vanishing u_1 entries")
{
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(3, 1);
    t(0, 0) = 1.0;
    t(2, 0) = 1.0;
    CHECK_THROWS_AS(design1_pencil(decompose(t)), DegenerateExcitation);
}

TEST_CASE("design 2 combines modes 1 and 3")
{
    const auto t = build_channel(make_scene(128, 4, 80.0));
    const auto dec = decompose(t);
    const auto d2 = design2_flattop(dec);
    const Eigen::VectorXcd target = 2.0 * dec.u.col(0) + dec.u.col(2);
    CHECK((ris_excitation(d2, t) - target).norm() < 1e-10 * target.norm());
    CHECK(d2.ris_phases == identity_phases(128));
    CHECK_THROWS_AS(design2_flattop(decompose(build_channel(make_scene(16, 2, 10.0)))), InsufficientModes);
}

TEST_CASE("design 3 equalizes sum and difference")
{
    const auto t = build_channel(make_scene(128, 4, 80.0));
    const auto dec = decompose(t);
    const auto m = design3_monopulse(dec);
    const Eigen::VectorXcd ws = ris_excitation(m.sum, t);
    const Eigen::VectorXcd wd = ris_excitation(m.diff, t);
    CHECK(ws.norm() == doctest::Approx(dec.sigmas(0)).epsilon(1e-12));
    CHECK(wd.norm() == doctest::Approx(dec.sigmas(0)).epsilon(1e-12));
    CHECK((wd - dec.sigmas(0) * dec.u.col(1)).norm() < 1e-12);
    CHECK_THROWS_AS(design3_monopulse(decompose(build_channel(make_scene(8, 1, 4.0)))), InsufficientModes);
}

TEST_CASE("custom designs span the family")
{
    const auto t = build_channel(make_scene(64, 4, 30.0));
    const auto dec = decompose(t);
    const auto d1 = design1_pencil(dec);
    const std::vector<double> b1{1.0, 0.0, 0.0, 0.0};
    const auto c1 = custom_design(dec, b1, d1.ris_phases);
    CHECK((c1.precoder - d1.precoder).norm() < 1e-15);
    CHECK(c1.ris_phases == d1.ris_phases);

    const std::vector<double> b2{2.0 / dec.sigmas(0), 0.0, 1.0 / dec.sigmas(2), 0.0};
    const auto c2 = custom_design(dec, b2, identity_phases(64));
    CHECK((c2.precoder - design2_flattop(dec).precoder).norm() < 1e-12 * c2.precoder.norm());

    const std::vector<double> zeros(4, 0.0);
    const auto p = evaluate_pattern(custom_design(dec, zeros, identity_phases(64)), t, 0.5);
    for (double v : p.power_dbi)
        CHECK(v == -400.0);

    const std::vector<double> too_many(5, 1.0);
    CHECK_THROWS_AS(custom_design(dec, too_many, identity_phases(64)), InvalidArgument);
    CHECK_THROWS_AS(custom_design(dec, b1, identity_phases(63)), InvalidArgument);
    Eigen::VectorXcd bad = identity_phases(64);
    bad(3) = 0.5;
    CHECK_THROWS_AS(custom_design(dec, b1, bad), InvalidArgument);
    const std::vector<double> nan_beta{std::nan("")};
    CHECK_THROWS_AS(custom_design(dec, nan_beta, identity_phases(64)), InvalidArgument);
}

TEST_CASE("steering")
{
    const auto t = build_channel(make_scene(128, 4, 80.0));
    const auto d1 = design1_pencil(decompose(t));
    const auto same = steer(d1, 0.0);
    CHECK(same.ris_phases == d1.ris_phases);
    CHECK(same.precoder == d1.precoder);

    std::mt19937 rng(29);
    std::uniform_real_distribution<double> angle(-40.0, 40.0);
    for (int i = 0; i < 10; ++i)
    {
        const double s = angle(rng);
        const auto back = steer(steer(d1, s), -s);
        for (int k = 0; k < 128; ++k)
            CHECK(std::abs(back.ris_phases(k) - d1.ris_phases(k)) < 1e-9);
        const auto st = steer(d1, s);
        for (int k = 0; k < 128; ++k)
            CHECK(std::abs(std::abs(st.ris_phases(k)) - 1.0) < 1e-12);
    }
}

TEST_CASE("steered pattern is the unsteered one shifted in sine space")
{
    const auto t = build_channel(make_scene(64, 4, 30.0));
    const auto d1 = design1_pencil(decompose(t));
    const Eigen::VectorXcd w0 = ris_excitation(d1, t);
    const Eigen::VectorXcd ws = ris_excitation(steer(d1, 20.0), t);
    const double s_s = std::sin(oracle::rad(20.0));
    for (double theta = -30.0; theta <= 60.0; theta += 2.5)
    {
        const double shifted = std::asin(std::sin(oracle::rad(theta)) - s_s) * 180.0 / oracle::pi;
        const double a = oracle::array_power(ws, theta);
        const double b = oracle::array_power(w0, shifted);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(a, b) + 1e-15);
    }
}
