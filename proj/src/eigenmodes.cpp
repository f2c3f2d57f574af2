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

#include "risfeed/eigenmodes.hpp"

#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <complex>

namespace risfeed
{
    namespace
    {
        constexpr double tie_tolerance = 1e-12;
        constexpr double excitation_floor = 1e-15;
        constexpr double unit_modulus_tolerance = 1e-9;

        // Lowest index whose magnitude is within tie_tolerance of the maximum.
        Eigen::Index largest_entry(const Eigen::Ref<const Eigen::VectorXcd> &x)
        {
            const double peak = x.cwiseAbs().maxCoeff();
            for (Eigen::Index k = 0; k < x.size(); ++k)
                if (std::abs(x(k)) >= peak - tie_tolerance * std::max(peak, 1.0))
                    return k;
            return 0;
        }

        void pin_phase(EigenDecomposition &dec, int i)
        {
            auto u = dec.u.col(i);
            auto v = dec.v.col(i);

            Eigen::Index ref = 0;
            bool on_u = false;
            switch (dec.convention)
            {
            case PhaseConvention::CentralFeedElement:
            {
                const Eigen::Index centre = (v.size() - 1) / 2;
                const double peak = v.cwiseAbs().maxCoeff();
                ref = std::abs(v(centre)) > tie_tolerance * peak ? centre : largest_entry(v);
                break;
            }
            case PhaseConvention::LargestRisEntry:
                ref = largest_entry(u);
                on_u = true;
                break;
            }

            const std::complex<double> pivot = on_u ? u(ref) : v(ref);
            if (std::abs(pivot) == 0.0)
                return;
            const std::complex<double> rotation = std::conj(pivot) / std::abs(pivot);
            u *= rotation;
            v *= rotation;
            // make the reference entry exactly real
            if (on_u)
                u(ref) = std::abs(u(ref));
            else
                v(ref) = std::abs(v(ref));
        }

        void require_unit_modulus(const Eigen::VectorXcd &phases)
        {
            for (Eigen::Index k = 0; k < phases.size(); ++k)
                if (!std::isfinite(phases(k).real()) || !std::isfinite(phases(k).imag()) ||
                    std::abs(std::abs(phases(k)) - 1.0) > unit_modulus_tolerance)
                    throw InvalidArgument("RIS phases must be unit-modulus");
        }
    }

    std::string_view to_string(PhaseConvention c)
    {
        switch (c)
        {
        case PhaseConvention::CentralFeedElement:
            return "central-feed";
        case PhaseConvention::LargestRisEntry:
            return "largest-ris-entry";
        }
        return "unknown";
    }

    std::optional<PhaseConvention> parse_phase_convention(std::string_view name)
    {
        if (name == "central-feed")
            return PhaseConvention::CentralFeedElement;
        if (name == "largest-ris-entry")
            return PhaseConvention::LargestRisEntry;
        return std::nullopt;
    }

    EigenDecomposition decompose(const Eigen::MatrixXcd &t, PhaseConvention convention)
    {
        if (t.size() == 0)
            throw DecompositionError("cannot decompose an empty matrix");
        if (!t.allFinite())
            throw DecompositionError("propagation matrix has non-finite entries");

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.info() != Eigen::Success)
            throw DecompositionError("SVD did not converge");

        EigenDecomposition dec;
        dec.sigmas = svd.singularValues();
        dec.u = svd.matrixU();
        dec.v = svd.matrixV();
        dec.convention = convention;

        if (!dec.sigmas.allFinite() || !dec.u.allFinite() || !dec.v.allFinite())
            throw DecompositionError("SVD produced non-finite values");

        for (int i = 0; i < dec.modes(); ++i)
            pin_phase(dec, i);

        const double gap = tie_tolerance * dec.sigmas(0);
        for (int i = 0; i + 1 < dec.modes(); ++i)
            if (dec.sigmas(i) - dec.sigmas(i + 1) < gap)
                dec.degenerate_pairs.push_back(i);
        return dec;
    }

    EigenDecomposition decompose(const PropagationMatrix &t, PhaseConvention convention)
    {
        return decompose(t.entries, convention);
    }

    BeamDesign design1_pencil(const EigenDecomposition &dec)
    {
        if (dec.modes() < 1 || !(dec.sigmas(0) > 0.0))
            throw InsufficientModes("design 1 needs sigma_1 > 0");
        const auto u1 = dec.u.col(0);
        Eigen::VectorXcd phases(u1.size());
        for (Eigen::Index k = 0; k < u1.size(); ++k)
        {
            const double mag = std::abs(u1(k));
            if (mag < excitation_floor)
                throw DegenerateExcitation("u_1 vanishes at RIS element " + std::to_string(k));
            phases(k) = std::conj(u1(k)) / mag;
        }
        return BeamDesign{dec.v.col(0), std::move(phases), "pencil"};
    }

    BeamDesign design2_flattop(const EigenDecomposition &dec)
    {
        if (dec.modes() < 3)
            throw InsufficientModes("flat-top design needs at least three eigenmodes");
        if (!(dec.sigmas(2) > 0.0))
            throw InsufficientModes("flat-top design needs sigma_3 > 0");
        Eigen::VectorXcd b = 2.0 * dec.v.col(0) / dec.sigmas(0) + dec.v.col(2) / dec.sigmas(2);
        return BeamDesign{std::move(b), identity_phases(dec.ris_size()), "flattop"};
    }

    MonopulseDesign design3_monopulse(const EigenDecomposition &dec)
    {
        if (dec.modes() < 2)
            throw InsufficientModes("monopulse design needs at least two eigenmodes");
        if (!(dec.sigmas(1) > 0.0))
            throw InsufficientModes("monopulse design needs sigma_2 > 0");
        const Eigen::VectorXcd ones = identity_phases(dec.ris_size());
        BeamDesign sum{dec.v.col(0), ones, "monopulse_sum"};
        BeamDesign diff{dec.sigmas(0) / dec.sigmas(1) * dec.v.col(1), ones, "monopulse_diff"};
        return MonopulseDesign{std::move(sum), std::move(diff)};
    }

    BeamDesign steer(const BeamDesign &design, double theta_s_deg)
    {
        BeamDesign out = design;
        if (theta_s_deg == 0.0)
            return out;
        const double s = std::sin(deg_to_rad(theta_s_deg));
        for (Eigen::Index k = 0; k < out.ris_phases.size(); ++k)
            out.ris_phases(k) *= std::polar(1.0, -pi * static_cast<double>(k) * s);
        return out;
    }

    BeamDesign custom_design(const EigenDecomposition &dec, std::span<const double> betas,
                             const Eigen::VectorXcd &ris_phases, std::string label)
    {
        if (betas.size() > static_cast<std::size_t>(dec.modes()))
            throw InvalidArgument("more betas than eigenmodes");
        if (ris_phases.size() != dec.ris_size())
            throw InvalidArgument("RIS phase profile length does not match the RIS size");
        require_unit_modulus(ris_phases);

        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dec.amaf_size());
        for (std::size_t i = 0; i < betas.size(); ++i)
        {
            if (!std::isfinite(betas[i]))
                throw InvalidArgument("betas must be finite");
            if (betas[i] != 0.0)
                b += betas[i] * dec.v.col(static_cast<Eigen::Index>(i));
        }
        return BeamDesign{std::move(b), ris_phases, std::move(label)};
    }

    Eigen::VectorXcd identity_phases(int n_ris)
    {
        return Eigen::VectorXcd::Ones(n_ris);
    }

    Eigen::VectorXcd ris_excitation(const BeamDesign &design, const PropagationMatrix &t)
    {
        if (design.precoder.size() != t.cols() || design.ris_phases.size() != t.rows())
            throw InvalidArgument("beam design does not match the propagation matrix");
        return design.ris_phases.cwiseProduct(t.entries * design.precoder);
    }
}
