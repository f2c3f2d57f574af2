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

#include "risfeed/farfield.hpp"

#include "risfeed/error.hpp"
#include "risfeed/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace risfeed
{
    namespace
    {
        constexpr std::size_t min_main_lobe_samples = 5;

        double power_at(std::complex<double> field, const ElementPattern &element, double theta_deg)
        {
            return pow_to_db(std::norm(field) * element_gain(element, theta_deg));
        }

        std::size_t nearest_index(const std::vector<double> &angles, double theta_deg)
        {
            const auto it = std::lower_bound(angles.begin(), angles.end(), theta_deg);
            if (it == angles.begin())
                return 0;
            if (it == angles.end())
                return angles.size() - 1;
            const auto hi = static_cast<std::size_t>(it - angles.begin());
            return (theta_deg - angles[hi - 1] <= angles[hi] - theta_deg) ? hi - 1 : hi;
        }

        // Linear interpolation of the angle at which the pattern crosses `level`
        // between samples i and j.
        double crossing(const FarFieldPattern &p, std::size_t i, std::size_t j, double level)
        {
            const double vi = p.power_dbi[i];
            const double vj = p.power_dbi[j];
            if (vi == vj)
                return p.angles_deg[i];
            const double t = (level - vi) / (vj - vi);
            return p.angles_deg[i] + t * (p.angles_deg[j] - p.angles_deg[i]);
        }
    }

    double FarFieldPattern::value_at(double theta_deg) const
    {
        return power_at(array_factor(excitation, theta_deg), element, theta_deg);
    }

    std::complex<double> array_factor(const Eigen::VectorXcd &w, double theta_deg)
    {
        const double s = std::sin(deg_to_rad(theta_deg));
        std::complex<double> acc{0.0, 0.0};
        for (Eigen::Index k = 0; k < w.size(); ++k)
            acc += std::polar(1.0, pi * static_cast<double>(k) * s) * w(k);
        return acc;
    }

    std::vector<double> angle_grid(double step_deg)
    {
        if (!(step_deg > 0.0) || step_deg > 1.0 || !std::isfinite(step_deg))
            throw InvalidArgument("grid step must lie in (0, 1] degrees");

        std::vector<double> angles;
        const double count = 180.0 / step_deg;
        const double whole = std::round(count);
        if (std::abs(count - whole) < 1e-9 * count)
        {
            const auto n = static_cast<long>(whole);
            angles.reserve(static_cast<std::size_t>(n) + 1);
            for (long i = 0; i <= n; ++i)
                angles.push_back(static_cast<double>(2 * i - n) * (step_deg / 2.0));
            angles.front() = -90.0;
            angles.back() = 90.0;
        }
        else
        {
            for (long i = 0;; ++i)
            {
                const double a = -90.0 + static_cast<double>(i) * step_deg;
                if (a >= 90.0)
                    break;
                angles.push_back(a);
            }
            angles.push_back(90.0);
        }
        return angles;
    }

    FarFieldPattern evaluate_excitation(const Eigen::VectorXcd &w, const ElementPattern &element,
                                        double grid_step_deg)
    {
        FarFieldPattern p;
        p.angles_deg = angle_grid(grid_step_deg);
        p.excitation = w;
        p.element = element;
        p.field.resize(p.size());
        p.power_dbi.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            const double theta = p.angles_deg[i];
            p.field[i] = array_factor(w, theta);
            p.power_dbi[i] = power_at(p.field[i], element, theta);
        }
        return p;
    }

    FarFieldPattern evaluate_pattern(const BeamDesign &design, const PropagationMatrix &t, double grid_step_deg)
    {
        return evaluate_excitation(ris_excitation(design, t), t.scene.ris.element(), grid_step_deg);
    }

    double taper_db(const Eigen::VectorXcd &w)
    {
        if (w.size() == 0)
            return 0.0;
        const Eigen::VectorXd mag = w.cwiseAbs();
        const double hi = mag.maxCoeff();
        if (hi == 0.0)
            return 0.0;
        const double lo = std::max(mag.minCoeff(), hi * power_floor);
        return 10.0 * std::log10(hi / lo);
    }

    PatternMetrics pattern_metrics(const FarFieldPattern &p)
    {
        const auto &v = p.power_dbi;
        const std::size_t n = v.size();
        if (n < min_main_lobe_samples)
            throw InvalidArgument("pattern grid is too coarse for metrics");

        PatternMetrics m;
        const auto peak = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
        m.peak_dbi = v[peak];
        m.peak_angle_deg = p.angles_deg[peak];

        std::size_t lo = peak;
        while (lo > 0 && v[lo - 1] <= v[lo])
            --lo;
        std::size_t hi = peak;
        while (hi + 1 < n && v[hi + 1] <= v[hi])
            ++hi;
        if (hi - lo + 1 < min_main_lobe_samples)
            throw InvalidArgument("main lobe spans fewer than five grid samples; refine the grid");
        m.main_lobe_lo_deg = p.angles_deg[lo];
        m.main_lobe_hi_deg = p.angles_deg[hi];

        if (lo > 0 || hi + 1 < n)
        {
            double side = db_floor;
            for (std::size_t i = 0; i < lo; ++i)
                side = std::max(side, v[i]);
            for (std::size_t i = hi + 1; i < n; ++i)
                side = std::max(side, v[i]);
            m.sll_db = side - m.peak_dbi;
        }

        const double level = m.peak_dbi - 3.0;
        double left = p.angles_deg.front();
        for (std::size_t i = peak; i > 0; --i)
            if (v[i - 1] < level)
            {
                left = crossing(p, i - 1, i, level);
                break;
            }
        double right = p.angles_deg.back();
        for (std::size_t i = peak; i + 1 < n; ++i)
            if (v[i + 1] < level)
            {
                right = crossing(p, i, i + 1, level);
                break;
            }
        m.hpbw_deg = right - left;

        m.taper_db = taper_db(p.excitation);
        m.broadside_dbi = p.value_at(0.0);
        return m;
    }

    FlatSector flat_sector(const FarFieldPattern &p, double half_width_deg)
    {
        FlatSector s;
        s.half_width_deg = half_width_deg;
        s.min_dbi = std::numeric_limits<double>::infinity();
        s.max_dbi = -std::numeric_limits<double>::infinity();
        double linear_sum = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
        {
            if (std::abs(p.angles_deg[i]) > half_width_deg)
                continue;
            s.min_dbi = std::min(s.min_dbi, p.power_dbi[i]);
            s.max_dbi = std::max(s.max_dbi, p.power_dbi[i]);
            linear_sum += db_to_pow(p.power_dbi[i]);
            ++count;
        }
        if (count == 0)
            throw InvalidArgument("flat sector contains no grid samples");
        s.mean_dbi = pow_to_db(linear_sum / static_cast<double>(count));
        s.ripple_db = s.max_dbi - s.min_dbi;
        return s;
    }

    double ris_gain(const EigenDecomposition &dec, double e_r0)
    {
        const double coherent = dec.u.col(0).cwiseAbs().sum();
        const double s1 = dec.sigmas(0);
        return pow_to_db(s1 * s1 * coherent * coherent * e_r0);
    }

    std::pair<double, double> refine_minimum(const FarFieldPattern &p, std::size_t index)
    {
        const std::size_t n = p.size();
        double a = p.angles_deg[index > 0 ? index - 1 : index];
        double b = p.angles_deg[index + 1 < n ? index + 1 : index];
        const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;

        double best_angle = p.angles_deg[index];
        double best = p.value_at(best_angle);
        double c = b - ratio * (b - a);
        double d = a + ratio * (b - a);
        double fc = p.value_at(c);
        double fd = p.value_at(d);
        for (int iter = 0; iter < 80 && (b - a) > 1e-13; ++iter)
        {
            if (fc < fd)
            {
                b = d;
                d = c;
                fd = fc;
                c = b - ratio * (b - a);
                fc = p.value_at(c);
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + ratio * (b - a);
                fd = p.value_at(d);
            }
            if (fc < best)
            {
                best = fc;
                best_angle = c;
            }
            if (fd < best)
            {
                best = fd;
                best_angle = d;
            }
        }
        return {best_angle, best};
    }

    MonopulseCurve monopulse_curve(const FarFieldPattern &sum, const FarFieldPattern &diff)
    {
        if (sum.angles_deg != diff.angles_deg)
            throw InvalidArgument("sum and difference patterns use different grids");
        const std::size_t n = sum.size();
        if (n < 3)
            throw InvalidArgument("monopulse curve needs at least three grid samples");

        MonopulseCurve c;
        c.angles_deg = sum.angles_deg;
        c.raw_ratio.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            c.raw_ratio[i] = sum.field[i] == 0.0 ? std::complex<double>{} : diff.field[i] / sum.field[i];

        // Boresight calibration: the phase of the least-squares complex slope
        // of the ratio over the sum beam's half-power interval.
        const PatternMetrics sum_metrics = pattern_metrics(sum);
        const double half = sum_metrics.hpbw_deg / 2.0;
        std::complex<double> moment{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
        {
            const double x = c.angles_deg[i] - sum_metrics.peak_angle_deg;
            if (std::abs(x) <= half)
                moment += x * c.raw_ratio[i];
        }
        const double phase = std::abs(moment) > 0.0 ? std::arg(moment) : 0.0;
        c.calibration_phase_deg = rad_to_deg(phase);
        const std::complex<double> derotate = std::polar(1.0, -phase);
        c.ratio.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            c.ratio[i] = (c.raw_ratio[i] * derotate).real();

        // deepest difference sample inside the sum main lobe, then refined
        std::size_t best = nearest_index(c.angles_deg, sum_metrics.peak_angle_deg);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double a = c.angles_deg[i];
            if (a < sum_metrics.main_lobe_lo_deg || a > sum_metrics.main_lobe_hi_deg)
                continue;
            if (diff.power_dbi[i] < diff.power_dbi[best])
                best = i;
        }
        const auto [angle, value] = refine_minimum(diff, best);
        c.null_angle_deg = angle;
        c.null_depth_db = sum_metrics.peak_dbi - value;
        return c;
    }

    bool strictly_monotone(const std::vector<double> &angles_deg, const std::vector<double> &values, double lo_deg,
                           double hi_deg)
    {
        int direction = 0;
        bool have_prev = false;
        double prev = 0.0;
        for (std::size_t i = 0; i < angles_deg.size(); ++i)
        {
            if (angles_deg[i] < lo_deg || angles_deg[i] > hi_deg)
                continue;
            if (have_prev)
            {
                const int step = values[i] > prev ? 1 : (values[i] < prev ? -1 : 0);
                if (step == 0)
                    return false;
                if (direction == 0)
                    direction = step;
                else if (step != direction)
                    return false;
            }
            prev = values[i];
            have_prev = true;
        }
        return direction != 0;
    }

    GainScalingReport element_gain_scaling_report(int n_ris, int n_amaf, double distance,
                                                  const std::vector<std::pair<ElementPattern, ElementPattern>> &pairs,
                                                  PhaseConvention convention)
    {
        GainScalingReport report;
        for (const auto &[amaf_element, ris_element] : pairs)
        {
            const Scene scene = make_scene(n_ris, n_amaf, distance, ris_element, amaf_element);
            const EigenDecomposition dec = decompose(build_channel(scene), convention);

            GainScalingRow row;
            row.amaf_gain = amaf_element.peak_gain;
            row.ris_gain = ris_element.peak_gain;
            row.gamma_dbi = ris_gain(dec, ris_element.peak_gain);
            if (report.rows.empty())
            {
                row.predicted_dbi = row.gamma_dbi;
            }
            else
            {
                const GainScalingRow &ref = report.rows.front();
                row.predicted_dbi = ref.gamma_dbi + 10.0 * std::log10(row.amaf_gain / ref.amaf_gain) +
                                    20.0 * std::log10(row.ris_gain / ref.ris_gain);
            }
            row.residual_db = row.gamma_dbi - row.predicted_dbi;
            report.max_abs_residual_db = std::max(report.max_abs_residual_db, std::abs(row.residual_db));
            report.rows.push_back(row);
        }
        return report;
    }
}
