#ifndef ATSMEM_OPTICS_HPP
#define ATSMEM_OPTICS_HPP

#include <algorithm>
#include <cmath>

#include "atsmem/cloud.hpp"
#include "atsmem/quadrature.hpp"
#include "atsmem/species.hpp"

namespace atsmem {

// Gaussian probe geometry. r_px/r_py are the 1/e^2 intensity diameters; the
// profile convention is exp(-2 x^2/r_px^2), i.e. R = 2w for a waist-w beam
// written as exp(-x^2/(2 w^2)).
struct BeamProfile {
    double r_px = 0;  // m
    double r_py = 0;

    double intensity(double x, double y) const {
        return std::exp(-2.0 * x * x / (r_px * r_px) - 2.0 * y * y / (r_py * r_py));
    }
    // Integral of intensity over the plane (peak intensity 1).
    double power() const { return kPi / 2.0 * r_px * r_py; }
    void validate() const;
};

// Resonant absorption cross section entering Beer's law,
// sigma = (3 lambda^2 / 2 pi) alpha^2 (2J'+1)/(2J+1), m^2.
double resonant_cross_section(const AtomSpecies& species, Line line);

// On-axis resonant optical depth d0 = sigma * column_density(0,0).
double peak_od(const CloudState& cloud, Line line);
double peak_od(const CloudState& cloud, const AtomSpecies& species, Line line);

// Effective optical depth d = -ln[ (integral I e^{-d0(x,y)}) / (integral I) ]
// for an arbitrary column-density field; quadrature over [-hx,hx] x [-hy,hy].
template <class ColumnFn>
double effective_od_over_column(const BeamProfile& beam, ColumnFn&& column, double sigma_abs,
                                double hx, double hy, double rel_tol = 1e-6) {
    beam.validate();
    auto transmitted = [&](double x, double y) {
        return beam.intensity(x, y) * std::exp(-sigma_abs * column(x, y));
    };
    const double out = integrate_2d(transmitted, -hx, hx, -hy, hy, rel_tol);
    const double ratio = out / beam.power();
    // ratio may exceed 1 by quadrature noise on an empty cloud; clamp at 0 depth
    return std::max(0.0, -std::log(ratio));
}

// Effective optical depth of a probe through a bimodal cloud (Beer's law in
// the below-saturation regime). Integration domain: union of 6x the beam
// diameter and the cloud support.
double effective_od(const BeamProfile& beam, const CloudState& cloud, Line line,
                    double rel_tol = 1e-6);

}  // namespace atsmem

#endif  // ATSMEM_OPTICS_HPP
