#include "atsmem/optics.hpp"

#include <stdexcept>

namespace atsmem {

void BeamProfile::validate() const {
    if (!(r_px > 0 && r_py > 0)) throw std::domain_error("beam: diameters must be positive");
}

double resonant_cross_section(const AtomSpecies& species, Line line) {
    const TransitionLine& l = species.line(line);
    return 3.0 * l.lambda * l.lambda / kTwoPi * l.alpha_sq * l.degeneracy;
}

double peak_od(const CloudState& cloud, Line line) {
    return resonant_cross_section(cloud.species(), line) * cloud.column_density(0.0, 0.0);
}

double peak_od(const CloudState& cloud, const AtomSpecies& species, Line line) {
    return resonant_cross_section(species, line) * cloud.column_density(0.0, 0.0);
}

double effective_od(const BeamProfile& beam, const CloudState& cloud, Line line,
                    double rel_tol) {
    const double sigma = resonant_cross_section(cloud.species(), line);
    const double hx = std::max(3.0 * beam.r_px, cloud.extent(0));
    const double hy = std::max(3.0 * beam.r_py, cloud.extent(1));
    return effective_od_over_column(
        beam, [&](double x, double y) { return cloud.column_density(x, y); }, sigma, hx, hy,
        rel_tol);
}

}  // namespace atsmem
