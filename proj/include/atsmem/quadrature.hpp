#ifndef ATSMEM_QUADRATURE_HPP
#define ATSMEM_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "atsmem/errors.hpp"

namespace atsmem {

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. rel_tol bounds the error estimate
// relative to the L1 norm of the integrand; failure to reach it within
// max_depth bisection levels raises NumericalError.
template <class F>
double integrate_1d(F&& f, double a, double b, double rel_tol = 1e-9, int max_depth = 15) {
    double err = 0, l1 = 0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, static_cast<unsigned>(max_depth), rel_tol, &err, &l1);
    const double scale = std::max({l1, std::abs(v), 1e-300});
    if (!(err <= 100.0 * rel_tol * scale)) {
        std::ostringstream msg;
        msg << "integrate_1d: quadrature did not converge on [" << a << ", " << b
            << "]: estimated error " << err << ", integral " << v << ", L1 " << l1;
        throw NumericalError(msg.str());
    }
    return v;
}

// Piecewise quadrature over consecutive node pairs. Splitting the domain at
// known kinks (e.g. a Thomas-Fermi boundary) keeps every piece smooth, which
// the Gauss-Kronrod error estimate requires to be meaningful. `nodes` must be
// ascending and include both endpoints.
template <class F>
double integrate_1d_pieces(F&& f, std::span<const double> nodes, double rel_tol = 1e-9,
                           int max_depth = 15) {
    double total = 0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (nodes[i + 1] > nodes[i])
            total += integrate_1d(f, nodes[i], nodes[i + 1], rel_tol, max_depth);
    }
    return total;
}

// Iterated adaptive quadrature over the rectangle [ax,bx] x [ay,by]. The inner
// (x) integral is resolved one decade tighter than the requested tolerance so
// its noise does not defeat the outer adaptivity.
template <class F>
double integrate_2d(F&& f, double ax, double bx, double ay, double by, double rel_tol = 1e-6) {
    const double inner_tol = rel_tol * 0.1;
    auto outer = [&](double y) {
        return integrate_1d([&](double x) { return f(x, y); }, ax, bx, inner_tol);
    };
    return integrate_1d(outer, ay, by, rel_tol);
}

}  // namespace atsmem

#endif  // ATSMEM_QUADRATURE_HPP
