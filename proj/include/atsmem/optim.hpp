#ifndef ATSMEM_OPTIM_HPP
#define ATSMEM_OPTIM_HPP

#include <cmath>
#include <limits>

#include "atsmem/errors.hpp"

namespace atsmem {

struct MinResult {
    double x;
    double fx;
};

// Golden-section minimization on [a,b]. Assumes f is unimodal on the bracket;
// rel_tol is measured on the bracket width relative to |x|.
template <class F>
MinResult golden_section_min(F&& f, double a, double b, double rel_tol = 1e-10,
                             int max_iter = 400) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter; ++i) {
        if ((b - a) <= rel_tol * (std::abs(x1) + std::abs(x2)) + 1e-300) break;
        if (f1 <= f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? MinResult{x1, f1} : MinResult{x2, f2};
}

// Bisection for f(x) = 0 on [lo,hi] with f(lo), f(hi) of opposite sign.
// Unconditionally robust for the monotone functions it is used on.
template <class F>
double bisect_root(F&& f, double lo, double hi, double rel_tol = 1e-9, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (flo * fhi > 0) throw NumericalError("bisect_root: interval does not bracket a root");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0 || (hi - lo) <= rel_tol * std::abs(mid)) return mid;
        if (flo * fm < 0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace atsmem

#endif  // ATSMEM_OPTIM_HPP
