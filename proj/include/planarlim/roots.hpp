#pragma once

#include <vector>

#include "planarlim/bigfloat.hpp"
#include "planarlim/poly.hpp"

namespace planarlim {

/// An isolated real root: either exact (lo == hi, a rational root) or the unique root of the
/// square-free input inside the open interval (lo, hi).
struct RootInterval {
    Rat lo;
    Rat hi;
    BigFloat approx;
    bool exact() const { return lo == hi; }
};

/// Isolates all real roots of p in the open interval (lo, hi) by Descartes' rule of signs with
/// bisection on the square-free part, then refines each to `precision_bits` by exact bisection.
std::vector<RootInterval> isolate_real_roots(const Poly& p, const Rat& lo, const Rat& hi,
                                             long precision_bits = kDefaultPrecisionBits);

/// Shrinks an isolating interval of the square-free polynomial p until its width is below
/// 2^-bits. Exact roots (lo == hi) are returned unchanged.
RootInterval refine_root(const Poly& p, RootInterval r, long bits);

/// Cauchy bound: every complex root has modulus strictly less than the returned value.
Rat root_bound(const Poly& p);

}  // namespace planarlim
