#pragma once

// Double-double helpers: an unevaluated sum hi + lo carrying ~106 bits.
// Used internally for residual accumulation and compensated dot products.
// Requires IEEE double arithmetic without expression contraction (the
// library is built with -ffp-contract=off).

#include <cmath>

namespace radfp::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

/// Exact sum assuming |a| >= |b|: a + b = s.hi + s.lo.
inline dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

/// Exact sum for arbitrary a, b (Knuth): a + b = s.hi + s.lo.
inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

/// Exact product: a * b = p.hi + p.lo (fma splits the rounding error).
inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(const dd& a, const dd& b) {
    dd s = two_sum(a.hi, b.hi);
    const dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd sub(const dd& a, const dd& b) { return add(a, {-b.hi, -b.lo}); }

inline double round_to_double(const dd& a) { return a.hi + a.lo; }

}  // namespace radfp::detail
