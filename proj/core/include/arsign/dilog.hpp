#pragma once

#include <complex>

namespace arsign {

// Complex dilogarithm Li2(z) on the principal branch, cut along the real
// interval (1, inf).  Power series for small arguments; inversion and
// reflection map the rest of the plane into the fast-converging region.
// Relative accuracy ~1e-15 for |z| <= 2.
//
// Throws std::domain_error for non-finite z and for real z > 1 (the cut).
std::complex<double> dilog(std::complex<double> z);

// Li2(z) + Li2(conj(z)) computed as 2*Re[Li2(z)].  This is the combination
// that replaces the polar-notation real-part dilogarithm in the closed-form
// orthant expressions.  Requires z off the cut (1, inf).
double dilog_real_part_pair(std::complex<double> z);

}  // namespace arsign
