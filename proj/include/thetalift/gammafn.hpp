#pragma once

#include <complex>

namespace thetalift {

// Gamma(s) for complex s via the Lanczos approximation (g = 7, n = 9),
// and 1/Gamma(s), which is entire.
std::complex<double> cgamma(std::complex<double> s);
std::complex<double> recip_gamma(std::complex<double> s);

// Upper incomplete gamma Gamma(s, x) for complex s and real x > 0.
// Entire in s for fixed x > 0. Continued fraction for large x, Kummer
// series plus Gamma(s) for small x, with a downward recurrence escape when s
// sits near a nonpositive integer.
std::complex<double> upper_gamma(std::complex<double> s, double x);

}  // namespace thetalift
