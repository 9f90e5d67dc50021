#include "thetalift/gammafn.hpp"

#include <cmath>
#include <limits>

#include "thetalift/errors.hpp"

namespace thetalift {

namespace {

using cplxd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

cplxd cgamma_pos(cplxd s) {
    // requires Re(s) > 0.5
    s -= 1.0;
    cplxd acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (s + static_cast<double>(k));
    cplxd t = s + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, s + 0.5) * std::exp(-t) * acc;
}

bool near_nonpositive_int(cplxd s, double eps) {
    if (s.real() > 0.5) return false;
    double r = std::round(s.real());
    return r <= 0.0 && std::abs(s.real() - r) < eps && std::abs(s.imag()) < eps;
}

// Gamma(0, x) = E1(x) for real x > 0.
double e1_real(double x) {
    if (x <= 0) throw DomainError("E1 needs x > 0");
    if (x <= 1.0) {
        // -gamma - log x + sum (-1)^(n+1) x^n / (n n!)
        double sum = -0.57721566490153286061 - std::log(x);
        double term = 1.0;
        for (int n = 1; n < 40; ++n) {
            term *= -x / n;
            sum -= term / n;
            if (std::abs(term / n) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    // continued fraction, modified Lentz
    double b = x + 1.0, c = 1e308, d = 1.0 / b, h = d;
    for (int i = 1; i <= 200; ++i) {
        double an = -1.0 * i * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

cplxd upper_gamma_cf(cplxd s, double x) {
    // Gamma(s,x) = e^-x x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(...)))
    cplxd b = x + 1.0 - s;
    cplxd c = 1.0 / 1e-300;
    cplxd d = 1.0 / b;
    cplxd h = d;
    for (int i = 1; i <= 400; ++i) {
        cplxd an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        cplxd del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

cplxd lower_gamma_series(cplxd s, double x) {
    // gamma(s,x) = x^s e^-x sum_n x^n / (s (s+1) ... (s+n))
    cplxd sum = 1.0 / s;
    cplxd term = sum;
    for (int n = 1; n < 300; ++n) {
        term *= x / (s + static_cast<double>(n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(-x + s * std::log(x)) * sum;
}

}  // namespace

cplxd cgamma(cplxd s) {
    if (s.real() < 0.5) {
        // reflection
        cplxd sp = kPi * s;
        return kPi / (std::sin(sp) * cgamma_pos(1.0 - s));
    }
    return cgamma_pos(s);
}

cplxd recip_gamma(cplxd s) {
    if (s.real() < 0.5) {
        return std::sin(kPi * s) * cgamma_pos(1.0 - s) / kPi;
    }
    return 1.0 / cgamma_pos(s);
}

cplxd upper_gamma(cplxd s, double x) {
    if (!(x > 0)) throw DomainError("upper_gamma requires x > 0");
    if (x >= s.real() + 1.0 && x >= 1.0) return upper_gamma_cf(s, x);
    if (near_nonpositive_int(s, 1e-9)) {
        // integer path: recurse down from Gamma(0, x) = E1(x)
        long long n = llround(s.real());  // n <= 0
        cplxd g = e1_real(x);             // Gamma(0, x)
        cplxd cur_s = 0.0;
        while (llround(cur_s.real()) > n) {
            cur_s -= 1.0;
            g = (g - std::exp(-x + cur_s * std::log(x))) / cur_s;
        }
        return g;
    }
    if (s.real() < 0.25) {
        // shift into the stable region, then recurse down:
        // Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s
        int m = static_cast<int>(std::ceil(0.25 - s.real())) + 1;
        cplxd g = upper_gamma(s + static_cast<double>(m), x);
        for (int k = m - 1; k >= 0; --k) {
            cplxd sk = s + static_cast<double>(k);
            g = (g - std::exp(-x + sk * std::log(x))) / sk;
        }
        return g;
    }
    return cgamma(s) - lower_gamma_series(s, x);
}

}  // namespace thetalift
