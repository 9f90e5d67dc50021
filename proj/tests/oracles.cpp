#include "oracles.hpp"

#include <cmath>

namespace oracle {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

C brute_k(const thetalift::UpperHalfPoint& tau, int a, C s, C z, double R) {
    C sum = 0;
    const double y = tau.y, x = tau.tau.real();
    const long long nhi = static_cast<long long>(R / y) + 2;
    for (long long n = -nhi; n <= nhi; ++n) {
        const double im = n * y;
        if (std::abs(im) > R) continue;
        const double half = std::sqrt(std::max(R * R - im * im, 0.0));
        const double re0 = n * x;
        for (long long m = static_cast<long long>(std::floor(-half - re0)) - 1;
             m <= static_cast<long long>(std::ceil(half - re0)) + 1; ++m) {
            const C omega(re0 + m, im);
            if (std::abs(omega) > R) continue;
            const C w = omega + z;
            const double aw = std::abs(w);
            if (aw < 1e-12) continue;
            C num = 1.0;
            for (int k = 0; k < a; ++k) num *= std::conj(w);
            sum += num * std::exp(-s * std::log(aw * aw));
        }
    }
    return sum;
}

DiskResult disk_sum_s1(const thetalift::UpperHalfPoint& tau, int a, C z,
                       const std::vector<double>& radii) {
    DiskResult out;
    for (double R : radii) out.partials.push_back(brute_k(tau, a, 1.0, z, R));
    out.cauchy = std::abs(out.partials.back() - out.partials[out.partials.size() - 2]);
    std::vector<C> vals = out.partials;
    for (int pass = 0; pass < 2 && vals.size() > 1; ++pass) {
        std::vector<C> next;
        for (size_t i = 0; i + 1 < vals.size(); ++i)
            next.push_back(vals[i + 1] + (vals[i + 1] - vals[i]) / 3.0);
        vals = next;
    }
    out.extrapolated = vals.back();
    return out;
}

C eisenstein_k_s1(const thetalift::UpperHalfPoint& tau, int a, C z,
                  const std::vector<double>& radii) {
    const C disk = disk_sum_s1(tau, a, z, radii).extrapolated;
    const C zb = std::conj(z);
    if (a == 1) return disk - kPi / tau.y * zb;
    if (a == 2) return disk - kPi / (2 * tau.y) * zb * zb;
    return disk;
}

C theta1(C v, C q, int deriv) {
    C sum = 0;
    for (int n = 0; n < 60; ++n) {
        const double k = 2 * n + 1;
        const C qp = std::pow(q, (n + 0.5) * (n + 0.5));
        const C mult = (n % 2) ? -2.0 : 2.0;
        C term;
        switch (deriv % 4) {
            case 0: term = std::sin(k * v); break;
            case 1: term = std::cos(k * v); break;
            case 2: term = -std::sin(k * v); break;
            default: term = -std::cos(k * v); break;
        }
        sum += mult * qp * std::pow(k, deriv) * term;
        if (std::abs(qp) < 1e-24) break;
    }
    return sum;
}

C k1_closed_form(const thetalift::UpperHalfPoint& tau, C z) {
    const C q = std::exp(C(0, kPi) * tau.tau);
    const C v = kPi * z;
    return kPi * theta1(v, q, 1) / theta1(v, q, 0) + kPi / tau.y * (z - std::conj(z));
}

C k2_s2_closed_form(const thetalift::UpperHalfPoint& tau, C z) {
    const C q = std::exp(C(0, kPi) * tau.tau);
    const C v = kPi * z;
    const C eta1 = -kPi * kPi / 3.0 * theta1(C(0, 0), q, 3) / theta1(C(0, 0), q, 1);
    const C logd = theta1(v, q, 1) / theta1(v, q, 0);
    const C wp = -eta1 - kPi * kPi * (theta1(v, q, 2) / theta1(v, q, 0) - logd * logd);
    return wp + eta1 - kPi / tau.y;
}

C e1_closed_form(const thetalift::UpperHalfPoint& tau, C z) {
    return C(0, 1) / (2 * kPi) * k1_closed_form(tau, z);
}

}  // namespace oracle
