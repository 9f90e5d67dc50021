#include <cstdio>
#include <random>
#include <chrono>
#include "thetalift/cocycle.hpp"
using namespace thetalift;
int main() {
    SeriesParams P;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    std::mt19937_64 rng(7);
    auto ri = [&](long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    };
    for (int k = 0; k < 30; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<BruhatFactor> word;
        Mat2Q prod;
        int len = 1 + (int)ri(0, 5);
        std::string desc;
        for (int j = 0; j < len; ++j) {
            if (ri(0, 1)) {
                long long t = ri(-2, 2);
                word.push_back(BruhatFactor::unipotent(Rat(t)));
                prod = prod * Mat2Q(Rat(1), Rat(t), Rat(0), Rat(1));
                desc += "T" + std::to_string(t) + " ";
            } else {
                word.push_back(BruhatFactor::weyl());
                word.push_back(BruhatFactor::diagonal(Rat(1), Rat(-1)));
                prod = prod * Mat2Q(Rat(0), Rat(-1), Rat(1), Rat(0));
                desc += "S ";
            }
        }
        TorsionPoint x(TorsionCoord(Rat(ri(0,4),5), Rat(ri(0,4),5)),
                       TorsionCoord(Rat(ri(0,4),5), Rat(ri(0,4),5)));
        if (x.is_zero()) { --k; continue; }
        cplx closed = theta_gamma(ev, prod, x);
        double tc = std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count();
        t0 = std::chrono::steady_clock::now();
        cplx tele = theta_telescoped(ev, word, x);
        double tt = std::chrono::duration<double>(std::chrono::steady_clock::now()-t0).count();
        printf("word %2d len %d [%s] closed %.2fs tele %.2fs err %.2e\n",
               k, len, desc.c_str(), tc, tt, std::abs(closed - tele));
        fflush(stdout);
    }
    return 0;
}
