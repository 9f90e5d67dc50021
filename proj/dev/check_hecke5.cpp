// cached grid over fiberwise/modular/pairing convention combinations
#include <cstdio>
#include <map>
#include <memory>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-9;
    long long N = 5;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    std::vector<Mat2Q> gammas = {mq(1,1,0,1), mq(1,0,5,1), mq(6,1,5,1)};
    TorsionPoint xs[2] = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(1,5),Rat(0)), TorsionCoord(Rat(0),Rat(0)))};
    const char* xnames[2] = {"(0,u)", "(u,0)"};
    const char* fnames[4] = {"f(adj.x)", "f(a.x)", "sum/p", "sum"};
    const char* mnames[2] = {"|a", "|adj"};
    const char* pnames[2] = {"own", "tgt"};

    // caches
    std::map<std::pair<double,double>, std::shared_ptr<Evaluator>> evs;
    auto get_ev = [&](const UpperHalfPoint& t) {
        auto key = std::make_pair(t.tau.real(), t.tau.imag());
        auto it = evs.find(key);
        if (it != evs.end()) return it->second;
        auto ev = std::make_shared<Evaluator>(t, P);
        evs.emplace(key, ev);
        return ev;
    };

    for (long long p : {2LL, 3LL}) {
        DoubleCosetData dc = tp_reps(p, N);
        for (int xi = 0; xi < 2; ++xi) {
            for (auto& g : gammas) {
                auto [sc, gz] = clear_denominators(g);
                auto sigma = coset_permutation(dc, gz);
                size_t n = dc.reps.size();
                // gamma_i per i
                std::vector<Mat2Q> gi(n);
                for (size_t i = 0; i < n; ++i) {
                    Mat2Z num = dc.reps[i] * gz * dc.reps[sigma[i]].adj();
                    long long dj = dc.reps[sigma[i]].det();
                    gi[i] = Mat2Z{num.a/dj, num.b/dj, num.c/dj, num.d/dj}.to_q();
                }
                auto ev0 = get_ev(tau);
                // all LHS variants
                cplx lhs[4][2] = {};
                for (int pair = 0; pair < 2; ++pair)
                    for (size_t i = 0; i < n; ++i) {
                        const Mat2Z& act_alpha = (pair == 0) ? dc.reps[i] : dc.reps[sigma[i]];
                        const Mat2Q& gam_i = gi[i];
                        lhs[0][pair] += theta_gamma(*ev0, gam_i, fiberwise_point(act_alpha, xs[xi]));
                        lhs[1][pair] += theta_gamma(*ev0, gam_i, apply(act_alpha, xs[xi]));
                        Evaluator* evp = ev0.get();
                        PointFn th = [evp, gam_i](const TorsionPoint& q){ return theta_gamma(*evp, gam_i, q); };
                        cplx s = pushforward_sum(act_alpha, th, xs[xi]);
                        lhs[2][pair] += s / (double)p;
                        lhs[3][pair] += s;
                    }
                // RHS variants
                cplx rhs[2] = {};
                for (auto& al : dc.reps) {
                    auto slash = [&](const Mat2Z& m) {
                        cplx den = (double)m.c * tau.tau + (double)m.d;
                        cplx moved = ((double)m.a * tau.tau + (double)m.b) / den;
                        auto evt = get_ev(UpperHalfPoint(moved));
                        return (double)m.det() / (den * den) * theta_gamma(*evt, g, xs[xi]);
                    };
                    rhs[0] += slash(al);
                    rhs[1] += slash(al.adj());
                }
                for (int f = 0; f < 4; ++f) for (int pr = 0; pr < 2; ++pr) for (int m = 0; m < 2; ++m) {
                    cplx r = std::abs(rhs[m]) > 1e-12 ? lhs[f][pr] / rhs[m] : cplx(0,0);
                    printf("p=%lld x=%s g=%s f=%s pair=%s m=%s ratio=(%.6f,%.6f)\n",
                           p, xnames[xi], to_string(g).c_str(), fnames[f], pnames[pr], mnames[m],
                           r.real(), r.imag());
                }
            }
        }
    }
    return 0;
}
