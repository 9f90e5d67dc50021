// transposed-world Hecke grid: Gamma^1(N) fiberwise, reps beta_i = alpha_i^T
#include <cstdio>
#include <map>
#include <memory>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}
static Mat2Z tr(const Mat2Z& m){ return Mat2Z{m.a, m.c, m.b, m.d}; }
static bool in_gamma_up(const Mat2Z& g, long long N) {  // b == 0 mod N
    auto md=[&](long long v){ long long r=v%N; return r<0?r+N:r; };
    return g.det()==1 && md(g.a-1)==0 && md(g.b)==0 && md(g.d-1)==0;
}

int main() {
    SeriesParams P; P.tol = 1e-9;
    long long N = 5;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    std::vector<Mat2Q> gammas = {mq(1,0,1,1), mq(1,0,3,1), mq(1,5,2,11), mq(6,5,1,1)};
    TorsionPoint xs[2] = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(0),Rat(1,5)))};
    const char* xnames[2] = {"(0,u)", "(0,v)"};
    const char* fnames[4] = {"f(adj.x)", "f(b.x)", "sum/p", "sum"};
    const char* mnames[3] = {"|bT", "|b", "|adjb"};
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
        DoubleCosetData dc0 = tp_reps(p, N);
        std::vector<Mat2Z> beta;
        for (auto& a : dc0.reps) beta.push_back(tr(a));
        size_t n = beta.size();
        for (int xi = 0; xi < 2; ++xi) {
            for (auto& g : gammas) {
                auto [sc, gz] = clear_denominators(g);
                if (!in_gamma_up(gz, N)) { printf("gamma not in Gamma^1\n"); continue; }
                // sigma: for each i find unique j with beta_j^-1 gamma beta_i in Gamma^1
                std::vector<size_t> sigma(n, n);
                std::vector<Mat2Q> gi(n);
                bool ok = true;
                for (size_t i = 0; i < n && ok; ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        Mat2Z num = beta[j].adj() * gz * beta[i];
                        long long dj = beta[j].det();
                        if (num.a % dj || num.b % dj || num.c % dj || num.d % dj) continue;
                        Mat2Z cand{num.a/dj, num.b/dj, num.c/dj, num.d/dj};
                        if (!in_gamma_up(cand, N)) continue;
                        sigma[i] = j; gi[i] = cand.to_q();
                    }
                    if (sigma[i] == n) ok = false;
                }
                if (!ok) { printf("p=%lld x=%s g=%s NO PERMUTATION\n", p, xnames[xi], to_string(g).c_str()); continue; }
                auto ev0 = get_ev(tau);
                Evaluator* evp = ev0.get();
                cplx lhs[4][2] = {};
                for (int pr = 0; pr < 2; ++pr)
                    for (size_t i = 0; i < n; ++i) {
                        const Mat2Z& act_b = (pr == 0) ? beta[i] : beta[sigma[i]];
                        const Mat2Q& gam_i = gi[i];
                        lhs[0][pr] += theta_gamma(*evp, gam_i, fiberwise_point(act_b, xs[xi]));
                        lhs[1][pr] += theta_gamma(*evp, gam_i, apply(act_b, xs[xi]));
                        PointFn th = [evp, gam_i](const TorsionPoint& q){ return theta_gamma(*evp, gam_i, q); };
                        cplx s = pushforward_sum(act_b, th, xs[xi]);
                        lhs[2][pr] += s / (double)p;
                        lhs[3][pr] += s;
                    }
                cplx rhs[3] = {};
                for (size_t i = 0; i < n; ++i) {
                    auto slash = [&](const Mat2Z& m) {
                        cplx den = (double)m.c * tau.tau + (double)m.d;
                        cplx moved = ((double)m.a * tau.tau + (double)m.b) / den;
                        auto evt = get_ev(UpperHalfPoint(moved));
                        return (double)m.det() / (den * den) * theta_gamma(*evt, g, xs[xi]);
                    };
                    rhs[0] += slash(tr(beta[i]));
                    rhs[1] += slash(beta[i]);
                    rhs[2] += slash(beta[i].adj());
                }
                for (int f = 0; f < 4; ++f) for (int pr = 0; pr < 2; ++pr) for (int m = 0; m < 3; ++m) {
                    cplx r = std::abs(rhs[m]) > 1e-12 ? lhs[f][pr] / rhs[m] : cplx(0,0);
                    printf("p=%lld x=%s g=%s f=%s pair=%d m=%s ratio=(%.6f,%.6f)\n",
                           p, xnames[xi], to_string(g).c_str(), fnames[f], pr, mnames[m],
                           r.real(), r.imag());
                }
            }
        }
    }
    return 0;
}
