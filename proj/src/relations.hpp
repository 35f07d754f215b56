#pragma once
// The defining relations of the affine Temperley-Lieb algebra, checked on any realisation.
//
// Alg must provide: Elem e(int i), Elem omega(int power), Elem id(),
// Elem mul(const Elem&, const Elem&), Elem times_beta(const Elem&), bool eq(const Elem&, const Elem&).

#include <string>
#include <vector>

namespace atl {

template <class Alg>
std::vector<std::string> check_genrel(int N, Alg& alg) {
    using Elem = typename Alg::Elem;
    std::vector<std::string> fails;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) fails.push_back(what);
    };
    auto idx = [&](int i) { return ((i - 1) % N + N) % N + 1; };
    auto E = [&](int i) { return alg.e(idx(i)); };
    auto mul = [&](std::initializer_list<Elem> xs) {
        auto it = xs.begin();
        Elem r = *it++;
        for (; it != xs.end(); ++it) r = alg.mul(r, *it);
        return r;
    };
    Elem om = alg.omega(1), omi = alg.omega(-1), id = alg.id();
    note(alg.eq(alg.mul(om, omi), id), "Omega Omega^-1 = 1");
    note(alg.eq(alg.mul(omi, om), id), "Omega^-1 Omega = 1");
    if (N < 2) return fails;
    if (N == 2) {
        Elem e1 = E(1), e2 = E(2);
        note(alg.eq(alg.mul(e1, e1), alg.times_beta(e1)), "e1 e1 = beta e1");
        note(alg.eq(alg.mul(e2, e2), alg.times_beta(e2)), "e2 e2 = beta e2");
        note(alg.eq(e2, mul({om, e1, omi})), "e2 = Omega e1 Omega^-1");
        note(alg.eq(e2, mul({omi, e1, om})), "e2 = Omega^-1 e1 Omega");
        Elem om2 = alg.mul(om, om);
        note(alg.eq(alg.mul(om2, e1), e1), "Omega^2 e1 = e1");
        note(alg.eq(alg.mul(e1, om2), e1), "e1 Omega^2 = e1");
        return fails;
    }
    for (int i = 1; i <= N; ++i) {
        std::string si = std::to_string(i);
        Elem ei = E(i);
        note(alg.eq(alg.mul(ei, ei), alg.times_beta(ei)), "e" + si + " e" + si + " = beta e" + si);
        note(alg.eq(mul({ei, E(i + 1), ei}), ei), "e" + si + " e" + si + "+1 e" + si + " = e" + si);
        note(alg.eq(mul({ei, E(i - 1), ei}), ei), "e" + si + " e" + si + "-1 e" + si + " = e" + si);
        for (int j = 1; j <= N; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, N - d);
            if (d < 2) continue;
            note(alg.eq(alg.mul(ei, E(j)), alg.mul(E(j), ei)), "e" + si + " e" + std::to_string(j) + " commute");
        }
        note(alg.eq(alg.mul(om, ei), alg.mul(E(i - 1), om)), "Omega e" + si + " = e" + si + "-1 Omega");
    }
    for (int sgn : {1, -1}) {
        Elem w = alg.mul(alg.omega(sgn), E(0));
        Elem lhs = w;
        for (int k = 1; k < N - 1; ++k) lhs = alg.mul(lhs, w);
        Elem rhs = alg.mul(alg.omega(sgn * N), w);
        note(alg.eq(lhs, rhs), sgn > 0 ? "(Omega e0)^(N-1) = Omega^N (Omega e0)" : "(Omega^-1 e0)^(N-1) = Omega^-N (Omega^-1 e0)");
    }
    return fails;
}

}  // namespace atl
