#pragma once

// Test-only brute-force classifier for 2x2 action matrices: applies random
// conjugations and nonzero scalings and reads the class off numerically
// computed invariants. Independent of the exact classifier it checks.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

using DMat2 = std::array<std::array<double, 2>, 2>;

struct Result {
    int tag = 0;   // 1..6 following the six standard forms
    double j = 0;  // tr^2/det where applicable
    bool stable = true;
};

inline double norm(const DMat2& m) {
    return std::sqrt(m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] +
                     m[1][1] * m[1][1]);
}

inline Result classify_one(const DMat2& m) {
    double scale = std::max(norm(m), 1e-30);
    double tol = 1e-7 * scale;
    double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double tr = m[0][0] + m[1][1];
    Result r;
    if (norm(m) < 1e-12) {
        r.tag = 1;
        return r;
    }
    if (std::abs(det) < tol * scale) {
        r.tag = std::abs(tr) < tol ? 3 : 2;
        return r;
    }
    double disc = tr * tr - 4 * det;
    r.j = tr * tr / det;
    if (std::abs(disc) < tol * scale) {
        bool scalar = std::abs(m[0][1]) < tol && std::abs(m[1][0]) < tol &&
                      std::abs(m[0][0] - m[1][1]) < tol;
        r.tag = scalar ? 4 : 6;
        return r;
    }
    r.tag = disc > 0 ? 4 : 5;
    return r;
}

inline uint64_t next(std::mt19937_64& rng) { return rng(); }

inline int pick_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(next(rng) % static_cast<uint64_t>(hi - lo + 1));
}

// Classify by consensus over random conjugations s P m P^-1.
inline Result classify(const DMat2& m, std::mt19937_64& rng, int samples = 40) {
    Result base = classify_one(m);
    for (int i = 0; i < samples; ++i) {
        DMat2 p;
        double det = 0;
        do {
            for (auto& row : p)
                for (auto& v : row) v = pick_int(rng, -3, 3);
            det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
        } while (std::abs(det) < 0.5);
        DMat2 pinv{{{p[1][1] / det, -p[0][1] / det}, {-p[1][0] / det, p[0][0] / det}}};
        static const double scales[] = {1, -1, 2, -2, 0.5, -0.5, 3, -3};
        double s = scales[next(rng) % 8];
        DMat2 conj{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double acc = 0;
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v) acc += p[a][u] * m[u][v] * pinv[v][b];
                conj[a][b] = s * acc;
            }
        Result got = classify_one(conj);
        if (got.tag != base.tag) base.stable = false;
        if (base.tag == 4 || base.tag == 5) {
            if (std::abs(got.j - base.j) > 1e-5 * (1 + std::abs(base.j))) base.stable = false;
        }
    }
    return base;
}

} // namespace oracle
