#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library: matrices are plain int arrays and sets are
// std::set.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::array<int, 4>;

inline int md(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline Mat mul(const Mat& x, const Mat& y, int n) {
    return {md(1LL * x[0] * y[0] + 1LL * x[1] * y[2], n), md(1LL * x[0] * y[1] + 1LL * x[1] * y[3], n),
            md(1LL * x[2] * y[0] + 1LL * x[3] * y[2], n), md(1LL * x[2] * y[1] + 1LL * x[3] * y[3], n)};
}

inline int gcd(int a, int b) {
    while (b) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool invertible(const Mat& m, int n) { return gcd(md(1LL * m[0] * m[3] - 1LL * m[1] * m[2], n), n) == 1; }

/// Repeated products until nothing new appears.
inline std::set<Mat> closure(const std::vector<Mat>& gens, int n) {
    std::set<Mat> s{{1, 0, 0, 1}};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat> cur(s.begin(), s.end());
        for (const auto& x : cur)
            for (const auto& g : gens)
                if (s.insert(mul(x, g, n)).second) grew = true;
    }
    return s;
}

inline long long count_invertible(int n) {
    long long c = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int cc = 0; cc < n; ++cc)
                for (int d = 0; d < n; ++d)
                    if (invertible({a, b, cc, d}, n)) ++c;
    return c;
}

inline Mat random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> dist(0, n - 1);
    while (true) {
        Mat m{dist(rng), dist(rng), dist(rng), dist(rng)};
        if (invertible(m, n)) return m;
    }
}

}  // namespace oracle
