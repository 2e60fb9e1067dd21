#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace koblab {

// Points and tangent vectors live in R^{2n}; coordinate pairs (x[2k], x[2k+1])
// are the real/imaginary parts of the k-th complex coordinate.
using Point = std::vector<double>;

constexpr int kMaxAmbientDim = 8; // up to C^4

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(std::span<const double> a) { return dot(a, a); }
inline double norm(std::span<const double> a) { return std::sqrt(norm2(a)); }

inline double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Point add(std::span<const double> a, std::span<const double> b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point sub(std::span<const double> a, std::span<const double> b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point scale(std::span<const double> a, double t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
    return r;
}

inline Point lerp(std::span<const double> a, std::span<const double> b, double t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

// Hermitian inner product <a,b> = sum_k a_k * conj(b_k) on C^n given the
// real packing above.
inline std::complex<double> hermitian(std::span<const double> a, std::span<const double> b) {
    double re = 0.0, im = 0.0;
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
        // (ar + i ai)(br - i bi)
        re += a[k] * b[k] + a[k + 1] * b[k + 1];
        im += a[k + 1] * b[k] - a[k] * b[k + 1];
    }
    return {re, im};
}

// Multiplication by i in each complex coordinate: (x,y) -> (-y,x).
inline Point mul_i(std::span<const double> a) {
    Point r(a.size());
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
        r[k] = -a[k + 1];
        r[k + 1] = a[k];
    }
    return r;
}

// a + zeta * u with complex scalar zeta applied coordinate-pair-wise.
inline Point add_cscaled(std::span<const double> a, std::complex<double> zeta,
                         std::span<const double> u) {
    Point r(a.size());
    for (std::size_t k = 0; k + 1 < a.size(); k += 2) {
        r[k] = a[k] + zeta.real() * u[k] - zeta.imag() * u[k + 1];
        r[k + 1] = a[k + 1] + zeta.real() * u[k + 1] + zeta.imag() * u[k];
    }
    return r;
}

// --- deterministic RNG -------------------------------------------------
//
// splitmix64: tiny, stable across platforms, good enough for sampling
// experiments. Sub-streams are derived by hashing (seed, index) so results
// do not depend on evaluation order or thread count.

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // standard normal via Box-Muller (explicit, platform-stable)
    double next_normal() {
        double u1 = next_double(), u2 = next_double();
        while (u1 <= 1e-300) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // uniform direction on the unit sphere of R^d
    Point next_unit_vector(int d) {
        Point v(d);
        double n2 = 0.0;
        do {
            for (int i = 0; i < d; ++i) v[i] = next_normal();
            n2 = norm2(v);
        } while (n2 < 1e-12);
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& x : v) x *= inv;
        return v;
    }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return r.next_u64();
}

// FNV-1a, used for content-hash cache keys.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    return fnv1a(s.data(), s.size(), h);
}

// --- small statistics helpers ------------------------------------------

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r2 = 0.0;
};

inline LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matched samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double vx = sxx - sx * sx / n;
    if (vx <= 0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LinearFit f;
    f.slope = (sxy - sx * sy / n) / vx;
    f.intercept = (sy - f.slope * sx) / n;
    const double vy = syy - sy * sy / n;
    if (vy <= 1e-300) {
        f.r2 = 1.0; // constant data, perfectly described
    } else {
        double ss_res = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double e = y[i] - (f.intercept + f.slope * x[i]);
            ss_res += e * e;
        }
        f.r2 = 1.0 - ss_res / vy;
    }
    return f;
}

// ranks with ties averaged
inline std::vector<double> ranks_of(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
        const double r = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = r;
        i = j + 1;
    }
    return rank;
}

inline double spearman_rho(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman_rho: need >= 2 matched samples");
    const auto rx = ranks_of(x), ry = ranks_of(y);
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (double r : rx) mx += r;
    for (double r : ry) my += r;
    mx /= n;
    my /= n;
    double num = 0, dx = 0, dy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    if (dx <= 0 || dy <= 0) return 0.0; // a constant sequence carries no trend
    return num / std::sqrt(dx * dy);
}

// Fixed-partition parallel map: work item i goes to worker i % threads, each
// worker owns a disjoint slice, so results are identical for any thread count.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const int t = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += t) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace koblab
