#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ternary/rational.hpp"

namespace ternary {

// Canonical index of a point of {0,-1,+1}^n: little-endian base 3 with digit
// map 0 <-> 0, 1 <-> +1, 2 <-> -1. Coordinate flips are single digit updates.
using PointIndex = std::uint64_t;

constexpr int kMaxDim = 20;  // 3^20 indices still fit comfortably in 64 bits

inline std::uint64_t pow3(int n) {
    std::uint64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

inline std::uint64_t domain_size(int n) { return pow3(n); }

inline int trit_from_digit(unsigned d) { return d == 0 ? 0 : (d == 1 ? 1 : -1); }
inline unsigned digit_from_trit(int t) { return t == 0 ? 0u : (t == 1 ? 1u : 2u); }

// A point of the ternary hypercube. Immutable after construction in practice;
// all operations treat it as a value.
struct TernaryPoint {
    std::vector<int> coords;  // each in {-1, 0, +1}

    TernaryPoint() = default;
    explicit TernaryPoint(int n) : coords(n, 0) {}
    TernaryPoint(std::initializer_list<int> c) : coords(c) {}

    int dim() const { return int(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    int& operator[](int i) { return coords[i]; }

    bool operator==(const TernaryPoint& o) const { return coords == o.coords; }
    bool operator!=(const TernaryPoint& o) const { return coords != o.coords; }
};

inline PointIndex encode(const TernaryPoint& x) {
    PointIndex idx = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < x.dim(); ++i) {
        const int t = x.coords[i];
        if (t < -1 || t > 1) throw std::domain_error("encode: trit outside {-1,0,1}");
        idx += place * digit_from_trit(t);
        place *= 3;
    }
    return idx;
}

inline TernaryPoint decode(PointIndex idx, int n) {
    if (idx >= domain_size(n)) throw std::out_of_range("decode: index out of range");
    TernaryPoint x(n);
    for (int i = 0; i < n; ++i) {
        x.coords[i] = trit_from_digit(unsigned(idx % 3));
        idx /= 3;
    }
    return x;
}

inline int trit_at(PointIndex idx, int coord) {
    std::uint64_t p = pow3(coord);
    return trit_from_digit(unsigned((idx / p) % 3));
}

// Number of nonzero coordinates; equals the l1 norm and the squared l2 norm.
inline int weight(const TernaryPoint& x) {
    int w = 0;
    for (int t : x.coords) w += (t != 0);
    return w;
}

inline int weight_of_index(PointIndex idx, int n) {
    int w = 0;
    for (int i = 0; i < n; ++i) {
        w += (idx % 3) != 0;
        idx /= 3;
    }
    return w;
}

// Outward-oriented partial order: y <= x iff every nonzero coordinate of y is
// matched exactly by x. The origin is the minimum, the corners are maximal.
inline bool poset_leq(const TernaryPoint& y, const TernaryPoint& x) {
    if (y.dim() != x.dim()) throw std::invalid_argument("poset_leq: dimension mismatch");
    for (int i = 0; i < y.dim(); ++i) {
        if (y.coords[i] != 0 && x.coords[i] != y.coords[i]) return false;
    }
    return true;
}

inline bool poset_leq_idx(PointIndex y, PointIndex x, int n) {
    for (int i = 0; i < n; ++i) {
        const unsigned dy = unsigned(y % 3), dx = unsigned(x % 3);
        if (dy != 0 && dx != dy) return false;
        y /= 3;
        x /= 3;
    }
    return true;
}

struct Edge {
    PointIndex from;  // the endpoint with the 0 coordinate
    PointIndex to;    // same point with that coordinate set to +1 or -1
    int coord;
};

// Enumerates every geometric edge of {0,+-1}^n exactly once, oriented outward
// (from the 0-endpoint); total count 2n * 3^(n-1).
inline void for_each_edge(int n, const std::function<void(const Edge&)>& fn) {
    const std::uint64_t size = domain_size(n);
    for (int c = 0; c < n; ++c) {
        const std::uint64_t p = pow3(c);
        for (PointIndex i = 0; i < size; ++i) {
            if ((i / p) % 3 == 0) {
                fn(Edge{i, i + p, c});      // flip to +1
                fn(Edge{i, i + 2 * p, c});  // flip to -1
            }
        }
    }
}

inline std::uint64_t edge_count(int n) { return 2 * std::uint64_t(n) * pow3(n - 1); }

enum class LayerTag { Inner, Middle, Outer };

// Layers partition the cube by the deviation of the weight from 2n/3. The
// comparison is done on the integer 3*weight - 2n so that a fractional mean
// never gets rounded.
inline LayerTag layer_classify(int w, int n, double tau) {
    const double dev3 = double(3 * w - 2 * n);
    const double t3 = 3.0 * tau;
    if (dev3 < -t3) return LayerTag::Inner;
    if (dev3 > t3) return LayerTag::Outer;
    return LayerTag::Middle;
}

inline LayerTag layer_classify(const TernaryPoint& x, double tau) {
    return layer_classify(weight(x), x.dim(), tau);
}

inline bool in_middle(int w, int n, double tau) {
    return layer_classify(w, n, tau) == LayerTag::Middle;
}

// Exact number of points of each weight: C(n,w) * 2^w. Fits u64 for n <= 20.
std::vector<std::uint64_t> layer_sizes(int n);

struct ConcentrationReport {
    Rational exact_mass;  // P[ | ||x||_1 - 2n/3 | > tau ] by exact layer counting
    double bound;         // 2 exp(-tau^2 / 2n)
    bool holds;
};

ConcentrationReport concentration_check(int n, double tau);

// P over independent uniform x, y that x lies in the upper shadow of y;
// equals (5/9)^n.
Rational up_pair_probability(int n);

}  // namespace ternary
