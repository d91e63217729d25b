#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ternary/core.hpp"

namespace ternary {

// Dense bit-indexed subset of {0,+-1}^n. Whole-domain scans dominate the
// workloads here, and 3^16 bits is ~5.4 MB, so a flat bit array wins over any
// sparse structure.
class PointSet {
public:
    PointSet() : n_(0), size_(1), bits_(1, 0) {}
    explicit PointSet(int n)
        : n_(n), size_(domain_size(n)), bits_((size_ + 63) / 64, 0) {}

    int dim() const { return n_; }
    std::uint64_t domain() const { return size_; }

    bool test(PointIndex i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void set(PointIndex i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(PointIndex i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void assign(PointIndex i, bool v) { v ? set(i) : reset(i); }

    bool contains(const TernaryPoint& x) const { return test(encode(x)); }
    void insert(const TernaryPoint& x) { set(encode(x)); }

    std::uint64_t cardinality() const;

    PointSet complement() const;
    PointSet intersect(const PointSet& o) const;
    PointSet unite(const PointSet& o) const;

    std::uint64_t symmetric_difference_size(const PointSet& o) const;

    bool operator==(const PointSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const PointSet& o) const { return !(*this == o); }

    std::vector<PointIndex> to_indices() const;

    // all points x with y <= x in the outward order; |Up(y)| = 3^(#zeros of y)
    static PointSet upper_shadow(const TernaryPoint& y);

    static PointSet from_predicate(int n, const std::function<bool(PointIndex)>& pred);

    // Text format: `n=<n>`, then `format=indices` with one decimal index per
    // line, or `format=bitmap` with the hex-encoded bit array (little-endian
    // bit order, low index first). Round-trips exactly.
    void save(std::ostream& os, const std::string& format = "indices") const;
    static PointSet load(std::istream& is);

    void save_file(const std::string& path, const std::string& format = "indices") const;
    static PointSet load_file(const std::string& path);

private:
    int n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace ternary
