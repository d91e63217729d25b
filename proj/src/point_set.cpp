#include "ternary/point_set.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ternary {

std::uint64_t PointSet::cardinality() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

PointSet PointSet::complement() const {
    PointSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
    // clear the padding bits past 3^n
    const std::uint64_t tail = size_ & 63;
    if (tail != 0) r.bits_.back() &= (std::uint64_t(1) << tail) - 1;
    return r;
}

PointSet PointSet::intersect(const PointSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PointSet: dimension mismatch");
    PointSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & o.bits_[i];
    return r;
}

PointSet PointSet::unite(const PointSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PointSet: dimension mismatch");
    PointSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
}

std::uint64_t PointSet::symmetric_difference_size(const PointSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PointSet: dimension mismatch");
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) c += std::popcount(bits_[i] ^ o.bits_[i]);
    return c;
}

std::vector<PointIndex> PointSet::to_indices() const {
    std::vector<PointIndex> out;
    out.reserve(cardinality());
    for (PointIndex i = 0; i < size_; ++i) {
        if (test(i)) out.push_back(i);
    }
    return out;
}

PointSet PointSet::upper_shadow(const TernaryPoint& y) {
    const int n = y.dim();
    PointSet r(n);
    std::vector<int> zeros;
    for (int i = 0; i < n; ++i) {
        if (y.coords[i] == 0) zeros.push_back(i);
    }
    const PointIndex base = encode(y);
    const std::uint64_t count = pow3(int(zeros.size()));
    // odometer over the free coordinates
    for (std::uint64_t v = 0; v < count; ++v) {
        PointIndex idx = base;
        std::uint64_t rest = v;
        for (int z : zeros) {
            idx += (rest % 3) * pow3(z);
            rest /= 3;
        }
        r.set(idx);
    }
    return r;
}

PointSet PointSet::from_predicate(int n, const std::function<bool(PointIndex)>& pred) {
    PointSet r(n);
    for (PointIndex i = 0; i < r.size_; ++i) {
        if (pred(i)) r.set(i);
    }
    return r;
}

void PointSet::save(std::ostream& os, const std::string& format) const {
    os << "n=" << n_ << "\n";
    if (format == "indices") {
        os << "format=indices\n";
        for (PointIndex i = 0; i < size_; ++i) {
            if (test(i)) os << i << "\n";
        }
    } else if (format == "bitmap") {
        os << "format=bitmap\n";
        static const char* hex = "0123456789abcdef";
        std::string line;
        const std::uint64_t nibbles = (size_ + 3) / 4;
        for (std::uint64_t k = 0; k < nibbles; ++k) {
            unsigned v = 0;
            for (unsigned b = 0; b < 4; ++b) {
                const std::uint64_t bit = 4 * k + b;
                if (bit < size_ && test(bit)) v |= 1u << b;
            }
            line.push_back(hex[v]);
        }
        os << line << "\n";
    } else {
        throw std::invalid_argument("PointSet::save: unknown format " + format);
    }
}

PointSet PointSet::load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n=", 0) != 0)
        throw std::runtime_error("PointSet::load: missing n= header");
    const int n = std::stoi(line.substr(2));
    if (n < 0 || n > kMaxDim) throw std::runtime_error("PointSet::load: bad dimension");
    if (!std::getline(is, line) || line.rfind("format=", 0) != 0)
        throw std::runtime_error("PointSet::load: missing format= header");
    const std::string format = line.substr(7);
    PointSet r(n);
    if (format == "indices") {
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            const std::uint64_t idx = std::stoull(line);
            if (idx >= r.size_) throw std::runtime_error("PointSet::load: index out of range");
            r.set(idx);
        }
    } else if (format == "bitmap") {
        if (!std::getline(is, line)) throw std::runtime_error("PointSet::load: missing bitmap");
        for (std::uint64_t k = 0; k < line.size(); ++k) {
            const char c = line[k];
            unsigned v;
            if (c >= '0' && c <= '9') v = unsigned(c - '0');
            else if (c >= 'a' && c <= 'f') v = unsigned(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = unsigned(c - 'A' + 10);
            else throw std::runtime_error("PointSet::load: bad hex digit");
            for (unsigned b = 0; b < 4; ++b) {
                const std::uint64_t bit = 4 * k + b;
                if ((v >> b) & 1) {
                    if (bit >= r.size_) throw std::runtime_error("PointSet::load: bitmap too long");
                    r.set(bit);
                }
            }
        }
    } else {
        throw std::runtime_error("PointSet::load: unknown format " + format);
    }
    return r;
}

void PointSet::save_file(const std::string& path, const std::string& format) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    save(os, format);
}

PointSet PointSet::load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for read: " + path);
    return load(is);
}

}  // namespace ternary
