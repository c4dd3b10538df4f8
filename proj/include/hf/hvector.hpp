#pragma once

#include <string>
#include <vector>

#include "hf/numeric.hpp"

namespace hf {

/// Finite sequence of nonnegative integers indexed from degree 0; trailing
/// zeros permitted. The Hilbert-function fingerprint of an artinian quotient.
struct HVector {
    std::vector<Int> v;

    HVector() = default;
    explicit HVector(std::vector<Int> values) : v(std::move(values)) {}
    HVector(std::initializer_list<long> values) {
        for (long x : values) v.emplace_back(x);
    }

    size_t size() const { return v.size(); }
    const Int& at(size_t k) const;  // 0 beyond the stored range
    Int sum() const;

    /// Largest index with a nonzero entry; -1 when the vector is all zero.
    int socle_degree() const;

    bool operator==(const HVector& o) const;
};

std::string format_hvector(const HVector& h);   // "(1,3,6,6,6,6,6,3,1)"
HVector parse_hvector(const std::vector<std::string>& tokens);

}  // namespace hf
