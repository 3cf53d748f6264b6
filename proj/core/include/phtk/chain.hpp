#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phtk/simplex.hpp"

namespace phtk {

/// A k-chain with coefficients in GF(2): a set of k-simplices.
///
/// Adding a simplex that is already present removes it. An empty chain keeps
/// the dimension it was created with but can be combined with a chain of any
/// dimension.
class Chain {
public:
    explicit Chain(int dimension = 0) : dimension_(dimension) {}
    Chain(int dimension, std::span<const Simplex> terms);

    int dimension() const noexcept { return dimension_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Simplex> simplices() const noexcept { return terms_; }
    bool contains(const Simplex& s) const noexcept;

    Chain& operator+=(const Simplex& s);
    Chain& operator+=(const Chain& other);

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator+(Chain a, const Simplex& s) { return a += s; }

    /// Equal as GF(2) vectors; the dimension tag of empty chains is ignored.
    friend bool operator==(const Chain& a, const Chain& b) noexcept;

private:
    void check_dimension(int k);

    int dimension_;
    std::vector<Simplex> terms_;  // sorted, unique
};

}  // namespace phtk
