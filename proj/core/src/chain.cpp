#include "phtk/chain.hpp"

#include <algorithm>
#include <iterator>

#include "phtk/errors.hpp"

namespace phtk {

Chain::Chain(int dimension, std::span<const Simplex> terms) : dimension_(dimension) {
    for (const Simplex& s : terms) *this += s;
}

bool Chain::contains(const Simplex& s) const noexcept {
    return std::binary_search(terms_.begin(), terms_.end(), s);
}

void Chain::check_dimension(int k) {
    if (terms_.empty()) {
        dimension_ = k;
    } else if (k != dimension_) {
        throw DimensionMismatch("cannot add a " + std::to_string(k) + "-simplex to a " +
                                std::to_string(dimension_) + "-chain");
    }
}

Chain& Chain::operator+=(const Simplex& s) {
    check_dimension(s.dimension());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s);
    if (it != terms_.end() && *it == s) {
        terms_.erase(it);
    } else {
        terms_.insert(it, s);
    }
    return *this;
}

Chain& Chain::operator+=(const Chain& other) {
    if (other.terms_.empty()) return *this;
    check_dimension(other.dimension_);
    std::vector<Simplex> sum;
    sum.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(sum));
    terms_ = std::move(sum);
    return *this;
}

bool operator==(const Chain& a, const Chain& b) noexcept {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
}

}  // namespace phtk
