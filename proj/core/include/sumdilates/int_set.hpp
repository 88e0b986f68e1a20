#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumdilates/rational.hpp"

namespace sumdilates {

/// Result-size cap for sumset chains; exceeding it raises limit_exceeded.
inline constexpr std::int64_t kDefaultCardinalityCap = 10'000'000;

/// Finite set of 64-bit integers, stored strictly increasing.
class IntSet {
public:
    IntSet() = default;

    /// Sorts and deduplicates.
    explicit IntSet(std::vector<std::int64_t> values);

    /// Adopts an already strictly-increasing vector.
    static IntSet from_sorted(std::vector<std::int64_t> values);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    std::int64_t min() const { return elems_.front(); }
    std::int64_t max() const { return elems_.back(); }
    bool contains(std::int64_t v) const;

    const std::vector<std::int64_t>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    std::vector<std::int64_t> elems_;
};

/// {x + y : x in a, y in b}. Throws std::invalid_argument on empty input,
/// arithmetic_overflow on element overflow, limit_exceeded past `cap`.
IntSet sumset(const IntSet& a, const IntSet& b, std::int64_t cap = kDefaultCardinalityCap);

/// {lambda * x : x in a}; lambda must be nonzero.
IntSet dilate(std::int64_t lambda, const IntSet& a);

/// {-x : x in a}.
IntSet negate(const IntSet& a);

/// lambda_1*a + ... + lambda_h*a by repeated sumset.
IntSet dilate_sum(std::span<const std::int64_t> lambdas, const IntSet& a,
                  std::int64_t cap = kDefaultCardinalityCap);

/// kA - lA with k + l >= 1; a 0-fold side contributes {0}.
IntSet signed_fold(std::int64_t k, std::int64_t l, const IntSet& a,
                   std::int64_t cap = kDefaultCardinalityCap);

/// |a+a|/|a| (sum) or |a-a|/|a| (difference), in lowest terms.
Rational doubling_constant(const IntSet& a, DoublingMode mode = DoublingMode::sum,
                           std::int64_t cap = kDefaultCardinalityCap);

namespace detail {
// The sumset strategies; identical results, different cost profiles.
IntSet sumset_by_merge(const IntSet& a, const IntSet& b, std::int64_t cap);
IntSet sumset_by_sort(const IntSet& a, const IntSet& b, std::int64_t cap);
IntSet sumset_by_buffer(const IntSet& a, const IntSet& b, std::int64_t cap);
} // namespace detail

} // namespace sumdilates
