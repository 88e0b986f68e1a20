#include "sumdilates/int_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sumdilates/checked.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

IntSet::IntSet(std::vector<std::int64_t> values) : elems_(std::move(values)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::from_sorted(std::vector<std::int64_t> values) {
    IntSet s;
    s.elems_ = std::move(values);
    return s;
}

bool IntSet::contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

namespace {

void require_nonempty(const IntSet& s, const char* role) {
    if (s.empty()) throw std::invalid_argument(std::string(role) + " set must be nonempty");
}

} // namespace

namespace detail {

// Merges a+y into the accumulator for each shift y in b. Intermediate results
// are subsets of the final sumset, so the cap check per round is sound.
IntSet sumset_by_merge(const IntSet& a, const IntSet& b, std::int64_t cap) {
    std::vector<std::int64_t> acc;
    std::vector<std::int64_t> shifted(a.size());
    std::vector<std::int64_t> merged;
    for (std::int64_t y : b) {
        for (std::size_t i = 0; i < a.size(); ++i) shifted[i] = checked_add(a.elements()[i], y);
        merged.clear();
        merged.reserve(acc.size() + shifted.size());
        std::set_union(acc.begin(), acc.end(), shifted.begin(), shifted.end(),
                       std::back_inserter(merged));
        acc.swap(merged);
        if (static_cast<std::int64_t>(acc.size()) > cap) {
            throw limit_exceeded("sumset exceeds cardinality cap of " + std::to_string(cap));
        }
    }
    return IntSet::from_sorted(std::move(acc));
}

// Collects all pairwise sums, then sorts and deduplicates. Fast for moderate
// |a|*|b|, but its scratch memory is the full product.
IntSet sumset_by_sort(const IntSet& a, const IntSet& b, std::int64_t cap) {
    std::vector<std::int64_t> sums;
    sums.reserve(a.size() * b.size());
    for (std::int64_t y : b) {
        for (std::int64_t x : a) sums.push_back(checked_add(x, y));
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    if (static_cast<std::int64_t>(sums.size()) > cap) {
        throw limit_exceeded("sumset exceeds cardinality cap of " + std::to_string(cap));
    }
    return IntSet::from_sorted(std::move(sums));
}

// Marks hits in a buffer over [min sum, max sum]; used when that range is
// small compared to |a|*|b|.
IntSet sumset_by_buffer(const IntSet& a, const IntSet& b, std::int64_t cap) {
    const std::int64_t lo = checked_add(a.min(), b.min());
    const std::int64_t hi = checked_add(a.max(), b.max());
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::vector<bool> hit(range, false);
    for (std::int64_t y : b) {
        for (std::int64_t x : a) {
            // x + y cannot overflow: it lies in [lo, hi]
            hit[static_cast<std::uint64_t>((x + y) - lo)] = true;
        }
    }
    std::vector<std::int64_t> out;
    for (std::uint64_t i = 0; i < range; ++i) {
        if (!hit[i]) continue;
        out.push_back(lo + static_cast<std::int64_t>(i));
        if (static_cast<std::int64_t>(out.size()) > cap) {
            throw limit_exceeded("sumset exceeds cardinality cap of " + std::to_string(cap));
        }
    }
    return IntSet::from_sorted(std::move(out));
}

} // namespace detail

IntSet sumset(const IntSet& a, const IntSet& b, std::int64_t cap) {
    require_nonempty(a, "sumset left");
    require_nonempty(b, "sumset right");
    const std::int64_t lo = checked_add(a.min(), b.min());
    const std::int64_t hi = checked_add(a.max(), b.max());
    const unsigned __int128 range = static_cast<unsigned __int128>(static_cast<std::uint64_t>(hi - lo)) + 1;
    const unsigned __int128 product =
        static_cast<unsigned __int128>(a.size()) * static_cast<unsigned __int128>(b.size());
    constexpr unsigned __int128 kBufferLimit = 50'000'000;
    constexpr unsigned __int128 kSortLimit = 1 << 22;
    if (range <= kBufferLimit && range <= 4 * product) {
        return detail::sumset_by_buffer(a, b, cap);
    }
    if (product <= kSortLimit) {
        return detail::sumset_by_sort(a, b, cap);
    }
    // huge product over a huge range: incremental merges keep memory at
    // O(result), with the cap enforced per round
    return detail::sumset_by_merge(a, b, cap);
}

IntSet dilate(std::int64_t lambda, const IntSet& a) {
    if (lambda == 0) throw std::invalid_argument("dilate requires a nonzero coefficient");
    require_nonempty(a, "dilate");
    std::vector<std::int64_t> out(a.size());
    const auto& xs = a.elements();
    if (lambda > 0) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = checked_mul(lambda, xs[i]);
    } else {
        for (std::size_t i = 0; i < xs.size(); ++i) out[xs.size() - 1 - i] = checked_mul(lambda, xs[i]);
    }
    return IntSet::from_sorted(std::move(out));
}

IntSet negate(const IntSet& a) {
    require_nonempty(a, "negate");
    std::vector<std::int64_t> out(a.size());
    const auto& xs = a.elements();
    for (std::size_t i = 0; i < xs.size(); ++i) out[xs.size() - 1 - i] = checked_neg(xs[i]);
    return IntSet::from_sorted(std::move(out));
}

IntSet dilate_sum(std::span<const std::int64_t> lambdas, const IntSet& a, std::int64_t cap) {
    if (lambdas.empty()) throw std::invalid_argument("dilate_sum requires at least one coefficient");
    require_nonempty(a, "dilate_sum");
    IntSet acc = dilate(lambdas[0], a);
    for (std::size_t i = 1; i < lambdas.size(); ++i) {
        acc = sumset(acc, dilate(lambdas[i], a), cap);
    }
    return acc;
}

namespace {

IntSet iterated_sumset(std::int64_t folds, const IntSet& a, std::int64_t cap) {
    if (folds == 0) return IntSet({0});
    IntSet acc = a;
    for (std::int64_t i = 1; i < folds; ++i) acc = sumset(acc, a, cap);
    return acc;
}

} // namespace

IntSet signed_fold(std::int64_t k, std::int64_t l, const IntSet& a, std::int64_t cap) {
    if (k < 0 || l < 0) throw std::invalid_argument("signed_fold requires nonnegative fold counts");
    if (k == 0 && l == 0) throw std::invalid_argument("signed_fold requires k + l >= 1");
    require_nonempty(a, "signed_fold");
    const IntSet plus = iterated_sumset(k, a, cap);
    const IntSet minus = iterated_sumset(l, negate(a), cap);
    return sumset(plus, minus, cap);
}

Rational doubling_constant(const IntSet& a, DoublingMode mode, std::int64_t cap) {
    require_nonempty(a, "doubling_constant");
    const IntSet spread =
        mode == DoublingMode::sum ? sumset(a, a, cap) : sumset(a, negate(a), cap);
    return make_rational(spread.size(), a.size());
}

} // namespace sumdilates
