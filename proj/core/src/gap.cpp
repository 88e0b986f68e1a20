#include "sumdilates/gap.hpp"

#include <stdexcept>
#include <string>

#include "sumdilates/checked.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

GapResult gap_generate(const GapSpec& spec, std::int64_t cap) {
    const std::size_t k = spec.diffs.size();
    if (k == 0 || spec.lengths.size() != k) {
        throw std::invalid_argument("gap spec needs equally many diffs and lengths, k >= 1");
    }
    unsigned __int128 product = 1;
    for (std::int64_t len : spec.lengths) {
        if (len < 1) throw std::invalid_argument("gap lengths must be >= 1");
        product *= static_cast<unsigned __int128>(len);
        if (product > static_cast<unsigned __int128>(cap)) {
            throw limit_exceeded("gap length product exceeds cardinality cap of " + std::to_string(cap));
        }
    }
    const std::uint64_t total = static_cast<std::uint64_t>(product);

    std::vector<std::int64_t> values;
    values.reserve(total);
    std::vector<std::int64_t> x(k, 0);
    std::vector<std::int64_t> partial(k + 1, spec.base);  // partial[i] = base + sum_{j<i} x_j d_j
    while (true) {
        values.push_back(partial[k]);
        // odometer step, rightmost digit fastest
        std::size_t i = k;
        while (i > 0 && x[i - 1] == spec.lengths[i - 1] - 1) {
            x[--i] = 0;
        }
        if (i == 0) break;
        --i;
        x[i] += 1;
        partial[i + 1] = checked_add(partial[i], checked_mul(x[i], spec.diffs[i]));
        for (std::size_t j = i + 1; j < k; ++j) partial[j + 1] = partial[j];
    }

    IntSet set{std::move(values)};
    const bool proper = set.size() == total;
    return GapResult{std::move(set), proper};
}

} // namespace sumdilates
