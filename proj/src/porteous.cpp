#include "bn/porteous.hpp"

namespace bn {

RedundancyReduction eliminate_redundant(const std::vector<int>& multiplicities) {
    const int n = static_cast<int>(multiplicities.size());
    if (n == 0) throw InvalidMultiplicity("empty multiplicity sequence");
    for (int i = 0; i + 1 < n; ++i)
        if (multiplicities[static_cast<size_t>(i)] <= multiplicities[static_cast<size_t>(i + 1)])
            throw InvalidMultiplicity("multiplicities must be strictly decreasing");
    if (multiplicities.back() < 0) throw InvalidMultiplicity("multiplicities must be nonnegative");

    RedundancyReduction out;
    out.reassigned.resize(static_cast<size_t>(n));
    out.block_of.resize(static_cast<size_t>(n));
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n &&
               multiplicities[static_cast<size_t>(end)] -
                       multiplicities[static_cast<size_t>(end + 1)] == 1)
            ++end;
        const int block = static_cast<int>(out.block_last.size());
        for (int i = start; i <= end; ++i) {
            out.reassigned[static_cast<size_t>(i)] = multiplicities[static_cast<size_t>(end)];
            out.block_of[static_cast<size_t>(i)] = block;
        }
        out.block_last.push_back(end);
        start = end + 1;
    }
    return out;
}

}  // namespace bn
