#include "lh/minors.hpp"

#include <algorithm>

namespace lh {

LaurentPoly MinorTable::matrixEntry(int r, int c) {
    if (r < 1 || c < 1) throw InvalidIndex("matrix indices must be >= 1");
    if (c < r) return LaurentPoly();
    return -seq_.at(c - r + 1);
}

LaurentPoly MinorTable::minorDet(const MinorKey& key) {
    if (key.rows != static_cast<int>(key.cols.size()))
        throw InvalidIndex("minor needs as many columns as rows");
    if (!std::is_sorted(key.cols.begin(), key.cols.end()) ||
        std::adjacent_find(key.cols.begin(), key.cols.end()) != key.cols.end() ||
        (!key.cols.empty() && key.cols.front() < 1))
        throw InvalidIndex("minor columns must be strictly increasing and >= 1");
    // Pre-extend the sequence so the recursion only reads it.
    if (!key.cols.empty()) seq_.at(key.cols.back());
    return minorDetImpl(key);
}

LaurentPoly MinorTable::minorDetImpl(const MinorKey& key) {
    if (key.rows == 0) return LaurentPoly(1);

    if (cacheEnabled_) {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.hits;
            return it->second;
        }
        ++stats_.misses;
    }

    // Expand along the bottom row, which has the most zeros.
    const int r = key.rows;
    LaurentPoly det;
    for (int j = 0; j < r; ++j) {
        const int c = key.cols[static_cast<std::size_t>(j)];
        if (c < r) continue;
        const LaurentPoly entry = -seq_.at(c - r + 1);
        MinorKey sub;
        sub.rows = r - 1;
        sub.cols.reserve(static_cast<std::size_t>(r - 1));
        for (int k = 0; k < r; ++k)
            if (k != j) sub.cols.push_back(key.cols[static_cast<std::size_t>(k)]);
        LaurentPoly contrib = entry * minorDetImpl(sub);
        if ((r - 1 + j) % 2 == 1)
            det -= contrib;
        else
            det += contrib;
    }

    if (cacheEnabled_) {
        std::lock_guard lock(mutex_);
        memo_.emplace(key, det);
    }
    return det;
}

LaurentPoly MinorTable::cornerMinor(int i) {
    if (i < 1) throw InvalidIndex("index must be >= 1");
    MinorKey key;
    key.rows = (i + 1) / 2;
    for (int c = i / 2 + 1; c <= i; ++c) key.cols.push_back(c);
    return -minorDet(key);
}

LaurentPoly MinorTable::subsetMinor(const std::vector<int>& subset) {
    if (subset.empty()) return seq_.at(1);
    MinorKey key;
    key.rows = static_cast<int>(subset.size());
    key.cols.reserve(subset.size());
    for (int s : subset) key.cols.push_back(s + 1);
    return -minorDet(key);
}

}  // namespace lh
