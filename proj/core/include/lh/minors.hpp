#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "lh/lh_sequence.hpp"

namespace lh {

// Identifies the minor on rows 1..rows and the given sorted columns of the
// upper triangular Toeplitz matrix built from the sequence.
struct MinorKey {
    int rows = 0;
    std::vector<int> cols;

    auto operator<=>(const MinorKey&) const = default;
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

// Minor determinants of the Toeplitz matrix M with M[r][c] = -ell_{c-r+1}
// for c >= r and 0 below the diagonal. Minors are computed by cofactor
// expansion along the bottom row and memoized on MinorKey; across all
// column subsets the subproblems overlap heavily because the matrix is
// constant along diagonals. The memo is mutex-guarded, so a table can be
// shared by concurrent readers once the underlying sequence is extended
// far enough.
class MinorTable {
public:
    explicit MinorTable(LectureHallSequence& seq, bool enableCache = true)
        : seq_(seq), cacheEnabled_(enableCache) {}

    // -ell_{c-r+1} if c >= r, else 0.
    LaurentPoly matrixEntry(int r, int c);

    LaurentPoly minorDet(const MinorKey& key);

    // The corner minor for index i: the negated determinant on rows
    // 1..ceil(i/2) and columns floor(i/2)+1..i. For the Lecture Hall
    // sequence this reproduces the staircase monomial (i, i-1, ..., 1).
    LaurentPoly cornerMinor(int i);

    // ell_S: the negated minor on rows 1..#S and columns {s+1 : s in S}.
    // The empty set maps to ell_1.
    LaurentPoly subsetMinor(const std::vector<int>& subset);

    CacheStats stats() const { return stats_; }
    LectureHallSequence& sequence() { return seq_; }

private:
    LaurentPoly minorDetImpl(const MinorKey& key);

    LectureHallSequence& seq_;
    bool cacheEnabled_;
    std::map<MinorKey, LaurentPoly> memo_;
    CacheStats stats_;
    std::mutex mutex_;
};

}  // namespace lh
