#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lh {

struct MalformedHB : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bivariate power-series coefficients (a, b) -> count, truncated by total
// degree a + b <= maxTotal.
struct TruncatedBiSeries {
    int maxTotal = 0;
    std::map<std::pair<int, int>, std::int64_t> coeffs;

    std::int64_t at(int a, int b) const {
        auto it = coeffs.find({a, b});
        return it == coeffs.end() ? 0 : it->second;
    }
    bool operator==(const TruncatedBiSeries&) const = default;
};

// True iff v satisfies v[0]/n >= v[1]/(n-1) >= ... >= v[n-1]/1 >= 0,
// checked with cross-multiplied integer arithmetic.
bool isLectureHall(const std::vector<int>& v);

// All Lecture Hall partitions of length n with entry sum N, sorted
// lexicographically.
std::vector<std::vector<int>> enumerateLectureHall(int n, int N);

// Number of partitions of N into odd parts less than 2n.
std::int64_t oddPartsCount(int n, int N);

// Coefficient at (a, b) counts Lecture Hall partitions with odd-index sum
// a and even-index sum b, for a + b <= maxTotal.
TruncatedBiSeries lectureHallSeries(int n, int maxTotal);

// Truncated expansion of prod_{i=1..n} 1/(1 - q1^i q2^(i-1)).
TruncatedBiSeries productSeries(int n, int maxTotal);

// The 2^(n-1) generators of the Lecture Hall monoid: for each subset
// {t1 > t2 > ... > tr} of [n-1] the vector (t1+1, t1, t2, ..., tr, 0...),
// and (1, 0, ..., 0) for the empty subset. Sorted lexicographically.
std::vector<std::vector<int>> hilbertBasis(int n);

// Inverse of the generator construction: drop the first coordinate and
// collect the nonzero entries. Throws MalformedHB if v is not a generator
// shape (strictly decreasing positive prefix after the head, head = first
// remaining entry + 1).
std::vector<int> hbToSubset(const std::vector<int>& v);

// Bounded check that the generators produce every lattice point: true iff
// lambda is a finite sum of hilbertBasis(n) elements. Memoized.
class GenerationChecker {
public:
    explicit GenerationChecker(int n);

    bool decomposes(const std::vector<int>& lambda);

private:
    int n_;
    std::vector<std::vector<int>> basis_;
    std::map<std::vector<int>, bool> memo_;
};

// CSV rows "a,b,count" sorted by (a+b, a).
void writeSeriesCsv(const TruncatedBiSeries& s, std::ostream& out);

}  // namespace lh
