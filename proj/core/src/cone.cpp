#include "lh/cone.hpp"

#include <algorithm>
#include <cstdint>

namespace lh {

bool isLectureHall(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return true;
    if (v[static_cast<std::size_t>(n - 1)] < 0) return false;
    for (int j = 1; j < n; ++j) {
        // v[j-1]/(n-j+1) >= v[j]/(n-j), cross-multiplied.
        const std::int64_t lhs = static_cast<std::int64_t>(v[static_cast<std::size_t>(j - 1)]) * (n - j);
        const std::int64_t rhs = static_cast<std::int64_t>(v[static_cast<std::size_t>(j)]) * (n - j + 1);
        if (lhs < rhs) return false;
    }
    return true;
}

namespace {

// Fill positions n, n-1, ..., 1 (entries are written back to front).
void enumerateRec(int n, int j, int remaining, int minValue,
                  std::vector<int>& partial, std::vector<std::vector<int>>& out) {
    if (j == 1) {
        // v[0] is forced by the remaining budget.
        if (remaining >= minValue) {
            partial[0] = remaining;
            out.push_back(partial);
        }
        return;
    }
    // Every entry in front is at least v[j-1], so v[j-1]*j <= remaining.
    for (int value = minValue; value * j <= remaining; ++value) {
        partial[static_cast<std::size_t>(j - 1)] = value;
        // v[j-2]*(n-j+1) >= v[j-1]*(n-j+2), i.e. the next lower bound.
        const int num = value * (n - j + 2);
        const int den = n - j + 1;
        const int nextMin = (num + den - 1) / den;
        enumerateRec(n, j - 1, remaining - value, nextMin, partial, out);
    }
}

}  // namespace

std::vector<std::vector<int>> enumerateLectureHall(int n, int N) {
    std::vector<std::vector<int>> out;
    std::vector<int> partial(static_cast<std::size_t>(n), 0);
    enumerateRec(n, n, N, 0, partial, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t oddPartsCount(int n, int N) {
    std::vector<std::int64_t> ways(static_cast<std::size_t>(N) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part < 2 * n; part += 2)
        for (int s = part; s <= N; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(N)];
}

TruncatedBiSeries lectureHallSeries(int n, int maxTotal) {
    TruncatedBiSeries series;
    series.maxTotal = maxTotal;
    for (int N = 0; N <= maxTotal; ++N) {
        for (const auto& lambda : enumerateLectureHall(n, N)) {
            int odd = 0, even = 0;
            for (int i = 0; i < n; ++i)
                (i % 2 == 0 ? odd : even) += lambda[static_cast<std::size_t>(i)];
            ++series.coeffs[{odd, even}];
        }
    }
    return series;
}

TruncatedBiSeries productSeries(int n, int maxTotal) {
    // Dense triangle a + b <= maxTotal, convolved in place with the
    // geometric series in q1^i q2^(i-1), one factor at a time.
    std::vector<std::vector<std::int64_t>> grid(
        static_cast<std::size_t>(maxTotal) + 1,
        std::vector<std::int64_t>(static_cast<std::size_t>(maxTotal) + 1, 0));
    grid[0][0] = 1;
    for (int i = 1; i <= n; ++i) {
        const int da = i;
        const int db = i - 1;
        for (int a = da; a <= maxTotal; ++a)
            for (int b = db; a + b <= maxTotal; ++b)
                grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                    grid[static_cast<std::size_t>(a - da)][static_cast<std::size_t>(b - db)];
    }

    TruncatedBiSeries series;
    series.maxTotal = maxTotal;
    for (int a = 0; a <= maxTotal; ++a)
        for (int b = 0; a + b <= maxTotal; ++b)
            if (grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0)
                series.coeffs[{a, b}] = grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return series;
}

std::vector<std::vector<int>> hilbertBasis(int n) {
    std::vector<std::vector<int>> basis;
    const unsigned subsets = 1u << (n - 1);
    for (unsigned mask = 0; mask < subsets; ++mask) {
        std::vector<int> elems;  // descending
        for (int t = n - 1; t >= 1; --t)
            if (mask & (1u << (t - 1))) elems.push_back(t);
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        v[0] = elems.empty() ? 1 : elems.front() + 1;
        for (std::size_t k = 0; k < elems.size(); ++k) v[k + 1] = elems[k];
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<int> hbToSubset(const std::vector<int>& v) {
    if (v.empty()) throw MalformedHB("empty vector");
    std::vector<int> tail(v.begin() + 1, v.end());
    std::vector<int> subset;
    std::size_t k = 0;
    while (k < tail.size() && tail[k] != 0) {
        if (tail[k] < 0 || (k > 0 && tail[k] >= tail[k - 1]))
            throw MalformedHB("entries after the head must be strictly decreasing and positive");
        subset.push_back(tail[k]);
        ++k;
    }
    for (; k < tail.size(); ++k)
        if (tail[k] != 0) throw MalformedHB("nonzero entry after the zero suffix");
    const int expectedHead = subset.empty() ? 1 : subset.front() + 1;
    if (v[0] != expectedHead) throw MalformedHB("head must exceed the next entry by one");
    return subset;
}

GenerationChecker::GenerationChecker(int n) : n_(n), basis_(hilbertBasis(n)) {}

bool GenerationChecker::decomposes(const std::vector<int>& lambda) {
    if (std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; }))
        return true;
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;
    memo_[lambda] = false;  // guards against revisiting while recursing
    bool ok = false;
    for (const auto& h : basis_) {
        std::vector<int> rest(lambda.size());
        bool nonneg = true;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            rest[i] = lambda[i] - h[i];
            if (rest[i] < 0) nonneg = false;
        }
        if (!nonneg || !isLectureHall(rest)) continue;
        if (decomposes(rest)) {
            ok = true;
            break;
        }
    }
    memo_[lambda] = ok;
    return ok;
}

void writeSeriesCsv(const TruncatedBiSeries& s, std::ostream& out) {
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> rows(s.coeffs.begin(),
                                                                   s.coeffs.end());
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        const auto keyOf = [](const auto& r) {
            return std::pair{r.first.first + r.first.second, r.first.first};
        };
        return keyOf(x) < keyOf(y);
    });
    for (const auto& [ab, count] : rows)
        out << ab.first << ',' << ab.second << ',' << count << '\n';
}

}  // namespace lh
