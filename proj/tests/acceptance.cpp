// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion. Exit code 0 iff all pass. The --long flag
// extends the sequence and leading-term pipelines from their required
// bounds (i <= 10, n <= 8) to the stretch bound 12.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "lh/cone.hpp"
#include "lh/minors.hpp"
#include "lh/poly_io.hpp"
#include "lh/verify.hpp"

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok,
            std::chrono::steady_clock::time_point start) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << label
              << " (" << ms << " ms)\n";
    if (!ok) ++failures;
}

std::string fixturesDir() {
    return LH_FIXTURES_DIR;
}

bool goldenPolynomials(lh::LectureHallSequence& seq) {
    for (int i = 1; i <= 8; ++i) {
        std::ifstream in(fixturesDir() + "/ell_" + std::to_string(i) + ".txt");
        if (!in) return false;
        std::string line;
        std::getline(in, line);
        if (seq.at(i) != lh::parsePoly(line)) return false;
    }
    return true;
}

bool polynomialityAndBidegree(lh::LectureHallSequence& seq, int maxI) {
    for (int i = 1; i <= maxI; ++i) {
        const lh::LaurentPoly& p = seq.at(i);
        if (!p.isPolynomial()) return false;
        if (p.bidegree() != lh::BiDegree{i, i - 1}) return false;
    }
    return true;
}

bool leadingTermPipeline(lh::MinorTable& minors, int maxN) {
    for (int n = 1; n <= maxN; ++n) {
        const auto r = lh::verifySagbi(minors, n);
        if (!r.pass || !r.unitLeadingCoeffs) return false;
    }
    return true;
}

bool tableReproduction(lh::MinorTable& minors) {
    const auto table = lh::loadPhiTable(fixturesDir() + "/table1.csv");
    if (table.size() != 128) return false;
    const auto report = lh::verifySagbi(minors, 8);
    return lh::compareTable(report, table).empty();
}

bool univariateTheorem() {
    for (int n = 1; n <= 6; ++n)
        for (int N = 0; N <= 30; ++N)
            if (static_cast<std::int64_t>(lh::enumerateLectureHall(n, N).size()) !=
                lh::oddPartsCount(n, N))
                return false;
    return true;
}

bool bivariateTheorem() {
    for (int n = 1; n <= 6; ++n)
        if (lh::lectureHallSeries(n, 20) != lh::productSeries(n, 20)) return false;
    return true;
}

bool phiProperties(lh::MinorTable& minors) {
    return lh::verifyPhiProperties(minors, 8).pass;
}

bool propertySuites(lh::MinorTable& minors) {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> termCount(0, 4);
    std::uniform_int_distribution<int> width(0, 6);
    std::uniform_int_distribution<int> expDist(-3, 3);
    std::uniform_int_distribution<int> coeffDist(-5, 5);
    auto randomPoly = [&] {
        lh::LaurentPoly p;
        for (int t = termCount(rng); t > 0; --t) {
            std::vector<int> exps(static_cast<std::size_t>(width(rng)));
            for (auto& e : exps) e = expDist(rng);
            p += lh::LaurentPoly::term(coeffDist(rng), lh::Monomial(std::move(exps)));
        }
        return p;
    };

    // Ring axioms and leading-term multiplicativity.
    for (int it = 0; it < 1000; ++it) {
        const auto a = randomPoly();
        const auto b = randomPoly();
        const auto c = randomPoly();
        if (a + b != b + a) return false;
        if (a * b != b * a) return false;
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (!a.isZero() && !b.isZero()) {
            const auto [ca, ma] = a.leadingTerm();
            const auto [cb, mb] = b.leadingTerm();
            const auto [cab, mab] = (a * b).leadingTerm();
            if (mab != ma * mb || cab != ca * cb) return false;
        }
    }

    // Leibniz-formula determinant oracle on all minors for n <= 5.
    const int n = 5;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        lh::MinorKey key;
        for (int s = 1; s <= n - 1; ++s)
            if (mask & (1u << (s - 1))) key.cols.push_back(s + 1);
        key.rows = static_cast<int>(key.cols.size());

        std::vector<int> perm(static_cast<std::size_t>(key.rows));
        std::iota(perm.begin(), perm.end(), 0);
        lh::LaurentPoly det;
        do {
            int inversions = 0;
            for (int a = 0; a < key.rows; ++a)
                for (int b = a + 1; b < key.rows; ++b)
                    if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                        ++inversions;
            lh::LaurentPoly product(1);
            for (int row = 1; row <= key.rows; ++row)
                product = product * minors.matrixEntry(
                                        row, key.cols[static_cast<std::size_t>(
                                                 perm[static_cast<std::size_t>(row - 1)])]);
            if (inversions % 2 == 1)
                det -= product;
            else
                det += product;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (minors.minorDet(key) != det) return false;
    }

    // Memo transparency.
    lh::LectureHallSequence freshSeq;
    lh::MinorTable uncached(freshSeq, false);
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> subset;
        for (int s = 1; s <= n - 1; ++s)
            if (mask & (1u << (s - 1))) subset.push_back(s);
        if (minors.subsetMinor(subset) != uncached.subsetMinor(subset)) return false;
    }

    // Bounded generation.
    for (int size = 1; size <= 5; ++size) {
        lh::GenerationChecker checker(size);
        for (int N = 0; N <= 15; ++N)
            for (const auto& lambda : lh::enumerateLectureHall(size, N))
                if (!checker.decomposes(lambda)) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    bool longRun = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) longRun = true;

    const int maxI = longRun ? 12 : 10;
    const int maxN = longRun ? 12 : 8;

    lh::LectureHallSequence seq;
    lh::MinorTable minors(seq);
    using Clock = std::chrono::steady_clock;

    auto t = Clock::now();
    report(1, "computed ell_1..ell_8 equal the golden fixtures", goldenPolynomials(seq), t);

    t = Clock::now();
    report(2, "polynomiality and bidegree (i, i-1) for i <= " + std::to_string(maxI),
           polynomialityAndBidegree(seq, maxI), t);

    t = Clock::now();
    report(3,
           "leading exponent vectors distinct and equal to the Hilbert basis for n <= " +
               std::to_string(maxN),
           leadingTermPipeline(minors, maxN), t);

    t = Clock::now();
    report(4, "computed table for n = 8 matches the 128-row fixture",
           tableReproduction(minors), t);

    t = Clock::now();
    report(5, "partition counts equal odd-parts counts (n <= 6, N <= 30)",
           univariateTheorem(), t);

    t = Clock::now();
    report(6, "bivariate series equals the product form (n <= 6, degree <= 20)",
           bivariateTheorem(), t);

    t = Clock::now();
    report(7, "alternating-sum, sum, restriction and bidegree checks (n <= 8)",
           phiProperties(minors), t);

    t = Clock::now();
    report(8, "property suites (ring axioms, oracle, memo, generation)",
           propertySuites(minors), t);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
