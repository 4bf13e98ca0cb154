#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "lh/minors.hpp"

namespace lh {

struct FixtureParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Leading-term exponent data for one subset minor. The vector carries no
// trailing zeros.
struct PhiEntry {
    std::vector<int> subset;
    std::vector<int> vector;
    Coeff leadCoeff;
};

struct Failure {
    std::vector<int> subset;
    std::string reason;
};

struct VerificationReport {
    int n = 0;
    std::string conjecture;
    bool pass = false;
    std::vector<PhiEntry> entries;
    std::vector<Failure> failures;
    bool unitLeadingCoeffs = true;
    long long elapsedMs = 0;
    CacheStats cacheStats;

    nlohmann::json toJson() const;
};

// All subsets of [n-1], ordered by increasing cardinality, then
// lexicographically.
std::vector<std::vector<int>> subsetsInOrder(int n);

// Exponent vector and coefficient of the leading term of the subset minor.
PhiEntry phi(MinorTable& table, const std::vector<int>& subset);

// Checks that the leading exponent vectors of all 2^(n-1) subset minors
// are pairwise distinct generator-shaped vectors which collectively equal
// the Hilbert basis of the cone. Unit leading coefficients are recorded as
// a separate observation flag, never folded into pass/fail.
VerificationReport verifySagbi(MinorTable& table, int n, int jobs = 1);

// Alternating-sum, sum-formula, restriction and bidegree-product checks
// on the leading exponent vectors.
VerificationReport verifyPhiProperties(MinorTable& table, int n);

// Per-index polynomiality, bidegree, support and residual checks on the
// sequence itself.
VerificationReport verifyPolynomiality(LectureHallSequence& seq, int maxIndex);

// Truncated generating-function identities: partition counts against odd
// parts, and the bivariate series against the product form.
VerificationReport verifyLectureHallTheorem(int n, int maxTotal);

// Fixture rows "subset;vector", subsets comma-joined ascending, vectors
// comma-joined with trailing zeros omitted.
std::vector<std::pair<std::vector<int>, std::vector<int>>> loadPhiTable(
    const std::string& path);

// Human-readable mismatches between computed entries and the fixture;
// empty iff they agree on every fixture row.
std::vector<std::string> compareTable(
    const VerificationReport& report,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& table);

}  // namespace lh
