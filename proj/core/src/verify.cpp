#include "lh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "lh/cone.hpp"
#include "lh/poly_io.hpp"

namespace lh {

namespace {

using Clock = std::chrono::steady_clock;

long long msSince(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

std::string joinInts(const std::vector<int>& v, char sep = ',') {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

std::vector<int> padded(const std::vector<int>& v, int n) {
    std::vector<int> out = v;
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::vector<int> parseIntList(const std::string& text, const std::string& context) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw FixtureParseError("bad integer '" + item + "' in " + context);
        }
    }
    return out;
}

}  // namespace

nlohmann::json VerificationReport::toJson() const {
    nlohmann::json j;
    j["n"] = n;
    j["conjecture"] = conjecture;
    j["status"] = pass ? "pass" : "fail";
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        j["entries"].push_back({{"S", e.subset},
                                {"vector", e.vector},
                                {"lead_coeff", e.leadCoeff.convert_to<long long>()}});
    }
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"S", f.subset}, {"reason", f.reason}});
    j["unit_leading_coeffs"] = unitLeadingCoeffs;
    j["elapsed_ms"] = elapsedMs;
    return j;
}

std::vector<std::vector<int>> subsetsInOrder(int n) {
    std::vector<std::vector<int>> subsets;
    const unsigned count = 1u << (n - 1);
    for (unsigned mask = 0; mask < count; ++mask) {
        std::vector<int> s;
        for (int e = 1; e <= n - 1; ++e)
            if (mask & (1u << (e - 1))) s.push_back(e);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return subsets;
}

PhiEntry phi(MinorTable& table, const std::vector<int>& subset) {
    const auto [coeff, mono] = table.subsetMinor(subset).leadingTerm();
    return PhiEntry{subset, mono.exponents(), coeff};
}

VerificationReport verifySagbi(MinorTable& table, int n, int jobs) {
    const auto start = Clock::now();
    VerificationReport report;
    report.n = n;
    report.conjecture = "sagbi";

    const auto subsets = subsetsInOrder(n);
    std::vector<PhiEntry> entries(subsets.size());

    if (jobs <= 1) {
        for (std::size_t k = 0; k < subsets.size(); ++k) entries[k] = phi(table, subsets[k]);
    } else {
        // Pre-extend the sequence, then shard the memo per worker so the
        // shared sequence is only read.
        table.sequence().at(n);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int workerCount = std::min<int>(jobs, static_cast<int>(subsets.size()));
        for (int w = 0; w < workerCount; ++w) {
            workers.emplace_back([&] {
                MinorTable local(table.sequence());
                for (std::size_t k = next.fetch_add(1); k < subsets.size();
                     k = next.fetch_add(1))
                    entries[k] = phi(local, subsets[k]);
            });
        }
        for (auto& t : workers) t.join();
    }
    report.entries = std::move(entries);

    const auto basis = hilbertBasis(n);
    const std::set<std::vector<int>> basisSet(basis.begin(), basis.end());

    std::set<std::vector<int>> seen;
    for (const auto& e : report.entries) {
        const auto vec = padded(e.vector, n);
        if (static_cast<int>(e.vector.size()) > n) {
            report.failures.push_back({e.subset, "leading exponent vector longer than n"});
            continue;
        }
        if (!basisSet.contains(vec))
            report.failures.push_back(
                {e.subset, "leading exponent vector (" + joinInts(e.vector) +
                               ") is not a Hilbert basis element"});
        if (!seen.insert(vec).second)
            report.failures.push_back(
                {e.subset, "leading exponent vector (" + joinInts(e.vector) +
                               ") collides with another subset"});
        if (e.leadCoeff != 1) report.unitLeadingCoeffs = false;
    }
    if (seen != basisSet)
        report.failures.push_back(
            {{}, "leading exponent vectors do not cover the Hilbert basis"});

    report.pass = report.failures.empty();
    report.cacheStats = table.stats();
    report.elapsedMs = msSince(start);
    return report;
}

VerificationReport verifyPhiProperties(MinorTable& table, int n) {
    const auto start = Clock::now();
    VerificationReport report;
    report.n = n;
    report.conjecture = "phi-properties";

    std::map<std::vector<int>, std::vector<int>> image;  // subset -> padded vector
    for (const auto& subset : subsetsInOrder(n)) {
        const LaurentPoly poly = table.subsetMinor(subset);
        PhiEntry entry = phi(table, subset);
        image[subset] = entry.vector;
        if (entry.leadCoeff != 1) report.unitLeadingCoeffs = false;
        report.entries.push_back(entry);
        if (subset.empty()) continue;

        const int r = static_cast<int>(subset.size());
        int alternating = 0;
        int plain = 0;
        for (std::size_t k = 0; k < entry.vector.size(); ++k) {
            alternating += (k % 2 == 0) ? entry.vector[k] : -entry.vector[k];
            plain += entry.vector[k];
        }
        if (alternating != r)
            report.failures.push_back(
                {subset, "alternating sum " + std::to_string(alternating) +
                             " != " + std::to_string(r)});
        const int expectedSum = 2 * std::accumulate(subset.begin(), subset.end(), 0) +
                                2 * r - r * r;
        if (plain != expectedSum)
            report.failures.push_back({subset, "entry sum " + std::to_string(plain) +
                                                   " != " + std::to_string(expectedSum)});

        // Expanding the minor, one summand is the product of the sequence
        // entries at s_j + 2 - j, which fixes the Z^2-degree.
        BiDegree expected;
        for (int j = 1; j <= r; ++j) {
            const int s = subset[static_cast<std::size_t>(j - 1)];
            expected = expected + BiDegree{s + 2 - j, s + 1 - j};
        }
        if (poly.bidegree() != expected)
            report.failures.push_back({subset, "bidegree does not match the product formula"});
    }

    // Restriction: subsets of [i-1] must reproduce the basis at size i.
    for (int i = 1; i <= n; ++i) {
        std::set<std::vector<int>> restricted;
        for (const auto& [subset, vec] : image)
            if (subset.empty() || subset.back() <= i - 1) restricted.insert(padded(vec, i));
        const auto basis = hilbertBasis(i);
        if (restricted != std::set<std::vector<int>>(basis.begin(), basis.end()))
            report.failures.push_back(
                {{}, "restriction to subsets of [" + std::to_string(i - 1) +
                         "] does not give the basis at size " + std::to_string(i)});
    }

    report.pass = report.failures.empty();
    report.cacheStats = table.stats();
    report.elapsedMs = msSince(start);
    return report;
}

VerificationReport verifyPolynomiality(LectureHallSequence& seq, int maxIndex) {
    const auto start = Clock::now();
    VerificationReport report;
    report.n = maxIndex;
    report.conjecture = "pi";
    for (int i = 1; i <= maxIndex; ++i) {
        const IndexReport r = seq.checkIndex(i);
        if (!r.isPolynomial)
            report.failures.push_back({{i}, "negative exponent found"});
        if (!r.bidegreeOk)
            report.failures.push_back({{i}, "bidegree is not (i, i-1)"});
        if (!r.supportOk)
            report.failures.push_back({{i}, "variable support is wrong"});
        if (!r.residualZero)
            report.failures.push_back({{i}, "defining equation residual is nonzero"});
    }
    report.pass = report.failures.empty();
    report.elapsedMs = msSince(start);
    return report;
}

VerificationReport verifyLectureHallTheorem(int n, int maxTotal) {
    const auto start = Clock::now();
    VerificationReport report;
    report.n = n;
    report.conjecture = "lht";
    for (int N = 0; N <= maxTotal; ++N) {
        const auto count = static_cast<std::int64_t>(enumerateLectureHall(n, N).size());
        const auto expected = oddPartsCount(n, N);
        if (count != expected)
            report.failures.push_back(
                {{N}, "partition count " + std::to_string(count) + " != odd-parts count " +
                          std::to_string(expected)});
    }
    if (lectureHallSeries(n, maxTotal) != productSeries(n, maxTotal))
        report.failures.push_back({{}, "bivariate series differs from the product form"});
    report.pass = report.failures.empty();
    report.elapsedMs = msSince(start);
    return report;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> loadPhiTable(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureParseError("cannot open fixture " + path);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rows;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line[0] == '#') continue;
        const auto sep = line.find(';');
        if (sep == std::string::npos)
            throw FixtureParseError("missing ';' on line " + std::to_string(lineNo));
        rows.emplace_back(parseIntList(line.substr(0, sep), "subset column"),
                          parseIntList(line.substr(sep + 1), "vector column"));
    }
    return rows;
}

std::vector<std::string> compareTable(
    const VerificationReport& report,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& table) {
    std::map<std::vector<int>, std::vector<int>> computed;
    for (const auto& e : report.entries) computed[e.subset] = e.vector;

    std::vector<std::string> diffs;
    for (const auto& [subset, expected] : table) {
        auto it = computed.find(subset);
        if (it == computed.end()) {
            diffs.push_back("missing subset {" + joinInts(subset) + "}");
        } else if (it->second != expected) {
            diffs.push_back("subset {" + joinInts(subset) + "}: computed (" +
                            joinInts(it->second) + ") expected (" + joinInts(expected) +
                            ")");
        }
    }
    return diffs;
}

}  // namespace lh
