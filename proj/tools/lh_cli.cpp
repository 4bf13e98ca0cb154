// Batch frontend for the Lecture Hall computation engine. Exit codes:
// 0 = success / all checks pass, 1 = a verification failed, 2 = usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lh/cone.hpp"
#include "lh/minors.hpp"
#include "lh/poly_io.hpp"
#include "lh/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parseSubset(const std::string& text) {
    std::vector<int> subset;
    if (text.empty()) return subset;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int value = 0;
        try {
            value = std::stoi(item);
        } catch (const std::exception&) {
            throw UsageError("invalid set element '" + item + "'");
        }
        if (value < 1) throw UsageError("set elements must be positive");
        if (!subset.empty() && value <= subset.back())
            throw UsageError("set elements must be strictly increasing");
        subset.push_back(value);
    }
    return subset;
}

// Reports are written whole or not at all.
void writeAtomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& outPath, const std::string& content) {
    if (outPath.empty())
        std::cout << content;
    else
        writeAtomically(outPath, content);
}

void printCacheStats(const lh::MinorTable& table) {
    const auto stats = table.stats();
    std::cerr << "minor cache: " << stats.hits << " hits, " << stats.misses
              << " misses\n";
}

int runVerify(const std::string& conjecture, int n, int maxI, int maxTotal,
              const std::string& tablePath, const std::string& outPath, bool longRun,
              int jobs, bool cacheStats) {
    if (!longRun && (n > 10 || maxI > 12))
        throw UsageError("bounds beyond n=10 / i=12 require --long");

    lh::LectureHallSequence seq;
    lh::MinorTable minors(seq);
    lh::VerificationReport report;

    if (conjecture == "pi") {
        report = lh::verifyPolynomiality(seq, maxI);
    } else if (conjecture == "sagbi") {
        report = lh::verifySagbi(minors, n, jobs);
        if (!tablePath.empty()) {
            const auto diffs = lh::compareTable(report, lh::loadPhiTable(tablePath));
            for (const auto& d : diffs) report.failures.push_back({{}, "table diff: " + d});
            report.pass = report.failures.empty();
        }
    } else if (conjecture == "phi-properties") {
        report = lh::verifyPhiProperties(minors, n);
    } else if (conjecture == "lht") {
        report = lh::verifyLectureHallTheorem(n, maxTotal);
    } else {
        throw UsageError("unknown conjecture '" + conjecture + "'");
    }

    if (cacheStats) printCacheStats(minors);
    emit(outPath, report.toJson().dump(2) + "\n");
    return report.pass ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computations around Lecture Hall partitions"};
    app.require_subcommand(1);

    std::string defaultOutDir;
    if (const char* env = std::getenv("LH_OUTPUT_DIR")) defaultOutDir = env;

    // ell
    auto* ell = app.add_subcommand("ell", "Print a Lecture Hall polynomial");
    int ellIndex = 0;
    ell->add_option("--i", ellIndex, "Index (>= 1)")->required();

    // ell-s
    auto* ellS = app.add_subcommand("ell-s", "Print a subset minor polynomial");
    std::string ellSet;
    ellS->add_option("--set", ellSet, "Comma-separated ascending subset, may be empty")
        ->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification pipeline");
    std::string conjecture;
    int n = 1;
    int maxI = 1;
    int maxTotal = 20;
    std::string tablePath;
    std::string outPath;
    bool longRun = false;
    int jobs = 1;
    bool cacheStats = false;
    verify->add_option("--conjecture", conjecture, "pi | sagbi | phi-properties | lht")
        ->required();
    verify->add_option("--n", n, "Ambient size");
    verify->add_option("--max-i", maxI, "Largest sequence index (pi)");
    verify->add_option("--max-total", maxTotal, "Series truncation degree (lht)");
    verify->add_option("--table", tablePath, "Fixture table to diff against (sagbi)");
    verify->add_option("--out", outPath, "Report file (default: stdout)");
    verify->add_flag("--long", longRun, "Allow long-running bounds");
    verify->add_option("--jobs", jobs, "Worker count for per-subset work");
    verify->add_flag("--cache-stats", cacheStats, "Print minor cache statistics");

    // series
    auto* series = app.add_subcommand("series", "Dump a truncated bivariate series as CSV");
    int seriesN = 1;
    int seriesMaxTotal = 20;
    std::string seriesSide = "lh";
    std::string seriesOut;
    series->add_option("--n", seriesN, "Ambient size")->required();
    series->add_option("--max-total", seriesMaxTotal, "Truncation degree");
    series->add_option("--side", seriesSide, "lh | product")
        ->check(CLI::IsMember({"lh", "product"}));
    series->add_option("--out", seriesOut, "Output file (default: stdout)");

    // phi
    auto* phiCmd = app.add_subcommand("phi", "Leading exponent vectors of subset minors");
    std::string phiSet;
    int phiN = 0;
    std::string phiOut;
    auto* phiSetOpt = phiCmd->add_option("--set", phiSet, "Single subset");
    auto* phiNOpt = phiCmd->add_option("--n", phiN, "Dump the full table for this size");
    phiCmd->add_option("--out", phiOut, "Output file (default: stdout)");
    phiSetOpt->excludes(phiNOpt);

    // hilbert-basis
    auto* hb = app.add_subcommand("hilbert-basis", "Generators of the Lecture Hall monoid");
    int hbN = 1;
    hb->add_option("--n", hbN, "Ambient size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (ell->parsed()) {
        if (ellIndex < 1) throw UsageError("--i must be >= 1");
        lh::LectureHallSequence seq;
        std::cout << lh::formatPoly(seq.at(ellIndex)) << "\n";
        return 0;
    }

    if (ellS->parsed()) {
        const auto subset = parseSubset(ellSet);
        lh::LectureHallSequence seq;
        lh::MinorTable minors(seq);
        std::cout << lh::formatPoly(minors.subsetMinor(subset)) << "\n";
        return 0;
    }

    if (verify->parsed()) {
        if (n < 1 || maxI < 1 || maxTotal < 0 || jobs < 1)
            throw UsageError("bounds must be positive");
        if (!outPath.empty() && !defaultOutDir.empty() &&
            !std::filesystem::path(outPath).is_absolute())
            outPath = (std::filesystem::path(defaultOutDir) / outPath).string();
        return runVerify(conjecture, n, maxI, maxTotal, tablePath, outPath, longRun,
                         jobs, cacheStats);
    }

    if (series->parsed()) {
        if (seriesN < 1 || seriesMaxTotal < 0) throw UsageError("bounds must be positive");
        const auto s = seriesSide == "lh" ? lh::lectureHallSeries(seriesN, seriesMaxTotal)
                                          : lh::productSeries(seriesN, seriesMaxTotal);
        std::ostringstream out;
        lh::writeSeriesCsv(s, out);
        emit(seriesOut, out.str());
        return 0;
    }

    if (phiCmd->parsed()) {
        lh::LectureHallSequence seq;
        lh::MinorTable minors(seq);
        std::ostringstream out;
        if (*phiSetOpt) {
            const auto entry = lh::phi(minors, parseSubset(phiSet));
            for (std::size_t i = 0; i < entry.vector.size(); ++i)
                out << (i ? "," : "") << entry.vector[i];
            out << "\n";
        } else if (*phiNOpt) {
            if (phiN < 1) throw UsageError("--n must be >= 1");
            for (const auto& subset : lh::subsetsInOrder(phiN)) {
                const auto entry = lh::phi(minors, subset);
                for (std::size_t i = 0; i < subset.size(); ++i)
                    out << (i ? "," : "") << subset[i];
                out << ';';
                for (std::size_t i = 0; i < entry.vector.size(); ++i)
                    out << (i ? "," : "") << entry.vector[i];
                out << "\n";
            }
        } else {
            throw UsageError("phi needs --set or --n");
        }
        emit(phiOut, out.str());
        return 0;
    }

    if (hb->parsed()) {
        if (hbN < 1) throw UsageError("--n must be >= 1");
        for (const auto& v : lh::hilbertBasis(hbN)) {
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? "," : "") << v[i];
            std::cout << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lh::InvalidIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
