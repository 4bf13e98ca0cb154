#include "lh/lh_sequence.hpp"

#include <bit>
#include <unordered_map>

#include "lh/poly_io.hpp"

namespace lh {

namespace {

// Submatrix rows 1..ceil(i/2), columns floor(i/2)+1 .. i of the upper
// triangular Toeplitz matrix with entries -P_{col-row+1}; the negated
// determinant of this block is the left-hand side of the defining
// equation for index i. `candidate` stands in for the still unknown P_i.
std::vector<std::vector<LaurentPoly>> cornerBlock(
    const std::vector<LaurentPoly>& known, int i, const LaurentPoly& candidate) {
    const int rows = (i + 1) / 2;
    const int colStart = i / 2 + 1;
    std::vector<std::vector<LaurentPoly>> m(rows, std::vector<LaurentPoly>(rows));
    for (int a = 1; a <= rows; ++a) {
        for (int b = 0; b < rows; ++b) {
            const int c = colStart + b;
            if (c < a) continue;  // below the diagonal, zero
            const int k = c - a + 1;
            const LaurentPoly& p =
                (k == i) ? candidate : known[static_cast<std::size_t>(k - 1)];
            m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] = -p;
        }
    }
    return m;
}

LaurentPoly detOnColumns(const std::vector<std::vector<LaurentPoly>>& m,
                         unsigned cols, std::unordered_map<unsigned, LaurentPoly>& memo) {
    if (cols == 0) return LaurentPoly(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;

    const int size = std::popcount(cols);
    const auto& bottom = m[static_cast<std::size_t>(size - 1)];
    LaurentPoly det;
    int position = 0;
    for (unsigned rest = cols; rest != 0; ++position) {
        const int col = std::countr_zero(rest);
        rest &= rest - 1;
        const LaurentPoly& entry = bottom[static_cast<std::size_t>(col)];
        if (entry.isZero()) continue;
        const LaurentPoly sub = detOnColumns(m, cols & ~(1u << col), memo);
        LaurentPoly contrib = entry * sub;
        if ((size - 1 + position) % 2 == 1)
            det -= contrib;
        else
            det += contrib;
    }
    memo.emplace(cols, det);
    return det;
}

}  // namespace

LaurentPoly denseDeterminant(const std::vector<std::vector<LaurentPoly>>& m) {
    if (m.empty()) return LaurentPoly(1);
    std::unordered_map<unsigned, LaurentPoly> memo;
    return detOnColumns(m, (1u << m.size()) - 1u, memo);
}

Monomial LectureHallSequence::targetMonomial(int i) {
    if (i < 1) throw InvalidIndex("index must be >= 1");
    std::vector<int> exps(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) exps[static_cast<std::size_t>(j)] = i - j;
    return Monomial(std::move(exps));
}

const LaurentPoly& LectureHallSequence::at(int i) {
    if (i < 1) throw InvalidIndex("index must be >= 1");
    while (computedUpTo() < i) extend();
    return polys_[static_cast<std::size_t>(i - 1)];
}

const LaurentPoly& LectureHallSequence::linearCoefficient(int i) const {
    if (i < 1 || i > computedUpTo()) throw InvalidIndex("index not computed");
    return linearCoeffs_[static_cast<std::size_t>(i - 1)];
}

void LectureHallSequence::extend() {
    const int i = computedUpTo() + 1;
    const LaurentPoly target = LaurentPoly::term(1, targetMonomial(i));

    // The defining equation is linear in the unknown: evaluate it with the
    // unknown set to 0 and to 1 to read off intercept and coefficient.
    const LaurentPoly atZero = -denseDeterminant(cornerBlock(polys_, i, LaurentPoly()));
    const LaurentPoly atOne = -denseDeterminant(cornerBlock(polys_, i, LaurentPoly(1)));
    const LaurentPoly linear = atOne - atZero;

    if (linear.termCount() != 1)
        throw NonMonomialCoefficient(
            "linear coefficient for index " + std::to_string(i) +
            " is not a single term: " + formatPoly(linear));

    const auto& [mono, coeff] = *linear.terms().begin();
    polys_.push_back((target - atZero).divByTerm(coeff, mono));
    linearCoeffs_.push_back(linear);
}

IndexReport LectureHallSequence::checkIndex(int i) {
    const LaurentPoly& p = at(i);

    IndexReport report;
    report.index = i;
    report.isPolynomial = p.isPolynomial();
    report.observed = p.bidegree();
    report.bidegreeOk = report.observed == BiDegree{i, i - 1};

    bool usesYi = false;
    bool withinSupport = p.numVars() <= i;
    for (const auto& [m, c] : p.terms())
        if (m.exponent(i) != 0) usesYi = true;
    report.supportOk = withinSupport && usesYi;

    const LaurentPoly lhs = -denseDeterminant(cornerBlock(polys_, i, p));
    report.residualZero = (lhs - LaurentPoly::term(1, targetMonomial(i))).isZero();
    return report;
}

}  // namespace lh
