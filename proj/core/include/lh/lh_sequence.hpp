#pragma once

#include <stdexcept>
#include <vector>

#include "lh/laurent_poly.hpp"

namespace lh {

struct InvalidIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised if the linear coefficient extracted while solving the defining
// equations is not a single term; that would contradict the premise the
// iterative solver rests on, so we abort loudly.
struct NonMonomialCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-index report for the polynomiality / homogeneity / support checks.
struct IndexReport {
    int index = 0;
    bool isPolynomial = false;
    bool bidegreeOk = false;        // bidegree equals (i, i-1)
    bool supportOk = false;         // uses only y1..yi and yi occurs
    bool residualZero = false;      // defining equation holds exactly
    std::optional<BiDegree> observed;

    bool allOk() const {
        return isPolynomial && bidegreeOk && supportOk && residualZero;
    }
};

// The sequence ell_1, ell_2, ... of Lecture Hall polynomials, solved
// iteratively from the corner-minor equations. Entries are cached
// append-only; `at` extends on demand and must be externally serialized,
// read access after construction is safe to share.
class LectureHallSequence {
public:
    // Exponent vector (i, i-1, ..., 2, 1): the right-hand side of the
    // defining equation for index i.
    static Monomial targetMonomial(int i);

    // ell_i, computing and caching ell_1..ell_i as needed.
    const LaurentPoly& at(int i);

    int computedUpTo() const { return static_cast<int>(polys_.size()); }

    // The single-term linear coefficient A_i extracted while solving for
    // ell_i (the defining equation is A_i * ell_i + B_i = target). Kept
    // for diagnostics and invariant tests; requires ell_i computed.
    const LaurentPoly& linearCoefficient(int i) const;

    IndexReport checkIndex(int i);

private:
    void extend();

    std::vector<LaurentPoly> polys_;
    std::vector<LaurentPoly> linearCoeffs_;
};

// Determinant of a small dense polynomial matrix, by cofactor expansion
// over column subsets.
LaurentPoly denseDeterminant(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace lh
