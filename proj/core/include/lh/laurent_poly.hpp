#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "lh/monomial.hpp"

namespace lh {

using Coeff = boost::multiprecision::cpp_int;

struct NonDivisibleCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
// Canonical form: no zero coefficients are stored, and the term map is
// ordered by descending degree-lex so iteration and formatting are
// deterministic. Equality is term-map equality.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Coeff, DegLexGreater>;

    LaurentPoly() = default;
    LaurentPoly(const Coeff& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int constant) : LaurentPoly(Coeff(constant)) {}

    static LaurentPoly term(Coeff coeff, Monomial mono);
    static LaurentPoly variable(int index) {
        return term(1, Monomial::variable(index));
    }

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Index of the last variable appearing with a nonzero exponent.
    int numVars() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;

    // Exact division by the single term c*m. Division by a monomial is
    // always exact in the Laurent ring; a coefficient of *this not
    // divisible by c raises NonDivisibleCoefficient.
    LaurentPoly divByTerm(const Coeff& c, const Monomial& m) const;

    // Degree-lex maximal term; throws ZeroPolynomial on 0.
    std::pair<Coeff, Monomial> leadingTerm() const;

    // The common Z^2-degree of all terms, or nullopt if inhomogeneous.
    // The zero polynomial and constants report (0, 0).
    std::optional<BiDegree> bidegree() const;

    // True iff no term has a negative exponent.
    bool isPolynomial() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    void addTerm(const Monomial& m, const Coeff& c);

    TermMap terms_;
};

}  // namespace lh
