#pragma once

#include <cstddef>
#include <vector>

namespace lh {

// Exponent vector of a Laurent monomial in the variables y1, y2, ...
// Negative exponents are allowed. The vector is stored trimmed: the last
// entry is nonzero, and the empty vector is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one() { return Monomial{}; }
    static Monomial variable(int index, int exponent = 1);

    // Index of the last variable with a nonzero exponent (0 for the unit).
    int numVars() const { return static_cast<int>(exps_.size()); }

    // Exponent of y_index (1-based); 0 beyond the stored width.
    int exponent(int index) const;

    int totalDegree() const;
    bool isOne() const { return exps_.empty(); }
    bool hasNegativeExponent() const;

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;

    const std::vector<int>& exponents() const { return exps_; }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exps_;
};

// Degree-lexicographic order with y1 > y2 > ...: compares total degree
// first, then the exponent vectors lexicographically from y1.
bool degLexLess(const Monomial& a, const Monomial& b);

struct DegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degLexLess(b, a);
    }
};

// Z^2-degree: total exponent of odd-indexed variables and of even-indexed
// variables, respectively.
struct BiDegree {
    int odd = 0;
    int even = 0;

    BiDegree operator+(const BiDegree& other) const {
        return {odd + other.odd, even + other.even};
    }
    bool operator==(const BiDegree&) const = default;
};

BiDegree monomialBiDegree(const Monomial& m);

}  // namespace lh
