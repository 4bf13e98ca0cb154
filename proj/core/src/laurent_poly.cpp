#include "lh/laurent_poly.hpp"

#include <algorithm>

namespace lh {

LaurentPoly::LaurentPoly(const Coeff& constant) {
    if (constant != 0) terms_.emplace(Monomial::one(), constant);
}

LaurentPoly LaurentPoly::term(Coeff coeff, Monomial mono) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(std::move(mono), std::move(coeff));
    return p;
}

int LaurentPoly::numVars() const {
    int width = 0;
    for (const auto& [m, c] : terms_) width = std::max(width, m.numVars());
    return width;
}

void LaurentPoly::addTerm(const Monomial& m, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly result;
    for (const auto& [m, c] : terms_) result.terms_.emplace(m, -c);
    return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) addTerm(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) addTerm(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly result = *this;
    result += other;
    return result;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly result = *this;
    result -= other;
    return result;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly result;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) result.addTerm(ma * mb, ca * cb);
    return result;
}

LaurentPoly LaurentPoly::divByTerm(const Coeff& c, const Monomial& m) const {
    if (c == 0) throw NonDivisibleCoefficient("division by zero coefficient");
    const Monomial mInv = m.inverse();
    LaurentPoly result;
    for (const auto& [mono, coeff] : terms_) {
        if (coeff % c != 0)
            throw NonDivisibleCoefficient("coefficient not divisible in term division");
        result.terms_.emplace(mono * mInv, coeff / c);
    }
    return result;
}

std::pair<Coeff, Monomial> LaurentPoly::leadingTerm() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    const auto& [m, c] = *terms_.begin();
    return {c, m};
}

std::optional<BiDegree> LaurentPoly::bidegree() const {
    if (terms_.empty()) return BiDegree{};
    auto it = terms_.begin();
    const BiDegree d = monomialBiDegree(it->first);
    for (++it; it != terms_.end(); ++it)
        if (monomialBiDegree(it->first) != d) return std::nullopt;
    return d;
}

bool LaurentPoly::isPolynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return !t.first.hasNegativeExponent(); });
}

}  // namespace lh
