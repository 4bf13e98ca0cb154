#include "lh/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace lh {

namespace {

void trim(std::vector<int>& exps) {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    trim(exps_);
}

Monomial Monomial::variable(int index, int exponent) {
    std::vector<int> exps(static_cast<std::size_t>(index), 0);
    exps[static_cast<std::size_t>(index - 1)] = exponent;
    return Monomial(std::move(exps));
}

int Monomial::exponent(int index) const {
    if (index < 1 || index > numVars()) return 0;
    return exps_[static_cast<std::size_t>(index - 1)];
}

int Monomial::totalDegree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::hasNegativeExponent() const {
    return std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int> exps(std::max(exps_.size(), other.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i];
    for (std::size_t i = 0; i < other.exps_.size(); ++i) exps[i] += other.exps_[i];
    return Monomial(std::move(exps));
}

Monomial Monomial::inverse() const {
    std::vector<int> exps(exps_.size());
    std::transform(exps_.begin(), exps_.end(), exps.begin(), [](int e) { return -e; });
    return Monomial(std::move(exps));
}

bool degLexLess(const Monomial& a, const Monomial& b) {
    const int da = a.totalDegree();
    const int db = b.totalDegree();
    if (da != db) return da < db;
    const int width = std::max(a.numVars(), b.numVars());
    for (int i = 1; i <= width; ++i) {
        const int ea = a.exponent(i);
        const int eb = b.exponent(i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

BiDegree monomialBiDegree(const Monomial& m) {
    BiDegree d;
    for (int i = 1; i <= m.numVars(); ++i) {
        if (i % 2 == 1)
            d.odd += m.exponent(i);
        else
            d.even += m.exponent(i);
    }
    return d;
}

}  // namespace lh
