#include "mono/series.hpp"

#include <algorithm>
#include <sstream>

namespace mono {

TruncatedSeries::TruncatedSeries(int cutoff) {
    if (cutoff < 0)
        throw ValidationError("series cutoff must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(cutoff) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(int cutoff) {
    TruncatedSeries s(cutoff);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, BigInt coefficient, int cutoff) {
    TruncatedSeries s(cutoff);
    if (degree >= 0 && degree <= cutoff)
        s.coeffs_[static_cast<std::size_t>(degree)] = std::move(coefficient);
    return s;
}

const BigInt& TruncatedSeries::coeff(int degree) const {
    if (degree < 0 || degree > cutoff())
        throw ValidationError("coefficient degree out of range");
    return coeffs_[static_cast<std::size_t>(degree)];
}

void TruncatedSeries::set_coeff(int degree, BigInt value) {
    if (degree < 0 || degree > cutoff())
        throw ValidationError("coefficient degree out of range");
    coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    const int d = std::min(cutoff(), other.cutoff());
    coeffs_.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        coeffs_[static_cast<std::size_t>(k)] += other.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

TruncatedSeries& TruncatedSeries::add_scaled(const TruncatedSeries& other,
                                             const BigInt& scale, int shift) {
    const int d = cutoff();
    const int od = other.cutoff();
    for (int k = shift; k <= d; ++k) {
        const int j = k - shift;
        if (j > od)
            break;
        coeffs_[static_cast<std::size_t>(k)] += scale * other.coeffs_[static_cast<std::size_t>(j)];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::divide_one_minus_power(int k) {
    if (k <= 0)
        throw ValidationError("denominator exponent must be positive");
    const int d = cutoff();
    for (int j = k; j <= d; ++j)
        coeffs_[static_cast<std::size_t>(j)] += coeffs_[static_cast<std::size_t>(j - k)];
    return *this;
}

TruncatedSeries& TruncatedSeries::multiply_one_minus_power(int k) {
    if (k <= 0)
        throw ValidationError("factor exponent must be positive");
    const int d = cutoff();
    for (int j = d; j >= k; --j)
        coeffs_[static_cast<std::size_t>(j)] -= coeffs_[static_cast<std::size_t>(j - k)];
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int d = std::min(a.cutoff(), b.cutoff());
    TruncatedSeries out(d);
    for (int i = 0; i <= d; ++i) {
        const BigInt& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= d; ++j)
            out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return out;
}

bool ts_equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b, int degree) {
    if (degree < 0)
        throw ValidationError("comparison degree must be non-negative");
    if (degree > a.cutoff() || degree > b.cutoff())
        throw ValidationError("comparison degree exceeds a series cutoff");
    for (int k = 0; k <= degree; ++k)
        if (a.coeff(k) != b.coeff(k))
            return false;
    return true;
}

TruncatedSeries expand_rational(const RationalForm& form, int cutoff) {
    TruncatedSeries s(cutoff);
    for (const auto& [degree, coefficient] : form.numerator) {
        if (degree < 0)
            throw ValidationError("numerator degrees must be non-negative");
        if (degree <= cutoff)
            s.set_coeff(degree, s.coeff(degree) + coefficient);
    }
    for (int k : form.denominator_factors)
        s.divide_one_minus_power(k);
    return s;
}

std::string series_to_text(const TruncatedSeries& s) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= s.cutoff(); ++k) {
        const BigInt& c = s.coeff(k);
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const BigInt a = abs(c);
        if (k == 0) {
            out << a;
        } else {
            if (a != 1)
                out << a << " ";
            out << "t";
            if (k != 1)
                out << "^" << k;
        }
    }
    if (first)
        out << "0";
    out << " + O(t^" << (s.cutoff() + 1) << ")";
    return out.str();
}

std::string series_to_csv(const TruncatedSeries& s) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (int k = 0; k <= s.cutoff(); ++k)
        out << k << "," << s.coeff(k) << "\n";
    return out.str();
}

} // namespace mono
