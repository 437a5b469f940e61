#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mono/errors.hpp"
#include "mono/numeric.hpp"

namespace mono {

/// Power series with exact integer coefficients, truncated at a fixed cutoff
/// degree D: coefficients c_0..c_D are stored, everything above is unknown.
/// Binary operations truncate to the smaller operand cutoff; equality is only
/// meaningful up to a stated degree (ts_equal_up_to).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cutoff);

    static TruncatedSeries one(int cutoff);
    static TruncatedSeries monomial(int degree, BigInt coefficient, int cutoff);

    int cutoff() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int degree) const;
    void set_coeff(int degree, BigInt value);
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    /// *this += scale * t^shift * other, truncated at this cutoff.
    TruncatedSeries& add_scaled(const TruncatedSeries& other, const BigInt& scale,
                                int shift = 0);

    /// In-place *= 1/(1 - t^k): running sums with stride k.
    TruncatedSeries& divide_one_minus_power(int k);
    /// In-place *= (1 - t^k), truncated.
    TruncatedSeries& multiply_one_minus_power(int k);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<BigInt> coeffs_; // size cutoff+1
};

/// Coefficient-wise equality on degrees 0..degree.
/// Throws ValidationError if degree exceeds either cutoff.
bool ts_equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b, int degree);

/// numerator / prod_k (1 - t^k), numerator given as sparse (degree, coefficient)
/// terms, each denominator entry k standing for one factor (1 - t^k).
struct RationalForm {
    std::vector<std::pair<int, BigInt>> numerator;
    std::vector<int> denominator_factors;
};

TruncatedSeries expand_rational(const RationalForm& form, int cutoff);

/// "c_0 + c_1 t + c_2 t^2 + ... + O(t^{D+1})" with zero terms omitted.
std::string series_to_text(const TruncatedSeries& s);
/// Header line "degree,coefficient" followed by one "k,c_k" line per degree.
std::string series_to_csv(const TruncatedSeries& s);

} // namespace mono
