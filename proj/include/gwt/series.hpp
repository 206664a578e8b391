#pragma once

#include "gwt/rational.hpp"

#include <string>
#include <vector>

namespace gwt {

// Truncated univariate power series over Rational. The truncation order N is
// explicit state: coefficients 0..N are reliable, and reading past N throws
// instead of returning zero. Binary operations carry the minimum order of the
// operands.
class Series {
public:
    explicit Series(int order);
    Series(std::vector<Rational> coeffs); // order = coeffs.size() - 1

    static Series constant(const Rational& c, int order);
    static Series identity(int order); // the series "q"

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& at(int k) const; // throws std::out_of_range beyond the order
    void set(int k, const Rational& v);

    bool is_zero() const;
    Series truncated(int new_order) const; // new_order <= order()

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Rational& c) const;
    friend bool operator==(const Series& a, const Series& b);

    // exp/log require constant term 0 resp. 1; violations are domain errors
    // that name the offending constant term.
    Series exp() const;
    Series log() const;

    Series derivative() const; // order drops by one
    Series reciprocal() const; // constant term must be nonzero

    // Substitute inner (zero constant term) into this series.
    Series compose(const Series& inner) const;

    // Compositional inverse by Newton iteration: needs constant term 0 and a
    // nonzero linear coefficient. Round-trip verified before returning.
    Series reversion() const;

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rational> c_; // indices 0..order
};

// Laurent series in one variable with Rational coefficients. Exponents below
// the valuation are exact zeros; exponents above max_order() are unknown and
// reading them throws.
class LaurentSeries {
public:
    LaurentSeries(int valuation, std::vector<Rational> coeffs);
    static LaurentSeries from_series(const Series& s, int shift = 0);

    bool is_zero() const;
    int valuation() const; // lowest nonzero exponent; max_order()+1 when zero
    int max_order() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    Rational at(int k) const; // exact zero below the window, throws above it

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries scaled(const Rational& c) const;

    std::string str(const std::string& var = "z") const;

private:
    void normalize();
    int lo_;                  // exponent of c_[0]
    std::vector<Rational> c_; // exponents lo_ .. lo_+size-1
};

// Laurent expansion of 1/(2 sinh(z/2)) through z^order: the regularized value
// of the shifted exponential sum sum_{i>=1} e^{z(-i+1/2)}. Valuation -1, odd.
LaurentSeries regularized_half_shift_series(int order);

} // namespace gwt
