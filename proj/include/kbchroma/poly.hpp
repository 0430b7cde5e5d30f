#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kbchroma/rational.hpp"

namespace kbchroma {

/// Dense univariate polynomial in q with exact rational coefficients.
/// Coefficient k multiplies q^k; trailing zeros are always trimmed, so the
/// leading coefficient is nonzero unless the polynomial is identically zero.
/// All arithmetic is exact.
class RationalPoly {
  public:
    RationalPoly() = default;  // zero polynomial
    explicit RationalPoly(const Rational& c);
    explicit RationalPoly(long c);
    explicit RationalPoly(std::vector<Rational> coeffs);  // ascending powers

    static RationalPoly variable();  // q
    // Integer coefficients listed from the leading term down, matching the
    // usual printed order: descending({1,-9,21}) is q^2 - 9q + 21.
    static RationalPoly descending(std::initializer_list<long> coeffs);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // 0 beyond the degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;

    bool has_integer_coeffs() const;

    RationalPoly operator-() const;
    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator*(const Rational& s) const;
    RationalPoly operator/(const Rational& s) const;
    RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
    RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }
    bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPoly& o) const { return !(*this == o); }

    RationalPoly pow(unsigned long n) const;
    RationalPoly derivative() const;

    Rational eval(const Rational& x) const;  // Horner, exact
    double eval(double x) const;

    // Exact division by (q - r); the remainder must vanish.
    RationalPoly deflate(const Rational& r) const;

    std::string str(const std::string& var = "q") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline RationalPoly operator*(const Rational& s, const RationalPoly& p) { return p * s; }

}  // namespace kbchroma
