#include "kbchroma/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kbchroma {

namespace {
const Rational kZero(0);
}

RationalPoly::RationalPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

RationalPoly::RationalPoly(long c) : RationalPoly(Rational(c)) {}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::variable() {
    RationalPoly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

RationalPoly RationalPoly::descending(std::initializer_list<long> coeffs) {
    std::vector<Rational> c(coeffs.size());
    size_t k = coeffs.size();
    for (long v : coeffs) c[--k] = Rational(v);
    return RationalPoly(std::move(c));
}

const Rational& RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

const Rational& RationalPoly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

bool RationalPoly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    RationalPoly r;
    r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RationalPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
    if (s == 0) return {};
    RationalPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c * s);
    return r;
}

RationalPoly RationalPoly::operator/(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("RationalPoly: division by zero scalar");
    RationalPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c / s);
    return r;
}

RationalPoly RationalPoly::pow(unsigned long n) const {
    RationalPoly result(Rational(1));
    if (n == 0) return result;
    RationalPoly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

RationalPoly RationalPoly::derivative() const {
    RationalPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_.push_back(coeffs_[i] * long(i));
    return r;
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational s(0);
    for (size_t i = coeffs_.size(); i-- > 0;) s = s * x + coeffs_[i];
    return s;
}

double RationalPoly::eval(double x) const {
    double s = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) s = s * x + coeffs_[i].get_d();
    return s;
}

RationalPoly RationalPoly::deflate(const Rational& r) const {
    if (is_zero()) throw std::invalid_argument("RationalPoly::deflate on zero polynomial");
    std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
    Rational carry = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = coeffs_[i] + carry * r;
    }
    if (carry != 0) throw std::invalid_argument("RationalPoly::deflate: not a root");
    return RationalPoly(std::move(q));
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace kbchroma
