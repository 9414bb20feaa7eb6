#include "evasive/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace evasive {

namespace {

using i128 = __int128_t;

std::int64_t checked_narrow(i128 v, const char* op) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw Error(std::string("rational overflow in ") + op);
    }
    return static_cast<std::int64_t>(v);
}

Rational make_reduced(i128 num, i128 den, const char* op) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) a = 1;
    return {checked_narrow(num / a, op), checked_narrow(den / a, op)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(0), den_(1) {
    Rational r = make_reduced(num, den, "construction");
    num_ = r.num_;
    den_ = r.den_;
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_, "+");
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_, "-");
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_, "*");
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw Error("rational division by zero");
    return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_, "/");
}

bool Rational::operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::uint64_t Rational::ceil_div_into(std::uint64_t x) const {
    if (num_ <= 0) throw Error("ceil_div_into needs a positive rational");
    __uint128_t scaled = __uint128_t(x) * std::uint64_t(den_);
    __uint128_t q = (scaled + std::uint64_t(num_) - 1) / std::uint64_t(num_);
    if (q > UINT64_MAX) throw Error("rational overflow in ceil_div_into");
    return static_cast<std::uint64_t>(q);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            std::int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw ParseError("bad rational: " + text);
            return {n};
        }
        std::size_t pos_n = 0, pos_d = 0;
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        std::int64_t n = std::stoll(ns, &pos_n);
        std::int64_t d = std::stoll(ds, &pos_d);
        if (pos_n != ns.size() || pos_d != ds.size() || d == 0) {
            throw ParseError("bad rational: " + text);
        }
        return {n, d};
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("bad rational: " + text);
    }
}

}  // namespace evasive
