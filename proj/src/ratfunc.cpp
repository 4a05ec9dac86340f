#include "gabfield/ratfunc.hpp"

#include <cassert>

namespace gabfield {

namespace {

// Shared reduction: divide out the gcd, make the denominator monic.
void reduce(FqPoly& num, FqPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (num.is_zero()) {
        den = FqPoly::constant(den.leading().one_like());
        return;
    }
    FqPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    if (!den.is_monic()) {
        FqPoly scale = FqPoly::constant(den.leading().one_like() / den.leading());
        num = scale * num;
        den = scale * den;
    }
    assert(poly_gcd(num, den).degree() == 0);
}

}  // namespace

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce(num_, den_);
}

RatFunc RatFunc::constant(const FqElement& c) {
    return RatFunc(FqPoly::constant(c), FqPoly::constant(c.one_like()), Reduced{});
}

RatFunc RatFunc::from_poly(FqPoly p, const FqContext& ctx) {
    return RatFunc(std::move(p), FqPoly::constant(ctx.one()), Reduced{});
}

RatFunc RatFunc::x_power(const FqContext& ctx, std::size_t k) {
    return from_poly(FqPoly::monomial(ctx.one(), k), ctx);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::invalid_argument("inversion of zero in F_q(x)");
    FqPoly n = den_;
    FqPoly d = num_;
    // Still reduced; only the monic normalization of the new denominator remains.
    if (!d.is_monic()) {
        FqPoly scale = FqPoly::constant(d.leading().one_like() / d.leading());
        n = scale * n;
        d = scale * d;
    }
    return RatFunc(std::move(n), std::move(d), Reduced{});
}

FqElement RatFunc::eval(const FqElement& at) const {
    FqElement d = den_.eval(at);
    if (d.is_zero()) throw std::invalid_argument("evaluation at a pole of F_q(x) element");
    return num_.eval(at) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return a.zero_like();
    // Cross-cancel before multiplying to keep intermediate degrees down.
    FqPoly g1 = poly_gcd(a.num_, b.den_);
    FqPoly g2 = poly_gcd(b.num_, a.den_);
    FqPoly an = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
    FqPoly bd = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
    FqPoly bn = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
    FqPoly ad = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
    return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

std::string RatFunc::to_string() const {
    if (den_.is_one()) return gabfield::to_string(num_);
    return "(" + gabfield::to_string(num_) + ")/(" + gabfield::to_string(den_) + ")";
}

}  // namespace gabfield
