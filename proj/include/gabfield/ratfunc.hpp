#pragma once

#include <string>
#include <utility>

#include "gabfield/fq.hpp"
#include "gabfield/poly.hpp"

namespace gabfield {

using FqPoly = Poly<FqElement>;

/// Reduced fraction of F_q[x] polynomials: an element of K = F_q(x).
///
/// Canonical form is enforced eagerly on every construction: gcd(num, den) = 1,
/// den monic and nonzero, zero is 0/1. Equality is structural.
class RatFunc {
  public:
    RatFunc(FqPoly num, FqPoly den);
    static RatFunc zero(const FqContext& ctx) { return constant(ctx.zero()); }
    static RatFunc one(const FqContext& ctx) { return constant(ctx.one()); }
    static RatFunc constant(const FqElement& c);
    static RatFunc from_poly(FqPoly p, const FqContext& ctx);
    /// x^k as an element of K.
    static RatFunc x_power(const FqContext& ctx, std::size_t k);

    const FqPoly& num() const { return num_; }
    const FqPoly& den() const { return den_; }
    const FqContext& context() const { return den_.leading().context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Constant elements of K are exactly the fractions with both degrees <= 0.
    bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }

    RatFunc zero_like() const { return zero(context()); }
    RatFunc one_like() const { return one(context()); }

    RatFunc inverse() const;
    /// Value at x = at; throws on a pole.
    FqElement eval(const FqElement& at) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// "(num)/(den)", or just the numerator when the denominator is 1.
    std::string to_string() const;

  private:
    struct Reduced {};
    RatFunc(FqPoly num, FqPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    FqPoly num_;
    FqPoly den_;
};

}  // namespace gabfield
