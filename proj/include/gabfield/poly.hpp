#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gabfield {

/// Requirements on a coefficient field value: exact arithmetic plus the
/// ability to mint 0/1 of the same field from an existing value (coefficients
/// carry their context, so there is no global zero).
template <class F>
concept FieldValue = std::copyable<F> && requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<F>;
    { a.one_like() } -> std::convertible_to<F>;
};

/// Dense univariate polynomial over an exact field, coefficients stored
/// lowest degree first with no trailing zeros. The zero polynomial is the
/// empty coefficient vector and reports degree -1 (a sentinel below every
/// attainable degree, keeping the divmod/gcd contracts total).
template <FieldValue F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(F value) {
        std::vector<F> c;
        if (!value.is_zero()) c.push_back(std::move(value));
        return Poly(std::move(c));
    }
    /// value * X^k
    static Poly monomial(F value, std::size_t k) {
        if (value.is_zero()) return Poly();
        std::vector<F> c;
        c.reserve(k + 1);
        for (std::size_t i = 0; i < k; ++i) c.push_back(value.zero_like());
        c.push_back(std::move(value));
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    const F& leading() const {
        if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const Poly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const Poly& hi = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<F> r = hi.c_;
        for (std::size_t i = 0; i < lo.c_.size(); ++i) r[i] = r[i] + lo.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.push_back(a.c_[i] - b.c_[i]);
            else if (i < a.c_.size())
                r.push_back(a.c_[i]);
            else
                r.push_back(-b.c_[i]);
        }
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& x : c_) r.push_back(-x);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.c_[0].zero_like());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& a) { return Poly::constant(s) * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        F inv_lead = leading().one_like() / leading();
        std::vector<F> r;
        r.reserve(c_.size());
        for (const F& x : c_) r.push_back(x * inv_lead);
        return Poly(std::move(r));
    }

    /// Horner evaluation.
    F eval(const F& at) const {
        if (c_.empty()) return at.zero_like();
        F acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
template <FieldValue F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    F inv_lead = b.leading().one_like() / b.leading();
    std::vector<F> rem = a.coeffs();
    std::vector<F> quo(rem.size() - b.coeffs().size() + 1, inv_lead.zero_like());
    while (static_cast<int>(rem.size()) >= b.degree() + 1 && !rem.empty()) {
        if (rem.back().is_zero()) {
            rem.pop_back();
            continue;
        }
        F c = rem.back() * inv_lead;
        std::size_t shift = rem.size() - b.coeffs().size();
        quo[shift] = c;
        for (std::size_t i = 0; i + 1 < b.coeffs().size(); ++i)
            rem[shift + i] = rem[shift + i] - c * b[i];
        rem.pop_back();
    }
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

/// Monic gcd by the Euclidean algorithm; gcd(0,0) is rejected.
template <FieldValue F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <FieldValue F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    Poly<F> s0, s1, t0, t1;
    bool have_ctx = !a.is_zero();
    F one = have_ctx ? a.leading().one_like() : b.leading().one_like();
    s0 = Poly<F>::constant(one);
    t1 = Poly<F>::constant(one);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.is_monic()) {
        F inv_lead = one / a.leading();
        Poly<F> scale = Poly<F>::constant(inv_lead);
        a = scale * a;
        s0 = scale * s0;
        t0 = scale * t0;
    }
    return {std::move(a), std::move(s0), std::move(t0)};
}

/// Render with terms in descending powers: "β^3*x^2 + x + 1". Coefficient
/// strings come from F::to_string(); unit coefficients are omitted before a
/// power of the variable.
template <FieldValue F>
std::string to_string(const Poly<F>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const F& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += c.to_string();
            continue;
        }
        if (!c.is_one()) out += c.to_string() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace gabfield
