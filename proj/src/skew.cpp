#include "gabfield/skew.hpp"

#include <cassert>

namespace gabfield {

namespace {
void check_same_ext(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.extension_ptr() != b.extension_ptr())
        throw std::invalid_argument("extension mismatch");
}
}  // namespace

ThetaPoly::ThetaPoly(const CyclicExtension* ext, std::vector<LElement> coeffs)
    : ext_(ext), c_(std::move(coeffs)) {
    for (const LElement& c : c_)
        if (c.extension_ptr() != ext_) throw std::invalid_argument("extension mismatch");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ThetaPoly ThetaPoly::one(const CyclicExtension* ext) {
    return ThetaPoly(ext, {ext->one()});
}

ThetaPoly ThetaPoly::monomial(LElement coeff, std::size_t k) {
    const CyclicExtension* ext = coeff.extension_ptr();
    std::vector<LElement> c(k, ext->zero());
    c.push_back(std::move(coeff));
    return ThetaPoly(ext, std::move(c));
}

LElement ThetaPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : ext_->zero();
}

const LElement& ThetaPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero skew polynomial has no leading coefficient");
    return c_.back();
}

ThetaPoly ThetaPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    LElement inv_lead = leading().inverse();
    std::vector<LElement> r;
    r.reserve(c_.size());
    for (const LElement& c : c_) r.push_back(inv_lead * c);
    return ThetaPoly(ext_, std::move(r));
}

LElement ThetaPoly::eval(const LElement& g) const {
    if (g.extension_ptr() != ext_) throw std::invalid_argument("extension mismatch");
    LElement acc = ext_->zero();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        acc = acc + c_[i] * apply_theta(g, static_cast<long long>(i));
    }
    return acc;
}

Matrix<RatFunc> ThetaPoly::operator_matrix() const {
    std::uint32_t n = ext_->degree();
    Matrix<RatFunc> m(n, n, RatFunc::zero(ext_->base()));
    for (std::uint32_t j = 0; j < n; ++j) {
        LElement image = eval(ext_->y_power(j));
        for (std::uint32_t i = 0; i < n; ++i) m.at(j, i) = image.coord(i);
    }
    return m;
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_ext(a, b);
    std::vector<LElement> r;
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < a.c_.size() && i < b.c_.size())
            r.push_back(a.c_[i] + b.c_[i]);
        else if (i < a.c_.size())
            r.push_back(a.c_[i]);
        else
            r.push_back(b.c_[i]);
    }
    return ThetaPoly(a.ext_, std::move(r));
}

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) { return a + (-b); }

ThetaPoly ThetaPoly::operator-() const {
    std::vector<LElement> r;
    r.reserve(c_.size());
    for (const LElement& c : c_) r.push_back(-c);
    return ThetaPoly(ext_, std::move(r));
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_ext(a, b);
    if (a.is_zero() || b.is_zero()) return ThetaPoly(a.ext_);
    std::vector<LElement> r(a.c_.size() + b.c_.size() - 1, a.ext_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + a.c_[i] * apply_theta(b.c_[j], static_cast<long long>(i));
        }
    }
    return ThetaPoly(a.ext_, std::move(r));
}

std::pair<ThetaPoly, ThetaPoly> left_divmod(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_ext(a, b);
    if (b.is_zero()) throw std::invalid_argument("skew division by zero");
    const CyclicExtension* ext = a.extension_ptr();
    int db = b.degree();
    LElement lead_inv = b.leading().inverse();
    ThetaPoly quo(ext);
    ThetaPoly rem = a;
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        // b_db · θ^db(c) = lead(rem)  =>  c = θ^{-db}(b_db^{-1} · lead(rem))
        LElement c = apply_theta(lead_inv * rem.leading(), -static_cast<long long>(db));
        ThetaPoly term = ThetaPoly::monomial(std::move(c), static_cast<std::size_t>(shift));
        quo = quo + term;
        rem = rem - b * term;
        assert(rem.degree() < db + shift + 1);
    }
    return {std::move(quo), std::move(rem)};
}

std::pair<ThetaPoly, ThetaPoly> right_divmod(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_ext(a, b);
    if (b.is_zero()) throw std::invalid_argument("skew division by zero");
    const CyclicExtension* ext = a.extension_ptr();
    int db = b.degree();
    ThetaPoly quo(ext);
    ThetaPoly rem = a;
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        // c · θ^shift(b_db) = lead(rem)
        LElement c = rem.leading() * apply_theta(b.leading(), shift).inverse();
        ThetaPoly term = ThetaPoly::monomial(std::move(c), static_cast<std::size_t>(shift));
        quo = quo + term;
        rem = rem - term * b;
        assert(rem.degree() < db + shift + 1);
    }
    return {std::move(quo), std::move(rem)};
}

std::size_t root_space_dim(const ThetaPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("root space of the zero skew polynomial is all of L");
    std::size_t n = p.extension().degree();
    return n - rank_of(p.operator_matrix());
}

ThetaPoly annihilator(const CyclicExtension* ext, std::span<const LElement> v) {
    ThetaPoly p = ThetaPoly::one(ext);
    for (const LElement& elem : v) {
        LElement image = p.eval(elem);
        if (image.is_zero()) continue;  // already annihilated: elem is in the span so far
        ThetaPoly z = ThetaPoly::monomial(ext->one(), 1);
        ThetaPoly shift = z - ThetaPoly::monomial(apply_theta(image) * image.inverse(), 0);
        p = shift * p;
    }
    assert(p.is_monic());
    return p;
}

ThetaPoly min_ideal_generator(const CyclicExtension* ext, std::span<const LElement> c) {
    return annihilator(ext, c);
}

std::string ThetaPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t ii = c_.size(); ii-- > 0;) {
        const LElement& c = c_[ii];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (ii == 0) {
            out += "(" + c.to_string() + ")";
            continue;
        }
        std::string zs = ii == 1 ? "Z" : "Z^" + std::to_string(ii);
        if (c.is_one())
            out += zs;
        else
            out += "(" + c.to_string() + ")*" + zs;
    }
    return out;
}

}  // namespace gabfield
