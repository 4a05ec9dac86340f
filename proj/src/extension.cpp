#include "gabfield/extension.hpp"

#include <cassert>

namespace gabfield {

namespace {

// Coordinate-level helpers used during construction, before LElement exists.
using Coords = std::vector<RatFunc>;

Coords zero_coords(const FqContext& ctx, std::uint32_t n) {
    return Coords(n, RatFunc::zero(ctx));
}

// Multiply two coordinate vectors modulo the defining relation, expressed by
// the reduction rows for y^{n+i}.
Coords mul_coords(const Coords& a, const Coords& b, const std::vector<Coords>& red_rows,
                  const FqContext& ctx) {
    std::uint32_t n = static_cast<std::uint32_t>(a.size());
    Coords conv(2 * n - 1, RatFunc::zero(ctx));
    for (std::uint32_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            conv[i + j] = conv[i + j] + a[i] * b[j];
        }
    }
    for (std::uint32_t k = 2 * n - 2; k >= n; --k) {
        if (!conv[k].is_zero()) {
            const Coords& row = red_rows[k - n];
            for (std::uint32_t j = 0; j < n; ++j)
                if (!row[j].is_zero()) conv[j] = conv[j] + conv[k] * row[j];
        }
        if (k == n) break;
    }
    conv.erase(conv.begin() + n, conv.end());
    return conv;
}

Coords apply_rows(const Coords& a, const std::vector<Coords>& rows, const FqContext& ctx) {
    std::uint32_t n = static_cast<std::uint32_t>(a.size());
    Coords r = zero_coords(ctx, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (std::uint32_t i = 0; i < n; ++i)
            if (!rows[j][i].is_zero()) r[i] = r[i] + a[j] * rows[j][i];
    }
    return r;
}

bool is_identity_rows(const std::vector<Coords>& rows) {
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i) {
            bool want_one = (i == j);
            if (want_one ? !rows[j][i].is_one() : !rows[j][i].is_zero()) return false;
        }
    return true;
}

}  // namespace

std::vector<std::pair<FqPoly, unsigned>> factor_monic_irreducibles(const FqPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const FqContext& ctx = f.leading().context();
    FqPoly rest = f.monic();
    std::vector<std::pair<FqPoly, unsigned>> factors;
    std::uint32_t q = ctx.size();
    for (std::uint32_t d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count && rest.degree() >= static_cast<int>(d); ++idx) {
            std::vector<FqElement> cand;
            cand.reserve(d + 1);
            std::uint64_t v = idx;
            for (std::uint32_t i = 0; i < d; ++i) {
                cand.push_back(ctx.from_label(static_cast<std::uint32_t>(v % q)));
                v /= q;
            }
            cand.push_back(ctx.one());
            FqPoly divisor(std::move(cand));
            unsigned mult = 0;
            for (;;) {
                auto [quo, rem] = divmod(rest, divisor);
                if (!rem.is_zero()) break;
                rest = quo;
                ++mult;
            }
            if (mult > 0) factors.emplace_back(std::move(divisor), mult);
        }
    }
    if (rest.degree() >= 1) factors.emplace_back(rest, 1);  // leftover is irreducible
    return factors;
}

std::shared_ptr<const CyclicExtension> CyclicExtension::make_kummer(
    std::shared_ptr<const FqContext> base, const RatFunc& u, std::uint32_t n,
    std::optional<FqElement> alpha) {
    const FqContext& ctx = *base;
    if (n < 2) throw ValidationError("extension degree must be at least 2");
    if (u.is_zero()) throw ValidationError("Kummer element u must be nonzero");
    if ((ctx.size() - 1) % n != 0)
        throw ValidationError("Kummer degree " + std::to_string(n) + " does not divide q-1 = " +
                              std::to_string(ctx.size() - 1));

    // u must not be a d-th power in K for any prime d | n. In the UFD F_q[x]
    // with unit group F_q^x this holds iff some irreducible multiplicity of u
    // is not divisible by d, or the leading-coefficient ratio is not a d-th
    // power in F_q.
    auto num_factors = factor_monic_irreducibles(u.num());
    auto den_factors = u.den().degree() >= 1 ? factor_monic_irreducibles(u.den())
                                             : std::vector<std::pair<FqPoly, unsigned>>{};
    std::uint32_t lead = u.num().leading().label();  // den is monic
    std::uint32_t rest = n;
    for (std::uint32_t d = 2; d <= rest; ++d) {
        if (rest % d != 0) continue;
        while (rest % d == 0) rest /= d;
        bool all_mult_divisible = true;
        for (const auto& [factor, mult] : num_factors)
            if (mult % d != 0) all_mult_divisible = false;
        for (const auto& [factor, mult] : den_factors)
            if (mult % d != 0) all_mult_divisible = false;
        if (all_mult_divisible && ctx.is_dth_power(lead, d))
            throw ValidationError("u is a " + std::to_string(d) +
                                  "-th power in F_q(x); Y^n - u is reducible");
    }

    FqElement a = alpha ? *alpha : ctx.least_primitive().pow((ctx.size() - 1) / n);
    if (a.is_zero() || a.multiplicative_order() != n)
        throw ValidationError("alpha must have multiplicative order exactly " + std::to_string(n));

    auto ext = std::shared_ptr<CyclicExtension>(new CyclicExtension());
    ext->base_ = std::move(base);
    ext->kind_ = ExtensionKind::Kummer;
    ext->u_ = u;
    ext->n_ = n;
    ext->alpha_ = a;

    // min poly Y^n - u
    std::vector<RatFunc> mp(n + 1, RatFunc::zero(ctx));
    mp[0] = -u;
    mp[n] = RatFunc::one(ctx);
    ext->min_poly_ = Poly<RatFunc>(std::move(mp));

    ext->finish_construction();
    return ext;
}

std::shared_ptr<const CyclicExtension> CyclicExtension::make_artin_schreier(
    std::shared_ptr<const FqContext> base, const RatFunc& u) {
    const FqContext& ctx = *base;
    std::uint32_t p = ctx.characteristic();
    if (u.is_zero()) throw ValidationError("Artin-Schreier element u must be nonzero");

    // Sufficient validity test for u outside {w^p - w : w in K}: a pole of
    // order coprime to p, or a nonconstant polynomial of degree coprime to p.
    bool valid = false;
    if (u.den().degree() >= 1) {
        for (const auto& [factor, mult] : factor_monic_irreducibles(u.den()))
            if (mult % p != 0) valid = true;
    } else if (u.num().degree() >= 1 && static_cast<std::uint32_t>(u.num().degree()) % p != 0) {
        valid = true;
    }
    if (!valid)
        throw ValidationError(
            "inconclusive validity: u has no pole of order coprime to p and is not a "
            "nonconstant polynomial of degree coprime to p, so u = w^p - w cannot be ruled out");

    auto ext = std::shared_ptr<CyclicExtension>(new CyclicExtension());
    ext->base_ = std::move(base);
    ext->kind_ = ExtensionKind::ArtinSchreier;
    ext->u_ = u;
    ext->n_ = p;

    // min poly Y^p - Y - u
    std::vector<RatFunc> mp(p + 1, RatFunc::zero(ctx));
    mp[0] = -u;
    mp[1] = -RatFunc::one(ctx);
    mp[p] = RatFunc::one(ctx);
    ext->min_poly_ = Poly<RatFunc>(std::move(mp));

    ext->finish_construction();
    return ext;
}

void CyclicExtension::finish_construction() {
    const FqContext& ctx = *base_;
    std::uint32_t n = n_;

    // y^n from the defining relation, then y^{n+i} = y^{n+i-1} * y.
    Coords yn = zero_coords(ctx, n);
    if (kind_ == ExtensionKind::Kummer) {
        yn[0] = *u_;
    } else {
        yn[0] = *u_;
        yn[1] = RatFunc::one(ctx);
    }
    red_rows_.push_back(yn);
    for (std::uint32_t i = 1; i + 1 < n; ++i) {
        const Coords& prev = red_rows_.back();
        Coords next = zero_coords(ctx, n);
        for (std::uint32_t j = 0; j + 1 < n; ++j) next[j + 1] = prev[j];
        if (!prev[n - 1].is_zero())
            for (std::uint32_t j = 0; j < n; ++j)
                next[j] = next[j] + prev[n - 1] * red_rows_[0][j];
        red_rows_.push_back(std::move(next));
    }

    // θ on the basis.
    std::vector<Coords> theta1;
    theta1.reserve(n);
    if (kind_ == ExtensionKind::Kummer) {
        for (std::uint32_t j = 0; j < n; ++j) {
            Coords row = zero_coords(ctx, n);
            row[j] = RatFunc::constant(alpha_->pow(j));
            theta1.push_back(std::move(row));
        }
    } else {
        // θ(y^j) = (y+1)^j
        Coords y_plus_1 = zero_coords(ctx, n);
        y_plus_1[0] = RatFunc::one(ctx);
        y_plus_1[1] = RatFunc::one(ctx);
        Coords acc = zero_coords(ctx, n);
        acc[0] = RatFunc::one(ctx);
        theta1.push_back(acc);
        for (std::uint32_t j = 1; j < n; ++j) {
            acc = mul_coords(acc, y_plus_1, red_rows_, ctx);
            theta1.push_back(acc);
        }
    }

    std::vector<Coords> identity;
    for (std::uint32_t j = 0; j < n; ++j) {
        Coords row = zero_coords(ctx, n);
        row[j] = RatFunc::one(ctx);
        identity.push_back(std::move(row));
    }
    theta_pows_.push_back(identity);
    theta_pows_.push_back(theta1);
    for (std::uint32_t i = 2; i < n; ++i) {
        std::vector<Coords> rows;
        rows.reserve(n);
        for (std::uint32_t j = 0; j < n; ++j)
            rows.push_back(apply_rows(theta_pows_[i - 1][j], theta1, ctx));
        theta_pows_.push_back(std::move(rows));
    }

    // θ must have order exactly n.
    for (std::uint32_t d = 1; d < n; ++d)
        if (is_identity_rows(theta_pows_[d]))
            throw ValidationError("theta has order " + std::to_string(d) + " < n");
    std::vector<Coords> theta_n;
    for (std::uint32_t j = 0; j < n; ++j)
        theta_n.push_back(apply_rows(theta_pows_[n - 1][j], theta1, ctx));
    if (!is_identity_rows(theta_n)) throw ValidationError("theta^n is not the identity");
    assert(theta_pows_[1][0][0].is_one());  // θ fixes K
}

const FqElement& CyclicExtension::alpha() const {
    if (!alpha_) throw std::invalid_argument("Artin-Schreier extension has no Kummer alpha");
    return *alpha_;
}

Matrix<RatFunc> CyclicExtension::theta_matrix(std::uint32_t power) const {
    const auto& rows = theta_pows_[power % n_];
    Matrix<RatFunc> m(n_, n_, RatFunc::zero(*base_));
    for (std::uint32_t j = 0; j < n_; ++j)
        for (std::uint32_t i = 0; i < n_; ++i) m.at(j, i) = rows[j][i];
    return m;
}

const std::vector<RatFunc>& CyclicExtension::theta_row(long long i, std::uint32_t j) const {
    long long r = i % static_cast<long long>(n_);
    if (r < 0) r += n_;
    return theta_pows_[static_cast<std::size_t>(r)][j];
}

LElement CyclicExtension::zero() const { return LElement(this, zero_coords(*base_, n_)); }

LElement CyclicExtension::one() const {
    Coords c = zero_coords(*base_, n_);
    c[0] = RatFunc::one(*base_);
    return LElement(this, std::move(c));
}

LElement CyclicExtension::y_power(std::uint32_t j) const {
    if (j >= n_) throw std::invalid_argument("y-power exceeds extension degree");
    Coords c = zero_coords(*base_, n_);
    c[j] = RatFunc::one(*base_);
    return LElement(this, std::move(c));
}

LElement CyclicExtension::from_scalar(RatFunc value) const {
    Coords c = zero_coords(*base_, n_);
    c[0] = std::move(value);
    return LElement(this, std::move(c));
}

LElement CyclicExtension::from_coords(std::vector<RatFunc> coords) const {
    return LElement(this, std::move(coords));
}

std::string CyclicExtension::describe() const {
    std::string kind = kind_ == ExtensionKind::Kummer ? "kummer" : "artin-schreier";
    return kind + " extension of degree " + std::to_string(n_) + " with u = " + u_->to_string();
}

LElement::LElement(const CyclicExtension* ext, std::vector<RatFunc> coords)
    : ext_(ext), coords_(std::move(coords)) {
    if (coords_.size() != ext_->degree())
        throw std::invalid_argument("coordinate count does not match extension degree");
}

bool LElement::is_zero() const {
    for (const RatFunc& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool LElement::is_one() const {
    if (!coords_[0].is_one()) return false;
    for (std::size_t j = 1; j < coords_.size(); ++j)
        if (!coords_[j].is_zero()) return false;
    return true;
}

bool LElement::is_polynomial() const {
    for (const RatFunc& c : coords_)
        if (!c.is_polynomial()) return false;
    return true;
}

namespace {
void check_same_ext(const LElement& a, const LElement& b) {
    if (a.extension_ptr() != b.extension_ptr())
        throw std::invalid_argument("extension mismatch");
}
}  // namespace

LElement operator+(const LElement& a, const LElement& b) {
    check_same_ext(a, b);
    Coords r = a.coords();
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] + b.coord(j);
    return LElement(a.extension_ptr(), std::move(r));
}

LElement operator-(const LElement& a, const LElement& b) {
    check_same_ext(a, b);
    Coords r = a.coords();
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] - b.coord(j);
    return LElement(a.extension_ptr(), std::move(r));
}

LElement LElement::operator-() const {
    Coords r = coords_;
    for (RatFunc& c : r) c = -c;
    return LElement(ext_, std::move(r));
}

LElement operator*(const LElement& a, const LElement& b) {
    check_same_ext(a, b);
    const CyclicExtension& ext = a.extension();
    return LElement(a.extension_ptr(),
                    mul_coords(a.coords(), b.coords(), ext.reduction_rows(), ext.base()));
}

LElement LElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inversion of zero in L");
    // Solve w·M = (1,0,...,0) over K, where row j of M holds the coordinates
    // of y^j·a. Elimination over K keeps intermediate degrees near the true
    // reduced results (pivot inversion in K is a numerator/denominator swap),
    // unlike extended Euclid in K[Y] whose Bezout fractions balloon first and
    // reduce later.
    const FqContext& ctx = ext_->base();
    std::uint32_t n = ext_->degree();
    // Augmented transpose [M^T | e_1]: column vector w with M^T w = e_1.
    Matrix<RatFunc> aug(n, n + 1, RatFunc::zero(ctx));
    Coords row = coords_;
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < n; ++i) aug.at(i, j) = row[i];
        if (j + 1 < n) {
            // multiply by y: shift up, fold the overflow through y^n
            RatFunc top = row[n - 1];
            for (std::uint32_t i = n - 1; i > 0; --i) row[i] = row[i - 1];
            row[0] = RatFunc::zero(ctx);
            if (!top.is_zero()) {
                const Coords& red = ext_->reduction_rows()[0];
                for (std::uint32_t i = 0; i < n; ++i)
                    if (!red[i].is_zero()) row[i] = row[i] + top * red[i];
            }
        }
    }
    aug.at(0, n) = RatFunc::one(ctx);
    std::vector<std::size_t> pivots = rref_in_place(aug);
    Coords result = zero_coords(ctx, n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) throw std::logic_error("multiplication matrix is singular");
        result[pivots[r]] = aug.at(r, n);
    }
    return LElement(ext_, std::move(result));
}

LElement operator/(const LElement& a, const LElement& b) { return a * b.inverse(); }

bool operator==(const LElement& a, const LElement& b) {
    return a.ext_ == b.ext_ && a.coords_ == b.coords_;
}

std::string LElement::to_string() const {
    std::string out;
    for (std::size_t jj = coords_.size(); jj-- > 0;) {
        const RatFunc& c = coords_[jj];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (jj == 0) {
            out += c.to_string();
            continue;
        }
        std::string ys = jj == 1 ? "y" : "y^" + std::to_string(jj);
        if (c.is_one()) {
            out += ys;
        } else if (c.is_polynomial() && c.num().degree() >= 1) {
            // Multi-term polynomial coefficients need parentheses; a bare
            // monomial like β^3*x reads fine as extra product factors.
            bool monomial = true;
            for (int i = 0; i < c.num().degree(); ++i)
                if (!c.num().coeffs()[static_cast<std::size_t>(i)].is_zero()) monomial = false;
            if (monomial)
                out += gabfield::to_string(c.num()) + "*" + ys;
            else
                out += "(" + gabfield::to_string(c.num()) + ")*" + ys;
        } else {
            out += c.to_string() + "*" + ys;
        }
    }
    return out.empty() ? "0" : out;
}

LElement apply_theta(const LElement& a, long long i) {
    const CyclicExtension& ext = a.extension();
    const FqContext& ctx = ext.base();
    Coords r = zero_coords(ctx, ext.degree());
    for (std::uint32_t j = 0; j < ext.degree(); ++j) {
        if (a.coord(j).is_zero()) continue;
        const Coords& row = ext.theta_row(i, j);
        for (std::uint32_t t = 0; t < ext.degree(); ++t)
            if (!row[t].is_zero()) r[t] = r[t] + a.coord(j) * row[t];
    }
    return LElement(a.extension_ptr(), std::move(r));
}

Matrix<RatFunc> expand_matrix(std::span<const LElement> c) {
    if (c.empty()) throw std::invalid_argument("cannot expand an empty vector");
    const CyclicExtension* ext = c[0].extension_ptr();
    for (const LElement& e : c)
        if (e.extension_ptr() != ext) throw std::invalid_argument("extension mismatch");
    Matrix<RatFunc> m(c.size(), ext->degree(), RatFunc::zero(ext->base()));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::uint32_t j = 0; j < ext->degree(); ++j) m.at(i, j) = c[i].coord(j);
    return m;
}

}  // namespace gabfield
