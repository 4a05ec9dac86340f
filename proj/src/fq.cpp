#include "gabfield/fq.hpp"

#include <algorithm>
#include <numeric>

namespace gabfield {

namespace {

// Tables are worth it up to this field size; the fields in scope are tiny.
constexpr std::uint32_t kTableLimit = 256;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Plain mod-p polynomial helpers on digit vectors (lowest power first), used
// only during context construction, before any table exists.
using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
    // b monic
    while (a.size() >= b.size() && !a.empty()) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

bool divides(const Digits& d, Digits a, std::uint32_t p) {
    return poly_mod(std::move(a), d, p).empty();
}

}  // namespace

std::shared_ptr<const FqContext> FqContext::make(std::uint32_t p, std::uint32_t m,
                                                 std::vector<std::uint32_t> modulus,
                                                 std::string symbol) {
    return std::shared_ptr<const FqContext>(
        new FqContext(p, m, std::move(modulus), std::move(symbol)));
}

FqContext::FqContext(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                     std::string symbol)
    : p_(p), m_(m), modulus_(std::move(modulus)), symbol_(std::move(symbol)) {
    if (!is_prime(p_)) throw ValidationError("characteristic must be prime, got " + std::to_string(p_));
    if (m_ == 0) throw ValidationError("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > (1u << 20))
            throw ValidationError("field size out of scope (q too large)");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (m_ == 1) {
        modulus_ = {0, 1};
        symbol_.clear();
    } else {
        if (modulus_.size() != m_ + 1)
            throw ValidationError("modulus must have degree m = " + std::to_string(m_));
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) throw ValidationError("modulus must be monic");
        if (symbol_.empty()) symbol_ = "a";
        // Exhaustive irreducibility check: trial-divide by every monic
        // polynomial of degree 1..m/2.
        for (std::uint32_t d = 1; 2 * d <= m_; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Digits cand(d + 1, 0);
                std::uint64_t v = idx;
                for (std::uint32_t i = 0; i < d; ++i) {
                    cand[i] = static_cast<std::uint32_t>(v % p_);
                    v /= p_;
                }
                cand[d] = 1;
                if (divides(cand, modulus_, p_))
                    throw ValidationError("modulus is reducible over F_" + std::to_string(p_));
            }
        }
    }

    pow_p_.resize(m_ + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    // β^{m+i} digits for reduction of degree-(2m-2) products.
    if (m_ >= 2) {
        Digits cur(modulus_.begin(), modulus_.end() - 1);  // β^m = -(low part)
        for (auto& c : cur) c = (p_ - c) % p_;
        red_rows_.push_back(cur);
        for (std::uint32_t i = 1; i + 1 < m_; ++i) {
            Digits next(m_, 0);
            for (std::uint32_t j = 0; j + 1 < m_; ++j) next[j + 1] = cur[j];
            if (cur[m_ - 1] != 0) {
                for (std::uint32_t j = 0; j < m_; ++j) {
                    std::uint64_t t = static_cast<std::uint64_t>(cur[m_ - 1]) * red_rows_[0][j] % p_;
                    next[j] = static_cast<std::uint32_t>((next[j] + t) % p_);
                }
            }
            red_rows_.push_back(next);
            cur = next;
        }
    }

    if (q_ <= kTableLimit) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t s = 0;
                for (std::uint32_t i = 0; i < m_; ++i)
                    s += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
                add_tab_[static_cast<std::size_t>(a) * q_ + b] = s;
                mul_tab_[static_cast<std::size_t>(a) * q_ + b] = mul_direct(a, b);
            }
        }
    }

    inv_tab_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
        if (inv_tab_[a] != 0) continue;
        for (std::uint32_t b = a; b < q_; ++b) {
            if (mul(a, b) == 1) {
                inv_tab_[a] = b;
                inv_tab_[b] = a;
                break;
            }
        }
        if (inv_tab_[a] == 0) throw ValidationError("modulus is reducible (unit without inverse)");
    }

    if (m_ >= 2) {
        dlog_.assign(q_, -1);
        std::uint32_t beta = pow_p_[1];
        std::uint32_t cur = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            if (dlog_[cur] < 0) dlog_[cur] = static_cast<int>(e);
            cur = mul(cur, beta);
        }
    }
}

std::uint32_t FqContext::digit(std::uint32_t label, std::uint32_t i) const {
    return label / pow_p_[i] % p_;
}

std::uint32_t FqContext::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < m_; ++i) s += ((digit(a, i) + digit(b, i)) % p_) * pow_p_[i];
    return s;
}

std::uint32_t FqContext::neg(std::uint32_t a) const {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < m_; ++i) s += ((p_ - digit(a, i)) % p_) * pow_p_[i];
    return s;
}

std::uint32_t FqContext::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FqContext::mul_direct(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    // Convolve power-basis digits, then fold β^{m+i} via the reduction rows.
    std::uint32_t conv[64] = {0};
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t ai = digit(a, i);
        if (ai == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            conv[i + j] = (conv[i + j] + ai * digit(b, j)) % p_;
    }
    for (std::uint32_t k = 2 * m_ - 2; k >= m_; --k) {
        std::uint32_t c = conv[k];
        if (c != 0) {
            const auto& row = red_rows_[k - m_];
            for (std::uint32_t j = 0; j < m_; ++j) conv[j] = (conv[j] + c * row[j]) % p_;
        }
        if (k == m_) break;
    }
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < m_; ++i) s += conv[i] * pow_p_[i];
    return s;
}

std::uint32_t FqContext::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<std::size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

std::uint32_t FqContext::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("division by zero in F_q");
    return inv_tab_[a];
}

std::uint32_t FqContext::pow(std::uint32_t a, long long e) const {
    if (e < 0) {
        a = inv(a);  // throws on zero base
        e = -e;
    }
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::size_t FqContext::multiplicative_order(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("zero has no multiplicative order");
    std::size_t full = q_ - 1;
    std::size_t order = full;
    for (std::size_t d = 1; d * d <= full; ++d) {
        if (full % d != 0) continue;
        for (std::size_t cand : {d, full / d})
            if (cand < order && pow(a, static_cast<long long>(cand)) == 1) order = cand;
    }
    return order;
}

bool FqContext::is_dth_power(std::uint32_t a, std::uint64_t d) const {
    if (a == 0) return true;
    std::uint64_t g = std::gcd<std::uint64_t>(d, q_ - 1);
    return pow(a, static_cast<long long>((q_ - 1) / g)) == 1;
}

FqElement FqContext::zero() const { return FqElement(this, 0); }
FqElement FqContext::one() const { return FqElement(this, 1); }

FqElement FqContext::generator() const {
    if (m_ < 2) throw std::invalid_argument("prime field has no generator symbol");
    return FqElement(this, pow_p_[1]);
}

FqElement FqContext::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FqElement(this, static_cast<std::uint32_t>(r));
}

FqElement FqContext::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > m_) throw std::invalid_argument("too many power-basis coefficients");
    std::uint32_t label = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) label += coeffs[i] % p_ * pow_p_[i];
    return FqElement(this, label);
}

FqElement FqContext::from_label(std::uint32_t label) const {
    if (label >= q_) throw std::invalid_argument("field label out of range");
    return FqElement(this, label);
}

FqElement FqContext::least_primitive() const {
    for (std::uint32_t a = 1; a < q_; ++a)
        if (multiplicative_order(a) == q_ - 1) return FqElement(this, a);
    throw std::logic_error("no primitive element found");  // unreachable: F_q^x is cyclic
}

std::string FqContext::to_string(std::uint32_t label) const {
    if (label == 0) return "0";
    if (m_ == 1) return std::to_string(label);
    int e = dlog_[label];
    if (e == 0) return "1";
    if (e == 1) return symbol_;
    if (e > 1) return symbol_ + "^" + std::to_string(e);
    // β is not primitive in this context; fall back to the polynomial form.
    std::string out;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        std::uint32_t c = digit(label, static_cast<std::uint32_t>(i));
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += symbol_;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace gabfield
