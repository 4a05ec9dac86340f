#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gabfield/errors.hpp"

namespace gabfield {

class FqElement;

/// Description of a finite field F_q = F_p[β]/(m(β)) with q = p^m.
///
/// Elements are stored in the power basis (1, β, ..., β^{m-1}) of the residue
/// class β of the modulus variable; the packed base-p digit vector of an
/// element is its "label" in [0, q). The context is immutable after
/// construction and may be shared freely across threads. Elements hold a
/// plain pointer to their context, so the context must outlive them (keep the
/// shared_ptr returned by make() alive).
class FqContext {
  public:
    /// Validates p prime and the modulus monic irreducible of degree m
    /// (exhaustive trial division; fields in scope are tiny). For m == 1 the
    /// modulus may be empty and the symbol is ignored: prime fields print as
    /// integers.
    static std::shared_ptr<const FqContext> make(std::uint32_t p, std::uint32_t m,
                                                 std::vector<std::uint32_t> modulus = {},
                                                 std::string symbol = "");

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    const std::string& symbol() const { return symbol_; }
    /// Modulus coefficients, constant term first, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    /// Residue class of the modulus variable; only defined for m >= 2.
    FqElement generator() const;
    /// Integer v reduced into the prime subfield.
    FqElement from_int(long long v) const;
    /// Element from power-basis digits (reduced mod p), lowest power first.
    FqElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    FqElement from_label(std::uint32_t label) const;

    /// Smallest-label element of multiplicative order q-1.
    FqElement least_primitive() const;

    // Label-level arithmetic. Kept public so polynomial inner loops can avoid
    // element wrappers where it matters; FqElement is the normal interface.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on 0
    std::uint32_t pow(std::uint32_t a, long long e) const;
    std::uint32_t digit(std::uint32_t label, std::uint32_t i) const;

    std::size_t multiplicative_order(std::uint32_t a) const;  // throws on 0
    /// Whether a is a d-th power in F_q (true for a = 0).
    bool is_dth_power(std::uint32_t a, std::uint64_t d) const;

    /// Exponent e with β^e equal to the element, or -1 if the element is not
    /// a power of β (or is zero). Used for the β-power display form.
    int dlog(std::uint32_t label) const { return m_ >= 2 ? dlog_[label] : -1; }

    std::string to_string(std::uint32_t label) const;

  private:
    FqContext(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
              std::string symbol);

    std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;    // length m+1, monic, digits in [0,p)
    std::string symbol_;
    std::vector<std::uint32_t> pow_p_;      // p^i for packing, length m+1
    std::vector<std::vector<std::uint32_t>> red_rows_;  // digits of β^{m+i}, i < m-1
    std::vector<std::uint32_t> add_tab_;    // q*q when tables enabled, else empty
    std::vector<std::uint32_t> mul_tab_;
    std::vector<std::uint32_t> inv_tab_;    // q entries, inv_tab_[0] unused
    std::vector<int> dlog_;                 // q entries for m >= 2
};

/// Value type for elements of F_q. Plain 12-byte value: context pointer plus
/// packed power-basis label. Arithmetic between elements of different
/// contexts throws.
class FqElement {
  public:
    FqElement() = default;  // null element, only valid as a container placeholder
    FqElement(const FqContext* ctx, std::uint32_t label) : ctx_(ctx), label_(label) {}

    const FqContext& context() const { return *ctx_; }
    const FqContext* context_ptr() const { return ctx_; }
    std::uint32_t label() const { return label_; }
    /// Power-basis digit of β^i.
    std::uint32_t coeff(std::uint32_t i) const { return ctx_->digit(label_, i); }

    bool is_zero() const { return label_ == 0; }
    bool is_one() const { return label_ == 1; }
    FqElement zero_like() const { return FqElement(ctx_, 0); }
    FqElement one_like() const { return FqElement(ctx_, 1); }

    FqElement inverse() const { return FqElement(ctx_, ctx_->inv(label_)); }
    /// Square-and-multiply power; e < 0 requires a nonzero base.
    FqElement pow(long long e) const { return FqElement(ctx_, ctx_->pow(label_, e)); }
    std::size_t multiplicative_order() const { return ctx_->multiplicative_order(label_); }

    std::string to_string() const { return ctx_->to_string(label_); }

    friend FqElement operator+(const FqElement& a, const FqElement& b) {
        check_same(a, b);
        return FqElement(a.ctx_, a.ctx_->add(a.label_, b.label_));
    }
    friend FqElement operator-(const FqElement& a, const FqElement& b) {
        check_same(a, b);
        return FqElement(a.ctx_, a.ctx_->sub(a.label_, b.label_));
    }
    friend FqElement operator*(const FqElement& a, const FqElement& b) {
        check_same(a, b);
        return FqElement(a.ctx_, a.ctx_->mul(a.label_, b.label_));
    }
    friend FqElement operator/(const FqElement& a, const FqElement& b) {
        check_same(a, b);
        return FqElement(a.ctx_, a.ctx_->mul(a.label_, b.ctx_->inv(b.label_)));
    }
    FqElement operator-() const { return FqElement(ctx_, ctx_->neg(label_)); }

    friend bool operator==(const FqElement& a, const FqElement& b) {
        return a.ctx_ == b.ctx_ && a.label_ == b.label_;
    }
    friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

  private:
    static void check_same(const FqElement& a, const FqElement& b) {
        if (a.ctx_ != b.ctx_) throw std::invalid_argument("field context mismatch");
    }

    const FqContext* ctx_ = nullptr;
    std::uint32_t label_ = 0;
};

}  // namespace gabfield
