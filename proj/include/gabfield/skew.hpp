#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gabfield/extension.hpp"

namespace gabfield {

/// Element of the skew ring L[Z;θ]: a finite sum Σ p_i Z^i acting on L by
/// g ↦ Σ p_i θ^i(g). Coefficients multiply from the left, matching that
/// evaluation form; the ring product is the Ore rule
///   (Σ p_i Z^i)·(Σ q_j Z^j) = Σ p_i θ^i(q_j) Z^{i+j},
/// a non-commutative integral domain with left and right Euclidean division.
/// Canonical form drops trailing zero coefficients; the zero polynomial has
/// degree -1, the unity is the constant Z^0.
class ThetaPoly {
  public:
    explicit ThetaPoly(const CyclicExtension* ext) : ext_(ext) {}  // zero
    ThetaPoly(const CyclicExtension* ext, std::vector<LElement> coeffs);
    static ThetaPoly one(const CyclicExtension* ext);
    /// coeff * Z^k
    static ThetaPoly monomial(LElement coeff, std::size_t k);

    const CyclicExtension& extension() const { return *ext_; }
    const CyclicExtension* extension_ptr() const { return ext_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<LElement>& coeffs() const { return c_; }
    /// Coefficient of Z^i, zero beyond the degree.
    LElement coeff(std::size_t i) const;
    const LElement& leading() const;

    /// Left-scale so the leading coefficient is 1.
    ThetaPoly monic() const;

    /// The K-linear action on L.
    LElement eval(const LElement& g) const;
    /// Matrix of g ↦ eval(g) on the basis, same row convention as
    /// CyclicExtension::theta_matrix.
    Matrix<RatFunc> operator_matrix() const;

    friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
    ThetaPoly operator-() const;
    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
        return a.ext_ == b.ext_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ThetaPoly& a, const ThetaPoly& b) { return !(a == b); }

    /// Terms in descending degree, e.g. "(y + 1)*Z^2 + (x*y)*Z + (3)".
    std::string to_string() const;

  private:
    const CyclicExtension* ext_;
    std::vector<LElement> c_;
};

/// A = B·Q + R with deg R < deg B. The quotient step solves
/// B_b·θ^b(c) = lead(A), so it walks through θ^{-deg B} (θ has order n).
std::pair<ThetaPoly, ThetaPoly> left_divmod(const ThetaPoly& a, const ThetaPoly& b);

/// A = Q·B + R with deg R < deg B.
std::pair<ThetaPoly, ThetaPoly> right_divmod(const ThetaPoly& a, const ThetaPoly& b);

/// Dimension over K of {g in L : P(g) = 0}; at most deg P. P must be nonzero.
std::size_t root_space_dim(const ThetaPoly& p);

/// The unique monic skew polynomial of degree dim_K span(v) vanishing on
/// span(v), built by the iterative product
///   P_{i+1} = (Z - θ(P_i(v))·P_i(v)^{-1}) · P_i over the v with P_i(v) != 0.
ThetaPoly annihilator(const CyclicExtension* ext, std::span<const LElement> v);

/// Monic right generator of {P : P(c_i) = 0 for all i}; equals the
/// annihilator of the span of the entries, and its degree is the rank weight.
ThetaPoly min_ideal_generator(const CyclicExtension* ext, std::span<const LElement> c);

}  // namespace gabfield
