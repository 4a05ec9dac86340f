#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gabfield/linalg.hpp"
#include "gabfield/ratfunc.hpp"

namespace gabfield {

class LElement;

enum class ExtensionKind { Kummer, ArtinSchreier };

/// Degree-n cyclic extension L = K[y]/(f) of K = F_q(x), with a distinguished
/// generator θ of Gal(L/K):
///   Kummer:        f = Y^n - u,      θ(y) = α·y  (α of exact order n, n | q-1)
///   Artin-Schreier f = Y^p - Y - u,  θ(y) = y + 1
///
/// Elements are coordinate vectors over the basis (1, y, ..., y^{n-1}). The
/// extension is immutable after construction (θ-power matrices precomputed)
/// and shareable across threads.
class CyclicExtension {
  public:
    /// Kummer construction. Requires n | q-1 and u not a d-th power in K for
    /// any prime d | n (checked via factorization of u; rejection names the
    /// witness d). alpha defaults to γ^((q-1)/n) for the least primitive γ.
    static std::shared_ptr<const CyclicExtension> make_kummer(
        std::shared_ptr<const FqContext> base, const RatFunc& u, std::uint32_t n,
        std::optional<FqElement> alpha = std::nullopt);

    /// Artin-Schreier construction of degree p. u must be certified outside
    /// {w^p - w}: accepted when den(u) has an irreducible factor of
    /// multiplicity not divisible by p, or u is a nonconstant polynomial of
    /// degree not divisible by p; anything else is rejected as inconclusive.
    static std::shared_ptr<const CyclicExtension> make_artin_schreier(
        std::shared_ptr<const FqContext> base, const RatFunc& u);

    const FqContext& base() const { return *base_; }
    std::shared_ptr<const FqContext> base_ptr() const { return base_; }
    ExtensionKind kind() const { return kind_; }
    std::uint32_t degree() const { return n_; }
    const RatFunc& u() const { return *u_; }
    /// Kummer root of unity; throws for Artin-Schreier extensions.
    const FqElement& alpha() const;

    /// Matrix of θ^power on the basis: row j holds the coordinates of
    /// θ^power(y^j), so the first row is always (1, 0, ..., 0).
    Matrix<RatFunc> theta_matrix(std::uint32_t power = 1) const;

    /// Coordinates of θ^i(y^j); i is reduced mod n.
    const std::vector<RatFunc>& theta_row(long long i, std::uint32_t j) const;
    /// Coordinates of y^{n+i} for 0 <= i < n-1 (products reduce through these).
    const std::vector<std::vector<RatFunc>>& reduction_rows() const { return red_rows_; }
    /// Minimal polynomial of y over K (monic, degree n), for inversion.
    const Poly<RatFunc>& min_poly() const { return min_poly_; }

    LElement zero() const;
    LElement one() const;
    LElement y_power(std::uint32_t j) const;  // basis element y^j, j < n
    LElement from_scalar(RatFunc value) const;
    LElement from_coords(std::vector<RatFunc> coords) const;

    std::string describe() const;

  private:
    CyclicExtension() = default;
    void finish_construction();  // reduction rows, θ powers, order checks

    std::shared_ptr<const FqContext> base_;
    ExtensionKind kind_ = ExtensionKind::Kummer;
    std::optional<RatFunc> u_;  // set during construction
    std::uint32_t n_ = 0;
    std::optional<FqElement> alpha_;
    Poly<RatFunc> min_poly_;
    std::vector<std::vector<RatFunc>> red_rows_;
    // theta_pows_[i][j] = coordinates of θ^i(y^j), i in [0, n).
    std::vector<std::vector<std::vector<RatFunc>>> theta_pows_;
};

/// Element of L as coordinates over (1, y, ..., y^{n-1}). Plain value; the
/// extension must outlive it.
class LElement {
  public:
    LElement(const CyclicExtension* ext, std::vector<RatFunc> coords);

    const CyclicExtension& extension() const { return *ext_; }
    const CyclicExtension* extension_ptr() const { return ext_; }
    const std::vector<RatFunc>& coords() const { return coords_; }
    const RatFunc& coord(std::size_t j) const { return coords_[j]; }

    bool is_zero() const;
    bool is_one() const;
    /// All coordinates polynomial (denominator 1): an integral element of L
    /// over F_q[x] for the bases in scope.
    bool is_polynomial() const;
    LElement zero_like() const { return ext_->zero(); }
    LElement one_like() const { return ext_->one(); }

    LElement inverse() const;  // extended Euclid in K[Y] against the minimal polynomial

    friend LElement operator+(const LElement& a, const LElement& b);
    friend LElement operator-(const LElement& a, const LElement& b);
    friend LElement operator*(const LElement& a, const LElement& b);
    friend LElement operator/(const LElement& a, const LElement& b);
    LElement operator-() const;
    friend bool operator==(const LElement& a, const LElement& b);
    friend bool operator!=(const LElement& a, const LElement& b) { return !(a == b); }

    /// Terms in descending y-powers, e.g. "(x + 1)/(x + 3)*y^4 + y + 3".
    std::string to_string() const;

  private:
    const CyclicExtension* ext_;
    std::vector<RatFunc> coords_;
};

/// θ^i(a), i taken mod n (negative i reaches θ^{-1} through the group).
LElement apply_theta(const LElement& a, long long i = 1);

/// Coordinate matrix of a vector over L: row i holds the basis coordinates
/// of c[i], columns ordered from 1 to y^{n-1}.
Matrix<RatFunc> expand_matrix(std::span<const LElement> c);

/// Monic irreducible factorization by trial division in increasing degree,
/// returned as (factor, multiplicity) pairs plus no unit (input made monic).
std::vector<std::pair<FqPoly, unsigned>> factor_monic_irreducibles(const FqPoly& f);

}  // namespace gabfield
