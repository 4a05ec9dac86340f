#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gabfield/random.hpp"
#include "gabfield/skew.hpp"

namespace gabfield {

using KMatrix = Matrix<RatFunc>;

/// Row rank over K = F_q(x) by exact Gaussian elimination.
std::size_t rank_over_K(const KMatrix& m);

/// Rank weight of a vector over L: the K-rank of its coordinate matrix. Also
/// equals the degree of min_ideal_generator of the entries (cross-checked in
/// the test suites).
std::size_t rank_weight(std::span<const LElement> c);

/// Generalized Gabidulin code Gab_{θ,k}(g) over a cyclic extension: the
/// evaluation code of skew polynomials of degree < k at K-independent points
/// g, with generator matrix G_{ij} = θ^{i-1}(g_j).
class GabCode {
  public:
    /// Validates that g has full rank weight n and 1 <= k <= n.
    static GabCode build(std::shared_ptr<const CyclicExtension> ext,
                         std::vector<LElement> g, std::size_t k);
    /// g defaults to the integral basis (1, y, ..., y^{n-1}).
    static GabCode build(std::shared_ptr<const CyclicExtension> ext, std::size_t k);

    const CyclicExtension& extension() const { return *ext_; }
    std::shared_ptr<const CyclicExtension> extension_ptr() const { return ext_; }
    std::size_t n() const { return g_.size(); }
    std::size_t k() const { return k_; }
    std::size_t min_distance() const { return n() - k_ + 1; }
    /// Unique decoding radius ⌊(n-k)/2⌋.
    std::size_t unique_radius() const { return (n() - k_) / 2; }
    const std::vector<LElement>& eval_points() const { return g_; }
    const std::vector<std::vector<LElement>>& generator() const { return rows_; }

    /// c = m·G. The evaluation-code route Σ m_i θ^{i-1} applied to g gives the
    /// same vector; encode_via_eval exposes it for cross-checks and decode.
    std::vector<LElement> encode(std::span<const LElement> message) const;
    std::vector<LElement> encode_via_eval(const ThetaPoly& f) const;

  private:
    GabCode() = default;
    std::shared_ptr<const CyclicExtension> ext_;
    std::vector<LElement> g_;
    std::size_t k_ = 0;
    std::vector<std::vector<LElement>> rows_;  // k rows of θ-conjugates
};

enum class DecodeStatus {
    Success,
    KernelTrivial,      // reconstruction system has only the zero solution
    AllWZero,           // no kernel representative with W != 0
    NonzeroRemainder,   // left division N = W·f + R left a remainder
    WeightExceedsRadius // recovered f fails deg f < k or w(y - ev_g(f)) <= t
};

const char* to_string(DecodeStatus s);

struct DecodeResult {
    std::vector<LElement> message;  // coefficients of the information polynomial
    ThetaPoly info_poly;
    std::vector<LElement> error;
    std::size_t error_rank = 0;
};

/// Outcome of decode: a status, the result on success, and the W/N pair of
/// the reconstruction for diagnostics.
struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::KernelTrivial;
    std::optional<DecodeResult> result;
    std::optional<ThetaPoly> w_poly;
    std::optional<ThetaPoly> n_poly;
    bool ok() const { return status == DecodeStatus::Success; }
};

/// Decoder via linearized reconstruction: solve W(y_i) = N(g_i) with
/// deg W <= t, deg N < k+t over L, then recover f by left division of N by W.
/// Failure is an outcome, not an exception.
DecodeOutcome decode(const GabCode& code, std::span<const LElement> received);

/// Error vector of rank weight exactly t: e_i = Σ_j a_{ij} ε_j with random
/// K-independent ε and random coefficient fractions of degree <= deg_bound.
/// Deterministic under the seed; resamples on rank shortfall.
std::vector<LElement> random_error(const CyclicExtension& ext, std::size_t n, std::size_t t,
                                   std::size_t deg_bound, std::uint64_t seed);

// Seeded random element helpers (shared by random_error, the CLI simulator
// and the test batteries).
FqElement random_fq(const FqContext& ctx, Rng& rng);
FqPoly random_poly(const FqContext& ctx, std::size_t max_deg, Rng& rng);
RatFunc random_ratfunc(const FqContext& ctx, std::size_t max_deg, Rng& rng);
RatFunc random_poly_ratfunc(const FqContext& ctx, std::size_t max_deg, Rng& rng);
LElement random_lelement(const CyclicExtension& ext, std::size_t max_deg, Rng& rng);
LElement random_polynomial_lelement(const CyclicExtension& ext, std::size_t max_deg, Rng& rng);

}  // namespace gabfield
