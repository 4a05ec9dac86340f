#include "gabfield/code.hpp"

#include <cassert>

namespace gabfield {

std::size_t rank_over_K(const KMatrix& m) { return rank_of(m); }

std::size_t rank_weight(std::span<const LElement> c) {
    if (c.empty()) return 0;
    bool all_zero = true;
    for (const LElement& e : c)
        if (!e.is_zero()) all_zero = false;
    if (all_zero) return 0;
    return rank_over_K(expand_matrix(c));
}

GabCode GabCode::build(std::shared_ptr<const CyclicExtension> ext, std::vector<LElement> g,
                       std::size_t k) {
    std::size_t n = ext->degree();
    if (g.size() != n)
        throw ValidationError("need exactly n = " + std::to_string(n) + " evaluation points");
    for (const LElement& e : g)
        if (e.extension_ptr() != ext.get()) throw std::invalid_argument("extension mismatch");
    if (k < 1 || k > n) throw ValidationError("dimension k must satisfy 1 <= k <= n");
    if (rank_weight(g) != n)
        throw ValidationError("evaluation points are K-linearly dependent");

    GabCode code;
    code.ext_ = std::move(ext);
    code.k_ = k;
    code.rows_.reserve(k);
    std::vector<LElement> row = g;
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0)
            for (LElement& e : row) e = apply_theta(e);
        code.rows_.push_back(row);
    }
    code.g_ = std::move(g);
    return code;
}

GabCode GabCode::build(std::shared_ptr<const CyclicExtension> ext, std::size_t k) {
    std::vector<LElement> basis;
    basis.reserve(ext->degree());
    for (std::uint32_t j = 0; j < ext->degree(); ++j) basis.push_back(ext->y_power(j));
    return build(std::move(ext), std::move(basis), k);
}

std::vector<LElement> GabCode::encode(std::span<const LElement> message) const {
    if (message.size() != k_)
        throw std::invalid_argument("message must have exactly k = " + std::to_string(k_) +
                                    " coordinates");
    std::vector<LElement> c(n(), ext_->zero());
    for (std::size_t i = 0; i < k_; ++i) {
        if (message[i].is_zero()) continue;
        for (std::size_t j = 0; j < n(); ++j) c[j] = c[j] + message[i] * rows_[i][j];
    }
#ifndef NDEBUG
    // The matrix route and the evaluation-code route must agree.
    ThetaPoly f(ext_.get(), std::vector<LElement>(message.begin(), message.end()));
    assert(c == encode_via_eval(f));
#endif
    return c;
}

std::vector<LElement> GabCode::encode_via_eval(const ThetaPoly& f) const {
    std::vector<LElement> c;
    c.reserve(n());
    for (const LElement& point : g_) c.push_back(f.eval(point));
    return c;
}

const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::Success: return "success";
        case DecodeStatus::KernelTrivial: return "kernel-trivial";
        case DecodeStatus::AllWZero: return "all-W-zero";
        case DecodeStatus::NonzeroRemainder: return "nonzero-remainder";
        case DecodeStatus::WeightExceedsRadius: return "weight-exceeds-t";
    }
    return "unknown";
}

namespace {

// Split a reconstruction solution vector into its (W, N) pair.
std::pair<ThetaPoly, ThetaPoly> split_solution(const CyclicExtension* ext,
                                               const std::vector<LElement>& sol, std::size_t wn) {
    std::vector<LElement> w(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(wn));
    std::vector<LElement> n(sol.begin() + static_cast<std::ptrdiff_t>(wn), sol.end());
    return {ThetaPoly(ext, std::move(w)), ThetaPoly(ext, std::move(n))};
}

}  // namespace

DecodeOutcome decode(const GabCode& code, std::span<const LElement> received) {
    const CyclicExtension* ext = code.extension_ptr().get();
    std::size_t n = code.n();
    std::size_t k = code.k();
    std::size_t t = code.unique_radius();
    if (received.size() != n)
        throw std::invalid_argument("received word must have exactly n coordinates");
    for (const LElement& e : received)
        if (e.extension_ptr() != ext) throw std::invalid_argument("extension mismatch");

    DecodeOutcome out;

    // Homogeneous system W(y_i) - N(g_i) = 0 over L in the t+1 coefficients
    // of W and the k+t coefficients of N.
    std::size_t w_unknowns = t + 1;
    std::size_t n_unknowns = k + t;
    Matrix<LElement> sys(n, w_unknowns + n_unknowns, ext->zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < w_unknowns; ++j)
            sys.at(i, j) = apply_theta(received[i], static_cast<long long>(j));
        for (std::size_t j = 0; j < n_unknowns; ++j)
            sys.at(i, w_unknowns + j) =
                -apply_theta(code.eval_points()[i], static_cast<long long>(j));
    }

    std::vector<std::vector<LElement>> kernel = kernel_basis(std::move(sys), ext->one());
    if (kernel.empty()) {
        out.status = DecodeStatus::KernelTrivial;
        return out;
    }

    // Prefer a kernel basis vector with W != 0; fall back to pairwise sums.
    auto has_nonzero_w = [&](const std::vector<LElement>& sol) {
        for (std::size_t j = 0; j < w_unknowns; ++j)
            if (!sol[j].is_zero()) return true;
        return false;
    };
    std::optional<std::vector<LElement>> chosen;
    for (const auto& sol : kernel)
        if (has_nonzero_w(sol)) {
            chosen = sol;
            break;
        }
    if (!chosen) {
        for (std::size_t a = 0; a < kernel.size() && !chosen; ++a)
            for (std::size_t b = a + 1; b < kernel.size() && !chosen; ++b) {
                std::vector<LElement> sum;
                sum.reserve(kernel[a].size());
                for (std::size_t j = 0; j < kernel[a].size(); ++j)
                    sum.push_back(kernel[a][j] + kernel[b][j]);
                if (has_nonzero_w(sum)) chosen = std::move(sum);
            }
    }
    if (!chosen) {
        out.status = DecodeStatus::AllWZero;
        return out;
    }

    auto [w_poly, n_poly] = split_solution(ext, *chosen, w_unknowns);
    // Normalize so W is monic: scaling a solution on the left stays a solution.
    LElement scale = w_poly.leading().inverse();
    if (!scale.is_one()) {
        std::vector<LElement> ws, ns;
        for (const LElement& c : w_poly.coeffs()) ws.push_back(scale * c);
        for (const LElement& c : n_poly.coeffs()) ns.push_back(scale * c);
        w_poly = ThetaPoly(ext, std::move(ws));
        n_poly = ThetaPoly(ext, std::move(ns));
    }
    out.w_poly = w_poly;
    out.n_poly = n_poly;

    auto [f, rem] = left_divmod(n_poly, w_poly);
    if (!rem.is_zero()) {
        out.status = DecodeStatus::NonzeroRemainder;
        return out;
    }
    if (f.degree() >= static_cast<int>(k)) {
        out.status = DecodeStatus::WeightExceedsRadius;
        return out;
    }

    std::vector<LElement> codeword = code.encode_via_eval(f);
    std::vector<LElement> error;
    error.reserve(n);
    for (std::size_t i = 0; i < n; ++i) error.push_back(received[i] - codeword[i]);
    std::size_t err_rank = rank_weight(error);
    if (err_rank > t) {
        out.status = DecodeStatus::WeightExceedsRadius;
        return out;
    }

    std::vector<LElement> message;
    message.reserve(k);
    for (std::size_t i = 0; i < k; ++i) message.push_back(f.coeff(i));
#ifndef NDEBUG
    {
        std::vector<LElement> check = code.encode(message);
        for (std::size_t i = 0; i < n; ++i) assert(check[i] + error[i] == received[i]);
    }
#endif
    out.status = DecodeStatus::Success;
    out.result = DecodeResult{std::move(message), std::move(f), std::move(error), err_rank};
    return out;
}

FqElement random_fq(const FqContext& ctx, Rng& rng) {
    return ctx.from_label(static_cast<std::uint32_t>(rng.below(ctx.size())));
}

FqPoly random_poly(const FqContext& ctx, std::size_t max_deg, Rng& rng) {
    std::vector<FqElement> c;
    c.reserve(max_deg + 1);
    for (std::size_t i = 0; i <= max_deg; ++i) c.push_back(random_fq(ctx, rng));
    return FqPoly(std::move(c));
}

RatFunc random_ratfunc(const FqContext& ctx, std::size_t max_deg, Rng& rng) {
    FqPoly num = random_poly(ctx, max_deg, rng);
    FqPoly den = random_poly(ctx, max_deg, rng);
    while (den.is_zero()) den = random_poly(ctx, max_deg, rng);
    return RatFunc(std::move(num), std::move(den));
}

RatFunc random_poly_ratfunc(const FqContext& ctx, std::size_t max_deg, Rng& rng) {
    return RatFunc::from_poly(random_poly(ctx, max_deg, rng), ctx);
}

LElement random_lelement(const CyclicExtension& ext, std::size_t max_deg, Rng& rng) {
    std::vector<RatFunc> coords;
    coords.reserve(ext.degree());
    for (std::uint32_t j = 0; j < ext.degree(); ++j)
        coords.push_back(random_ratfunc(ext.base(), max_deg, rng));
    return ext.from_coords(std::move(coords));
}

LElement random_polynomial_lelement(const CyclicExtension& ext, std::size_t max_deg, Rng& rng) {
    std::vector<RatFunc> coords;
    coords.reserve(ext.degree());
    for (std::uint32_t j = 0; j < ext.degree(); ++j)
        coords.push_back(random_poly_ratfunc(ext.base(), max_deg, rng));
    return ext.from_coords(std::move(coords));
}

std::vector<LElement> random_error(const CyclicExtension& ext, std::size_t n, std::size_t t,
                                   std::size_t deg_bound, std::uint64_t seed) {
    if (t > n) throw std::invalid_argument("error rank cannot exceed the length");
    std::vector<LElement> e(n, ext.zero());
    if (t == 0) return e;
    Rng rng = Rng::derive(seed, 0x6572726f72ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // K-independent span elements ε_1..ε_t.
        std::vector<LElement> support;
        while (support.size() < t) {
            support.push_back(random_lelement(ext, deg_bound, rng));
            if (rank_weight(support) != support.size()) support.pop_back();
        }
        for (std::size_t i = 0; i < n; ++i) {
            LElement acc = ext.zero();
            for (std::size_t j = 0; j < t; ++j) {
                RatFunc a = random_ratfunc(ext.base(), deg_bound, rng);
                acc = acc + ext.from_scalar(std::move(a)) * support[j];
            }
            e[i] = std::move(acc);
        }
        if (rank_weight(e) == t) return e;
    }
    throw std::logic_error("failed to sample an error of the requested rank");
}

}  // namespace gabfield
