#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "besovlab/errors.hpp"
#include "besovlab/real_ops.hpp"

namespace besovlab {

// Amplitude pair of one frequency, in the working precision R.
template <typename R>
struct SpectralTerm {
    int k;
    R cos_amp;
    R sin_amp;
};

namespace engines {

template <typename R>
R eval(const std::vector<SpectralTerm<R>>& terms, R x) {
    using Ops = RealOps<R>;
    R acc = R(0);
    for (const auto& t : terms)
        acc += t.cos_amp * Ops::cos(R(t.k) * x) + t.sin_amp * Ops::sin(R(t.k) * x);
    return acc;
}

template <typename R>
R eval_derivative(const std::vector<SpectralTerm<R>>& terms, R x, int order) {
    using Ops = RealOps<R>;
    R acc = R(0);
    for (const auto& t : terms) {
        const R k = R(t.k);
        const R c = Ops::cos(k * x);
        const R s = Ops::sin(k * x);
        switch (order & 3) {
            case 0: acc += t.cos_amp * c + t.sin_amp * s; break;
            case 1: acc += k * (-t.cos_amp * s + t.sin_amp * c); break;
            case 2: acc += k * k * (-t.cos_amp * c - t.sin_amp * s); break;
            case 3: acc += k * k * k * (t.cos_amp * s - t.sin_amp * c); break;
        }
    }
    return acc;
}

// Divide all frequencies by their gcd. |u|^p then has full period 2*pi and
// its integral over [0, 2*pi) is unchanged, so high lacunary frequencies cost
// the quadrature nothing.
template <typename R>
std::vector<SpectralTerm<R>> gcd_reduced(const std::vector<SpectralTerm<R>>& terms, int* gcd_out = nullptr) {
    int g = 0;
    for (const auto& t : terms)
        if (t.k > 0) g = std::gcd(g, t.k);
    if (gcd_out) *gcd_out = g;
    if (g <= 1) return terms;
    std::vector<SpectralTerm<R>> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back({t.k == 0 ? 0 : t.k / g, t.cos_amp, t.sin_amp});
    return out;
}

// ||u||_{L^2[0,2*pi)} from coefficients (Parseval):
// sqrt(2*pi*a_0^2 + pi*sum(a_k^2 + b_k^2)).
template <typename R>
R l2_norm(const std::vector<SpectralTerm<R>>& terms) {
    using Ops = RealOps<R>;
    R s = R(0);
    for (const auto& t : terms) {
        const R m = t.cos_amp * t.cos_amp + t.sin_amp * t.sin_amp;
        s += (t.k == 0) ? R(2) * m : m;
    }
    return Ops::sqrt(Ops::pi() * s);
}

// Sup norm: max over an 8x-oversampled grid, refined by Newton iteration on
// u' = 0 from the best node. The grid max alone is only phase-accurate to
// O((pi/8)^2); the polish restores machine-level accuracy for smooth data.
template <typename R>
R sup_norm(const std::vector<SpectralTerm<R>>& full_terms) {
    using Ops = RealOps<R>;
    if (full_terms.empty()) return R(0);
    const auto terms = gcd_reduced(full_terms);
    int k_max = 0;
    for (const auto& t : terms) k_max = std::max(k_max, t.k);
    if (k_max == 0) return Ops::abs(terms.front().cos_amp);

    int64_t m = 64;
    while (m < 8LL * (k_max + 1)) m <<= 1;
    const R two_pi = R(2) * Ops::pi();
    R best = R(-1);
    R best_x = R(0);
    for (int64_t i = 0; i < m; ++i) {
        const R x = two_pi * R(static_cast<double>(i)) / R(static_cast<double>(m));
        const R v = Ops::abs(eval(terms, x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    // Newton for u'(x) = 0 near the best node.
    const R spacing = two_pi / R(static_cast<double>(m));
    R x = best_x;
    for (int it = 0; it < 64; ++it) {
        const R d1 = eval_derivative(terms, x, 1);
        const R d2 = eval_derivative(terms, x, 2);
        if (Ops::abs(d2) <= R(0)) break;
        const R step = d1 / d2;
        if (Ops::abs(step) > spacing) break;  // left the basin; keep grid value
        x -= step;
        if (Ops::abs(step) <= Ops::epsilon() * (R(1) + Ops::abs(x))) break;
    }
    best = std::max(best, Ops::abs(eval(terms, x)));
    return best;
}

// integral over [0,2*pi) of |u|^p by composite trapezoid on the gcd-reduced
// polynomial, doubling the node count until two successive values agree to
// 1e-10 relative; capped at 2^22 nodes. Nodes are exact rational fractions of
// the period, evaluated by chunked complex rotation with periodic reseeding.
template <typename R>
class PowerIntegral {
  public:
    PowerIntegral(std::vector<SpectralTerm<R>> reduced_terms, R p)
        : terms_(std::move(reduced_terms)), p_(p) {}

    // Sum of |u|^p over nodes (2*i + offset)*pi/half_q for i < count, where
    // nodes are spaced 2*pi/q apart (q = 2*half_q when offset = 1).
    R node_sum(int64_t q, int offset) const {
        using Ops = RealOps<R>;
        const int64_t den = 2 * q;
        const int64_t count = q;
        std::vector<R> zr(terms_.size()), zi(terms_.size()), wr(terms_.size()), wi(terms_.size());
        R total = R(0);
        constexpr int64_t kChunk = 2048;
        for (int64_t start = 0; start < count; start += kChunk) {
            const int64_t stop = std::min(count, start + kChunk);
            for (size_t t = 0; t < terms_.size(); ++t) {
                // phase of term t at node index `start`: 2*pi*k*(2*start+offset)/den
                const int64_t num = (terms_[t].k % den) * ((2 * start + offset) % den) % den;
                const R theta = R(2) * Ops::pi() * R(static_cast<double>(num)) / R(static_cast<double>(den));
                zr[t] = Ops::cos(theta);
                zi[t] = Ops::sin(theta);
                const int64_t step = (2 * terms_[t].k) % den;
                const R phi = R(2) * Ops::pi() * R(static_cast<double>(step)) / R(static_cast<double>(den));
                wr[t] = Ops::cos(phi);
                wi[t] = Ops::sin(phi);
            }
            for (int64_t i = start; i < stop; ++i) {
                R v = R(0);
                for (size_t t = 0; t < terms_.size(); ++t) {
                    v += terms_[t].cos_amp * zr[t] + terms_[t].sin_amp * zi[t];
                    const R nr = zr[t] * wr[t] - zi[t] * wi[t];
                    zi[t] = zr[t] * wi[t] + zi[t] * wr[t];
                    zr[t] = nr;
                }
                total += power_abs(v);
            }
        }
        return total;
    }

    R power_abs(R v) const {
        using Ops = RealOps<R>;
        const R a = Ops::abs(v);
        if (p_ == R(1)) return a;
        if (p_ == R(2)) return a * a;
        return Ops::pow(a, p_);
    }

    const std::vector<SpectralTerm<R>>& terms() const { return terms_; }
    R p() const { return p_; }

  private:
    std::vector<SpectralTerm<R>> terms_;
    R p_;
};

// ||u||_{L^p[0,2*pi)} for finite p not equal to 2.
template <typename R>
R lp_quadrature_norm(const std::vector<SpectralTerm<R>>& full_terms, R p, double rel_tol = 1e-10,
                     int64_t cap = int64_t{1} << 22) {
    using Ops = RealOps<R>;
    if (full_terms.empty()) return R(0);
    auto terms = gcd_reduced(full_terms);
    int k_max = 0;
    for (const auto& t : terms) k_max = std::max(k_max, t.k);
    if (k_max == 0) {
        const R c = Ops::abs(terms.front().cos_amp);
        return c * Ops::pow(R(2) * Ops::pi(), R(1) / p);
    }

    PowerIntegral<R> integral(std::move(terms), p);
    int64_t q = 64;
    const R two_pi = R(2) * Ops::pi();
    R sum = integral.node_sum(q, 0);
    R value = two_pi / R(static_cast<double>(q)) * sum;
    R prev = value;
    while (q < cap) {
        sum += integral.node_sum(q, 1);
        q *= 2;
        prev = value;
        value = two_pi / R(static_cast<double>(q)) * sum;
        const bool resolved = q >= 4 * static_cast<int64_t>(k_max);
        if (resolved && Ops::abs(value - prev) <= R(rel_tol) * (Ops::abs(value) + R(1e-300)))
            return Ops::pow(value, R(1) / p);
    }
    throw ToleranceError("lp_quadrature_norm: no convergence at " + std::to_string(cap) + " nodes",
                         static_cast<double>(Ops::pow(prev, R(1) / p)),
                         static_cast<double>(Ops::pow(value, R(1) / p)));
}

}  // namespace engines
}  // namespace besovlab
