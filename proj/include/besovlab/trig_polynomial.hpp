#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "besovlab/grid.hpp"

namespace besovlab {

// Finite real trigonometric sum  a_0 + sum_k [ a_k cos(kx) + b_k sin(kx) ],
// stored as an ordered map from frequency k >= 0 to the amplitude pair.
// Closed under translation, differentiation and heat damping, all exact up to
// floating round-off. This is the authoritative representation; sampled
// fields and the DFT are the cross-check path.
class TrigPolynomial {
  public:
    struct Amplitudes {
        double cos_amp = 0.0;
        double sin_amp = 0.0;
    };

    TrigPolynomial() = default;

    static TrigPolynomial constant(double c) {
        TrigPolynomial p;
        if (c != 0.0) p.terms_[0] = {c, 0.0};
        return p;
    }
    static TrigPolynomial cosine(int k, double amp) {
        TrigPolynomial p;
        p.set(k, amp, 0.0);
        return p;
    }
    static TrigPolynomial sine(int k, double amp) {
        TrigPolynomial p;
        p.set(k, 0.0, amp);
        return p;
    }

    void set(int k, double cos_amp, double sin_amp) {
        if (k < 0) throw std::domain_error("TrigPolynomial: frequency must be >= 0");
        if (k == 0 && sin_amp != 0.0)
            throw std::domain_error("TrigPolynomial: sin amplitude at k = 0 must be 0");
        if (cos_amp == 0.0 && sin_amp == 0.0)
            terms_.erase(k);
        else
            terms_[k] = {cos_amp, sin_amp};
    }

    Amplitudes at(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Amplitudes{} : it->second;
    }

    const std::map<int, Amplitudes>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int k_max() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    // Greatest common divisor of the nonconstant frequencies (0 if none).
    // |p|^q inherits period 2*pi/gcd, which the quadrature exploits.
    int frequency_gcd() const {
        int g = 0;
        for (const auto& [k, ab] : terms_)
            if (k > 0) g = std::gcd(g, k);
        return g;
    }

    // Pointwise evaluation. Phases are reduced in extended precision so that
    // large-k terms keep sub-1e-15 phase accuracy.
    double eval(double x) const {
        long double acc = 0.0L;
        const long double xl = static_cast<long double>(x);
        for (const auto& [k, ab] : terms_) {
            const long double phase =
                remainderl(static_cast<long double>(k) * xl, 2.0L * 3.14159265358979323846264338327950288L);
            acc += static_cast<long double>(ab.cos_amp) * cosl(phase) +
                   static_cast<long double>(ab.sin_amp) * sinl(phase);
        }
        return static_cast<double>(acc);
    }

    TrigPolynomial& operator+=(const TrigPolynomial& o) {
        for (const auto& [k, ab] : o.terms_) {
            auto cur = at(k);
            set(k, cur.cos_amp + ab.cos_amp, cur.sin_amp + ab.sin_amp);
        }
        return *this;
    }
    TrigPolynomial& operator-=(const TrigPolynomial& o) {
        for (const auto& [k, ab] : o.terms_) {
            auto cur = at(k);
            set(k, cur.cos_amp - ab.cos_amp, cur.sin_amp - ab.sin_amp);
        }
        return *this;
    }
    TrigPolynomial& operator*=(double s) {
        if (s == 0.0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, ab] : terms_) {
            ab.cos_amp *= s;
            ab.sin_amp *= s;
        }
        return *this;
    }

    friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
    friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
    friend TrigPolynomial operator*(TrigPolynomial a, double s) { return a *= s; }
    friend TrigPolynomial operator*(double s, TrigPolynomial a) { return a *= s; }

    // Upper bound sum_k (|a_k| + |b_k|) >= sup |p|.
    double coefficient_l1() const {
        double s = 0.0;
        for (const auto& [k, ab] : terms_) s += std::abs(ab.cos_amp) + std::abs(ab.sin_amp);
        return s;
    }

  private:
    std::map<int, Amplitudes> terms_;
};

// cos(k(x-t)) and sin(k(x-t)) expanded exactly:
//   a' = a cos(kt) + b sin(kt),   b' = -a sin(kt) + b cos(kt).
// Phase products k*t are formed in extended precision so that translations by
// exact fractions of the period cancel to machine accuracy even at large k.
TrigPolynomial translate(const TrigPolynomial& p, double t);

// Term-wise derivative: a_k cos + b_k sin -> k*b_k cos - k*a_k sin.
TrigPolynomial differentiate(const TrigPolynomial& p);

// Frequency-k term multiplied by exp(-eps*k^2*t) (heat semigroup multiplier).
TrigPolynomial heat_damp(const TrigPolynomial& p, double eps, double t);

// Pointwise-exact evaluation at the grid nodes; requires k_max < N/2.
Field1D sample(const TrigPolynomial& p, const Grid1D& grid);

}  // namespace besovlab
