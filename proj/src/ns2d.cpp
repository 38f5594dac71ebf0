#include "besovlab/ns2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "besovlab/errors.hpp"
#include "besovlab/fft.hpp"

namespace besovlab {

namespace {

using Cplx = std::complex<double>;

// Row-column 2-D transform on n*n arrays, layout idx = iy*n + ix.
class Fft2 {
  public:
    explicit Fft2(int n) : n_(n), plan_(static_cast<size_t>(n)), scratch_(static_cast<size_t>(n)) {}

    void forward(std::vector<Cplx>& a) { run(a, false); }
    void inverse(std::vector<Cplx>& a) { run(a, true); }

  private:
    void run(std::vector<Cplx>& a, bool inv) {
        const int n = n_;
        for (int iy = 0; iy < n; ++iy) {
            Cplx* row = a.data() + static_cast<size_t>(iy) * n;
            inv ? plan_.inverse(row) : plan_.forward(row);
        }
        for (int ix = 0; ix < n; ++ix) {
            for (int iy = 0; iy < n; ++iy) scratch_[static_cast<size_t>(iy)] = a[static_cast<size_t>(iy) * n + ix];
            inv ? plan_.inverse(scratch_.data()) : plan_.forward(scratch_.data());
            for (int iy = 0; iy < n; ++iy) a[static_cast<size_t>(iy) * n + ix] = scratch_[static_cast<size_t>(iy)];
        }
    }

    int n_;
    FftPlan<double> plan_;
    std::vector<Cplx> scratch_;
};

int wavenumber(int idx, int n) { return idx < n / 2 ? idx : idx - n; }

struct Workspace {
    explicit Workspace(const SolverConfig2D& cfg)
        : n(cfg.n),
          size(static_cast<size_t>(cfg.n) * static_cast<size_t>(cfg.n)),
          fft(cfg.n),
          kx(size),
          ky(size),
          dealias(size),
          half_factor(size),
          full_factor(size) {
        const int cut = n / 3;
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                const size_t i = static_cast<size_t>(iy) * n + ix;
                kx[i] = wavenumber(ix, n);
                ky[i] = wavenumber(iy, n);
                dealias[i] = std::abs(kx[i]) <= cut && std::abs(ky[i]) <= cut;
                const double k2 = static_cast<double>(kx[i]) * kx[i] + static_cast<double>(ky[i]) * ky[i];
                half_factor[i] = std::exp(-cfg.eps * k2 * cfg.dt / 2.0);
                full_factor[i] = half_factor[i] * half_factor[i];
            }
        }
    }

    int n;
    size_t size;
    Fft2 fft;
    std::vector<int> kx, ky;
    std::vector<char> dealias;
    std::vector<double> half_factor, full_factor;

    // -FFT[u . grad omega], dealiased; u includes the mean drift.
    std::vector<Cplx> nonlinear(const std::vector<Cplx>& what, const std::array<double, 2>& mean) {
        std::vector<Cplx> u1(size), u2(size), gx(size), gy(size);
        for (size_t i = 0; i < size; ++i) {
            const double k2 = static_cast<double>(kx[i]) * kx[i] + static_cast<double>(ky[i]) * ky[i];
            const Cplx iw = Cplx(0.0, 1.0) * what[i];
            if (k2 > 0.0) {
                u1[i] = iw * (static_cast<double>(ky[i]) / k2);
                u2[i] = -iw * (static_cast<double>(kx[i]) / k2);
            }
            gx[i] = iw * static_cast<double>(kx[i]);
            gy[i] = iw * static_cast<double>(ky[i]);
        }
        fft.inverse(u1);
        fft.inverse(u2);
        fft.inverse(gx);
        fft.inverse(gy);
        std::vector<Cplx> out(size);
        for (size_t i = 0; i < size; ++i) {
            const double advect = (u1[i].real() + mean[0]) * gx[i].real() +
                                  (u2[i].real() + mean[1]) * gy[i].real();
            out[i] = Cplx(-advect, 0.0);
        }
        fft.forward(out);
        const double scale = 1.0 / static_cast<double>(size);
        for (size_t i = 0; i < size; ++i) out[i] = dealias[i] ? out[i] * scale : Cplx(0.0, 0.0);
        return out;
    }
};

double max_speed(const VorticityState2D& st) {
    auto uv = velocity_fields(st);
    double m = 0.0;
    for (size_t i = 0; i < uv[0].size(); ++i)
        m = std::max(m, std::hypot(uv[0][i], uv[1][i]));
    return m;
}

}  // namespace

void SolverConfig2D::validate() const {
    if (n < 32 || n > 512 || !is_power_of_two(n))
        throw std::domain_error("SolverConfig2D: n must be a power of two in [32, 512]");
    if (!(dt > 0.0)) throw std::domain_error("SolverConfig2D: dt must be > 0");
    if (eps < 0.0) throw std::domain_error("SolverConfig2D: eps must be >= 0");
    if (t_final < 0.0 || t_final > 1.0)
        throw std::domain_error("SolverConfig2D: t_final must lie in [0, 1]");
    for (double t : output_times)
        if (t < 0.0 || t > t_final + 1e-12)
            throw std::domain_error("SolverConfig2D: output times must lie in [0, t_final]");
}

Ns2dResult ns2d_solve(const VelocitySampler& u0, const SolverConfig2D& cfg) {
    cfg.validate();
    const int n = cfg.n;
    const size_t size = static_cast<size_t>(n) * static_cast<size_t>(n);
    Workspace ws(cfg);

    // Spectral initial data from the sampler.
    std::vector<Cplx> u1(size), u2(size);
    for (int iy = 0; iy < n; ++iy) {
        const double y = kTwoPi * iy / n;
        for (int ix = 0; ix < n; ++ix) {
            const double x = kTwoPi * ix / n;
            const auto v = u0(x, y);
            u1[static_cast<size_t>(iy) * n + ix] = Cplx(v[0], 0.0);
            u2[static_cast<size_t>(iy) * n + ix] = Cplx(v[1], 0.0);
        }
    }
    ws.fft.forward(u1);
    ws.fft.forward(u2);
    const double scale = 1.0 / static_cast<double>(size);
    for (size_t i = 0; i < size; ++i) {
        u1[i] *= scale;
        u2[i] *= scale;
    }

    double u_scale = 1e-30;
    for (size_t i = 0; i < size; ++i)
        u_scale = std::max({u_scale, std::abs(u1[i]), std::abs(u2[i])});
    double div = 0.0;
    for (size_t i = 0; i < size; ++i)
        div = std::max(div, std::abs(static_cast<double>(ws.kx[i]) * u1[i] +
                                     static_cast<double>(ws.ky[i]) * u2[i]));
    if (div > 1e-10 * static_cast<double>(n) * u_scale)
        throw std::domain_error("ns2d_solve: initial data is not divergence-free (defect " +
                                std::to_string(div) + ")");

    VorticityState2D st;
    st.n = n;
    st.time = 0.0;
    st.mean_velocity = {u1[0].real(), u2[0].real()};
    st.omega_hat.assign(size, Cplx(0.0, 0.0));
    for (size_t i = 0; i < size; ++i) {
        if (!ws.dealias[i]) continue;
        st.omega_hat[i] = Cplx(0.0, 1.0) * (static_cast<double>(ws.kx[i]) * u2[i] -
                                            static_cast<double>(ws.ky[i]) * u1[i]);
    }

    Ns2dResult result;
    result.cfl_number = cfg.dt * max_speed(st) * n / kTwoPi;
    result.cfl_warning = result.cfl_number > 1.0;

    std::vector<double> outputs = cfg.output_times;
    if (outputs.empty()) outputs.push_back(cfg.t_final);
    std::sort(outputs.begin(), outputs.end());

    const long total_steps = std::lround(cfg.t_final / cfg.dt);
    std::vector<long> output_steps;
    for (double t : outputs) output_steps.push_back(std::lround(t / cfg.dt));

    size_t next_out = 0;
    auto maybe_emit = [&](long step) {
        while (next_out < output_steps.size() && output_steps[next_out] == step) {
            VorticityState2D snap = st;
            snap.time = static_cast<double>(step) * cfg.dt;
            result.states.push_back(std::move(snap));
            ++next_out;
        }
    };
    maybe_emit(0);

    std::vector<Cplx> stage(size), a(size), b(size), c(size), d(size);
    for (long step = 0; step < total_steps; ++step) {
        const auto& w = st.omega_hat;
        a = ws.nonlinear(w, st.mean_velocity);
        for (size_t i = 0; i < size; ++i) stage[i] = ws.half_factor[i] * (w[i] + 0.5 * cfg.dt * a[i]);
        b = ws.nonlinear(stage, st.mean_velocity);
        for (size_t i = 0; i < size; ++i) stage[i] = ws.half_factor[i] * w[i] + 0.5 * cfg.dt * b[i];
        c = ws.nonlinear(stage, st.mean_velocity);
        for (size_t i = 0; i < size; ++i)
            stage[i] = ws.full_factor[i] * w[i] + cfg.dt * ws.half_factor[i] * c[i];
        d = ws.nonlinear(stage, st.mean_velocity);

        double checksum = 0.0;  // NaN/Inf propagates through the sum
        for (size_t i = 0; i < size; ++i) {
            const Cplx next = ws.full_factor[i] * w[i] +
                              cfg.dt / 6.0 *
                                  (ws.full_factor[i] * a[i] +
                                   2.0 * ws.half_factor[i] * (b[i] + c[i]) + d[i]);
            st.omega_hat[i] = next;
            checksum += std::abs(next.real()) + std::abs(next.imag());
        }
        if (!std::isfinite(checksum))
            throw BlowUpError("ns2d_solve: blow-up detected at t = " +
                                  std::to_string((step + 1) * cfg.dt),
                              static_cast<double>(step) * cfg.dt);
        st.time = static_cast<double>(step + 1) * cfg.dt;
        maybe_emit(step + 1);
    }
    result.steps = total_steps;
    return result;
}

std::array<std::vector<double>, 2> velocity_fields(const VorticityState2D& state) {
    const int n = state.n;
    const size_t size = static_cast<size_t>(n) * static_cast<size_t>(n);
    Fft2 fft(n);
    std::vector<Cplx> u1(size), u2(size);
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const size_t i = static_cast<size_t>(iy) * n + ix;
            const double kxv = wavenumber(ix, n);
            const double kyv = wavenumber(iy, n);
            const double k2 = kxv * kxv + kyv * kyv;
            if (k2 > 0.0) {
                const Cplx iw = Cplx(0.0, 1.0) * state.omega_hat[i];
                u1[i] = iw * (kyv / k2);
                u2[i] = -iw * (kxv / k2);
            }
        }
    }
    fft.inverse(u1);
    fft.inverse(u2);
    std::array<std::vector<double>, 2> out{std::vector<double>(size), std::vector<double>(size)};
    for (size_t i = 0; i < size; ++i) {
        out[0][i] = u1[i].real() + state.mean_velocity[0];
        out[1][i] = u2[i].real() + state.mean_velocity[1];
    }
    return out;
}

std::vector<double> vorticity_field(const VorticityState2D& state) {
    const int n = state.n;
    const size_t size = static_cast<size_t>(n) * static_cast<size_t>(n);
    Fft2 fft(n);
    std::vector<Cplx> w(state.omega_hat);
    fft.inverse(w);
    std::vector<double> out(size);
    for (size_t i = 0; i < size; ++i) out[i] = w[i].real();
    return out;
}

double kinetic_energy(const VorticityState2D& state) {
    const int n = state.n;
    double sum = state.mean_velocity[0] * state.mean_velocity[0] +
                 state.mean_velocity[1] * state.mean_velocity[1];
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const size_t i = static_cast<size_t>(iy) * n + ix;
            const double kxv = wavenumber(ix, n);
            const double kyv = wavenumber(iy, n);
            const double k2 = kxv * kxv + kyv * kyv;
            if (k2 > 0.0) sum += std::norm(state.omega_hat[i]) / k2;
        }
    }
    return 0.5 * kTwoPi * kTwoPi * sum;
}

double spectral_divergence(const VorticityState2D& state) {
    // Biot-Savart velocities satisfy k . u_hat = 0 identically; evaluate it
    // anyway as the certificate.
    const int n = state.n;
    double div = 0.0;
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const size_t i = static_cast<size_t>(iy) * n + ix;
            const double kxv = wavenumber(ix, n);
            const double kyv = wavenumber(iy, n);
            const double k2 = kxv * kxv + kyv * kyv;
            if (k2 == 0.0) continue;
            const Cplx iw = Cplx(0.0, 1.0) * state.omega_hat[i];
            const Cplx u1 = iw * (kyv / k2);
            const Cplx u2 = -iw * (kxv / k2);
            div = std::max(div, std::abs(kxv * u1 + kyv * u2));
        }
    }
    return div;
}

}  // namespace besovlab
