#include "besovlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace besovlab {

namespace {

std::string opt_str(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string gap_record_csv_row(const GapRecord& rec) {
    std::ostringstream row;
    row << rec.theorem << ',' << rec.n << ',' << format_double(rec.s) << ','
        << format_double(rec.p) << ',' << format_double(rec.r) << ',' << rec.d << ','
        << opt_str(rec.alpha) << ',' << opt_str(rec.t_n) << ',' << opt_str(rec.eps_n) << ','
        << opt_str(rec.lambda_n) << ',' << format_double(rec.block_norm_at_n) << ','
        << format_double(rec.full_norm) << ',' << format_double(rec.paper_bound) << ','
        << format_double(rec.fubini_factor_used) << ','
        << format_double(rec.paper_constant_claimed) << ',' << (rec.pass ? 1 : 0) << ','
        << format_double(rec.tail_bound);
    return row.str();
}

std::string gap_records_csv(const std::vector<ExperimentResult>& results) {
    std::ostringstream out;
    out << kGapRecordHeader << '\n';
    for (const auto& r : results) out << gap_record_csv_row(r.record) << '\n';
    return out.str();
}

std::string sweep_summary_json(const std::string& theorem, const std::string& params_json,
                               const std::vector<ExperimentResult>& results,
                               const std::vector<std::string>& notes) {
    int pass = 0, fail = 0;
    for (const auto& r : results) (r.record.pass ? pass : fail)++;
    std::ostringstream out;
    out << "{\n";
    out << "  \"theorem\": \"" << json_escape(theorem) << "\",\n";
    out << "  \"params\": " << params_json << ",\n";
    out << "  \"pass_count\": " << pass << ",\n";
    out << "  \"fail_count\": " << fail << ",\n";
    if (!results.empty()) {
        const auto& rec = results.front().record;
        out << "  \"constants\": {\"c0\": " << format_double(c0(rec.p))
            << ", \"fubini_factor\": " << format_double(rec.fubini_factor_used)
            << ", \"paper_constant\": "
            << format_double(std::pow(kTwoPi, static_cast<double>(rec.d - 1))) << "},\n";
    }
    out << "  \"cross_checks\": [";
    bool first = true;
    for (const auto& r : results) {
        if (!r.cross) continue;
        if (!first) out << ", ";
        first = false;
        out << "{\"n\": " << r.record.n << ", \"theorem\": \"" << json_escape(r.record.theorem)
            << "\", \"grid_full_norm\": " << format_double(r.cross->grid_full_norm)
            << ", \"rel_err_full\": " << format_double(r.cross->rel_err_full)
            << ", \"rel_err_block\": " << format_double(r.cross->rel_err_block)
            << ", \"precision\": \"" << r.cross->precision << "\", \"points\": " << r.cross->points
            << "}";
    }
    out << "],\n";
    out << "  \"notes\": [";
    for (size_t i = 0; i < notes.size(); ++i)
        out << (i ? ", " : "") << '"' << json_escape(notes[i]) << '"';
    out << "]\n}\n";
    return out.str();
}

std::string plot_csv(const std::vector<ExperimentResult>& results, const std::string& x,
                     const std::string& y) {
    auto field = [](const GapRecord& r, const std::string& name) -> double {
        if (name == "n") return r.n;
        if (name == "t_n") return r.t_n.value_or(0.0);
        if (name == "full_norm") return r.full_norm;
        if (name == "block_norm_at_n") return r.block_norm_at_n;
        if (name == "paper_bound") return r.paper_bound;
        throw std::domain_error("plot_csv: unknown field " + name);
    };
    std::ostringstream out;
    out << x << ',' << y << '\n';
    for (const auto& r : results)
        out << format_double(field(r.record, x)) << ',' << format_double(field(r.record, y))
            << '\n';
    return out.str();
}

std::string vorticity_spectrum_csv(const VorticityState2D& state) {
    const int n = state.n;
    const double scale = kTwoPi * kTwoPi;
    std::ostringstream out;
    out << "k1,k2,re_omega_hat,im_omega_hat\n";
    for (int iy = 0; iy < n; ++iy) {
        const int k2 = iy < n / 2 ? iy : iy - n;
        for (int ix = 0; ix < n; ++ix) {
            const int k1 = ix < n / 2 ? ix : ix - n;
            const auto v = state.omega_hat[static_cast<size_t>(iy) * n + ix] * scale;
            if (v == std::complex<double>(0.0, 0.0)) continue;
            out << k1 << ',' << k2 << ',' << format_double(v.real()) << ','
                << format_double(v.imag()) << '\n';
        }
    }
    return out.str();
}

std::string sampled_field_csv(const VorticityState2D& state) {
    const int n = state.n;
    auto uv = velocity_fields(state);
    auto w = vorticity_field(state);
    std::ostringstream out;
    out << "x,y,u1,u2,omega\n";
    for (int iy = 0; iy < n; ++iy) {
        const double y = kTwoPi * iy / n;
        for (int ix = 0; ix < n; ++ix) {
            const double x = kTwoPi * ix / n;
            const size_t i = static_cast<size_t>(iy) * n + ix;
            out << format_double(x) << ',' << format_double(y) << ',' << format_double(uv[0][i])
                << ',' << format_double(uv[1][i]) << ',' << format_double(w[i]) << '\n';
        }
    }
    return out.str();
}

}  // namespace besovlab
