#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "besovlab/experiments.hpp"
#include "besovlab/ns2d.hpp"

namespace besovlab {

// Shortest round-trippable decimal; identical argv must give byte-identical
// files, so all formatting funnels through here.
std::string format_double(double v);

// Writes via a temporary file in the same directory plus rename, so readers
// never observe partial output.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

inline constexpr const char* kGapRecordHeader =
    "theorem,n,s,p,r,d,alpha,t_n,eps_n,lambda_n,block_norm_at_n,full_norm,paper_bound,"
    "fubini_factor_used,paper_constant_claimed,pass,tail_bound";

std::string gap_record_csv_row(const GapRecord& rec);
std::string gap_records_csv(const std::vector<ExperimentResult>& results);

// {theorem, params, pass_count, fail_count, constants:{c0, fubini_factor,
// paper_constant}, cross_checks, notes}
std::string sweep_summary_json(const std::string& theorem, const std::string& params_json,
                               const std::vector<ExperimentResult>& results,
                               const std::vector<std::string>& notes = {});

// Two-column gnuplot-friendly CSV: x = n or t_n, y = a named record field.
std::string plot_csv(const std::vector<ExperimentResult>& results, const std::string& x,
                     const std::string& y);

// Spectral snapshot rows k1,k2,Re,Im under the integral-transform convention
// (omega_hat = (2*pi)^2 * per-point coefficient).
std::string vorticity_spectrum_csv(const VorticityState2D& state);

// Sampled-field CSV rows x,y,u1,u2,omega.
std::string sampled_field_csv(const VorticityState2D& state);

}  // namespace besovlab
