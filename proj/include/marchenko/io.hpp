#ifndef MARCHENKO_IO_HPP
#define MARCHENKO_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "marchenko/figures.hpp"
#include "marchenko/kernel.hpp"
#include "marchenko/nystrom.hpp"
#include "marchenko/recursion.hpp"
#include "marchenko/spectrum.hpp"
#include "marchenko/stability.hpp"

namespace marchenko {

/// Formats a double with full round-trip precision ("%.17g"), identically
/// across runs.
std::string format_double(double v);

// --- dataset JSON: {"components": [{"a_re","a_im","k_re","k_im"}, ...]} ---

SpectralDataset dataset_from_json(const nlohmann::json& j);
nlohmann::json dataset_to_json(const SpectralDataset& dataset);
SpectralDataset read_dataset(const std::string& path);
void write_dataset(const std::string& path, const SpectralDataset& dataset);

// --- samples CSV: header "x,a_re,a_im", one row per sample ---

std::vector<std::pair<double, cplx>> read_samples_csv(const std::string& path);

// --- expansion dump JSON: list of {"x_exp","y_index","amp_re","amp_im","generation"} ---

nlohmann::json expansion_to_json(const KernelExpansion& expansion);

// --- stability report JSON: {"components": [...], "removed": [...], "kept": [...], "all_unstable": bool} ---

nlohmann::json report_to_json(const LyapunovReport& report,
                              const std::vector<FourierComponent>& removed,
                              const std::vector<FourierComponent>& kept);

// --- comparison report JSON: {"points": [...], "max_rel_err": f, "mean_rel_err": f} ---

nlohmann::json comparison_to_json(const ComparisonReport& report);

// --- CSV writers (deterministic formatting) ---

/// Potential profile CSV: header "x,k_re,k_im,v_re,v_im".
void write_profile_csv(std::ostream& os, const std::vector<double>& x_grid,
                       const std::vector<cplx>& diagonal, const PotentialProfile& profile);

/// Figure CSV: header "x,k_base_re,k_base_im,k_pert_re,k_pert_im"; for a
/// display scale != 1 a leading comment line records it.
void write_figure_csv(std::ostream& os, const FigureCurves& curves);

/// Writes text to a path, or to the fallback stream when path is empty.
void write_text_output(const std::string& path, const std::string& text,
                       std::ostream& fallback);

} // namespace marchenko

#endif // MARCHENKO_IO_HPP
