#include "marchenko/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace marchenko {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SpectralDataset dataset_from_json(const json& j) {
    std::vector<std::pair<cplx, cplx>> raw;
    const json& components = j.at("components");
    if (!components.is_array())
        throw std::invalid_argument("\"components\" must be an array");
    raw.reserve(components.size());
    for (const json& c : components) {
        raw.emplace_back(cplx(c.at("a_re").get<double>(), c.at("a_im").get<double>()),
                         cplx(c.at("k_re").get<double>(), c.at("k_im").get<double>()));
    }
    return validate_dataset(raw);
}

json dataset_to_json(const SpectralDataset& dataset) {
    json components = json::array();
    for (const auto& c : dataset.components) {
        components.push_back({{"a_re", c.amplitude.real()},
                              {"a_im", c.amplitude.imag()},
                              {"k_re", c.wavenumber.real()},
                              {"k_im", c.wavenumber.imag()}});
    }
    return json{{"components", std::move(components)}};
}

SpectralDataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    json j;
    in >> j;
    return dataset_from_json(j);
}

void write_dataset(const std::string& path, const SpectralDataset& dataset) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    out << dataset_to_json(dataset).dump(2) << "\n";
}

std::vector<std::pair<double, cplx>> read_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty samples file: " + path);
    auto strip = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
    };
    if (strip(line) != "x,a_re,a_im")
        throw std::invalid_argument("samples file must start with header \"x,a_re,a_im\"");

    std::vector<std::pair<double, cplx>> samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream row(line);
        double x = 0.0, re = 0.0, im = 0.0;
        char c1 = 0, c2 = 0;
        if (!(row >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("malformed samples row at line " +
                                        std::to_string(line_no));
        samples.emplace_back(x, cplx(re, im));
    }
    return samples;
}

json expansion_to_json(const KernelExpansion& expansion) {
    json terms = json::array();
    for (const auto& [key, amp] : expansion.terms) {
        KernelTerm t;
        t.x_exponents = key.first;
        t.y_index = key.second;
        terms.push_back({{"x_exp", key.first},
                         {"y_index", key.second},
                         {"amp_re", amp.real()},
                         {"amp_im", amp.imag()},
                         {"generation", t.generation()}});
    }
    return terms;
}

namespace {

json component_to_json(const FourierComponent& c) {
    return json{{"a", {c.amplitude.real(), c.amplitude.imag()}},
                {"k", {c.wavenumber.real(), c.wavenumber.imag()}}};
}

} // namespace

json report_to_json(const LyapunovReport& report,
                    const std::vector<FourierComponent>& removed,
                    const std::vector<FourierComponent>& kept) {
    json components = json::array();
    for (const auto& entry : report.entries) {
        json e = component_to_json(entry.component);
        e["lambda_closed"] = entry.lambda_closed;
        e["lambda_empirical"] = entry.lambda_empirical;
        e["growth_rate"] = entry.growth_rate;
        e["class"] = to_string(entry.classification);
        components.push_back(std::move(e));
    }
    json removed_json = json::array();
    for (const auto& c : removed) removed_json.push_back(component_to_json(c));
    json kept_json = json::array();
    for (const auto& c : kept) kept_json.push_back(component_to_json(c));
    return json{{"components", std::move(components)},
                {"removed", std::move(removed_json)},
                {"kept", std::move(kept_json)},
                {"all_unstable", report.all_unstable}};
}

json comparison_to_json(const ComparisonReport& report) {
    json points = json::array();
    for (const auto& p : report.points) {
        points.push_back({{"x", p.x},
                          {"series", {p.series.real(), p.series.imag()}},
                          {"direct", {p.direct.real(), p.direct.imag()}},
                          {"abs_err", p.abs_err},
                          {"rel_err", p.rel_err},
                          {"series_divergent", p.series_divergent}});
    }
    return json{{"points", std::move(points)},
                {"max_rel_err", report.max_rel_err},
                {"mean_rel_err", report.mean_rel_err}};
}

void write_profile_csv(std::ostream& os, const std::vector<double>& x_grid,
                       const std::vector<cplx>& diagonal, const PotentialProfile& profile) {
    os << "x,k_re,k_im,v_re,v_im\n";
    for (std::size_t p = 0; p < x_grid.size(); ++p) {
        os << format_double(x_grid[p]) << ',' << format_double(diagonal[p].real()) << ','
           << format_double(diagonal[p].imag()) << ',' << format_double(profile.values[p].real())
           << ',' << format_double(profile.values[p].imag()) << '\n';
    }
}

void write_figure_csv(std::ostream& os, const FigureCurves& curves) {
    if (curves.display_scale != 1.0) {
        os << "# reference rendering scales these curves by " << format_double(curves.display_scale)
           << "; values below are raw\n";
    }
    os << "x,k_base_re,k_base_im,k_pert_re,k_pert_im\n";
    for (std::size_t p = 0; p < curves.x.size(); ++p) {
        os << format_double(curves.x[p]) << ',' << format_double(curves.base[p].real()) << ','
           << format_double(curves.base[p].imag()) << ','
           << format_double(curves.perturbed[p].real()) << ','
           << format_double(curves.perturbed[p].imag()) << '\n';
    }
}

void write_text_output(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << text;
}

} // namespace marchenko
