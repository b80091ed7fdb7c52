#include "agk/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace agk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string events_csv(const ScenarioDataset& data) {
    std::string out = "scenario,seed_index,crossing_index,t,x,px,energy_error\n";
    for (const auto& run : data.runs) {
        for (const auto& e : run.result.events) {
            out += data.scenario.name;
            out += ',';
            out += std::to_string(run.seed_index);
            out += ',';
            out += std::to_string(e.index);
            out += ',';
            out += format_double(e.t);
            out += ',';
            out += format_double(e.x);
            out += ',';
            out += format_double(e.px);
            out += ',';
            out += format_double(e.energy_error);
            out += '\n';
        }
    }
    return out;
}

std::string metrics_csv(const ScenarioDataset& data) {
    std::string out =
        "scenario,seed_index,escaped,escape_time,crossings,second_integral_drift,max_energy_error\n";
    for (const auto& run : data.runs) {
        const auto& m = run.result.metrics;
        out += data.scenario.name;
        out += ',';
        out += std::to_string(run.seed_index);
        out += ',';
        out += m.escaped ? '1' : '0';
        out += ',';
        if (m.escape_time) out += format_double(*m.escape_time);
        out += ',';
        out += std::to_string(m.crossings);
        out += ',';
        if (m.second_integral_drift) out += format_double(*m.second_integral_drift);
        out += ',';
        out += format_double(m.max_energy_error);
        out += '\n';
    }
    return out;
}

std::string section_svg(const ScenarioDataset& data) {
    const double w = data.scenario.grid.x_halfwidth ? *data.scenario.grid.x_halfwidth
                                                    : axis_window(data.scenario.params, data.scenario.h);
    double pw = 0.0;
    if (data.scenario.grid.px_halfwidth) {
        pw = *data.scenario.grid.px_halfwidth;
    } else {
        for (const auto& run : data.runs) {
            for (const auto& e : run.result.events) pw = std::max(pw, std::abs(e.px));
        }
        if (pw == 0.0) pw = 1.0;
        pw *= 1.05;
    }

    const double W = 800.0, H = 800.0, margin = 20.0;
    auto sx = [&](double x) { return margin + (x + w) / (2.0 * w) * (W - 2 * margin); };
    auto sy = [&](double px) { return H - margin - (px + pw) / (2.0 * pw) * (H - 2 * margin); };

    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 %.0f %.0f\">\n", W, H);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", W, H);
    out += buf;
    out += "<g fill=\"black\">\n";
    for (const auto& run : data.runs) {
        for (const auto& e : run.result.events) {
            std::snprintf(buf, sizeof(buf), "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"0.8\"/>\n", sx(e.x),
                          sy(e.px));
            out += buf;
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open for writing: " + tmp);
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::runtime_error("cannot rename into place: " + path);
    }
}

}  // namespace agk
