#include "qrotor/run.hpp"

#include <algorithm>
#include <fstream>
#include <string>

#include "json.hpp"

#include "qrotor/classical_map.hpp"
#include "qrotor/io.hpp"
#include "qrotor/wigner.hpp"

namespace qrotor {

namespace {

namespace fs = std::filesystem;

class Writer {
public:
    Writer(fs::path dir, RunResult& result) : dir_(std::move(dir)), result_(result) {
        fs::create_directories(dir_);
    }

    template <typename Fn>
    void file(const std::string& name, Fn&& body) {
        const fs::path path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        body(out);
        out.flush();
        if (!out) throw std::runtime_error("failed writing " + path.string());
        result_.files.push_back(path);
    }

    template <typename Fn>
    void file_pair(const std::string& first, const std::string& second, Fn&& body) {
        const fs::path a = dir_ / first;
        const fs::path b = dir_ / second;
        std::ofstream out_a(a, std::ios::binary | std::ios::trunc);
        std::ofstream out_b(b, std::ios::binary | std::ios::trunc);
        if (!out_a || !out_b) throw std::runtime_error("cannot open " + a.string() + " for writing");
        body(out_a, out_b);
        out_a.flush();
        out_b.flush();
        if (!out_a || !out_b) throw std::runtime_error("failed writing " + a.string());
        result_.files.push_back(a);
        result_.files.push_back(b);
    }

private:
    fs::path dir_;
    RunResult& result_;
};

std::string step_name(const char* stem, std::int64_t j, const char* ext) {
    return std::string(stem) + "_j" + std::to_string(j) + ext;
}

bool wants(const RunConfig& config, Output output) { return config.outputs.contains(output); }

}  // namespace

RunResult run(const RunConfig& config) {
    RunResult result;
    Writer writer(config.output_dir, result);
    const RotorState initial = make_initial_state(config);
    const int d = initial.dim();

    const bool per_step = wants(config, Output::States) || wants(config, Output::Wigner) ||
                          wants(config, Output::Representative) || wants(config, Output::Marginals);
    if (per_step) {
        for (std::int64_t j = config.first_step; j <= config.last_step; ++j) {
            const RotorState state = flux_evolve(initial, QuantizedTime(j, config.dilation, d), config.alpha);
            if (wants(config, Output::States)) {
                writer.file(step_name("state", j, ".csv"), [&](std::ostream& out) { io::write_state_csv(out, state); });
            }
            if (!wants(config, Output::Wigner) && !wants(config, Output::Representative) &&
                !wants(config, Output::Marginals)) {
                continue;
            }
            const WignerGrid grid = build_wigner(state);
            if (wants(config, Output::Wigner)) {
                writer.file(step_name("wigner", j, ".csv"), [&](std::ostream& out) { io::write_wigner_csv(out, grid); });
                if (config.graymap) {
                    writer.file_pair(step_name("wigner", j, ".pgm"), step_name("wigner", j, ".pgm.txt"),
                                     [&](std::ostream& image, std::ostream& sidecar) {
                                         io::write_graymap(image, sidecar, grid);
                                     });
                }
            }
            if (wants(config, Output::Representative)) {
                writer.file(step_name("representative", j, ".csv"),
                            [&](std::ostream& out) { io::write_representative_csv(out, representative(grid)); });
            }
            if (wants(config, Output::Marginals)) {
                writer.file(step_name("marginals", j, ".csv"),
                            [&](std::ostream& out) { io::write_marginals_csv(out, grid); });
            }
        }
    }

    if (wants(config, Output::RevivalScan)) {
        const auto scan = revival_scan(initial, std::max<std::int64_t>(config.last_step, 1), config.alpha,
                                       config.dilation);
        writer.file("revival_scan.csv", [&](std::ostream& out) { io::write_revival_csv(out, scan); });
        const double t0 = time_quantum(config.l, config.scale);
        nlohmann::ordered_json summary;
        summary["D"] = d;
        summary["alpha"] = config.alpha.str();
        summary["dilation"] = config.dilation;
        summary["time_quantum"] = t0;
        summary["revival_time_formula"] = revival_time(config.scale);
        if (scan.revival_step) {
            result.revival_step = scan.revival_step;
            result.revival_time = static_cast<double>(*scan.revival_step * config.dilation) * t0;
            summary["revival_step"] = *scan.revival_step;
            summary["revival_time"] = *result.revival_time;
        } else {
            summary["revival_step"] = nullptr;
            summary["revival_time"] = nullptr;
        }
        writer.file("revival_summary.json", [&](std::ostream& out) { out << summary.dump(2) << '\n'; });
    }

    if (wants(config, Output::Admissibility)) {
        auto report = admissibility_report(config.alpha);
        report.winding_number = config.dilation;
        writer.file("admissibility.json", [&](std::ostream& out) { out << io::admissibility_json(report) << '\n'; });
    }

    if (wants(config, Output::MapCompare)) {
        double worst = 0.0;
        writer.file("map_compare.csv", [&](std::ostream& out) {
            out << "j,max_deviation\n";
            for (std::int64_t j = config.first_step; j <= config.last_step; ++j) {
                const double deviation = compare_quantum_classical(initial, j * config.dilation);
                worst = std::max(worst, deviation);
                out << j << ',' << io::format_double(deviation) << '\n';
            }
        });
        result.max_map_deviation = worst;
    }
    return result;
}

}  // namespace qrotor
