// Command-line driver for size-function computation, Mayer-Vietoris
// reports, and the occlusion experiments.

#include "sizefn/experiment.hpp"
#include "sizefn/imaging.hpp"
#include "sizefn/mayer_vietoris.hpp"
#include "sizefn/size_function.hpp"
#include "sizefn/topology.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

sizefn::OcclusionSpec parse_occlusion_flag(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw sizefn::ParseError("--occlude expects <top|left>:<fraction>, got '" + text + "'");
    sizefn::OcclusionSpec spec;
    spec.side = sizefn::parse_side(text.substr(0, colon));
    char* end = nullptr;
    std::string frac = text.substr(colon + 1);
    spec.fraction = std::strtod(frac.c_str(), &end);
    if (end != frac.c_str() + frac.size() || !(spec.fraction >= 0.0 && spec.fraction <= 1.0))
        throw sizefn::ParseError("occlusion fraction must be a real in [0, 1], got '" + frac + "'");
    return spec;
}

struct ComputeOptions {
    std::string input;
    int phi = 1;
    int adjacency = 4;
    std::string occlude;
    std::string out_dir = ".";
    std::string format = "csv";
};

int run_compute(const ComputeOptions& opt) {
    std::string bytes = sizefn::read_file(opt.input);
    sizefn::FilteredGraph graph;
    bool is_image = bytes.rfind("P1", 0) == 0 || bytes.rfind("P4", 0) == 0;
    if (is_image) {
        sizefn::BinaryImage img = sizefn::parse_pbm(bytes);
        if (!opt.occlude.empty()) {
            sizefn::OcclusionSpec spec = parse_occlusion_flag(opt.occlude);
            img = sizefn::occlude_visible(img, spec.side, spec.fraction, opt.adjacency).image;
        }
        graph = sizefn::pixel_graph(img, opt.phi, opt.adjacency);
    } else {
        graph = sizefn::parse_graph_text(bytes);
    }

    sizefn::SizeFunctionGrid grid(graph);
    sizefn::CornerpointSet cps = sizefn::cornerpoints(graph);

    fs::create_directories(opt.out_dir);
    std::string stem = fs::path(opt.input).stem().string();
    fs::path grid_path = fs::path(opt.out_dir) / (stem + (opt.format == "json" ? ".grid.json"
                                                                               : ".grid.csv"));
    if (opt.format == "json") {
        std::string json = "{\"criticals\":[";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i) json += ",";
            json += sizefn::format_real(grid.criticals()[i]);
        }
        json += "],\"rows\":[";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i) json += ",";
            json += "[";
            for (std::size_t j = i; j < grid.size(); ++j) {
                if (j > i) json += ",";
                json += std::to_string(grid.at(i, j));
            }
            json += "]";
        }
        json += "]}\n";
        sizefn::write_file(grid_path.string(), json);
    } else {
        sizefn::write_file(grid_path.string(), grid.to_csv());
    }
    fs::path cps_path = fs::path(opt.out_dir) / (stem + ".cornerpoints.json");
    sizefn::write_file(cps_path.string(), sizefn::cornerpoints_to_json(cps));
    std::cout << grid_path.string() << "\n" << cps_path.string() << "\n";
    return 0;
}

struct MvCheckOptions {
    std::string input;
    std::string out_dir = ".";
};

int run_mv_check(const MvCheckOptions& opt) {
    sizefn::Decomposition d = sizefn::load_decomposition_file(opt.input);
    sizefn::ValidationReport report = sizefn::validate(d);
    if (!report.ok) {
        for (sizefn::VertexId id : report.uncovered_vertices)
            std::cerr << "uncovered vertex " << id << "\n";
        for (const auto& [p, q] : report.uncovered_edges)
            std::cerr << "uncovered edge " << p << " " << q << "\n";
        return kExitValidation;
    }
    fs::create_directories(opt.out_dir);
    fs::path out_path =
        fs::path(opt.out_dir) / (fs::path(opt.input).stem().string() + ".mv.csv");
    sizefn::write_file(out_path.string(), sizefn::mv_report_csv(d));
    std::cout << out_path.string() << "\n";
    return 0;
}

struct ProtocolOptions {
    std::string manifest;
    std::vector<std::string> occlude;
    double tol = -1.0;  // negative means "relative default"
    int adjacency = 4;
    std::string out_dir = ".";
};

sizefn::ExperimentConfig to_config(const ProtocolOptions& opt) {
    sizefn::ExperimentConfig cfg;
    cfg.manifest_path = opt.manifest;
    for (const std::string& text : opt.occlude)
        cfg.occlusions.push_back(parse_occlusion_flag(text));
    if (opt.tol >= 0.0) cfg.tol = opt.tol;
    cfg.adjacency = opt.adjacency;
    cfg.out_dir = opt.out_dir;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size functions, cornerpoints and occlusion experiments on "
                 "vertex-weighted graphs and binary images"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    CLI::App* compute = app.add_subcommand(
        "compute", "size-function grid and cornerpoints of a graph or PBM image");
    compute->add_option("input", compute_opt.input, "graph text file or PBM image")->required();
    compute->add_option("--phi", compute_opt.phi, "measuring function index (images)")
        ->check(CLI::Range(1, 8));
    compute->add_option("--adjacency", compute_opt.adjacency, "pixel adjacency")
        ->check(CLI::IsMember({4, 8}));
    compute->add_option("--occlude", compute_opt.occlude,
                        "<top|left>:<fraction> visible occlusion applied to an image input");
    compute->add_option("--out", compute_opt.out_dir, "output directory");
    compute->add_option("--format", compute_opt.format, "grid output format")
        ->check(CLI::IsMember({"csv", "json"}));

    MvCheckOptions mv_opt;
    CLI::App* mv = app.add_subcommand("mv-check",
                                      "union/intersection size-function report of a decomposition");
    mv->add_option("input", mv_opt.input, "decomposition text file")->required();
    mv->add_option("--out", mv_opt.out_dir, "output directory");

    ProtocolOptions fp_opt;
    CLI::App* fp = app.add_subcommand("fingerprint",
                                      "common-cornerpoint matrices under visible occlusion");
    fp->add_option("--manifest", fp_opt.manifest, "corpus manifest")->required();
    fp->add_option("--occlude", fp_opt.occlude, "<top|left>:<fraction>; repeatable");
    fp->add_option("--tol", fp_opt.tol, "matching tolerance");
    fp->add_option("--adjacency", fp_opt.adjacency)->check(CLI::IsMember({4, 8}));
    fp->add_option("--out", fp_opt.out_dir, "output directory");

    ProtocolOptions rec_opt;
    CLI::App* rec = app.add_subcommand("recognize",
                                       "nearest-neighbor recognition under invisible occlusion");
    rec->add_option("--manifest", rec_opt.manifest, "corpus manifest")->required();
    rec->add_option("--occlude", rec_opt.occlude, "<top|left>:<fraction>; repeatable");
    rec->add_option("--tol", rec_opt.tol, "matching tolerance");
    rec->add_option("--adjacency", rec_opt.adjacency)->check(CLI::IsMember({4, 8}));
    rec->add_option("--out", rec_opt.out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(compute_opt);
        if (mv->parsed()) return run_mv_check(mv_opt);
        if (fp->parsed()) {
            sizefn::run_fingerprint(to_config(fp_opt));
            return 0;
        }
        if (rec->parsed()) {
            sizefn::run_recognition(to_config(rec_opt));
            return 0;
        }
    } catch (const sizefn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
