#include "sizefn/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace sizefn {

namespace {

constexpr int kPhiCount = 8;

struct ShapeDescriptors {
    int label = 0;
    std::vector<CornerpointSet> per_phi;  // indexed 0..7 for phi 1..8
};

std::vector<CornerpointSet> descriptors_for(const BinaryImage& img, int adjacency) {
    std::vector<CornerpointSet> out;
    out.reserve(kPhiCount);
    for (int phi = 1; phi <= kPhiCount; ++phi)
        out.push_back(cornerpoints(pixel_graph(img, phi, adjacency)));
    return out;
}

double pair_tolerance(const std::optional<double>& configured, const CornerpointSet& a,
                      const CornerpointSet& b) {
    return configured ? *configured : matching_tolerance(a, b);
}

std::string occlusion_tag(const OcclusionSpec& occ) {
    return side_name(occ.side) + "_" + std::to_string(static_cast<int>(std::lround(occ.fraction * 100)));
}

}  // namespace

std::vector<CorpusEntry> load_manifest(const std::string& path) {
    std::string text = read_file(path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::vector<CorpusEntry> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string label_tok, path_tok;
        if (!(ls >> label_tok) || label_tok[0] == '#') continue;
        if (!(ls >> path_tok))
            throw ParseError("manifest line " + std::to_string(line_no) +
                                 ": expected `<class> <path>`",
                             line_no);
        CorpusEntry entry;
        try {
            entry.label = std::stoi(label_tok);
        } catch (...) {
            throw ParseError("manifest line " + std::to_string(line_no) + ": bad class '" +
                                 label_tok + "'",
                             line_no);
        }
        std::filesystem::path p(path_tok);
        entry.path = p.is_absolute() ? p.string() : (base / p).string();
        out.push_back(entry);
    }
    if (out.empty()) throw ParseError("manifest lists no images");
    return out;
}

std::vector<OcclusionSpec> default_occlusions() {
    std::vector<OcclusionSpec> out;
    for (OcclusionSide side : {OcclusionSide::top, OcclusionSide::left})
        for (double f : {0.2, 0.3, 0.4, 0.6}) out.push_back({side, f});
    return out;
}

double matching_tolerance(const CornerpointSet& a, const CornerpointSet& b) {
    double range = 1.0;
    for (const CornerpointSet* cs : {&a, &b}) {
        for (const Cornerpoint& p : cs->proper)
            range = std::max({range, std::abs(p.u), std::abs(p.v)});
        for (const Cornerpoint& p : cs->at_infinity) range = std::max(range, std::abs(p.u));
    }
    return 1e-9 * range;
}

namespace {

std::vector<ShapeDescriptors> corpus_descriptors(const std::vector<CorpusEntry>& corpus,
                                                 std::vector<BinaryImage>& images,
                                                 int adjacency) {
    std::vector<ShapeDescriptors> out;
    for (const CorpusEntry& entry : corpus) {
        BinaryImage img = load_pbm_file(entry.path);
        if (img.black_count() == 0) {
            std::cerr << "warning: skipping all-white image " << entry.path << "\n";
            continue;
        }
        images.push_back(img);
        out.push_back({entry.label, descriptors_for(img, adjacency)});
    }
    if (out.empty()) throw ParseError("no usable images in corpus");
    return out;
}

}  // namespace

std::vector<FingerprintResult> run_fingerprint(const ExperimentConfig& cfg) {
    std::vector<CorpusEntry> corpus = load_manifest(cfg.manifest_path);
    std::vector<BinaryImage> images;
    std::vector<ShapeDescriptors> originals = corpus_descriptors(corpus, images, cfg.adjacency);
    const std::size_t n = originals.size();
    std::vector<OcclusionSpec> occlusions =
        cfg.occlusions.empty() ? default_occlusions() : cfg.occlusions;

    std::vector<FingerprintResult> results;
    for (const OcclusionSpec& occ : occlusions) {
        FingerprintResult result;
        result.occlusion = occ;
        for (const ShapeDescriptors& s : originals) result.labels.push_back(s.label);
        result.matrix.assign(n, std::vector<double>(n, 0.0));

        for (std::size_t i = 0; i < n; ++i) {
            VisibleOcclusion vis =
                occlude_visible(images[i], occ.side, occ.fraction, cfg.adjacency);
            std::vector<CornerpointSet> occluded = descriptors_for(vis.image, cfg.adjacency);
            std::size_t denom = 0;
            for (const CornerpointSet& cs : occluded) denom += cs.support_size();
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t matched = 0;
                for (int k = 0; k < kPhiCount; ++k) {
                    double tol =
                        pair_tolerance(cfg.tol, occluded[k], originals[j].per_phi[k]);
                    matched +=
                        common_cornerpoints(occluded[k], originals[j].per_phi[k], tol).count;
                }
                result.matrix[i][j] =
                    denom == 0 ? 0.0 : 100.0 * static_cast<double>(matched) / denom;
            }
        }

        std::size_t dominant = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double row_max = *std::max_element(result.matrix[i].begin(), result.matrix[i].end());
            if (result.matrix[i][i] == row_max) {
                ++dominant;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i && result.matrix[i][j] == row_max) {
                        ++result.tied_rows;
                        break;
                    }
            }
        }
        result.dominance = n == 0 ? 0.0 : static_cast<double>(dominant) / n;

        if (!cfg.out_dir.empty()) {
            std::filesystem::create_directories(cfg.out_dir);
            write_file((std::filesystem::path(cfg.out_dir) /
                        ("fingerprint_" + occlusion_tag(occ) + ".csv"))
                           .string(),
                       fingerprint_csv(result));
        }
        results.push_back(std::move(result));
    }
    return results;
}

std::string fingerprint_csv(const FingerprintResult& result) {
    std::string out = "occluded\\original";
    for (int label : result.labels) out += "," + std::to_string(label);
    out += "\n";
    for (std::size_t i = 0; i < result.matrix.size(); ++i) {
        out += std::to_string(result.labels[i]);
        for (double value : result.matrix[i]) out += "," + format_real(value);
        out += "\n";
    }
    out += "dominance," + format_real(result.dominance) + "\n";
    out += "tied_rows," + std::to_string(result.tied_rows) + "\n";
    return out;
}

std::vector<RecognitionRow> run_recognition(const ExperimentConfig& cfg) {
    std::vector<CorpusEntry> corpus = load_manifest(cfg.manifest_path);
    std::vector<BinaryImage> images;
    std::vector<ShapeDescriptors> originals = corpus_descriptors(corpus, images, cfg.adjacency);
    const std::size_t n = originals.size();
    std::vector<OcclusionSpec> occlusions =
        cfg.occlusions.empty() ? default_occlusions() : cfg.occlusions;

    std::vector<RecognitionRow> rows;
    for (const OcclusionSpec& occ : occlusions) {
        RecognitionRow row;
        row.occlusion = occ;
        row.total = n;
        for (std::size_t i = 0; i < n; ++i) {
            InvisibleOcclusion inv = occlude_invisible(images[i], occ.side, occ.fraction);
            if (!inv.usable) {
                ++row.excluded;
                continue;
            }
            ++row.usable;
            std::vector<CornerpointSet> occluded = descriptors_for(inv.image, cfg.adjacency);

            std::vector<double> dists(n, 0.0);
            for (std::size_t j = 0; j < n; ++j)
                for (int k = 0; k < kPhiCount; ++k)
                    dists[j] += hausdorff_distance(occluded[k], originals[j].per_phi[k]);
            double best = *std::min_element(dists.begin(), dists.end());
            int best_label = std::numeric_limits<int>::max();
            std::size_t labels_at_best = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (dists[j] != best) continue;
                if (originals[j].label < best_label) best_label = originals[j].label;
                bool seen = false;
                for (std::size_t j2 = 0; j2 < j; ++j2)
                    if (dists[j2] == best && originals[j2].label == originals[j].label) seen = true;
                if (!seen) ++labels_at_best;
            }
            if (labels_at_best > 1) ++row.ties;
            if (best_label == originals[i].label) ++row.correct;
        }
        row.rate = row.usable == 0 ? 0.0 : static_cast<double>(row.correct) / row.usable;
        rows.push_back(row);
    }

    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        write_file((std::filesystem::path(cfg.out_dir) / "recognition.csv").string(),
                   recognition_csv(rows));
    }
    return rows;
}

std::string recognition_csv(const std::vector<RecognitionRow>& rows) {
    std::string out = "side,fraction,total,usable,excluded,correct,ties,rate\n";
    for (const RecognitionRow& row : rows) {
        out += side_name(row.occlusion.side) + "," + format_real(row.occlusion.fraction) + "," +
               std::to_string(row.total) + "," + std::to_string(row.usable) + "," +
               std::to_string(row.excluded) + "," + std::to_string(row.correct) + "," +
               std::to_string(row.ties) + "," + format_real(row.rate) + "\n";
    }
    return out;
}

}  // namespace sizefn
