#pragma once

#include "sizefn/imaging.hpp"
#include "sizefn/size_function.hpp"

#include <optional>

namespace sizefn {

struct CorpusEntry {
    int label = 0;
    std::string path;
};

/// Manifest format: one `<class> <path>` line per image; `#` comments and
/// blank lines allowed. Relative paths resolve against the manifest's
/// directory.
std::vector<CorpusEntry> load_manifest(const std::string& path);

struct OcclusionSpec {
    OcclusionSide side = OcclusionSide::top;
    double fraction = 0.0;
};

struct ExperimentConfig {
    std::string manifest_path;
    std::vector<OcclusionSpec> occlusions;  // empty selects the default set
    std::optional<double> tol;              // default: 1e-9 relative to the value range
    std::string out_dir;
    int adjacency = 4;
};

std::vector<OcclusionSpec> default_occlusions();

/// Matching tolerance used when the configuration leaves it to the data:
/// 1e-9 scaled by the largest finite coordinate of the two sets.
double matching_tolerance(const CornerpointSet& a, const CornerpointSet& b);

struct FingerprintResult {
    OcclusionSpec occlusion;
    std::vector<int> labels;
    std::vector<std::vector<double>> matrix;  // [occluded][original] percentages
    double dominance = 0.0;                   // rows whose max sits on the diagonal
    std::size_t tied_rows = 0;                // diagonal max attained elsewhere too
};

/// Visible-occlusion fingerprint protocol. Writes one CSV per occlusion
/// into the output directory and returns the results.
std::vector<FingerprintResult> run_fingerprint(const ExperimentConfig& cfg);
std::string fingerprint_csv(const FingerprintResult& result);

struct RecognitionRow {
    OcclusionSpec occlusion;
    std::size_t total = 0;
    std::size_t usable = 0;
    std::size_t excluded = 0;  // empty after occlusion
    std::size_t correct = 0;
    std::size_t ties = 0;
    double rate = 0.0;
};

/// Invisible-occlusion nearest-neighbor recognition protocol. Writes
/// recognition.csv into the output directory and returns the rows.
std::vector<RecognitionRow> run_recognition(const ExperimentConfig& cfg);
std::string recognition_csv(const std::vector<RecognitionRow>& rows);

}  // namespace sizefn
