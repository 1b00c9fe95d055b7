#pragma once

#include "sizefn/filtered_graph.hpp"

#include <optional>

namespace sizefn {

struct BoundingBox {
    std::uint32_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive

    std::uint32_t width() const { return x1 - x0 + 1; }
    std::uint32_t height() const { return y1 - y0 + 1; }
};

/// Black/white raster; 1 = black = foreground.
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(std::uint32_t width, std::uint32_t height);

    std::uint32_t width() const { return width_; }
    std::uint32_t height() const { return height_; }
    bool at(std::uint32_t x, std::uint32_t y) const { return bits_[y * width_ + x] != 0; }
    void set(std::uint32_t x, std::uint32_t y, bool black) { bits_[y * width_ + x] = black; }

    std::size_t black_count() const;
    std::optional<BoundingBox> bounding_box() const;

    bool operator==(const BinaryImage&) const = default;

private:
    std::uint32_t width_ = 0, height_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Netpbm PBM input, P1 (ASCII) and P4 (packed). Parse errors carry the
/// byte offset of the offending input.
BinaryImage parse_pbm(const std::string& bytes);
BinaryImage load_pbm_file(const std::string& path);
std::string pbm_p1_text(const BinaryImage& img);

/// The eight measuring functions of the imaging pipeline. For k = 1..4 the
/// value is the distance from (x, y) to the line through the origin at
/// angle 0, pi/4, pi/2, 3pi/4; for k = 5..8 it is minus the distance to
/// the same lines. Coordinates are pixel centers relative to the top-left
/// of the bounding box, y growing downward.
double measuring_value(int phi_index, double x, double y);

/// Graph of black pixels (ids are row-major pixel indices) under 4- or
/// 8-adjacency, weighted by one of the eight measuring functions. Rejects
/// all-white images.
FilteredGraph pixel_graph(const BinaryImage& img, int phi_index, int adjacency = 4);

enum class OcclusionSide { top, left };

OcclusionSide parse_side(const std::string& name);
std::string side_name(OcclusionSide side);

/// Union of the shape with a black band covering the leading rows or
/// columns of its bounding box. a_ids are the original shape's pixels,
/// b_ids the band's pixels, extended where needed so that every edge of
/// the union lies inside one of the two sides.
struct VisibleOcclusion {
    BinaryImage image;
    std::vector<VertexId> a_ids;
    std::vector<VertexId> b_ids;
};

VisibleOcclusion occlude_visible(const BinaryImage& img, OcclusionSide side, double fraction,
                                 int adjacency = 4);

/// Erases the band and keeps only the largest 4-connected component (ties
/// broken by smallest top-left pixel index). May come out empty.
struct InvisibleOcclusion {
    BinaryImage image;
    bool usable = false;
};

InvisibleOcclusion occlude_invisible(const BinaryImage& img, OcclusionSide side, double fraction);

}  // namespace sizefn
