#include "sizefn/imaging.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace sizefn {

BinaryImage::BinaryImage(std::uint32_t width, std::uint32_t height)
    : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, 0) {
    if (width == 0 || height == 0) throw std::invalid_argument("image dimensions must be positive");
}

std::size_t BinaryImage::black_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::optional<BoundingBox> BinaryImage::bounding_box() const {
    BoundingBox box{width_, height_, 0, 0};
    bool any = false;
    for (std::uint32_t y = 0; y < height_; ++y)
        for (std::uint32_t x = 0; x < width_; ++x)
            if (at(x, y)) {
                any = true;
                box.x0 = std::min(box.x0, x);
                box.y0 = std::min(box.y0, y);
                box.x1 = std::max(box.x1, x);
                box.y1 = std::max(box.y1, y);
            }
    if (!any) return std::nullopt;
    return box;
}

namespace {

struct Cursor {
    const std::string& bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    char peek() const { return bytes[pos]; }

    void skip_space_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    std::uint32_t read_uint(const char* what) {
        skip_space_and_comments();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what + " at byte " + std::to_string(pos),
                             pos);
        std::uint64_t value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > 0xffffffffull)
                throw ParseError(std::string(what) + " out of range at byte " + std::to_string(pos),
                                 pos);
            ++pos;
        }
        return static_cast<std::uint32_t>(value);
    }
};

}  // namespace

BinaryImage parse_pbm(const std::string& bytes) {
    Cursor cur{bytes};
    cur.skip_space_and_comments();
    if (bytes.size() - cur.pos < 2 || bytes[cur.pos] != 'P' ||
        (bytes[cur.pos + 1] != '1' && bytes[cur.pos + 1] != '4'))
        throw ParseError("not a PBM file (expected P1 or P4 magic) at byte " +
                             std::to_string(cur.pos),
                         cur.pos);
    const bool packed = bytes[cur.pos + 1] == '4';
    cur.pos += 2;
    const std::uint32_t width = cur.read_uint("width");
    const std::uint32_t height = cur.read_uint("height");
    if (width == 0 || height == 0)
        throw ParseError("zero image dimension at byte " + std::to_string(cur.pos), cur.pos);

    BinaryImage img(width, height);
    if (packed) {
        if (cur.eof() || !std::isspace(static_cast<unsigned char>(cur.peek())))
            throw ParseError("expected whitespace before P4 raster at byte " +
                                 std::to_string(cur.pos),
                             cur.pos);
        ++cur.pos;  // exactly one whitespace byte before the raster
        const std::size_t row_bytes = (width + 7) / 8;
        if (bytes.size() - cur.pos < row_bytes * height)
            throw ParseError("truncated P4 raster at byte " + std::to_string(bytes.size()),
                             bytes.size());
        for (std::uint32_t y = 0; y < height; ++y) {
            for (std::uint32_t x = 0; x < width; ++x) {
                std::uint8_t byte =
                    static_cast<std::uint8_t>(bytes[cur.pos + y * row_bytes + x / 8]);
                img.set(x, y, (byte >> (7 - x % 8)) & 1);
            }
        }
    } else {
        for (std::uint32_t y = 0; y < height; ++y) {
            for (std::uint32_t x = 0; x < width; ++x) {
                cur.skip_space_and_comments();
                if (cur.eof())
                    throw ParseError("truncated P1 raster at byte " + std::to_string(cur.pos),
                                     cur.pos);
                char c = cur.peek();
                if (c != '0' && c != '1')
                    throw ParseError("bad P1 pixel at byte " + std::to_string(cur.pos), cur.pos);
                img.set(x, y, c == '1');
                ++cur.pos;
            }
        }
    }
    return img;
}

BinaryImage load_pbm_file(const std::string& path) { return parse_pbm(read_file(path)); }

std::string pbm_p1_text(const BinaryImage& img) {
    std::string out = "P1\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                      "\n";
    for (std::uint32_t y = 0; y < img.height(); ++y) {
        for (std::uint32_t x = 0; x < img.width(); ++x) out += img.at(x, y) ? '1' : '0';
        out += "\n";
    }
    return out;
}

double measuring_value(int phi_index, double x, double y) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (phi_index) {
        case 1: return std::abs(y);
        case 2: return std::abs(x - y) * inv_sqrt2;
        case 3: return std::abs(x);
        case 4: return std::abs(x + y) * inv_sqrt2;
        case 5: case 6: case 7: case 8: return -measuring_value(phi_index - 4, x, y);
        default: throw std::invalid_argument("phi index must be in 1..8");
    }
}

FilteredGraph pixel_graph(const BinaryImage& img, int phi_index, int adjacency) {
    if (adjacency != 4 && adjacency != 8)
        throw std::invalid_argument("adjacency must be 4 or 8");
    auto box = img.bounding_box();
    if (!box) throw std::invalid_argument("image has no black pixels");

    std::vector<std::pair<VertexId, double>> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    const std::uint32_t w = img.width();
    for (std::uint32_t y = 0; y < img.height(); ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            if (!img.at(x, y)) continue;
            VertexId id = y * w + x;
            vertices.emplace_back(
                id, measuring_value(phi_index, static_cast<double>(x) - box->x0,
                                    static_cast<double>(y) - box->y0));
            if (x + 1 < w && img.at(x + 1, y)) edges.emplace_back(id, id + 1);
            if (y + 1 < img.height()) {
                if (img.at(x, y + 1)) edges.emplace_back(id, id + w);
                if (adjacency == 8) {
                    if (x + 1 < w && img.at(x + 1, y + 1)) edges.emplace_back(id, id + w + 1);
                    if (x > 0 && img.at(x - 1, y + 1)) edges.emplace_back(id, id + w - 1);
                }
            }
        }
    }
    return FilteredGraph(std::move(vertices), edges);
}

OcclusionSide parse_side(const std::string& name) {
    if (name == "top") return OcclusionSide::top;
    if (name == "left") return OcclusionSide::left;
    throw std::invalid_argument("occlusion side must be `top` or `left`");
}

std::string side_name(OcclusionSide side) {
    return side == OcclusionSide::top ? "top" : "left";
}

namespace {

// Band of the bounding box claimed by an occlusion of the given fraction.
struct Band {
    std::uint32_t x0, y0, x1, y1;  // inclusive; empty when depth == 0
    bool empty;
};

Band occlusion_band(const BoundingBox& box, OcclusionSide side, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw std::invalid_argument("occlusion fraction must be in [0, 1]");
    Band band{box.x0, box.y0, box.x1, box.y1, false};
    if (side == OcclusionSide::top) {
        auto depth = static_cast<std::uint32_t>(std::ceil(fraction * box.height()));
        band.empty = depth == 0;
        if (!band.empty) band.y1 = box.y0 + depth - 1;
    } else {
        auto depth = static_cast<std::uint32_t>(std::ceil(fraction * box.width()));
        band.empty = depth == 0;
        if (!band.empty) band.x1 = box.x0 + depth - 1;
    }
    return band;
}

bool in_band(const Band& band, std::uint32_t x, std::uint32_t y) {
    return !band.empty && x >= band.x0 && x <= band.x1 && y >= band.y0 && y <= band.y1;
}

}  // namespace

VisibleOcclusion occlude_visible(const BinaryImage& img, OcclusionSide side, double fraction,
                                 int adjacency) {
    if (adjacency != 4 && adjacency != 8)
        throw std::invalid_argument("adjacency must be 4 or 8");
    auto box = img.bounding_box();
    if (!box) throw std::invalid_argument("image has no black pixels");
    Band band = occlusion_band(*box, side, fraction);

    VisibleOcclusion out;
    out.image = img;
    const std::uint32_t w = img.width();
    std::vector<char> in_a(static_cast<std::size_t>(w) * img.height(), 0);
    std::vector<char> in_b(in_a.size(), 0);
    for (std::uint32_t y = 0; y < img.height(); ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            if (img.at(x, y)) in_a[y * w + x] = 1;
            if (in_band(band, x, y)) {
                in_b[y * w + x] = 1;
                out.image.set(x, y, true);
            }
        }

    // Edges between a shape-only pixel and a band-only pixel would break the
    // cover; pull the shape endpoint into B as well.
    auto fix_edge = [&](VertexId p, VertexId q) {
        bool covered = (in_a[p] && in_a[q]) || (in_b[p] && in_b[q]);
        if (covered) return;
        if (in_a[p] && !in_b[p]) in_b[p] = 1;
        if (in_a[q] && !in_b[q]) in_b[q] = 1;
    };
    for (std::uint32_t y = 0; y < img.height(); ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            if (!out.image.at(x, y)) continue;
            VertexId id = y * w + x;
            if (x + 1 < w && out.image.at(x + 1, y)) fix_edge(id, id + 1);
            if (y + 1 < img.height()) {
                if (out.image.at(x, y + 1)) fix_edge(id, id + w);
                if (adjacency == 8) {
                    if (x + 1 < w && out.image.at(x + 1, y + 1)) fix_edge(id, id + w + 1);
                    if (x > 0 && out.image.at(x - 1, y + 1)) fix_edge(id, id + w - 1);
                }
            }
        }

    for (std::uint32_t i = 0; i < in_a.size(); ++i) {
        if (in_a[i]) out.a_ids.push_back(i);
        if (in_b[i]) out.b_ids.push_back(i);
    }
    return out;
}

InvisibleOcclusion occlude_invisible(const BinaryImage& img, OcclusionSide side, double fraction) {
    auto box = img.bounding_box();
    if (!box) throw std::invalid_argument("image has no black pixels");
    Band band = occlusion_band(*box, side, fraction);

    BinaryImage erased = img;
    for (std::uint32_t y = 0; y < img.height(); ++y)
        for (std::uint32_t x = 0; x < img.width(); ++x)
            if (in_band(band, x, y)) erased.set(x, y, false);

    InvisibleOcclusion out;
    out.image = BinaryImage(img.width(), img.height());
    const std::uint32_t w = img.width();
    const std::size_t n = static_cast<std::size_t>(w) * img.height();
    std::vector<std::uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t p) {
        while (parent[p] != p) {
            parent[p] = parent[parent[p]];
            p = parent[p];
        }
        return p;
    };
    auto unite = [&](std::uint32_t p, std::uint32_t q) {
        p = find(p);
        q = find(q);
        if (p != q) parent[std::max(p, q)] = std::min(p, q);
    };
    for (std::uint32_t y = 0; y < img.height(); ++y)
        for (std::uint32_t x = 0; x < w; ++x) {
            if (!erased.at(x, y)) continue;
            if (x + 1 < w && erased.at(x + 1, y)) unite(y * w + x, y * w + x + 1);
            if (y + 1 < img.height() && erased.at(x, y + 1)) unite(y * w + x, (y + 1) * w + x);
        }

    // Roots are minimal pixel indices, so the scan order breaks area ties by
    // smallest top-left pixel.
    std::vector<std::size_t> area(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        if (erased.at(i % w, i / w)) ++area[find(i)];
    std::uint32_t best_root = 0;
    std::size_t best_area = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        if (area[i] > best_area) {
            best_area = area[i];
            best_root = i;
        }
    if (best_area == 0) return out;  // unusable, empty image

    for (std::uint32_t i = 0; i < n; ++i)
        if (erased.at(i % w, i / w) && find(i) == best_root) out.image.set(i % w, i / w, true);
    out.usable = true;
    return out;
}

}  // namespace sizefn
