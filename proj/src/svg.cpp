#include "orthocover/svg.hpp"

#include <array>
#include <sstream>

namespace orthocover {

namespace {

constexpr Coord kMargin = 10;
constexpr int kMaxScale = 1'000'000;
constexpr std::array<const char*, 6> kPackColors = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

// Maps plane coordinates to pixels; offsets from the bounding box are
// non-negative, so unsigned 128-bit arithmetic is exact.
class Canvas {
public:
    Canvas(const Rect& box, int scale) : box_(box), scale_(static_cast<UWide>(scale)) {}

    UWide px(Coord v) const { return offset(box_.x1, v) * scale_ + kMargin; }
    UWide py(Coord v) const { return offset(v, box_.y2) * scale_ + kMargin; }
    std::string x(Coord v) const { return to_decimal(px(v)); }
    std::string y(Coord v) const { return to_decimal(py(v)); }
    std::string len(Coord from, Coord to) const { return to_decimal(offset(from, to) * scale_); }
    std::string width() const { return to_decimal(offset(box_.x1, box_.x2) * scale_ + 2 * kMargin); }
    std::string height() const { return to_decimal(offset(box_.y1, box_.y2) * scale_ + 2 * kMargin); }

private:
    static UWide offset(Coord from, Coord to) { return static_cast<UWide>(static_cast<Wide>(to) - from); }

    Rect box_;
    UWide scale_;
};

}  // namespace

std::string render_svg(const Polygon& p, const Cover* cover, const RenderSpec& spec) {
    if (spec.scale < 1 || spec.scale > kMaxScale) {
        throw Error(ErrorCode::ParseError, "scale must be between 1 and " + std::to_string(kMaxScale));
    }
    const Rect box = p.bounding_box();
    const Canvas cv(box, spec.scale);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << cv.width() << "\" height=\"" << cv.height()
        << "\" viewBox=\"0 0 " << cv.width() << ' ' << cv.height() << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << cv.width() << "\" height=\"" << cv.height() << "\" fill=\"white\"/>\n";

    if (spec.show_grid && p.area_wide() <= 4096) {
        out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
        for (Coord gx = box.x1; gx <= box.x2; ++gx) {
            out << "<line x1=\"" << cv.x(gx) << "\" y1=\"" << cv.y(box.y1) << "\" x2=\"" << cv.x(gx) << "\" y2=\"" << cv.y(box.y2) << "\"/>\n";
        }
        for (Coord gy = box.y1; gy <= box.y2; ++gy) {
            out << "<line x1=\"" << cv.x(box.x1) << "\" y1=\"" << cv.y(gy) << "\" x2=\"" << cv.x(box.x2) << "\" y2=\"" << cv.y(gy) << "\"/>\n";
        }
        out << "</g>\n";
    }

    if (spec.show_cover && cover != nullptr) {
        out << "<g stroke-width=\"2\">\n";
        for (std::size_t i = 0; i < cover->size(); ++i) {
            const RecPack& pk = cover->packs()[i];
            const Rect r = pk.rect();
            const char* color = kPackColors[i % kPackColors.size()];
            out << "<rect x=\"" << cv.x(r.x1) << "\" y=\"" << cv.y(r.y2) << "\" width=\"" << cv.len(r.x1, r.x2) << "\" height=\""
                << cv.len(r.y1, r.y2) << "\" fill=\"" << color << "\" fill-opacity=\"0.3\" stroke=\"" << color << "\"/>\n";
            if (spec.show_labels) {
                out << "<text x=\"" << to_decimal((cv.px(r.x1) + cv.px(r.x2)) / 2) << "\" y=\"" << to_decimal((cv.py(r.y1) + cv.py(r.y2)) / 2)
                    << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                    << "\xCE\xB7=" << pk.eta << "</text>\n";
            }
        }
        out << "</g>\n";
    }

    if (spec.show_polygon) {
        out << "<path d=\"";
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Point& v = p.vertices()[i];
            out << (i == 0 ? "M" : " L") << cv.x(v.x) << ' ' << cv.y(v.y);
        }
        out << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace orthocover
