#include "stringart/svg.hpp"

#include "stringart/areas.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stringart {

namespace {

const BigInt& pow10_6() {
    static const BigInt scale("1000000");
    return scale;
}

// Affine map from math coordinates (y up) to SVG pixels (y down), kept in
// rationals until formatting.
struct Transform {
    Rational x_offset; // left edge of the viewport in math coordinates
    Rational y_top;    // top edge of the viewport in math coordinates
    Rational scale;
    Rational height_px;

    Rational to_svg_x(const Rational& x) const { return (x - x_offset) * scale; }
    Rational to_svg_y(const Rational& y) const { return (y_top - y) * scale; }
};

Transform make_transform(const Net& net, int width_px) {
    const NetConfig& config = net.config();
    const Rational width{width_px};
    if (config.frame().is_right()) {
        // Geometry is confined to the unit square; map it edge to edge.
        return {Rational(0), Rational(1), width, width};
    }
    const int n = config.n();
    Point corner = intercepts(config, 0).first;
    Rational xmin = corner.x, xmax = corner.x, ymin = corner.y, ymax = corner.y;
    auto grow = [&](const Point& p) {
        if (p.x < xmin) xmin = p.x;
        if (xmax < p.x) xmax = p.x;
        if (p.y < ymin) ymin = p.y;
        if (ymax < p.y) ymax = p.y;
    };
    for (int i = 0; i <= n; ++i) {
        auto [xi, yi] = intercepts(config, i);
        grow(xi);
        grow(yi);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) grow(net.at(i, j));
    }
    Rational margin_x = (xmax - xmin) / Rational(20);
    Rational margin_y = (ymax - ymin) / Rational(20);
    Rational span_x = (xmax - xmin) + margin_x + margin_x;
    Rational span_y = (ymax - ymin) + margin_y + margin_y;
    Rational scale = width / span_x;
    return {xmin - margin_x, ymax + margin_y, scale, span_y * scale};
}

std::string point_attr(const Transform& t, const Point& p) {
    return format_decimal(t.to_svg_x(p.x)) + "," + format_decimal(t.to_svg_y(p.y));
}

void append_polygon(std::string& out, const char* css_class, const std::string& fill,
                    const std::vector<std::string>& points) {
    out += "<polygon class=\"";
    out += css_class;
    out += "\" fill=\"" + fill + "\" points=\"";
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (k > 0) out += " ";
        out += points[k];
    }
    out += "\"/>\n";
}

} // namespace

std::string format_decimal(const Rational& value) {
    const bool negative = value.sign() < 0;
    Rational magnitude = abs(value);
    BigInt scaled_num = magnitude.numerator() * pow10_6();
    BigInt digits = scaled_num / magnitude.denominator();
    BigInt remainder = scaled_num % magnitude.denominator();
    BigInt twice = remainder * 2;
    if (twice > magnitude.denominator() || (twice == magnitude.denominator() && (digits % 2) != 0)) {
        ++digits;
    }
    BigInt whole = digits / pow10_6();
    BigInt fraction = digits % pow10_6();
    std::string frac = fraction.str();
    frac.insert(0, 6 - frac.size(), '0');
    std::string out = whole.str() + "." + frac;
    if (negative && digits != 0) out.insert(0, 1, '-');
    return out;
}

std::string render(const Net& net, const RenderOptions& options) {
    if (options.width_px < 100) throw std::invalid_argument("render: width_px below 100");
    if (options.checkered && options.palette.empty()) {
        throw std::invalid_argument("render: checkered rendering needs a palette");
    }

    const NetConfig& config = net.config();
    const int n = config.n();
    const Transform t = make_transform(net, options.width_px);

    const std::string width_attr = format_decimal(Rational(options.width_px));
    const std::string height_attr = format_decimal(t.height_px);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + width_attr +
                      "\" height=\"" + height_attr + "\" viewBox=\"0 0 " + width_attr + " " +
                      height_attr + "\">\n";

    if (options.checkered) {
        for (int i = 0; i + 3 <= n; ++i) {
            for (int j = i + 2; j + 1 <= n; ++j) {
                const std::string& fill =
                    options.palette[static_cast<std::size_t>(j - i) % options.palette.size()];
                append_polygon(out, "quad", fill,
                               {point_attr(t, net.at(i, j)), point_attr(t, net.at(i + 1, j)),
                                point_attr(t, net.at(i + 1, j + 1)), point_attr(t, net.at(i, j + 1))});
            }
        }
        for (int i = 0; i + 2 <= n; ++i) {
            append_polygon(out, "tri", options.boundary_fill,
                           {point_attr(t, net.at(i, i + 1)), point_attr(t, net.at(i, i + 2)),
                            point_attr(t, net.at(i + 1, i + 2))});
        }
    }

    const std::string stroke_width = format_decimal(Rational(options.width_px, 1000));
    for (int i = 0; i <= n; ++i) {
        auto [xi, yi] = intercepts(config, i);
        out += "<line class=\"net\" x1=\"" + format_decimal(t.to_svg_x(xi.x)) + "\" y1=\"" +
               format_decimal(t.to_svg_y(xi.y)) + "\" x2=\"" + format_decimal(t.to_svg_x(yi.x)) +
               "\" y2=\"" + format_decimal(t.to_svg_y(yi.y)) + "\" stroke=\"" + options.line_color +
               "\" stroke-width=\"" + stroke_width + "\"/>\n";
    }

    if (options.show_vertices) {
        const std::string radius = format_decimal(Rational(options.width_px, 250));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const Point& p = net.at(i, j);
                out += "<circle class=\"vertex\" cx=\"" + format_decimal(t.to_svg_x(p.x)) +
                       "\" cy=\"" + format_decimal(t.to_svg_y(p.y)) + "\" r=\"" + radius +
                       "\" fill=\"" + options.line_color + "\"/>\n";
            }
        }
    }

    if (options.show_envelope) {
        // y = x - 2*sqrt(x) + 1, sampled; the one float-valued element, and
        // it never feeds back into geometry.
        const double x_offset = t.x_offset.to_double();
        const double y_top = t.y_top.to_double();
        const double scale = t.scale.to_double();
        out += "<polyline class=\"envelope\" fill=\"none\" stroke=\"" + options.line_color +
               "\" stroke-width=\"" + stroke_width + "\" points=\"";
        char buffer[64];
        for (int k = 0; k < 256; ++k) {
            double x = static_cast<double>(k) / 255.0;
            double y = envelope_y(x);
            std::snprintf(buffer, sizeof(buffer), "%s%.6f,%.6f", k == 0 ? "" : " ",
                          (x - x_offset) * scale, (y_top - y) * scale);
            out += buffer;
        }
        out += "\"/>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace stringart
