#include "optobec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace optobec {

namespace {

std::optional<double> quantity_value(const PointResult& row, const std::string& q) {
    if (q == "E_mc") return row.e_mc;
    if (q == "E_ac") return row.e_ac;
    if (q == "E_ma") return row.e_ma;
    if (q == "eps_mc") return row.eps_mc;
    if (q == "eps_ac") return row.eps_ac;
    if (q == "eps_ma") return row.eps_ma;
    if (q == "c_s") return row.c_s;
    throw UnknownQuantity("unknown quantity '" + q + "'");
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string rgb(double t) {
    // linear two-stop map, light -> dark
    const int r = int(255 + t * (8 - 255));
    const int g = int(245 + t * (48 - 245));
    const int b = int(235 + t * (107 - 235));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

struct AxisScale {
    double lo, hi;
    bool log;
    double map(double v, double a, double b) const {
        double t;
        if (log) {
            t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        } else {
            t = (v - lo) / (hi - lo);
        }
        return a + t * (b - a);
    }
};

const char* series_colors[] = {"#000000", "#c0392b", "#1e8449", "#1f618d",
                               "#7d3c98", "#b7950b"};

void render_line_plot(const SweepResult& result,
                      const std::vector<std::string>& quantities,
                      std::ostream& out) {
    const double w = 720, h = 520, l = 80, r = 30, top = 46, bot = 64;
    const size_t n1 = result.axis1_size;
    const size_t n2 = result.axis2_size;

    AxisScale xs{result.rows.front().axis1_value.value(),
                 result.rows[n1 - 1].axis1_value.value(), result.axis1_log};
    double ymax = 0.0;
    for (const auto& row : result.rows)
        for (const auto& q : quantities)
            if (auto v = quantity_value(row, q)) ymax = std::max(ymax, *v);
    if (ymax <= 0.0) ymax = 1.0;  // degenerate all-zero column

    out << "<g fill=\"none\" stroke=\"#333333\">\n"
        << "<rect x=\"" << l << "\" y=\"" << top << "\" width=\"" << (w - l - r)
        << "\" height=\"" << (h - top - bot) << "\"/>\n</g>\n";

    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double tx = l + (w - l - r) * i / 5.0;
        double xv;
        if (xs.log) {
            xv = std::pow(10.0, std::log10(xs.lo) +
                                    (std::log10(xs.hi) - std::log10(xs.lo)) * i / 5.0);
        } else {
            xv = xs.lo + (xs.hi - xs.lo) * i / 5.0;
        }
        out << "<line x1=\"" << tx << "\" y1=\"" << (h - bot) << "\" x2=\"" << tx
            << "\" y2=\"" << (h - bot + 5) << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << tx << "\" y=\"" << (h - bot + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(xv) << "</text>\n";
        const double ty = h - bot - (h - top - bot) * i / 5.0;
        const double yv = ymax * i / 5.0;
        out << "<line x1=\"" << (l - 5) << "\" y1=\"" << ty << "\" x2=\"" << l
            << "\" y2=\"" << ty << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << (l - 8) << "\" y=\"" << (ty + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(yv) << "</text>\n";
    }

    int series = 0;
    for (size_t j = 0; j < n2; ++j) {
        for (const auto& q : quantities) {
            bool pen_down = false;
            std::ostringstream path;
            for (size_t i = 0; i < n1; ++i) {
                const auto& row = result.rows[j * n1 + i];
                const auto v = quantity_value(row, q);
                if (!v) { pen_down = false; continue; }
                const double x = xs.map(*row.axis1_value, l, w - r);
                const double y = h - bot - (*v / ymax) * (h - top - bot);
                path << (pen_down ? " L" : " M") << x << ' ' << y;
                pen_down = true;
            }
            const char* color = series_colors[series % 6];
            const char* dash = (j % 2 == 1) ? " stroke-dasharray=\"6,4\"" : "";
            if (!path.str().empty())
                out << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
                    << "\" stroke-width=\"1.6\"" << dash << "/>\n";
            std::string label = q;
            if (result.axis2_name)
                label += " (" + *result.axis2_name + "=" +
                         fmt(result.rows[j * n1].axis2_value.value()) + ")";
            out << "<text x=\"" << (l + 12) << "\" y=\"" << (top + 16 + 14 * series)
                << "\" font-size=\"12\" fill=\"" << color << "\">" << label << "</text>\n";
            ++series;
        }
    }

    out << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 16)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << result.axis1_name
        << "</text>\n";
}

void render_heatmap(const SweepResult& result, const std::string& quantity,
                    std::ostream& out) {
    const double w = 720, h = 520, l = 80, r = 100, top = 46, bot = 64;
    const size_t n1 = result.axis1_size;
    const size_t n2 = result.axis2_size;

    double vmax = 0.0;
    for (const auto& row : result.rows)
        if (auto v = quantity_value(row, quantity)) vmax = std::max(vmax, *v);
    const double scale = vmax > 0.0 ? vmax : 1.0;  // degenerate range: single color

    const double cw = (w - l - r) / double(n1);
    const double ch = (h - top - bot) / double(n2);
    for (size_t j = 0; j < n2; ++j) {
        for (size_t i = 0; i < n1; ++i) {
            const auto& row = result.rows[j * n1 + i];
            const auto v = quantity_value(row, quantity);
            const double x = l + cw * double(i);
            const double y = h - bot - ch * double(j + 1);
            std::string fill = v ? rgb(*v / scale) : std::string("url(#unstable)");
            out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw + 0.5
                << "\" height=\"" << ch + 0.5 << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    out << "<rect x=\"" << l << "\" y=\"" << top << "\" width=\"" << (w - l - r)
        << "\" height=\"" << (h - top - bot)
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    auto axis_label = [&](size_t idx, bool horizontal) {
        const auto& rows = result.rows;
        const double lo = horizontal ? rows.front().axis1_value.value()
                                     : rows.front().axis2_value.value();
        const double hi = horizontal ? rows[n1 - 1].axis1_value.value()
                                     : rows[(n2 - 1) * n1].axis2_value.value();
        const bool logscale = horizontal ? result.axis1_log : result.axis2_log;
        (void)idx;
        for (int i = 0; i <= 4; ++i) {
            double v;
            if (logscale && lo > 0.0) {
                v = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / 4.0);
            } else {
                v = lo + (hi - lo) * i / 4.0;
            }
            if (horizontal) {
                const double tx = l + (w - l - r) * i / 4.0;
                out << "<text x=\"" << tx << "\" y=\"" << (h - bot + 20)
                    << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(v) << "</text>\n";
            } else {
                const double ty = h - bot - (h - top - bot) * i / 4.0;
                out << "<text x=\"" << (l - 8) << "\" y=\"" << (ty + 4)
                    << "\" text-anchor=\"end\" font-size=\"12\">" << fmt(v) << "</text>\n";
            }
        }
    };
    axis_label(0, true);
    axis_label(1, false);

    // colorbar
    const double cb_x = w - r + 24, cb_w = 18, cb_y = top, cb_h = h - top - bot;
    for (int i = 0; i < 64; ++i) {
        const double t = (63 - i) / 63.0;
        out << "<rect x=\"" << cb_x << "\" y=\"" << (cb_y + cb_h * i / 64.0)
            << "\" width=\"" << cb_w << "\" height=\"" << (cb_h / 64.0 + 0.5)
            << "\" fill=\"" << rgb(t) << "\"/>\n";
    }
    out << "<rect x=\"" << cb_x << "\" y=\"" << cb_y << "\" width=\"" << cb_w
        << "\" height=\"" << cb_h << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << (cb_x + cb_w + 4) << "\" y=\"" << (cb_y + 10)
        << "\" font-size=\"11\">" << fmt(vmax) << "</text>\n";
    out << "<text x=\"" << (cb_x + cb_w + 4) << "\" y=\"" << (cb_y + cb_h)
        << "\" font-size=\"11\">0</text>\n";

    out << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 16)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << result.axis1_name
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << (h / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
        << (h / 2) << ")\">" << (result.axis2_name ? *result.axis2_name : std::string())
        << "</text>\n";
}

} // namespace

void emit_svg(const SweepResult& result, const std::vector<std::string>& quantities,
              const std::string& path) {
    if (quantities.empty()) throw UnknownQuantity("no quantity requested");
    for (const auto& q : quantities)
        quantity_value(result.rows.front(), q);  // validates the names
    const bool grid = result.axis2_name && result.axis2_size > 2;

    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open '" + path + "' for writing");

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"520\" "
           "viewBox=\"0 0 720 520\">\n"
        << "<defs>\n"
        << "<pattern id=\"unstable\" width=\"6\" height=\"6\" "
           "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n"
        << "<rect width=\"6\" height=\"6\" fill=\"#d9d9d9\"/>\n"
        << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#8c8c8c\" "
           "stroke-width=\"2\"/>\n"
        << "</pattern>\n</defs>\n"
        << "<rect width=\"720\" height=\"520\" fill=\"#ffffff\"/>\n"
        << "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">";
    for (size_t i = 0; i < quantities.size(); ++i)
        out << (i ? ", " : "") << quantities[i];
    out << " vs " << result.axis1_name;
    if (result.axis2_name) out << " and " << *result.axis2_name;
    out << "</text>\n";

    if (grid) {
        render_heatmap(result, quantities.front(), out);
    } else {
        render_line_plot(result, quantities, out);
    }
    out << "</svg>\n";
    if (!out) throw IoFailure("SVG write failed");
}

void emit_svg(const SweepResult& result, const std::string& quantity,
              const std::string& path) {
    emit_svg(result, std::vector<std::string>{quantity}, path);
}

} // namespace optobec
