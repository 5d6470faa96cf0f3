#include "chaoskit/cli/svg.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "chaoskit/errors.hpp"

namespace chaoskit::cli {

namespace {

constexpr int kMargin = 50;
constexpr int kMapSamples = 200;

struct Frame {
    double x_lo, x_hi;
    int width, height;

    double plot_w() const { return width - 2.0 * kMargin; }
    double plot_h() const { return height - 2.0 * kMargin; }
};

// Returns the smaller of the two data-to-viewport scale factors.
double open_document(std::ostream& out, const Frame& f, std::string_view title) {
    fmt::print(out, "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    fmt::print(out,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
               "viewBox=\"0 0 {0} {1}\">\n",
               f.width, f.height);
    fmt::print(out, "<title>{}</title>\n", title);
    fmt::print(out, "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", f.width,
               f.height);

    const int left = kMargin, right = f.width - kMargin, top = kMargin, bottom = f.height - kMargin;
    fmt::print(out,
               "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
               "<line x1=\"{0}\" y1=\"{3}\" x2=\"{1}\" y2=\"{3}\"/>\n"
               "<line x1=\"{0}\" y1=\"{2}\" x2=\"{0}\" y2=\"{3}\"/>\n"
               "</g>\n",
               left, right, top, bottom);
    fmt::print(out,
               "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n"
               "<text x=\"{0}\" y=\"{2}\" text-anchor=\"middle\">{4:.6g}</text>\n"
               "<text x=\"{1}\" y=\"{2}\" text-anchor=\"middle\">{5:.6g}</text>\n"
               "<text x=\"{6}\" y=\"{3}\" text-anchor=\"end\">0</text>\n"
               "<text x=\"{6}\" y=\"{7}\" text-anchor=\"end\">1</text>\n"
               "</g>\n",
               left, right, bottom + 18, bottom, f.x_lo, f.x_hi, left - 6, top + 4);

    // data (x, y) -> viewport (left + (x - x_lo) sx, bottom - y sy)
    const double span = f.x_hi > f.x_lo ? f.x_hi - f.x_lo : 1.0;
    const double sx = f.plot_w() / span;
    const double sy = f.plot_h();
    const double offset_x = f.x_hi > f.x_lo ? left - f.x_lo * sx : left + f.plot_w() / 2.0 - f.x_lo * sx;
    fmt::print(out, "<g class=\"data\" transform=\"matrix({:.12g} 0 0 {:.12g} {:.12g} {})\">\n", sx, -sy, offset_x,
               bottom);
    return std::min(sx, sy);
}

void close_document(std::ostream& out) { out << "</g>\n</svg>\n"; }

}  // namespace

void write_cobweb_svg(std::ostream& out, const MapParams& params, double x0, std::size_t steps, int width,
                      int height) {
    if (steps == 0) throw DomainError("cobweb needs at least one step");
    const auto states = orbit(params, x0, 0, steps + 1).states;

    const Frame frame{0.0, 1.0, width, height};
    open_document(out, frame, fmt::format("Cobweb diagram, r = {:.6g}, x0 = {:.6g}", params.r(), x0));

    out << "<polyline class=\"map\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
           "vector-effect=\"non-scaling-stroke\" points=\"";
    for (int i = 0; i <= kMapSamples; ++i) {
        const double x = static_cast<double>(i) / kMapSamples;
        fmt::print(out, "{}{:.9g},{:.9g}", i ? " " : "", x, step_unchecked(params.r(), x));
    }
    out << "\"/>\n";
    out << "<line class=\"diagonal\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\" stroke=\"gray\" stroke-width=\"1\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";

    for (std::size_t k = 0; k < steps; ++k) {
        const double x = states[k];
        const double y = states[k + 1];
        fmt::print(out,
                   "<polyline class=\"cobweb-step\" fill=\"none\" stroke=\"firebrick\" stroke-width=\"1\" "
                   "vector-effect=\"non-scaling-stroke\" points=\"{0:.9g},{0:.9g} {0:.9g},{1:.9g} {1:.9g},{1:.9g}\"/>\n",
                   x, y);
    }
    close_document(out);
}

void write_bifurcation_svg(std::ostream& out, const BifurcationDiagram& diagram, int width, int height) {
    if (diagram.r_grid.empty()) throw DomainError("bifurcation diagram has no grid points");
    const Frame frame{diagram.r_grid.front(), diagram.r_grid.back(), width, height};
    const double scale = open_document(out, frame,
                  fmt::format("Bifurcation diagram, r in [{:.6g}, {:.6g}]", diagram.r_grid.front(),
                              diagram.r_grid.back()));

    // vector-effect does not inherit, so the marker size is given in data units: about 1.5 px.
    fmt::print(out, "<g class=\"samples\" stroke=\"black\" stroke-width=\"{:.6g}\" stroke-linecap=\"square\">\n",
               1.5 / scale);
    for (std::size_t k = 0; k < diagram.r_grid.size(); ++k) {
        const double r = diagram.r_grid[k];
        for (double x : diagram.attractor_samples[k])
            fmt::print(out, "<line class=\"sample\" x1=\"{0:.9g}\" y1=\"{1:.9g}\" x2=\"{0:.9g}\" y2=\"{1:.9g}\"/>\n", r,
                       x);
    }
    out << "</g>\n";
    close_document(out);
}

}  // namespace chaoskit::cli
