#include "hgs/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Bounds {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;

    void point(Complex z) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, z.imag());
        ymax = std::max(ymax, z.imag());
    }
    void circle(Complex c, double r) {
        point(c + Complex(r, r));
        point(c - Complex(r, r));
    }
    void disk(const GeneralizedDisk& d) {
        if (d.bounded()) {
            circle(d.center(), d.radius());
        } else if (!d.is_halfplane()) {
            GeneralizedDisk hole = d.complement();
            circle(hole.center(), hole.radius());
        }
    }
};

class SvgWriter {
public:
    SvgWriter(const Bounds& b, double pad) {
        double w = std::max(b.xmax - b.xmin, 1e-6), h = std::max(b.ymax - b.ymin, 1e-6);
        x0_ = b.xmin - pad * w;
        y0_ = b.ymin - pad * h;
        w_ = w * (1.0 + 2.0 * pad);
        h_ = h * (1.0 + 2.0 * pad);
        stroke_w_ = std::max(w_, h_) / 400.0;
        // y axis flipped so the complex plane reads the usual way up
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0_) + " " +
                 num(-y0_ - h_) + " " + num(w_) + " " + num(h_) + "\">\n";
    }

    void fill_disk(const GeneralizedDisk& d, const std::string& color) {
        if (d.bounded()) {
            Complex c = d.center();
            body_ += "<circle cx=\"" + num(c.real()) + "\" cy=\"" + num(-c.imag()) +
                     "\" r=\"" + num(d.radius()) + "\" fill=\"" + color +
                     "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
        } else if (!d.is_halfplane()) {
            GeneralizedDisk hole = d.complement();
            Complex c = hole.center();
            double r = hole.radius();
            // frame with a circular hole, even-odd fill
            body_ += "<path fill-rule=\"evenodd\" fill=\"" + color +
                     "\" fill-opacity=\"0.25\" stroke=\"none\" d=\"M" + num(x0_) + " " +
                     num(-y0_ - h_) + " h" + num(w_) + " v" + num(h_) + " h" + num(-w_) +
                     " z M" + num(c.real() + r) + " " + num(-c.imag()) + " a" + num(r) + " " +
                     num(r) + " 0 1 0 " + num(-2.0 * r) + " 0 a" + num(r) + " " + num(r) +
                     " 0 1 0 " + num(2.0 * r) + " 0 z\"/>\n";
        }
    }

    void circle_outline(const GeneralizedDisk& d, const std::string& color) {
        GeneralizedDisk b = d.bounded() ? d : d.complement();
        if (b.is_halfplane()) return;
        Complex c = b.center();
        body_ += "<circle cx=\"" + num(c.real()) + "\" cy=\"" + num(-c.imag()) + "\" r=\"" +
                 num(b.radius()) + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                 num(stroke_w_) + "\"/>\n";
    }

    void dot(Complex z, double scale, const std::string& color) {
        body_ += "<circle cx=\"" + num(z.real()) + "\" cy=\"" + num(-z.imag()) + "\" r=\"" +
                 num(stroke_w_ * scale) + "\" fill=\"" + color + "\" stroke=\"none\"/>\n";
    }

    void polyline(const std::vector<Complex>& pts, const std::string& color, bool closed) {
        if (pts.size() < 2) return;
        body_ += "<path fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                 num(stroke_w_) + "\" d=\"M";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ += " L";
            body_ += num(pts[i].real()) + " " + num(-pts[i].imag());
        }
        if (closed) body_ += " Z";
        body_ += "\"/>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

private:
    double x0_, y0_, w_, h_, stroke_w_;
    std::string body_;
};

const char* kDiskColors[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

void draw_config(SvgWriter& svg, const SchottkyConfig& cfg, int orbit_depth) {
    const GeneralizedDisk* disks[4] = {&cfg.d1, &cfg.d1p, &cfg.d2, &cfg.d2p};
    for (int i = 0; i < 4; ++i) svg.fill_disk(*disks[i], kDiskColors[i]);
    for (int i = 0; i < 4; ++i) svg.circle_outline(*disks[i], kDiskColors[i]);
    const SpherePoint* marks[4] = {&cfg.f1, &cfg.f1p, &cfg.f2, &cfg.f2p};
    for (int i = 0; i < 4; ++i)
        if (!marks[i]->is_infinity()) svg.dot(marks[i]->to_complex(), 2.0, kDiskColors[i]);
    if (orbit_depth > 0) {
        for (const SpherePoint& p : orbit_sample(cfg, orbit_depth))
            if (!p.is_infinity()) svg.dot(p.to_complex(), 0.8, "#333333");
    }
}

Bounds config_bounds(const SchottkyConfig& cfg) {
    Bounds b;
    b.disk(cfg.d1);
    b.disk(cfg.d1p);
    b.disk(cfg.d2);
    b.disk(cfg.d2p);
    const SpherePoint* marks[4] = {&cfg.f1, &cfg.f1p, &cfg.f2, &cfg.f2p};
    for (int i = 0; i < 4; ++i)
        if (!marks[i]->is_infinity()) b.point(marks[i]->to_complex());
    return b;
}

} // namespace

std::string render_config_svg(const SchottkyConfig& cfg, const PlotOptions& opts) {
    SvgWriter svg(config_bounds(cfg), opts.pad_fraction);
    draw_config(svg, cfg, opts.orbit_depth);
    return svg.finish();
}

std::string render_report_svg(const LoopReport& report, const PlotOptions& opts) {
    if (report.samples.empty()) throw Error("render_report_svg: report has no samples");
    const LoopSample& first = report.samples.front();
    SchottkyConfig cfg{MoebiusMap::identity(),  // generators unused for drawing
                       MoebiusMap::identity(),
                       first.disks.d1,
                       first.disks.d1p,
                       first.disks.d2,
                       first.disks.d2p,
                       SpherePoint(Complex(0.0)),
                       SpherePoint::infinity(),
                       SpherePoint(Complex(1.0)),
                       SpherePoint(first.alpha)};
    Bounds b = config_bounds(cfg);
    std::vector<Complex> path;
    for (const LoopSample& s : report.samples) {
        path.push_back(s.alpha);
        b.point(s.alpha);
    }
    SvgWriter svg(b, opts.pad_fraction);
    draw_config(svg, cfg, 0);
    svg.polyline(path, "#000000", true);
    for (const LoopSample& s : report.samples) svg.dot(s.alpha, 1.0, "#000000");
    return svg.finish();
}

} // namespace hgs
