#include "graphcrit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace graphcrit::svg {

namespace {

constexpr double kWidth = 720, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2",
                                    "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39",
                                    "#7b4173", "#3182bd", "#e6550d", "#31a354", "#756bb1", "#636363"};
constexpr std::size_t kPaletteSize = std::size(kPalette);

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) {
      const double pad = std::max(1e-6, std::abs(lo) * 0.05);
      lo -= pad;
      hi += pad;
    }
  }
};

class Canvas {
 public:
  Canvas(const Metadata& meta, const std::string& title, Range x, Range y) : x_(x), y_(y) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<!--\n";
    meta.write(out_, "  ");
    out_ << "-->\n";
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
         << "</text>\n";
  }

  double px(double x) const { return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight); }
  double py(double y) const { return kHeight - kBottom - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - kTop - kBottom); }

  void axes(const std::string& x_label, const std::string& y_label) {
    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    out_ << "<g stroke=\"#333\" fill=\"none\"><path d=\"M" << x0 << ',' << y1 << " L" << x0 << ',' << y0 << " L" << x1
         << ',' << y0 << "\"/></g>\n";
    for (int i = 0; i <= 4; ++i) {
      const double fx = x_.lo + (x_.hi - x_.lo) * i / 4.0;
      const double fy = y_.lo + (y_.hi - y_.lo) * i / 4.0;
      out_ << "<text x=\"" << px(fx) << "\" y=\"" << y0 + 16 << "\" text-anchor=\"middle\">" << format_real(fx, 4)
           << "</text>\n";
      out_ << "<text x=\"" << x0 - 6 << "\" y=\"" << py(fy) + 4 << "\" text-anchor=\"end\">" << format_real(fy, 4)
           << "</text>\n";
    }
    out_ << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
         << escape(x_label) << "</text>\n";
    out_ << "<text transform=\"translate(16," << (y0 + y1) / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
         << escape(y_label) << "</text>\n";
  }

  std::ostringstream& raw() { return out_; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Range x_, y_;
  std::ostringstream out_;
};

}  // namespace

std::string line_chart(const Metadata& meta, const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<LineSeries>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();
  Canvas c(meta, title, xr, yr);
  c.axes(x_label, y_label);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    auto& out = c.raw();
    out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kPalette[k % kPaletteSize] << "\" points=\"";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      out << format_real(c.px(s.x[i]), 6) << ',' << format_real(c.py(s.y[i]), 6) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << kLeft + 10 << "\" y=\"" << kTop + 14 * (k + 1) << "\" fill=\"" << kPalette[k % kPaletteSize]
        << "\">" << escape(s.name) << "</text>\n";
  }
  return c.finish();
}

std::string scatter(const Metadata& meta, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<ScatterPoint>& points) {
  Range xr, yr;
  for (const auto& p : points) {
    xr.add(p.x);
    yr.add(p.y);
  }
  xr.finish();
  yr.finish();
  Canvas c(meta, title, xr, yr);
  c.axes(x_label, y_label);
  for (const auto& p : points)
    c.raw() << "<circle r=\"2.5\" fill-opacity=\"0.7\" cx=\"" << format_real(c.px(p.x), 6) << "\" cy=\""
            << format_real(c.py(p.y), 6) << "\" fill=\"" << kPalette[p.group % kPaletteSize] << "\"/>\n";
  return c.finish();
}

std::string histogram(const Metadata& meta, const std::string& title, const std::string& x_label,
                      const std::vector<double>& bin_edges, const std::vector<std::size_t>& counts) {
  Range xr, yr;
  for (double e : bin_edges) xr.add(e);
  yr.add(0.0);
  for (auto n : counts) yr.add(static_cast<double>(n));
  xr.finish();
  yr.finish();
  Canvas c(meta, title, xr, yr);
  c.axes(x_label, "count");
  const double max_count = yr.hi > 0 ? yr.hi : 1.0;
  for (std::size_t b = 0; b < counts.size() && b + 1 < bin_edges.size(); ++b) {
    // Colour runs blue (few) to red (many).
    const double t = static_cast<double>(counts[b]) / max_count;
    const int red = static_cast<int>(std::lround(255 * t));
    const int blue = 255 - red;
    const double x0 = c.px(bin_edges[b]), x1 = c.px(bin_edges[b + 1]);
    const double y0 = c.py(static_cast<double>(counts[b])), y1 = c.py(0.0);
    c.raw() << "<rect x=\"" << format_real(x0, 6) << "\" y=\"" << format_real(y0, 6) << "\" width=\""
            << format_real(std::max(0.0, x1 - x0), 6) << "\" height=\"" << format_real(std::max(0.0, y1 - y0), 6)
            << "\" fill=\"rgb(" << red << ",60," << blue << ")\" stroke=\"white\"/>\n";
  }
  return c.finish();
}

}  // namespace graphcrit::svg
