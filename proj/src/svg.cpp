#include "kuwalls/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace kuwalls {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 48;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double beta_min, beta_max, alpha_max, scale, x0, y0;

  double x(double beta) const { return x0 + (beta - beta_min) * scale; }
  double y(double alpha) const { return y0 - alpha * scale; }
};

Frame make_frame(const ChamberReport& r) {
  const double b0 = to_double(r.beta0);
  double lo = b0 - 1, hi = b0 + 1, top = 1;
  for (const auto& w : r.walls) {
    if (w.wall.kind != WallLocus::Kind::semicircle) continue;
    const double c = to_double(w.wall.center_beta);
    const double rad = std::sqrt(to_double(w.wall.radius_sq));
    lo = std::min(lo, c - 1.25 * rad);
    hi = std::max(hi, c + 1.25 * rad);
    top = std::max(top, 1.25 * rad);
  }
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  const double scale = std::min(plot_w / (hi - lo), plot_h / top);
  return {lo, hi, plot_h / scale, scale, kMargin, kHeight - kMargin};
}

}  // namespace

std::string render_wall_diagram(const ChamberReport& r, const std::string& title) {
  const Frame f = make_frame(r);
  const double b0 = to_double(r.beta0);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
     << "font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";

  // axes
  os << "<line x1=\"" << num(f.x(f.beta_min)) << "\" y1=\"" << num(f.y0) << "\" x2=\""
     << num(f.x(f.beta_max)) << "\" y2=\"" << num(f.y0)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n"
     << "<text x=\"" << num(f.x(f.beta_max)) << "\" y=\"" << num(f.y0 + 16)
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">beta</text>\n";
  for (double t = std::ceil(f.beta_min * 2) / 2; t <= f.beta_max + 1e-9; t += 0.5) {
    os << "<line x1=\"" << num(f.x(t)) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x(t))
       << "\" y2=\"" << num(f.y0 + 4) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << num(f.x(t)) << "\" y=\"" << num(f.y0 + 30)
       << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << num(t)
       << "</text>\n";
  }

  // beta = beta0
  os << "<line x1=\"" << num(f.x(b0)) << "\" y1=\"" << num(f.y0) << "\" x2=\"" << num(f.x(b0))
     << "\" y2=\"" << num(f.y(f.alpha_max)) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n"
     << "<text x=\"" << num(f.x(b0) + 4) << "\" y=\"" << num(f.y(f.alpha_max) + 12)
     << "\" font-family=\"sans-serif\" font-size=\"11\">beta = " << escape(to_string(r.beta0))
     << "</text>\n";

  std::vector<double> crossings{0};
  for (const auto& w : r.walls) {
    const double alpha = std::sqrt(to_double(w.alpha_sq));
    crossings.push_back(alpha);
    if (w.wall.kind == WallLocus::Kind::semicircle) {
      const double c = to_double(w.wall.center_beta);
      const double rad = std::sqrt(to_double(w.wall.radius_sq));
      os << "<path d=\"M " << num(f.x(c - rad)) << ' ' << num(f.y0) << " A "
         << num(rad * f.scale) << ' ' << num(rad * f.scale) << " 0 0 1 " << num(f.x(c + rad))
         << ' ' << num(f.y0) << "\" fill=\"none\" stroke=\"firebrick\" stroke-width=\"2\"/>\n";
    } else {
      const double beta = to_double(w.wall.center_beta);
      os << "<line x1=\"" << num(f.x(beta)) << "\" y1=\"" << num(f.y0) << "\" x2=\""
         << num(f.x(beta)) << "\" y2=\"" << num(f.y(f.alpha_max))
         << "\" stroke=\"firebrick\" stroke-width=\"2\"/>\n";
    }
    const std::string label = w.alpha ? "alpha = " + to_string(*w.alpha)
                                       : "alpha^2 = " + to_string(w.alpha_sq);
    os << "<circle cx=\"" << num(f.x(b0)) << "\" cy=\"" << num(f.y(alpha))
       << "\" r=\"3\" fill=\"firebrick\"/>\n"
       << "<text x=\"" << num(f.x(b0) - 6) << "\" y=\"" << num(f.y(alpha) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << escape(label)
       << "</text>\n";
  }
  crossings.push_back(f.alpha_max);
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
    const double mid = (crossings[i] + crossings[i + 1]) / 2;
    os << "<text x=\"" << num(f.x(b0) + 8) << "\" y=\"" << num(f.y(mid))
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"navy\">chamber " << (i + 1)
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kuwalls
