#pragma once

// Minimal SVG scatter emitter for weight diagrams. No plotting dependency;
// the output is a grid with one dot per weight, styled per series.

#include "flopkit/weights.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace flopkit {

struct SvgSeries {
  WeightSet weights;
  std::string fill;    // e.g. "#c62828"
  double radius{4.0};
  bool hollow{false};
};

inline std::string weight_scatter_svg(const std::vector<SvgSeries>& series, long lo = -7,
                                      long hi = 7, const std::string& title = "") {
  const double cell = 28.0, margin = 30.0;
  double span = static_cast<double>(hi - lo);
  double size = 2 * margin + span * cell;
  auto X = [&](const Int& a) { return margin + (static_cast<double>(a) - lo) * cell; };
  auto Y = [&](const Int& b) { return size - margin - (static_cast<double>(b) - lo) * cell; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  if (!title.empty())
    os << "  <title>" << title << "</title>\n";
  for (long g = lo; g <= hi; ++g) {
    os << "  <line x1=\"" << X(Int(g)) << "\" y1=\"" << Y(Int(lo)) << "\" x2=\"" << X(Int(g))
       << "\" y2=\"" << Y(Int(hi)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    os << "  <line x1=\"" << X(Int(lo)) << "\" y1=\"" << Y(Int(g)) << "\" x2=\"" << X(Int(hi))
       << "\" y2=\"" << Y(Int(g)) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  os << "  <line x1=\"" << X(Int(lo)) << "\" y1=\"" << Y(Int(0)) << "\" x2=\"" << X(Int(hi))
     << "\" y2=\"" << Y(Int(0)) << "\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
  os << "  <line x1=\"" << X(Int(0)) << "\" y1=\"" << Y(Int(lo)) << "\" x2=\"" << X(Int(0))
     << "\" y2=\"" << Y(Int(hi)) << "\" stroke=\"#888888\" stroke-width=\"1.5\"/>\n";
  for (const auto& s : series)
    for (const auto& w : s.weights) {
      os << "  <circle cx=\"" << X(w.a) << "\" cy=\"" << Y(w.b) << "\" r=\"" << s.radius << "\"";
      if (s.hollow)
        os << " fill=\"none\" stroke=\"" << s.fill << "\" stroke-width=\"2\"";
      else
        os << " fill=\"" << s.fill << "\"";
      os << "/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace flopkit
