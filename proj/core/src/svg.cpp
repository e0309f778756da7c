#include "ncop/svg.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace ncop {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCx = 200.0, kCy = 200.0, kR = 150.0;

std::string num(double v) {
  char buf[32];
  // fixed precision keeps the output byte-stable
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // avoid "-0.00"
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

struct Pt {
  double x, y;
};

Pt on_circle(double angle, double radius) {
  return {kCx + radius * std::cos(angle), kCy + radius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const NCPartition& pi) {
  const int n = pi.arity();
  const int points = n + 1;
  const double step = 2.0 * kPi / points;
  // element 0 sits at the bottom; svg y grows downwards
  auto center_angle = [&](int k) { return kPi / 2.0 + k * step; };
  const double half = 0.42 * step;

  static const char* kFills[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                 "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  constexpr int kFillCount = 10;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 400 400\" width=\"400\" "
         "height=\"400\">\n";
  out += "  <circle cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) + "\" r=\"" + num(kR) +
         "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";

  const auto& blocks = pi.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::string d;
    const std::vector<int>& blk = blocks[b];
    for (std::size_t e = 0; e < blk.size(); ++e) {
      const double a0 = center_angle(blk[e]) - half;
      const double a1 = center_angle(blk[e]) + half;
      const Pt p0 = on_circle(a0, kR);
      const Pt p1 = on_circle(a1, kR);
      d += (e == 0 ? "M " : "L ") + num(p0.x) + " " + num(p0.y);
      // ride the boundary across the element's own arc
      d += " A " + num(kR) + " " + num(kR) + " 0 0 1 " + num(p1.x) + " " + num(p1.y) + " ";
    }
    d += "Z";
    out += "  <path d=\"" + d + "\" fill=\"" + kFills[b % kFillCount] +
           "\" fill-opacity=\"0.85\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  }

  for (int k = 0; k < points; ++k) {
    const Pt p = on_circle(center_angle(k), kR + 14.0);
    out += "  <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) +
           "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\">" +
           std::to_string(k) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ncop
