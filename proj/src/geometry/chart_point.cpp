#include "finsler/geometry/chart_point.hpp"

#include <charconv>
#include <sstream>

namespace finsler::geometry {

void ChartPoint::validate(int n) const {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("point must have " + std::to_string(n) + " x and y coordinates");
  bool nonzero = false;
  for (double v : y) nonzero = nonzero || v != 0.0;
  if (!nonzero) throw std::invalid_argument("y must be nonzero on the slit tangent bundle");
}

std::vector<double> ChartPoint::coordinates() const {
  std::vector<double> v = x;
  v.insert(v.end(), y.begin(), y.end());
  return v;
}

namespace {

std::vector<double> parse_list(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coordinate in " + what);
    item = item.substr(b, e - b + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc() || res.ptr != item.data() + item.size())
      throw std::invalid_argument("bad number '" + item + "' in " + what);
    out.push_back(v);
  }
  return out;
}

}  // namespace

ChartPoint parse_point(const std::string& text) {
  ChartPoint p;
  bool have_x = false, have_y = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected x=... or y=... in point '" + text + "'");
    std::string key = part.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key == "x") {
      p.x = parse_list(part.substr(eq + 1), "x");
      have_x = true;
    } else if (key == "y") {
      p.y = parse_list(part.substr(eq + 1), "y");
      have_y = true;
    } else {
      throw std::invalid_argument("unknown point component '" + key + "'");
    }
  }
  if (!have_x || !have_y) throw std::invalid_argument("point needs both x and y");
  return p;
}

}  // namespace finsler::geometry
