#include "ncop/series.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ncop {

Series Series::t(int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::constant(const Rat& c, int order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Series Series::operator+(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(std::min(order(), o.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

Series Series::operator*(const Rat& c) const {
  Series r = *this;
  for (Rat& v : r.coeffs_) v *= c;
  return r;
}

Series Series::shift(int k) const {
  Series r(order());
  for (int i = order(); i >= k; --i) r.coeffs_[i] = coeffs_[i - k];
  return r;
}

Series Series::divide_by_t(int k) const {
  if (k > order()) throw std::invalid_argument("valuation exceeds the order");
  for (int i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::invalid_argument("series is not divisible by t^" + std::to_string(k));
  Series r(order() - k);
  for (int i = 0; i <= r.order(); ++i) r.coeffs_[i] = coeffs_[i + k];
  return r;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::invalid_argument("constant term vanishes");
  Series r(order());
  r.coeffs_[0] = Rat(1) / coeffs_[0];
  for (int n = 1; n <= order(); ++n) {
    Rat acc = 0;
    for (int i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
    r.coeffs_[n] = -acc / coeffs_[0];
  }
  return r;
}

Series Series::truncate(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  Series r(order);
  for (int i = 0; i <= order; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

std::string Series::str() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k] == 0) continue;
    Rat c = coeffs_[k];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (k == 0)
      out += to_string(c);
    else {
      if (c != 1) out += to_string(c) + "*";
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

GfSystem solve_system(int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const Series t = Series::t(order);
  Series f(order), x(order), y(order), z(order);
  // every unknown on the right sits under at least one extra power of t, so
  // each round fixes at least one more coefficient
  for (int round = 0; round <= order + 3; ++round) {
    Series fz = f - z;
    Series nx = fz * fz;
    Series ny = fz * (t + y) * t;
    Series nz = fz * (x - z);
    Series nf = t + nx + ny;
    const bool stable = nf == f && nx == x && ny == y && nz == z;
    f = std::move(nf);
    x = std::move(nx);
    y = std::move(ny);
    z = std::move(nz);
    if (stable) return {f, x, y, z};
  }
  throw std::logic_error("generating function iteration did not stabilize");
}

std::vector<Int> riordan(int n_max) {
  if (n_max < 0) throw std::invalid_argument("need a nonnegative index");
  std::vector<Int> r(n_max + 1);
  r[0] = 1;
  if (n_max >= 1) r[1] = 0;
  for (int n = 2; n <= n_max; ++n) {
    Int num = Int(n - 1) * (2 * r[n - 1] + 3 * r[n - 2]);
    Int q = num / Int(n + 1);
    if (q * Int(n + 1) != num) throw std::logic_error("recurrence step is not integral");
    r[n] = q;
  }
  return r;
}

bool SeriesReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SeriesCheck& c) { return c.ok; });
}

nlohmann::json SeriesReport::to_json() const {
  auto coeff_list = [](const Series& s) {
    nlohmann::json a = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) a.push_back(to_string(s.coeff(k)));
    return a;
  };
  nlohmann::json cj = nlohmann::json::array();
  for (const SeriesCheck& c : checks) {
    nlohmann::json o{{"id", c.id}, {"ok", c.ok}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    cj.push_back(std::move(o));
  }
  nlohmann::json counts_j = nlohmann::json::array();
  for (const Int& c : counts) counts_j.push_back(to_string(c));
  return nlohmann::json{{"order", order},
                        {"f", coeff_list(sys.f)},
                        {"x", coeff_list(sys.x)},
                        {"y", coeff_list(sys.y)},
                        {"z", coeff_list(sys.z)},
                        {"counts", std::move(counts_j)},
                        {"checks", std::move(cj)},
                        {"ok", ok()}};
}

SeriesReport series_report(int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  SeriesReport rep;
  rep.order = order;
  rep.sys = solve_system(order);
  const Series& f = rep.sys.f;
  const Series& x = rep.sys.x;
  const Series& y = rep.sys.y;
  const Series& z = rep.sys.z;
  const Series t = Series::t(order);
  const Series one = Series::constant(1, order);

  auto push = [&rep](std::string id, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(id), ok, std::move(detail)});
  };

  const Series fz = f - z;
  push("f = t + x + y", (f - (t + x + y)).is_zero());
  push("x = (f - z)^2", (x - fz * fz).is_zero());
  push("y = (f - z) (t + y) t", (y - fz * (t + y) * t).is_zero());
  push("z = (f - z) (x - z)", (z - fz * (x - z)).is_zero());

  const Series a = one + f.shift(1);
  push("1 + t f solves a = 1/(1 + t) + t a^2", (a - ((one + t).inverse() + (a * a).shift(1))).is_zero());

  const Series m = fz.divide_by_t(1);
  const Series one_m = Series::constant(1, m.order());
  push("(f - z)/t solves the Motzkin equation",
       (m - (one_m + m.shift(1) + (m * m).shift(2))).is_zero());

  push("y = t^2 f", (y - f.shift(2)).is_zero());

  const Series f2 = f * f;
  push("t^3 f^2 + t^2 f^2 + 2 t^2 f + t f + t = f",
       (f2.shift(3) + f2.shift(2) + f.shift(2) * Rat(2) + f.shift(1) + t - f).is_zero());

  const std::vector<Int> r = riordan(order + 1);
  bool match = true;
  std::string md;
  for (int n = 1; n <= order && match; ++n) {
    const Rat& c = f.coeff(n);
    if (boost::multiprecision::denominator(c) != 1 ||
        Int(boost::multiprecision::numerator(c)) != r[n + 1]) {
      match = false;
      md = "mismatch at degree " + std::to_string(n);
      break;
    }
    rep.counts.push_back(Int(boost::multiprecision::numerator(c)));
  }
  push("coefficients follow the closed recurrence", match, md);
  return rep;
}

}  // namespace ncop
