#pragma once

#include "ncop/numbers.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace ncop {

// truncated power series in t with rational coefficients, indices 0..order
class Series {
 public:
  Series() : coeffs_(1, Rat(0)) {}  // zero series of order 0
  explicit Series(int order) : coeffs_(order + 1, Rat(0)) {}
  static Series t(int order);
  static Series constant(const Rat& c, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int k) const { return coeffs_.at(k); }
  void set_coeff(int k, const Rat& c) { coeffs_.at(k) = c; }

  bool is_zero() const;
  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  // binary operations truncate to the smaller order
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rat& c) const;

  Series shift(int k) const;         // multiply by t^k, same order
  Series divide_by_t(int k) const;   // low coefficients must vanish; order drops by k
  Series inverse() const;            // needs coeff(0) != 0
  Series truncate(int order) const;  // order must not exceed the current one

  std::string str() const;

 private:
  std::vector<Rat> coeffs_;
};

struct GfSystem {
  Series f, x, y, z;
};

// smallest solution of f = t+x+y, x = (f-z)^2, y = (f-z)(t+y)t, z = (f-z)(x-z)
GfSystem solve_system(int order);

// closed three-term recurrence for the coefficient sequence of 1 + t*f
std::vector<Int> riordan(int n_max);

struct SeriesCheck {
  std::string id;
  bool ok = false;
  std::string detail;
};

struct SeriesReport {
  int order = 0;
  GfSystem sys;
  std::vector<Int> counts;  // [t^n] f for n = 1..order
  std::vector<SeriesCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

SeriesReport series_report(int order);

}  // namespace ncop
