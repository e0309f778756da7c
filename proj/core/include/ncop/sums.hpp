#pragma once

#include "ncop/errors.hpp"
#include "ncop/numbers.hpp"
#include "ncop/partition.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <string>

namespace ncop {

// Finite linear combination of basis partitions of one fixed arity.
// Invariants: all keys have the sum's arity; no zero coefficient is stored.
template <class C>
class BasisSum {
 public:
  explicit BasisSum(int arity) : arity_(arity) {}

  static BasisSum of(const NCPartition& pi, C coeff = C(1)) {
    BasisSum s(pi.arity());
    s.add(pi, coeff);
    return s;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<NCPartition, C>& terms() const { return terms_; }

  void add(const NCPartition& pi, const C& c) {
    if (pi.arity() != arity_)
      throw ArityMismatch("term of arity " + std::to_string(pi.arity()) +
                          " in a sum of arity " + std::to_string(arity_));
    if (c == 0) return;
    auto it = terms_.find(pi);
    if (it == terms_.end()) {
      terms_.emplace(pi, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasisSum& operator+=(const BasisSum& o) {
    for (const auto& [pi, c] : o.terms_) add(pi, c);
    return *this;
  }
  BasisSum& operator-=(const BasisSum& o) {
    for (const auto& [pi, c] : o.terms_) add(pi, C(-c));
    return *this;
  }
  BasisSum& operator*=(const C& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [pi, c] : terms_) c *= k;
    }
    return *this;
  }

  friend BasisSum operator+(BasisSum a, const BasisSum& b) { return a += b; }
  friend BasisSum operator-(BasisSum a, const BasisSum& b) { return a -= b; }
  friend BasisSum operator*(const C& k, BasisSum a) { return a *= k; }
  friend BasisSum operator-(const BasisSum& a) {
    BasisSum r(a.arity_);
    for (const auto& [pi, c] : a.terms_) r.add(pi, C(-c));
    return r;
  }
  friend bool operator==(const BasisSum& a, const BasisSum& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasisSum& a, const BasisSum& b) { return !(a == b); }

  // "+1*{0,1,2,3} -1*{0,1}|{2,3}" with terms ascending in canonical order
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [pi, c] : terms_) {
      if (!s.empty()) s += ' ';
      std::string cs = to_string(c);
      if (cs[0] != '-') s += '+';
      s += cs;
      s += '*';
      s += pi.str();
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [pi, c] : terms_)
      terms.push_back({{"coeff", to_string(c)}, {"blocks", pi.blocks()}});
    return {{"arity", arity_}, {"terms", terms}};
  }

  // parses the str() format (signs may also be separated by spaces);
  // the arity is inferred from the first term
  static BasisSum parse(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw SyntaxError("empty sum", pos);
    BasisSum out(1);
    bool first = true;
    while (pos < text.size()) {
      int sign = 1;
      if (text[pos] == '+' || text[pos] == '-') {
        if (text[pos] == '-') sign = -1;
        ++pos;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos);
      }
      std::size_t coeff_start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '/'))
        ++pos;
      if (pos == coeff_start) throw SyntaxError("expected a coefficient", pos);
      C coeff;
      try {
        coeff = C(text.substr(coeff_start, pos - coeff_start));
      } catch (const std::exception&) {
        throw SyntaxError("bad coefficient", coeff_start);
      }
      if (pos >= text.size() || text[pos] != '*') throw SyntaxError("expected '*'", pos);
      ++pos;
      std::size_t part_start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      NCPartition pi = NCPartition::parse(text.substr(part_start, pos - part_start));
      if (first) {
        out = BasisSum(pi.arity());
        first = false;
      }
      out.add(pi, sign < 0 ? C(-coeff) : coeff);
      skip_ws();
    }
    return out;
  }

 private:
  int arity_;
  std::map<NCPartition, C> terms_;
};

using FormalSum = BasisSum<Int>;
using QFormalSum = BasisSum<Rat>;

inline QFormalSum to_rational(const FormalSum& s) {
  QFormalSum r(s.arity());
  for (const auto& [pi, c] : s.terms()) r.add(pi, Rat(c));
  return r;
}

}  // namespace ncop
