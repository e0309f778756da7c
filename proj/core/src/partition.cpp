#include "ncop/partition.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace ncop {

namespace {

std::string make_key(const std::vector<std::vector<int>>& blocks) {
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += '|';
    s += '{';
    for (std::size_t e = 0; e < blocks[b].size(); ++e) {
      if (e) s += ',';
      s += std::to_string(blocks[b][e]);
    }
    s += '}';
  }
  return s;
}

// looks for a < b < c < d with a,c in one list and b,d in the other;
// both lists ascending.  Four alternations of origin in the merged
// sequence are exactly such a witness.
bool interleaved(const std::vector<int>& x, const std::vector<int>& y, int w[4]) {
  std::size_t i = 0, j = 0;
  std::vector<std::pair<int, bool>> alt;  // first element of each run of equal origin
  while (i < x.size() || j < y.size()) {
    bool from_x = (j == y.size() || (i < x.size() && x[i] < y[j]));
    int v = from_x ? x[i++] : y[j++];
    if (alt.empty() || alt.back().second != from_x) alt.push_back({v, from_x});
    if (alt.size() == 4) {
      for (int t = 0; t < 4; ++t) w[t] = alt[t].first;
      return true;
    }
  }
  return false;
}

}  // namespace

NCPartition NCPartition::validate(int n, std::vector<std::vector<int>> raw_blocks) {
  if (n < 1) throw NotAPartition("arity must be >= 1, got " + std::to_string(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : raw_blocks) {
    if (b.empty()) throw NotAPartition("empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t e = 0; e < b.size(); ++e) {
      if (b[e] < 0 || b[e] > n)
        throw NotAPartition("element " + std::to_string(b[e]) + " outside {0,...," +
                            std::to_string(n) + "}");
      if (e && b[e] == b[e - 1])
        throw NotAPartition("element " + std::to_string(b[e]) + " repeated");
      if (seen[b[e]])
        throw NotAPartition("element " + std::to_string(b[e]) + " in two blocks");
      seen[b[e]] = 1;
    }
    if (b.size() == 1) throw SingletonBlock(b[0]);
  }
  for (int e = 0; e <= n; ++e)
    if (!seen[e]) throw NotAPartition("element " + std::to_string(e) + " not covered");
  std::sort(raw_blocks.begin(), raw_blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  int w[4];
  for (std::size_t i = 0; i < raw_blocks.size(); ++i)
    for (std::size_t j = i + 1; j < raw_blocks.size(); ++j)
      if (interleaved(raw_blocks[i], raw_blocks[j], w)) throw Crossing(w[0], w[1], w[2], w[3]);
  NCPartition p;
  p.n_ = n;
  p.blocks_ = std::move(raw_blocks);
  p.key_ = make_key(p.blocks_);
  return p;
}

NCPartition NCPartition::parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected an integer", pos);
    return std::stoi(text.substr(start, pos - start));
  };
  std::vector<std::vector<int>> blocks;
  int max_elem = -1;
  skip_ws();
  for (;;) {
    expect('{');
    std::vector<int> block;
    for (;;) {
      int e = read_int();
      max_elem = std::max(max_elem, e);
      block.push_back(e);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      break;
    }
    expect('}');
    blocks.push_back(std::move(block));
    skip_ws();
    if (pos < text.size() && text[pos] == '|') { ++pos; skip_ws(); continue; }
    break;
  }
  skip_ws();
  if (pos != text.size()) throw SyntaxError("trailing input", pos);
  if (max_elem < 1) throw SyntaxError("partition needs elements 0 and 1 at least", 0);
  return validate(max_elem, std::move(blocks));
}

NCPartition NCPartition::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
    throw NotAPartition("json partition needs fields \"n\" and \"blocks\"");
  int n = j.at("n").get<int>();
  auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  return validate(n, std::move(blocks));
}

nlohmann::json NCPartition::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["blocks"] = blocks_;
  return j;
}

NCPartition unit_partition() { return NCPartition::validate(1, {{0, 1}}); }
NCPartition gen_mul() { return NCPartition::validate(2, {{0, 1, 2}}); }
NCPartition gen_tri() { return NCPartition::validate(3, {{0, 3}, {1, 2}}); }
NCPartition gen_ttri() { return NCPartition::validate(3, {{0, 1}, {2, 3}}); }

NCPartition one_block(int n) {
  std::vector<int> b(static_cast<std::size_t>(n) + 1);
  for (int e = 0; e <= n; ++e) b[e] = e;
  return NCPartition::validate(n, {b});
}

NCPartition rotate(const NCPartition& pi, long long k) {
  const int p = pi.arity() + 1;
  int shift = static_cast<int>(((k % p) + p) % p);
  std::vector<std::vector<int>> blocks;
  for (const auto& b : pi.blocks()) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back((e + shift) % p);
    blocks.push_back(std::move(nb));
  }
  return NCPartition::validate(pi.arity(), std::move(blocks));
}

std::vector<int> consecutive_block(const NCPartition& pi) {
  if (pi.blocks_count() < 2)
    throw NoSuchBlock("partition " + pi.str() + " has a single block");
  for (const auto& b : pi.blocks()) {  // blocks are sorted by minimum
    if (b.front() >= 1 && b.back() - b.front() + 1 == static_cast<int>(b.size())) return b;
  }
  throw NoSuchBlock("no consecutive block in " + pi.str());  // unreachable for valid input
}

namespace {

using BlockList = std::vector<std::vector<int>>;

// All singleton-free noncrossing partitions of a linearly ordered m-set,
// elements 0..m-1.  The empty set has exactly one partition (no blocks);
// a 1-set has none.  Every non-first block lives inside one of the gaps
// of the block of element 0, so the construction recurses over gaps.
const std::vector<BlockList>& interval_partitions(int m,
                                                  std::map<int, std::vector<BlockList>>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<BlockList> out;
  if (m == 0) {
    out.push_back({});
  } else if (m >= 2) {
    std::vector<int> blk{0};
    std::function<void(int)> extend = [&](int last) {
      if (blk.size() >= 2) {
        // close the block of 0 at `last`; fill the gaps and the tail
        std::vector<const std::vector<BlockList>*> gaps;
        std::vector<int> offsets;
        bool possible = true;
        for (std::size_t s = 1; s < blk.size() && possible; ++s) {
          int lo = blk[s - 1] + 1;
          const auto& g = interval_partitions(blk[s] - lo, cache);
          if (g.empty()) possible = false;
          gaps.push_back(&g);
          offsets.push_back(lo);
        }
        const auto& tail = interval_partitions(m - 1 - last, cache);
        if (possible && !tail.empty()) {
          gaps.push_back(&tail);
          offsets.push_back(last + 1);
          std::vector<std::size_t> pick(gaps.size(), 0);
          for (;;) {
            BlockList part;
            part.push_back(blk);
            for (std::size_t g = 0; g < gaps.size(); ++g)
              for (const auto& sub : (*gaps[g])[pick[g]]) {
                std::vector<int> shifted;
                shifted.reserve(sub.size());
                for (int e : sub) shifted.push_back(e + offsets[g]);
                part.push_back(std::move(shifted));
              }
            out.push_back(std::move(part));
            std::size_t g = 0;
            for (; g < gaps.size(); ++g) {
              if (++pick[g] < gaps[g]->size()) break;
              pick[g] = 0;
            }
            if (g == gaps.size()) break;
          }
        }
      }
      for (int next = last + 1; next < m; ++next) {
        blk.push_back(next);
        extend(next);
        blk.pop_back();
      }
    };
    extend(0);
  }
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

std::vector<NCPartition> enumerate(int n) {
  if (n < 1) throw NotAPartition("arity must be >= 1, got " + std::to_string(n));
  std::map<int, std::vector<BlockList>> cache;
  const auto& raw = interval_partitions(n + 1, cache);
  std::vector<NCPartition> out;
  out.reserve(raw.size());
  for (const auto& blocks : raw) out.push_back(NCPartition::validate(n, blocks));
  std::sort(out.begin(), out.end());
  return out;
}

Int count(int n) {
  if (n < 1) throw NotAPartition("arity must be >= 1, got " + std::to_string(n));
  const int m = n + 1;
  std::vector<Int> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1;
  e[1] = 0;
  for (int d = 2; d <= m; ++d) {
    Int sq1 = 0;  // [t^(d-1)] E^2
    for (int i = 0; i <= d - 1; ++i) sq1 += e[i] * e[d - 1 - i];
    Int sq2 = 0;  // [t^(d-2)] E^2
    for (int i = 0; i <= d - 2; ++i) sq2 += e[i] * e[d - 2 - i];
    e[d] = -e[d - 1] + sq1 + sq2;
  }
  return e[m];
}

std::map<int, Int> count_by_blocks(int n) {
  std::map<int, Int> table;
  for (const auto& pi : enumerate(n)) table[pi.blocks_count()] += 1;
  return table;
}

}  // namespace ncop
