#include "sytinv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "sytinv/inversion.hpp"

namespace sytinv {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > size()) throw ParseError("permutation value " + std::to_string(v) + " out of range 1.." + std::to_string(size()));
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("permutation value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int v) const {
  auto it = std::find(values_.begin(), values_.end(), v);
  if (it == values_.end()) throw std::out_of_range("value not in permutation");
  return static_cast<int>(it - values_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!digits && i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) throw ParseError("empty permutation");
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad permutation character '" + std::string(1, c) + "'");
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
        throw ParseError("bad permutation token '" + std::string(tok) + "'");
      values.push_back(v);
      pos = comma + 1;
    }
  }
  return Permutation(std::move(values));
}

int perm_inv(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) count += p(i) > p(j);
  return count;
}

std::vector<int> perm_descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) out.push_back(i);
  return out;
}

int perm_maj(const Permutation& p) {
  const auto d = perm_descents(p);
  return std::accumulate(d.begin(), d.end(), 0);
}

std::vector<std::vector<int>> foata_stages(const Permutation& p) {
  std::vector<std::vector<int>> stages;
  if (p.size() == 0) return stages;
  std::vector<int> w{p(1)};
  stages.push_back(w);
  for (int i = 2; i <= p.size(); ++i) {
    const int x = p(i);
    const bool up = x > p(i - 1);
    std::vector<int> next;
    next.reserve(w.size() + 1);
    std::size_t begin = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (up ? w[j] < x : w[j] > x) {
        // block [begin, j]: last letter to the front
        next.push_back(w[j]);
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(begin), w.begin() + static_cast<std::ptrdiff_t>(j));
        begin = j + 1;
      }
    }
    if (begin != w.size()) throw InternalError("foata: unterminated block");
    next.push_back(x);
    w = std::move(next);
    stages.push_back(w);
  }
  return stages;
}

Permutation foata(const Permutation& p) {
  if (p.size() == 0) return p;
  return Permutation(foata_stages(p).back());
}

Permutation foata_inverse(const Permutation& p) {
  std::vector<int> cur(p.values().begin(), p.values().end());
  for (std::size_t len = cur.size(); len >= 2; --len) {
    const int x = cur[len - 1];
    const bool up = x > cur[0];
    std::vector<int> out;
    out.reserve(cur.size());
    std::size_t begin = 0;
    auto flush = [&](std::size_t end) {
      // block [begin, end): first letter to the end
      out.insert(out.end(), cur.begin() + static_cast<std::ptrdiff_t>(begin) + 1, cur.begin() + static_cast<std::ptrdiff_t>(end));
      out.push_back(cur[begin]);
    };
    for (std::size_t j = 1; j + 1 < len; ++j) {
      if (up ? cur[j] < x : cur[j] > x) {
        flush(j);
        begin = j;
      }
    }
    flush(len - 1);
    out.insert(out.end(), cur.begin() + static_cast<std::ptrdiff_t>(len) - 1, cur.end());
    cur = std::move(out);
  }
  return Permutation(std::move(cur));
}

Permutation perm_phi_direct(const Permutation& p, std::vector<PermPhiStage>* trace) {
  std::vector<int> cur(p.values().begin(), p.values().end());
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n + 1));
  for (int k = 3; k <= n; ++k) {
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])] = i;
    const int pk = pos[static_cast<std::size_t>(k)];
    auto left_of_k = [&](int v) { return pos[static_cast<std::size_t>(v)] < pk; };
    const bool anchor_left = left_of_k(k - 1);
    std::vector<std::vector<int>> blocks;
    for (int v = k - 1; v >= 1; --v) {
      if (left_of_k(v) == anchor_left || blocks.empty()) blocks.emplace_back();
      blocks.back().push_back(v);
    }
    std::vector<int> next = cur;
    for (const auto& b : blocks) {
      next[static_cast<std::size_t>(pos[static_cast<std::size_t>(b.front())])] = b.back();
      for (std::size_t i = 1; i < b.size(); ++i) next[static_cast<std::size_t>(pos[static_cast<std::size_t>(b[i])])] = b[i - 1];
    }
    cur = std::move(next);
    if (trace) trace->push_back({k, blocks, Permutation(cur)});
  }
  return Permutation(std::move(cur));
}

Tableau staircase_tableau(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return Tableau{};
  RowFilling rows;
  for (int i = 1; i <= n; ++i) rows.push_back({p(i)});
  return Tableau(staircase_shape(n), rows);
}

Permutation read_staircase(const Tableau& t) {
  const int n = t.size();
  if (n > 0 && t.shape() != staircase_shape(n)) throw InternalError("not a staircase tableau");
  std::vector<int> values;
  for (int i = 1; i <= n; ++i) values.push_back(t.at(i, n + 1 - i));
  return Permutation(std::move(values));
}

BridgeReport bridge_check(const Permutation& p) {
  BridgeReport r;
  r.sigma = p;
  r.omega = p.inverse();
  r.tableau_phi = read_staircase(phi(staircase_tableau(p)));
  r.direct_phi = perm_phi_direct(p);
  r.foata_omega = foata(r.omega);
  r.tableau_matches_direct = r.tableau_phi == r.direct_phi;
  r.bridge_holds = r.foata_omega == r.direct_phi.inverse();
  return r;
}

}  // namespace sytinv
