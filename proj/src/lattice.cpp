#include "corrpop/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace corrpop {

HasseDiagram hasse(const std::vector<Correlation>& members) {
  HasseDiagram d;
  d.nodes = members;
  std::sort(d.nodes.begin(), d.nodes.end());
  d.nodes.erase(std::unique(d.nodes.begin(), d.nodes.end()), d.nodes.end());
  std::size_t count = d.nodes.size();
  d.is_gamma.resize(count);
  d.up.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    d.is_gamma[i] = !d.nodes[i].empty() && d.nodes[i].bit(0);

  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      below[a][b] = a != b && d.nodes[a].subset_of(d.nodes[b]);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (!below[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < count && cover; ++c)
        if (below[a][c] && below[c][b]) cover = false;
      if (cover) {
        d.edges.emplace_back(a, b);
        d.up[a].push_back(b);
      }
    }
  }
  return d;
}

Correlation meet(const Correlation& t, const Correlation& u) {
  if (!decompose_correlation(t).valid || !decompose_correlation(u).valid)
    throw std::invalid_argument("meet requires valid correlations");
  Correlation result = t & u;
  if (!decompose_correlation(result).valid)
    throw std::logic_error("intersection left Delta_n: " + result.str());
  return result;
}

Correlation join(const Correlation& t, const Correlation& u) {
  if (!decompose_correlation(t).valid || !decompose_correlation(u).valid)
    throw std::invalid_argument("join requires valid correlations");
  Correlation target = t | u;
  // Least member containing both = intersection of all members above the
  // union (Delta_n is closed under intersection).
  Correlation acc = Correlation::ones(t.size());
  for (const Correlation& m : enumerate_delta(t.size()).members)
    if (target.subset_of(m)) acc = acc & m;
  return acc;
}

namespace {

struct ChainDp {
  std::vector<long> min_len, max_len;
  std::vector<std::size_t> min_par, max_par;
};

// Cover-path extremes from a fixed source, over nodes in topological order.
ChainDp chain_lengths(const HasseDiagram& d,
                      const std::vector<std::size_t>& topo, std::size_t src) {
  std::size_t count = d.nodes.size();
  ChainDp dp;
  dp.min_len.assign(count, -1);
  dp.max_len.assign(count, -1);
  dp.min_par.assign(count, count);
  dp.max_par.assign(count, count);
  dp.min_len[src] = dp.max_len[src] = 0;
  for (std::size_t idx : topo) {
    if (dp.min_len[idx] < 0) continue;
    for (std::size_t next : d.up[idx]) {
      if (dp.min_len[next] < 0 || dp.min_len[idx] + 1 < dp.min_len[next]) {
        dp.min_len[next] = dp.min_len[idx] + 1;
        dp.min_par[next] = idx;
      }
      if (dp.max_len[idx] + 1 > dp.max_len[next]) {
        dp.max_len[next] = dp.max_len[idx] + 1;
        dp.max_par[next] = idx;
      }
    }
  }
  return dp;
}

std::vector<Correlation> rebuild_chain(const HasseDiagram& d,
                                       const std::vector<std::size_t>& par,
                                       std::size_t src, std::size_t dst) {
  std::vector<Correlation> chain;
  std::size_t cur = dst;
  while (true) {
    chain.push_back(d.nodes[cur]);
    if (cur == src) break;
    cur = par[cur];
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

JordanDedekindResult check_jordan_dedekind(
    const std::vector<Correlation>& members) {
  HasseDiagram d = hasse(members);
  std::size_t count = d.nodes.size();
  JordanDedekindResult result;
  if (count == 0) return result;

  std::vector<std::size_t> topo(count);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
    return d.nodes[a].popcount() < d.nodes[b].popcount();
  });
  // Prefer a bottom-to-top witness when one exists.
  std::size_t bottom = topo.front(), top = topo.back();

  std::size_t bad_src = count, bad_dst = count;
  for (std::size_t src = 0; src < count; ++src) {
    ChainDp dp = chain_lengths(d, topo, src);
    for (std::size_t dst = 0; dst < count; ++dst) {
      if (dp.min_len[dst] < 0 || dp.min_len[dst] == dp.max_len[dst]) continue;
      if (bad_src == count || (src == bottom && dst == top)) {
        bad_src = src;
        bad_dst = dst;
      }
    }
    if (bad_src == bottom && bad_dst == top) break;
  }
  if (bad_src == count) return result;

  result.satisfied = false;
  ChainDp dp = chain_lengths(d, topo, bad_src);
  result.chain_short = rebuild_chain(d, dp.min_par, bad_src, bad_dst);
  result.chain_long = rebuild_chain(d, dp.max_par, bad_src, bad_dst);
  return result;
}

std::string export_dot(const HasseDiagram& d) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << d.nodes[i].str() << "\"";
    if (d.is_gamma[i]) out << " style=filled fillcolor=palegreen";
    out << "];\n";
  }
  for (auto [a, b] : d.edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace corrpop
