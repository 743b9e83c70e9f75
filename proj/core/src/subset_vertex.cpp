#include "neutro/subset_vertex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "neutro/errors.hpp"

namespace neutro {

std::string SubsetGraph::label(std::uint32_t mask) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!(mask & (std::uint32_t{1} << i))) continue;
    if (!first) out += ',';
    out += base[i];
    first = false;
  }
  out += '}';
  return out;
}

bool SubsetGraph::has_vertex(std::uint32_t mask) const {
  return std::binary_search(vertices.begin(), vertices.end(), mask);
}

std::size_t SubsetGraph::degree(std::uint32_t mask) const {
  std::size_t d = 0;
  for (const auto& [lo, hi] : edges) d += lo == mask || hi == mask;
  return d;
}

bool is_connected(const SubsetGraph& s) {
  if (s.vertices.size() <= 1) return true;
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const auto& [lo, hi] : s.edges) {
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
  }
  std::set<std::uint32_t> seen{s.vertices.front()};
  std::vector<std::uint32_t> queue{s.vertices.front()};
  while (!queue.empty()) {
    const std::uint32_t v = queue.back();
    queue.pop_back();
    for (std::uint32_t nb : adj[v]) {
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  return seen.size() == s.vertices.size();
}

bool is_tree(const SubsetGraph& s) {
  return !s.vertices.empty() && is_connected(s) &&
         s.edges.size() + 1 == s.vertices.size();
}

SubsetGraph build_type_one(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n > 15) {
    throw CapExceeded("host with " + std::to_string(n) +
                      " vertices is too large for the subset graph (cap " +
                      std::to_string(std::min<std::size_t>(cap, 15)) +
                      " host vertices)");
  }
  SubsetGraph out;
  out.base = g.vertex_ids();
  std::sort(out.base.begin(), out.base.end());
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[out.base[i]] = i;

  // nbr[i]: mask of host neighbours of base vertex i.  A and B are adjacent
  // iff B meets the union of nbr over A (host edges have no self-loops, so
  // the witness pair is automatically distinct).
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[pos.at(e.a)] |= std::uint32_t{1} << pos.at(e.b);
    nbr[pos.at(e.b)] |= std::uint32_t{1} << pos.at(e.a);
  }
  const std::uint32_t m = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(m + 1, 0);
  for (std::uint32_t a = 1; a <= m; ++a) {
    out.vertices.push_back(a);
    reach[a] = reach[a & (a - 1)] | nbr[std::countr_zero(a)];
  }
  for (std::uint32_t a = 1; a <= m; ++a) {
    for (std::uint32_t b = a + 1; b <= m; ++b) {
      if ((reach[a] & b) != 0) out.edges.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

BigInt pair_count(const BigInt& m) { return m * (m - 1) / 2; }

std::size_t checked_shift(const BigInt& bits, const char* what) {
  if (bits > 8000000) {
    throw CapExceeded(std::string(what) + " needs " + bits.str() +
                      " bits, above the exact-arithmetic guard");
  }
  return static_cast<std::size_t>(bits);
}

}  // namespace

BigInt count_type_two(unsigned n) {
  const BigInt m = (BigInt(1) << n) - 1;
  const BigInt M = pair_count(m);
  return BigInt(1) << checked_shift(M, "type II total");
}

BigInt count_type_two_with_edges(unsigned n, const BigInt& r) {
  if (r < 0) throw std::invalid_argument("edge count cannot be negative");
  const BigInt m = (BigInt(1) << n) - 1;
  const BigInt M = pair_count(m);
  if (r > M) return 0;
  const BigInt complement = M - r;
  const BigInt& k = complement < r ? complement : r;
  if (k > 1000000) {
    throw CapExceeded("binomial with " + k.str() +
                      " factors is above the exact-arithmetic guard");
  }
  BigInt result = 1;
  for (BigInt i = 1; i <= k; ++i) {
    result = result * (M - k + i) / i;
  }
  return result;
}

BigInt max_subset_degree(unsigned n) {
  if (n == 0) throw std::invalid_argument("base set must be nonempty");
  return (BigInt(1) << n) - 2;
}

BigInt count_labeled_trees_on(const BigInt& m) {
  if (m <= 0) throw std::invalid_argument("need at least one vertex");
  if (m <= 2) return 1;
  if (m > 20000) {
    throw CapExceeded("tree count on " + m.str() +
                      " vertices is above the exact-arithmetic guard");
  }
  return boost::multiprecision::pow(m, static_cast<unsigned>(m - 2));
}

BigInt count_labeled_trees(unsigned n) {
  return count_labeled_trees_on((BigInt(1) << n) - 1);
}

namespace {

// Decode a Pruefer sequence over labels 0..m-1 into tree edges.
std::vector<std::pair<std::size_t, std::size_t>> pruefer_to_edges(
    const std::vector<std::size_t>& seq, std::size_t m) {
  std::vector<std::size_t> degree(m, 1);
  for (std::size_t s : seq) ++degree[s];
  std::set<std::size_t> leaves;
  for (std::size_t i = 0; i < m; ++i) {
    if (degree[i] == 1) leaves.insert(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t s : seq) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  const std::size_t a = *leaves.begin();
  const std::size_t b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace

std::vector<RootedTree> enumerate_trees(unsigned n, std::size_t cap) {
  const std::size_t m = (std::size_t{1} << n) - 1;
  if (m > cap) {
    throw CapExceeded("subset universe of size " + std::to_string(m) +
                      " is too large for tree enumeration (cap " +
                      std::to_string(cap) + ")");
  }
  SubsetGraph blank;
  for (unsigned i = 0; i < n; ++i) blank.base.push_back("v" + std::to_string(i + 1));
  // Masks 1..m are exactly the nonempty subsets; label i maps to mask i+1,
  // and the whole set is mask m.
  for (std::uint32_t mask = 1; mask <= m; ++mask) blank.vertices.push_back(mask);

  std::vector<RootedTree> out;
  const auto root = static_cast<std::uint32_t>(m);
  if (m == 1) {
    out.push_back({blank, root});
    return out;
  }
  std::vector<std::size_t> seq(m - 2, 0);
  for (;;) {
    SubsetGraph t = blank;
    for (auto [a, b] : pruefer_to_edges(seq, m)) {
      const auto ma = static_cast<std::uint32_t>(a + 1);
      const auto mb = static_cast<std::uint32_t>(b + 1);
      t.edges.emplace_back(std::min(ma, mb), std::max(ma, mb));
    }
    std::sort(t.edges.begin(), t.edges.end());
    out.push_back({std::move(t), root});
    // Next sequence in base m.
    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == m - 1) seq[--i] = 0;
    if (i == 0) break;
    ++seq[i - 1];
  }
  return out;
}

IsoCensus enumerate_type_two_iso(std::size_t m, std::optional<std::size_t> r) {
  if (m == 0) throw std::invalid_argument("need at least one vertex");
  if (m > 5) {
    throw CapExceeded("isomorphism census on " + std::to_string(m) +
                      " vertices is above the cap (5)");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t P = pairs.size();
  std::vector<std::vector<std::size_t>> pair_index(m, std::vector<std::size_t>(m));
  for (std::size_t p = 0; p < P; ++p) {
    pair_index[pairs[p].first][pairs[p].second] = p;
    pair_index[pairs[p].second][pairs[p].first] = p;
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::uint32_t, std::size_t> orbit;  // canonical mask -> labeled count
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << P); ++mask) {
    std::uint32_t canon = mask;
    for (const auto& pi : perms) {
      std::uint32_t mapped = 0;
      for (std::size_t p = 0; p < P; ++p) {
        if (mask & (std::uint32_t{1} << p)) {
          mapped |= std::uint32_t{1}
                    << pair_index[pi[pairs[p].first]][pi[pairs[p].second]];
        }
      }
      canon = std::min(canon, mapped);
    }
    ++orbit[canon];
  }

  IsoCensus census;
  for (const auto& [canon, count] : orbit) {
    const auto edge_count =
        static_cast<std::size_t>(std::popcount(canon));
    if (r && edge_count != *r) continue;
    IsoClass cls;
    for (std::size_t i = 0; i < m; ++i) {
      cls.representative.add_vertex("u" + std::to_string(i + 1), Kind::Real);
    }
    for (std::size_t p = 0; p < P; ++p) {
      if (canon & (std::uint32_t{1} << p)) {
        cls.representative.add_edge("u" + std::to_string(pairs[p].first + 1),
                                    "u" + std::to_string(pairs[p].second + 1),
                                    Kind::Real);
      }
    }
    cls.edge_count = edge_count;
    cls.labeled_count = count;
    census.total_labeled += count;
    census.classes.push_back(std::move(cls));
  }
  std::stable_sort(census.classes.begin(), census.classes.end(),
                   [](const IsoClass& a, const IsoClass& b) {
                     return a.edge_count < b.edge_count;
                   });
  return census;
}

MergeResult merge(const SubsetGraph& a, const SubsetGraph& b) {
  if (a.base != b.base) {
    throw std::invalid_argument("subset graphs have different base sets");
  }
  MergeResult r;
  r.merged.base = a.base;
  std::set<std::uint32_t> vs(a.vertices.begin(), a.vertices.end());
  vs.insert(b.vertices.begin(), b.vertices.end());
  r.merged.vertices.assign(vs.begin(), vs.end());
  std::set<std::pair<std::uint32_t, std::uint32_t>> es(a.edges.begin(),
                                                       a.edges.end());
  es.insert(b.edges.begin(), b.edges.end());
  r.merged.edges.assign(es.begin(), es.end());
  r.is_tree = is_tree(r.merged);
  r.meshed = is_tree(a) && is_tree(b) && is_connected(r.merged) && !r.is_tree;
  return r;
}

}  // namespace neutro
