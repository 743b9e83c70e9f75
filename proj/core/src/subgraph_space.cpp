#include "neutro/subgraph_space.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace neutro {

EdgeKey edge_key(const std::string& u, const std::string& v) {
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

Subgraph::Subgraph(std::shared_ptr<const Graph> host,
                   std::set<std::string> vertices, std::set<EdgeKey> edges)
    : host_(std::move(host)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  if (!host_) throw std::invalid_argument("subgraph needs a host");
  for (const auto& v : vertices_) {
    if (!host_->has_vertex(v)) {
      throw std::invalid_argument("subgraph vertex '" + v + "' is not in the host");
    }
  }
  for (const auto& [a, b] : edges_) {
    if (!(a < b)) {
      throw std::invalid_argument("edge key not normalized: " + a + " " + b);
    }
    if (!host_->has_edge(a, b)) {
      throw std::invalid_argument("subgraph edge " + a + "-" + b +
                                  " is not in the host");
    }
    if (!vertices_.count(a) || !vertices_.count(b)) {
      throw std::invalid_argument("edge " + a + "-" + b +
                                  " has an endpoint outside the subgraph");
    }
  }
}

Subgraph Subgraph::of(const Graph& host, std::set<std::string> vertices,
                      std::set<EdgeKey> edges) {
  return Subgraph(std::make_shared<Graph>(host), std::move(vertices),
                  std::move(edges));
}

bool Subgraph::whole() const {
  return vertices_.size() == host_->vertex_count() &&
         edges_.size() == host_->edge_count();
}

bool Subgraph::contains(const Subgraph& o) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       o.vertices_.begin(), o.vertices_.end()) &&
         std::includes(edges_.begin(), edges_.end(), o.edges_.begin(),
                       o.edges_.end());
}

Graph Subgraph::materialize() const {
  Graph out;
  for (const auto& id : host_->vertex_ids()) {
    if (vertices_.count(id)) out.add_vertex(id, host_->vertex_kind(id));
  }
  for (const auto& e : host_->edges()) {
    if (edges_.count({e.a, e.b})) out.add_edge(e.a, e.b, e.kind);
  }
  return out;
}

bool operator==(const Subgraph& a, const Subgraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_) return false;
  return same_host(a, b);
}

bool same_host(const Subgraph& a, const Subgraph& b) {
  return a.host_ptr() == b.host_ptr() || a.host() == b.host();
}

namespace {

void require_same_host(const Subgraph& a, const Subgraph& b) {
  if (!same_host(a, b)) throw std::invalid_argument("subgraph host mismatch");
}

}  // namespace

Subgraph sg_union(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  std::set<std::string> vs = a.vertices();
  vs.insert(b.vertices().begin(), b.vertices().end());
  std::set<EdgeKey> es = a.edges();
  es.insert(b.edges().begin(), b.edges().end());
  return Subgraph(a.host_ptr(), std::move(vs), std::move(es));
}

Subgraph sg_intersect(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  std::set<std::string> vs;
  std::set_intersection(a.vertices().begin(), a.vertices().end(),
                        b.vertices().begin(), b.vertices().end(),
                        std::inserter(vs, vs.end()));
  std::set<EdgeKey> es;
  std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(),
                        b.edges().end(), std::inserter(es, es.end()));
  return Subgraph(a.host_ptr(), std::move(vs), std::move(es));
}

BigInt count_subgraphs(const Graph& g) {
  BigInt total = 1;
  for (const auto& comp : components(g)) {
    if (comp.size() > 24) {
      throw CapExceeded("component with " + std::to_string(comp.size()) +
                        " vertices is too large for the exact subgraph count");
    }
    std::map<std::string, std::size_t> local;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> bits;
    for (const auto& e : g.edges()) {
      auto it = local.find(e.a);
      if (it == local.end()) continue;  // edge belongs to another component
      bits.emplace_back(std::uint32_t{1} << it->second,
                        std::uint32_t{1} << local.at(e.b));
    }
    BigInt sub = 0;
    const std::uint32_t limit = std::uint32_t{1} << comp.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      std::size_t inside = 0;
      for (auto [ba, bb] : bits) inside += (mask & ba) && (mask & bb);
      sub += BigInt(1) << inside;
    }
    total *= sub;
  }
  return total;
}

Space enumerate_space(const Graph& g, const BigInt& cap) {
  BigInt total = count_subgraphs(g);
  if (total > cap) {
    throw CapExceeded("subgraph space has " + total.str() +
                      " members, above the cap of " + cap.str());
  }
  auto host = std::make_shared<Graph>(g);
  std::vector<std::string> ids = g.vertex_ids();
  std::sort(ids.begin(), ids.end());
  const std::size_t n = ids.size();
  if (n >= 32) throw CapExceeded("too many vertices to enumerate");

  std::vector<Subgraph> members;
  for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << n); ++vmask) {
    std::set<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (vmask & (std::uint64_t{1} << i)) vs.insert(ids[i]);
    }
    std::vector<EdgeKey> candidates;
    for (const auto& e : g.edges()) {
      if (vs.count(e.a) && vs.count(e.b)) candidates.push_back({e.a, e.b});
    }
    if (candidates.size() >= 32) {
      throw CapExceeded("too many candidate edges to enumerate");
    }
    for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << candidates.size());
         ++emask) {
      std::set<EdgeKey> es;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (emask & (std::uint64_t{1} << i)) es.insert(candidates[i]);
      }
      members.emplace_back(host, vs, std::move(es));
    }
  }
  std::sort(members.begin(), members.end());
  return {std::move(host), std::move(members)};
}

LatticeReport lattice_check(const Space& s) {
  LatticeReport r;
  const auto& ms = s.members;
  const std::size_t n = ms.size();
  if (n == 0) return r;

  std::map<std::pair<std::set<std::string>, std::set<EdgeKey>>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[{ms[i].vertices(), ms[i].edges()}] = i;
  }
  auto find = [&](const std::set<std::string>& vs,
                  const std::set<EdgeKey>& es) -> long {
    auto it = index.find({vs, es});
    return it == index.end() ? -1 : static_cast<long>(it->second);
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = ms[j].contains(ms[i]);
  }

  // Join/meet tables.  Fast path: the set union (intersection) is itself a
  // member, in which case it is the least upper (greatest lower) bound; else
  // fall back to scanning for a unique least/greatest bound.
  std::vector<std::vector<long>> join(n, std::vector<long>(n, -1));
  std::vector<std::vector<long>> meet(n, std::vector<long>(n, -1));
  bool lattice = true;
  bool closed = true;  // under plain union/intersection, for the topology flag
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto u = sg_union(ms[i], ms[j]);
      long ju = find(u.vertices(), u.edges());
      if (ju < 0) {
        closed = false;
        std::vector<std::size_t> ubs;
        for (std::size_t k = 0; k < n; ++k) {
          if (leq[i][k] && leq[j][k]) ubs.push_back(k);
        }
        for (std::size_t k : ubs) {
          bool least = true;
          for (std::size_t k2 : ubs) least = least && leq[k][k2];
          if (least) {
            ju = static_cast<long>(k);
            break;
          }
        }
      }
      join[i][j] = join[j][i] = ju;
      auto w = sg_intersect(ms[i], ms[j]);
      long mw = find(w.vertices(), w.edges());
      if (mw < 0) {
        closed = false;
        std::vector<std::size_t> lbs;
        for (std::size_t k = 0; k < n; ++k) {
          if (leq[k][i] && leq[k][j]) lbs.push_back(k);
        }
        for (std::size_t k : lbs) {
          bool greatest = true;
          for (std::size_t k2 : lbs) greatest = greatest && leq[k2][k];
          if (greatest) {
            mw = static_cast<long>(k);
            break;
          }
        }
      }
      meet[i][j] = meet[j][i] = mw;
      if (ju < 0 || mw < 0) lattice = false;
    }
  }
  r.is_lattice = lattice;

  long top = -1, bottom = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_top = true, is_bottom = true;
    for (std::size_t j = 0; j < n; ++j) {
      is_top = is_top && leq[j][i];
      is_bottom = is_bottom && leq[i][j];
    }
    if (is_top) top = static_cast<long>(i);
    if (is_bottom) bottom = static_cast<long>(i);
  }

  if (lattice) {
    bool dist = true;
    for (std::size_t a = 0; a < n && dist; ++a) {
      for (std::size_t b = 0; b < n && dist; ++b) {
        for (std::size_t c = 0; c < n && dist; ++c) {
          long lhs = meet[a][static_cast<std::size_t>(join[b][c])];
          long rhs = join[static_cast<std::size_t>(meet[a][b])]
                         [static_cast<std::size_t>(meet[a][c])];
          dist = lhs == rhs;
        }
      }
    }
    r.is_distributive = dist;
    if (top >= 0 && bottom >= 0) {
      bool comp = true;
      for (std::size_t a = 0; a < n && comp; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) {
          found = join[a][b] == top && meet[a][b] == bottom;
        }
        comp = found;
      }
      r.is_complemented = comp;
    }
  }
  r.is_boolean_algebra = r.is_lattice && r.is_distributive &&
                         r.is_complemented && top >= 0 && bottom >= 0;

  std::set<std::string> all_vs(s.host->vertex_ids().begin(),
                               s.host->vertex_ids().end());
  std::set<EdgeKey> all_es;
  for (const auto& e : s.host->edges()) all_es.insert({e.a, e.b});
  r.is_topology = closed && find({}, {}) >= 0 && find(all_vs, all_es) >= 0;
  return r;
}

std::vector<Subgraph> boolean_subalgebra(const Space& s) {
  std::vector<Subgraph> out;
  for (const auto& m : s.members) {
    if (m.edges().empty()) out.push_back(m);
  }
  return out;
}

bool is_smarandache(const Space& s) {
  const std::size_t n = s.host->vertex_count();
  if (n < 2) return false;
  std::vector<std::string> ids = s.host->vertex_ids();
  std::sort(ids.begin(), ids.end());
  // Witness family: the power set on all n vertices when some member carries
  // an edge (that member keeps the witness proper); otherwise the space IS
  // the power set, so drop the last vertex.
  const std::size_t k = s.host->edge_count() > 0 ? n : n - 1;
  if (k >= 32) throw CapExceeded("host too large for the Smarandache check");
  std::set<std::set<std::string>> edgeless;
  for (const auto& m : s.members) {
    if (m.edges().empty()) edgeless.insert(m.vertices());
  }
  const std::uint64_t size = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    std::set<std::string> vs;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) vs.insert(ids[i]);
    }
    if (!edgeless.count(vs)) return false;
  }
  return BigInt(size) < BigInt(s.members.size());
}

Hasse hasse(const Space& s) {
  const auto& ms = s.members;
  const std::size_t n = ms.size();
  Hasse h;
  for (const auto& m : ms) h.labels.push_back(member_label(m));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !ms[b].contains(ms[a])) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c == a || c == b) continue;
        covered = !(ms[c].contains(ms[a]) && ms[b].contains(ms[c]));
      }
      if (covered) h.covers.emplace_back(a, b);
    }
  }
  return h;
}

std::string member_label(const Subgraph& sg) {
  if (sg.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& v : sg.vertices()) {
    if (!first) out += ' ';
    out += v;
    first = false;
  }
  if (!sg.edges().empty()) {
    out += " |";
    for (const auto& [a, b] : sg.edges()) out += ' ' + a + '-' + b;
  }
  out += '}';
  return out;
}

}  // namespace neutro
