#include "lgh/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace lgh {

namespace {

// ---- partition refinement engine ----
//
// A partition is a list of cells (sorted vertex vectors). All structural
// choices below (cell traversal order, split ordering by neighbor count,
// first non-singleton target cell, append-at-end growth) depend only on the
// partition/graph structure, never on vertex identity, so the recorded trace
// is isomorphism-invariant and the leaf certificates of isomorphic graphs
// coincide as multisets.

using Partition = std::vector<std::vector<int>>;

BitVec cell_mask(int n, const std::vector<int>& cell) {
    BitVec m(n);
    for (int v : cell) m.set(v);
    return m;
}

// Equitable refinement; `work` seeds the splitter queue. Appends an
// invariant record of every split to `trace`.
void refine(const Graph& g, Partition& cells, std::deque<size_t> work,
            std::vector<int32_t>& trace) {
    while (!work.empty()) {
        size_t wi = work.front();
        work.pop_front();
        BitVec splitter = cell_mask(g.n, cells[wi]);
        for (size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() < 2) continue;
            std::map<int, std::vector<int>> groups; // neighbor count -> vertices
            for (int v : cells[c]) groups[(int)g.adj[v].count_and(splitter)].push_back(v);
            if (groups.size() < 2) continue;
            trace.push_back((int32_t)wi);
            trace.push_back((int32_t)c);
            trace.push_back((int32_t)groups.size());
            bool first = true;
            for (auto& [cnt, members] : groups) {
                trace.push_back(cnt);
                trace.push_back((int32_t)members.size());
                if (first) {
                    cells[c] = std::move(members);
                    work.push_back(c);
                    first = false;
                } else {
                    cells.push_back(std::move(members));
                    work.push_back(cells.size() - 1);
                }
            }
        }
    }
}

bool is_discrete(const Partition& cells) {
    for (const auto& c : cells)
        if (c.size() != 1) return false;
    return true;
}

std::vector<uint8_t> adjacency_bytes(const Graph& g, const std::vector<int>& lab) {
    std::vector<uint8_t> bytes((size_t)(g.n * g.n + 7) / 8, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.adjacent(lab[i], lab[j])) {
                size_t bit = (size_t)i * g.n + j;
                bytes[bit >> 3] |= (uint8_t)(1u << (bit & 7));
            }
    return bytes;
}

struct SearchResult {
    std::vector<Perm> generators;
    unsigned long long order = 1;
    std::vector<uint8_t> canonical; // adjacency bytes of the best leaf
};

class RefinementSearch {
public:
    explicit RefinementSearch(const Graph& g) : g_(g) {}

    SearchResult run() {
        if (g_.n > kMaxRefineVertices)
            throw std::invalid_argument("refinement engine: vertex cap exceeded");
        SearchResult out;
        if (g_.n == 0) {
            out.canonical = {};
            return out;
        }
        Partition cells(1);
        for (int v = 0; v < g_.n; ++v) cells[0].push_back(v);
        std::vector<int32_t> trace;
        std::deque<size_t> seed{0};
        refine(g_, cells, std::move(seed), trace);
        dfs(cells, {}, trace);
        out.generators = gens_;
        PermGroup group(g_.n);
        for (const Perm& p : gens_) group.add(p);
        out.order = group.order();
        out.canonical = best_bytes_;
        return out;
    }

private:
    void leaf(const Partition& cells, const std::vector<int32_t>& trace) {
        std::vector<int> lab(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) lab[i] = cells[i][0];
        std::vector<uint8_t> bytes = adjacency_bytes(g_, lab);
        if (first_lab_.empty()) {
            first_lab_ = lab;
            first_bytes_ = bytes;
            best_lab_ = lab;
            best_bytes_ = bytes;
            best_trace_ = trace;
            return;
        }
        // Two leaves with equal certificates differ by an automorphism:
        // position i holds first_lab_[i] in one labeling and lab[i] in the
        // other, so first_lab_[i] -> lab[i] preserves adjacency.
        if (bytes == first_bytes_) record_automorphism(first_lab_, lab);
        if (bytes == best_bytes_ && lab != best_lab_) record_automorphism(best_lab_, lab);
        if (std::tie(trace, bytes) > std::tie(best_trace_, best_bytes_)) {
            best_lab_ = lab;
            best_bytes_ = bytes;
            best_trace_ = trace;
        }
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        Perm p(g_.n);
        for (size_t i = 0; i < from.size(); ++i) p[from[i]] = to[i];
        if (perm_is_identity(p)) return;
        for (const Perm& q : gens_)
            if (q == p) return;
        gens_.push_back(p);
    }

    // Union-find orbits of the subgroup generated by the found automorphisms
    // that fix every vertex in `fixed`.
    std::vector<int> orbit_roots(const std::vector<int>& fixed) {
        std::vector<int> root(g_.n);
        for (int v = 0; v < g_.n; ++v) root[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (const Perm& p : gens_) {
            bool ok = true;
            for (int f : fixed) ok = ok && p[f] == f;
            if (!ok) continue;
            for (int v = 0; v < g_.n; ++v) {
                int a = find(v), b = find(p[v]);
                if (a != b) root[a] = b;
            }
        }
        for (int v = 0; v < g_.n; ++v) root[v] = find(v);
        return root;
    }

    void dfs(const Partition& cells, const std::vector<int>& fixed,
             const std::vector<int32_t>& trace) {
        if (is_discrete(cells)) {
            leaf(cells, trace);
            return;
        }
        size_t target = 0;
        while (cells[target].size() < 2) ++target;
        std::vector<int> branched;
        for (int v : cells[target]) {
            // skip vertices equivalent to an earlier branch under the
            // currently known automorphisms fixing the individualized prefix
            if (!branched.empty()) {
                std::vector<int> roots = orbit_roots(fixed);
                bool skip = false;
                for (int u : branched) skip = skip || roots[u] == roots[v];
                if (skip) continue;
            }
            branched.push_back(v);
            Partition child = cells;
            std::vector<int> rest;
            for (int u : child[target])
                if (u != v) rest.push_back(u);
            child[target] = {v};
            child.push_back(std::move(rest));
            std::vector<int32_t> child_trace = trace;
            child_trace.push_back(-1); // individualization marker
            child_trace.push_back((int32_t)target);
            refine(g_, child, {target, child.size() - 1}, child_trace);
            std::vector<int> child_fixed = fixed;
            child_fixed.push_back(v);
            dfs(child, child_fixed, child_trace);
        }
    }

    const Graph& g_;
    std::vector<Perm> gens_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<uint8_t> first_bytes_, best_bytes_;
    std::vector<int32_t> best_trace_;
};

} // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                 std::vector<int32_t> labels) {
    Graph g;
    g.n = n;
    g.adj.assign(n, BitVec(n));
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) labels.push_back(i);
    }
    if ((int)labels.size() != n)
        throw std::invalid_argument("make_graph: label count mismatch");
    g.labels = std::move(labels);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("make_graph: bad edge");
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

Graph collinearity_graph(const GeometryTables& t, const LineSet& set) {
    Graph g;
    g.n = (int)set.lines.size();
    g.labels = set.lines;
    g.adj.assign(g.n, BitVec(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (meet_id(t, set.lines[i], set.lines[j])) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
    return g;
}

Graph local_graph(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("local_graph: bad vertex");
    std::vector<int> nbrs;
    g.adj[v].for_each([&](std::size_t u) { nbrs.push_back((int)u); });
    Graph h;
    h.n = (int)nbrs.size();
    h.adj.assign(h.n, BitVec(h.n));
    for (int i = 0; i < h.n; ++i) {
        h.labels.push_back(g.labels[nbrs[i]]);
        for (int j = i + 1; j < h.n; ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) {
                h.adj[i].set(j);
                h.adj[j].set(i);
            }
    }
    return h;
}

Graph rook_graph(int n) {
    if (n < 2) throw std::invalid_argument("rook_graph: n must be at least 2");
    Graph g;
    g.n = n * n;
    g.adj.assign(g.n, BitVec(g.n));
    for (int i = 0; i < g.n; ++i) g.labels.push_back(i);
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (a / n == b / n || a % n == b % n) {
                g.adj[a].set(b);
                g.adj[b].set(a);
            }
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<bool> seen(g.n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        g.adj[v].for_each([&](std::size_t u) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                queue.push_back((int)u);
            }
        });
    }
    return reached == g.n;
}

std::optional<SRGParams> srg_check(const Graph& g) {
    if (g.n < 3) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    int lambda = -1, mu = -1;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int common = (int)g.adj[u].count_and(g.adj[v]);
            int& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot == -1) slot = common;
            else if (slot != common) return std::nullopt;
        }
    if (lambda == -1 || mu == -1) return std::nullopt; // complete or empty
    return SRGParams{g.n, k, lambda, mu};
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, BitVec p, BitVec x,
                   std::vector<std::vector<int>>& out) {
    if (p.none() && x.none()) {
        std::vector<int> clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
        return;
    }
    // pivot: vertex of P union X with the most neighbors in P
    int pivot = -1, best = -1;
    for (const BitVec* side : {&p, &x})
        side->for_each([&](std::size_t u) {
            int cnt = (int)g.adj[u].count_and(p);
            if (cnt > best) {
                best = cnt;
                pivot = (int)u;
            }
        });
    BitVec candidates = p;
    candidates.andnot(g.adj[pivot]);
    candidates.for_each([&](std::size_t v) {
        r.push_back((int)v);
        bron_kerbosch(g, r, p & g.adj[v], x & g.adj[v], out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    });
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    if (g.n == 0) return out;
    BitVec p(g.n), x(g.n);
    for (int v = 0; v < g.n; ++v) p.set(v);
    std::vector<int> r;
    bron_kerbosch(g, r, std::move(p), std::move(x), out);
    std::sort(out.begin(), out.end());
    return out;
}

SixCliqueCensus six_clique_census(const GeometryTables& t, const Graph& g) {
    SixCliqueCensus census;
    for (const auto& clique : maximal_cliques(g)) {
        if (clique.size() != 6)
            throw std::runtime_error("six_clique_census: maximal clique of size " +
                                     std::to_string(clique.size()));
        // intersect the point sets and the plane sets of the six lines
        std::vector<int32_t> pts = t.line_points[g.labels[clique[0]]];
        std::vector<int32_t> pls = t.line_planes[g.labels[clique[0]]];
        for (size_t i = 1; i < clique.size(); ++i) {
            std::vector<int32_t> np, nl;
            const auto& lp = t.line_points[g.labels[clique[i]]];
            const auto& ll = t.line_planes[g.labels[clique[i]]];
            std::set_intersection(pts.begin(), pts.end(), lp.begin(), lp.end(),
                                  std::back_inserter(np));
            std::set_intersection(pls.begin(), pls.end(), ll.begin(), ll.end(),
                                  std::back_inserter(nl));
            pts = std::move(np);
            pls = std::move(nl);
        }
        if (pts.size() + pls.size() != 1)
            throw std::runtime_error(
                "six_clique_census: clique is not exactly concurrent or coplanar");
        if (pts.size() == 1) census.point_cliques.push_back({clique, pts[0]});
        else census.plane_cliques.push_back({clique, pls[0]});
    }
    return census;
}

AutomorphismGroup automorphism_group(const Graph& g) {
    SearchResult r = RefinementSearch(g).run();
    return AutomorphismGroup{r.order, r.generators};
}

std::vector<uint8_t> canonical_form(const Graph& g) {
    return RefinementSearch(g).run().canonical;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string to_graph6(const Graph& g) {
    if (g.n > 258047) throw std::invalid_argument("to_graph6: graph too large");
    std::string s;
    if (g.n <= 62) {
        s.push_back((char)(g.n + 63));
    } else {
        s.push_back(126);
        s.push_back((char)(((g.n >> 12) & 63) + 63));
        s.push_back((char)(((g.n >> 6) & 63) + 63));
        s.push_back((char)((g.n & 63) + 63));
    }
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) cur |= (char)(1 << bit);
            if (--bit < 0) {
                s.push_back((char)(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    if (bit != 5) s.push_back((char)(cur + 63));
    return s;
}

} // namespace lgh
