#include "forge/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "forge/errors.hpp"
#include "maxflow.hpp"

namespace forge {

BookpileHypergraph::BookpileHypergraph(int q, int r, std::size_t max_vertices) : q_(q), r_(r) {
    if (q < 1) throw input_error("hypergraph: need q >= 1");
    if (r < 2) throw input_error("hypergraph: need r >= 2");
    long long block = 1;
    for (int i = 0; i + 1 < r; ++i) {
        block *= q;
        if (block > static_cast<long long>(max_vertices))
            throw capacity_error("hypergraph: vertex count r*q^(r-1) exceeds cap of " +
                                 std::to_string(max_vertices));
    }
    if (static_cast<long long>(r) * block > static_cast<long long>(max_vertices))
        throw capacity_error("hypergraph: vertex count r*q^(r-1) exceeds cap of " +
                             std::to_string(max_vertices));
    block_ = block;
}

LabeledVertex BookpileHypergraph::vertex_label(int vid) const {
    if (vid < 0 || vid >= vertex_count()) throw input_error("hypergraph: vertex id out of range");
    int p = static_cast<int>(vid / block_);
    long long local = vid % block_;
    LabeledVertex lv;
    lv.coords.assign(r_, 0);
    for (int pos = 0; pos < r_; ++pos) {
        if (pos == p) continue;
        lv.coords[pos] = static_cast<int>(local % q_) + 1;
        local /= q_;
    }
    return lv;
}

int BookpileHypergraph::vertex_id(const LabeledVertex& v) const {
    if (static_cast<int>(v.coords.size()) != r_ || !v.valid(q_))
        throw input_error("hypergraph: label " + v.to_string() + " not valid for (q,r)=(" +
                          std::to_string(q_) + "," + std::to_string(r_) + ")");
    int p = v.alpha_bit();
    long long local = 0, weight = 1;
    for (int pos = 0; pos < r_; ++pos) {
        if (pos == p) continue;
        local += static_cast<long long>(v.coords[pos] - 1) * weight;
        weight *= q_;
    }
    return static_cast<int>(p * block_ + local);
}

std::vector<int> BookpileHypergraph::edge_tuple(long long eid) const {
    if (eid < 0 || eid >= edge_count()) throw input_error("hypergraph: edge id out of range");
    std::vector<int> t(r_);
    for (int pos = 0; pos < r_; ++pos) {
        t[pos] = static_cast<int>(eid % q_) + 1;
        eid /= q_;
    }
    return t;
}

long long BookpileHypergraph::edge_id(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != r_)
        throw input_error("hypergraph: edge tuple has wrong arity");
    long long id = 0, weight = 1;
    for (int pos = 0; pos < r_; ++pos) {
        if (tuple[pos] < 1 || tuple[pos] > q_)
            throw input_error("hypergraph: edge tuple entry out of range");
        id += static_cast<long long>(tuple[pos] - 1) * weight;
        weight *= q_;
    }
    return id;
}

std::vector<int> BookpileHypergraph::edge_vertices(long long eid) const {
    std::vector<int> tuple = edge_tuple(eid);
    std::vector<int> out(r_);
    for (int p = 0; p < r_; ++p) {
        long long local = 0, weight = 1;
        for (int pos = 0; pos < r_; ++pos) {
            if (pos == p) continue;
            local += static_cast<long long>(tuple[pos] - 1) * weight;
            weight *= q_;
        }
        out[p] = static_cast<int>(p * block_ + local);
    }
    return out;
}

std::vector<long long> BookpileHypergraph::vertex_edges(int vid) const {
    LabeledVertex lv = vertex_label(vid);
    int p = lv.alpha_bit();
    std::vector<long long> out;
    out.reserve(q_);
    std::vector<int> tuple = lv.coords;
    for (int c = 1; c <= q_; ++c) {
        tuple[p] = c;
        out.push_back(edge_id(tuple));
    }
    return out;
}

bool BookpileHypergraph::incident(int vid, long long eid) const {
    LabeledVertex lv = vertex_label(vid);
    std::vector<int> tuple = edge_tuple(eid);
    int p = lv.alpha_bit();
    for (int pos = 0; pos < r_; ++pos)
        if (pos != p && lv.coords[pos] != tuple[pos]) return false;
    return true;
}

bool BookpileHypergraph::in_ur(int vid) const {
    if (vid < 0 || vid >= vertex_count()) throw input_error("hypergraph: vertex id out of range");
    return vid / block_ == r_ - 1;
}

int BookpileHypergraph::slice_of_vertex(int vid) const {
    if (in_ur(vid)) return 0;
    return vertex_label(vid).coords[r_ - 1];
}

int BookpileHypergraph::slice_of_edge(long long eid) const {
    return edge_tuple(eid)[r_ - 1];
}

std::vector<int> BookpileHypergraph::ur_vertices() const {
    std::vector<int> out(static_cast<std::size_t>(block_));
    for (long long i = 0; i < block_; ++i) out[i] = static_cast<int>((r_ - 1) * block_ + i);
    return out;
}

std::vector<int> BookpileHypergraph::slice_vertices(int i) const {
    if (i < 1 || i > q_) throw input_error("hypergraph: slice index out of range");
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (!in_ur(v) && vertex_label(v).coords[r_ - 1] == i) out.push_back(v);
    return out;
}

std::vector<long long> BookpileHypergraph::slice_edges(int i) const {
    if (i < 1 || i > q_) throw input_error("hypergraph: slice index out of range");
    std::vector<long long> out;
    for (long long e = 0; e < edge_count(); ++e)
        if (slice_of_edge(e) == i) out.push_back(e);
    return out;
}

int codegree(const BookpileHypergraph& hg, int u, int v) {
    if (u == v) throw input_error("codegree: vertices must be distinct");
    LabeledVertex lu = hg.vertex_label(u), lv = hg.vertex_label(v);
    int pu = lu.alpha_bit(), pv = lv.alpha_bit();
    if (pu == pv) return 0;
    for (int pos = 0; pos < hg.r(); ++pos)
        if (pos != pu && pos != pv && lu.coords[pos] != lv.coords[pos]) return 0;
    return 1;
}

int threshold_q(int k, int r) {
    if (k < 1) throw input_error("threshold_q: need k >= 1");
    if (r < 2) throw input_error("threshold_q: need r >= 2");
    if (r == 2) return k;
    int t = std::max(threshold_q(k, r - 1), 3 * (k + 1));
    return ((t + 2) / 3) * 3;
}

Graph aux_product_graph(int q, int r) {
    if (r < 3) throw input_error("aux_product_graph: need r >= 3");
    if (q < 1) throw input_error("aux_product_graph: need q >= 1");
    long long n = 1;
    for (int i = 0; i + 1 < r; ++i) {
        n *= q;
        if (n > 1000000) throw capacity_error("aux_product_graph: q^(r-1) exceeds cap");
    }
    std::vector<std::pair<int, int>> edges;
    long long weight = 1;
    for (int pos = 0; pos + 1 < r; ++pos) {
        for (long long v = 0; v < n; ++v) {
            int digit = static_cast<int>((v / weight) % q);
            for (int c = digit + 1; c < q; ++c)
                edges.emplace_back(static_cast<int>(v),
                                   static_cast<int>(v + (c - digit) * weight));
        }
        weight *= q;
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

namespace {

// Internal view of the product graph on the wildcard-last vertices, addressed
// by their local index (the mixed-radix rank of the first r-1 coordinates).
struct ProductSpace {
    int q, r;
    long long n;  // q^(r-1)

    explicit ProductSpace(const BookpileHypergraph& hg)
        : q(hg.q()), r(hg.r()), n(hg.edge_count() / hg.q()) {}

    std::vector<int> tuple(long long pid) const {
        std::vector<int> t(r - 1);
        for (int pos = 0; pos + 1 < r; ++pos) {
            t[pos] = static_cast<int>(pid % q) + 1;
            pid /= q;
        }
        return t;
    }

    // position where the two tuples differ, or -1 unless exactly one differs
    int differing_position(long long a, long long b) const {
        int pos_found = -1;
        for (int pos = 0; pos + 1 < r; ++pos) {
            if (a % q != b % q) {
                if (pos_found >= 0) return -1;
                pos_found = pos;
            }
            a /= q;
            b /= q;
        }
        return pos_found;
    }

    bool adjacent(long long a, long long b) const {
        return a != b && differing_position(a, b) >= 0;
    }

    std::vector<long long> neighbors(long long pid) const {
        std::vector<long long> out;
        out.reserve(static_cast<std::size_t>(r - 1) * (q - 1));
        long long weight = 1;
        for (int pos = 0; pos + 1 < r; ++pos) {
            int digit = static_cast<int>((pid / weight) % q);
            for (int c = 0; c < q; ++c)
                if (c != digit) out.push_back(pid + (c - digit) * weight);
            weight *= q;
        }
        return out;
    }
};

int ur_id(const BookpileHypergraph& hg, long long pid) {
    return static_cast<int>((hg.r() - 1) * (hg.edge_count() / hg.q()) + pid);
}

long long pid_of_ur(const BookpileHypergraph& hg, int vid) {
    return vid - static_cast<long long>(hg.r() - 1) * (hg.edge_count() / hg.q());
}

// Hyperedge in slice `slice` induced by a product vertex: its tuple extended
// by the slice value.
long long slice_edge_of(const BookpileHypergraph& hg, const ProductSpace& ps, long long pid,
                        int slice) {
    std::vector<int> t = ps.tuple(pid);
    t.push_back(slice);
    return hg.edge_id(t);
}

// Shared slice vertex of the consecutive edges of pids a and b.
int shared_slice_vertex(const BookpileHypergraph& hg, const ProductSpace& ps, long long a,
                        long long b, int slice) {
    int pos = ps.differing_position(a, b);
    if (pos < 0) throw contradiction_error("slice paths: non-adjacent consecutive vertices");
    LabeledVertex lv;
    lv.coords = ps.tuple(a);
    lv.coords[pos] = 0;
    lv.coords.push_back(slice);
    return hg.vertex_id(lv);
}

HyperPath product_path_to_slice(const BookpileHypergraph& hg, const ProductSpace& ps,
                                const std::vector<long long>& pids, int slice) {
    HyperPath path;
    path.vertices.push_back(ur_id(hg, pids.front()));
    if (pids.size() == 1) return path;
    path.edges.push_back(slice_edge_of(hg, ps, pids[0], slice));
    for (std::size_t s = 0; s + 1 < pids.size(); ++s) {
        path.vertices.push_back(shared_slice_vertex(hg, ps, pids[s], pids[s + 1], slice));
        path.edges.push_back(slice_edge_of(hg, ps, pids[s + 1], slice));
    }
    path.vertices.push_back(ur_id(hg, pids.back()));
    return path;
}

// Repeatedly contract the shortest chord until the path is induced.
void shorten_to_induced(const ProductSpace& ps, std::vector<long long>& path) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t gap = 2; gap < path.size() && !changed; ++gap)
            for (std::size_t a = 0; a + gap < path.size() && !changed; ++a)
                if (ps.adjacent(path[a], path[a + gap])) {
                    path.erase(path.begin() + a + 1, path.begin() + a + gap);
                    changed = true;
                }
    }
}

// s vertex-disjoint U-V path systems through distinct slices drawn from
// `pool`, avoiding `forbidden` entirely. U, V, forbidden hold wildcard-last
// vertex ids. Shared U/V vertices become trivial paths and come first.
std::vector<HyperPath> slice_path_system(const BookpileHypergraph& hg, std::vector<int> U,
                                         std::vector<int> V, int s,
                                         const std::vector<int>& pool,
                                         const std::vector<int>& forbidden) {
    ProductSpace ps(hg);
    std::sort(U.begin(), U.end());
    std::sort(V.begin(), V.end());
    if (static_cast<int>(pool.size()) < s)
        throw contradiction_error("slice paths: slice pool smaller than request");

    std::vector<long long> sources, targets, common, blocked;
    for (int v : U) {
        if (std::binary_search(V.begin(), V.end(), v))
            common.push_back(pid_of_ur(hg, v));
        else
            sources.push_back(pid_of_ur(hg, v));
    }
    for (int v : V)
        if (!std::binary_search(U.begin(), U.end(), v)) targets.push_back(pid_of_ur(hg, v));
    for (int v : forbidden) blocked.push_back(pid_of_ur(hg, v));

    std::vector<HyperPath> out;
    int trivial_n = std::min<long long>(s, common.size());
    for (int i = 0; i < trivial_n; ++i)
        out.push_back(HyperPath{{ur_id(hg, common[i])}, {}});
    int s2 = s - trivial_n;
    if (s2 == 0) return out;

    std::set<long long> removed(blocked.begin(), blocked.end());
    removed.insert(common.begin(), common.end());
    auto alive = [&](long long pid) { return removed.find(pid) == removed.end(); };

    // unit-capacity vertex-split flow between contracted terminal sets
    long long n = ps.n;
    int S = static_cast<int>(2 * n), T = S + 1;
    MaxFlow flow(static_cast<int>(2 * n + 2));
    for (long long pid = 0; pid < n; ++pid)
        if (alive(pid)) flow.add_arc(static_cast<int>(2 * pid), static_cast<int>(2 * pid + 1), 1);
    for (long long pid = 0; pid < n; ++pid) {
        if (!alive(pid)) continue;
        for (long long nb : ps.neighbors(pid))
            if (nb > pid && alive(nb)) {
                flow.add_arc(static_cast<int>(2 * pid + 1), static_cast<int>(2 * nb), 1);
                flow.add_arc(static_cast<int>(2 * nb + 1), static_cast<int>(2 * pid), 1);
            }
    }
    for (long long u : sources) flow.add_arc(S, static_cast<int>(2 * u), 1);
    for (long long v : targets) flow.add_arc(static_cast<int>(2 * v + 1), T, 1);
    if (flow.run(S, T, s2) < s2)
        throw contradiction_error("slice paths: product-graph flow below requested width");

    std::set<long long> source_set(sources.begin(), sources.end());
    std::set<long long> target_set(targets.begin(), targets.end());
    int produced = 0;
    for (long long u : sources) {
        if (produced == s2) break;
        // does the source arc carry flow?
        auto s_arcs = flow.flow_arcs_from(S);
        bool used = false;
        for (auto [aid, to] : s_arcs)
            if (to == 2 * u) {
                flow.consume_unit(aid);
                used = true;
                break;
            }
        if (!used) continue;
        std::vector<long long> walk{u};
        int node = static_cast<int>(2 * u);
        while (true) {
            auto arcs = flow.flow_arcs_from(node);
            if (arcs.empty())
                throw contradiction_error("slice paths: flow walk stalled");
            auto [aid, to] = arcs.front();
            flow.consume_unit(aid);
            if (to == T) break;
            node = to;
            if (node % 2 == 0 && node / 2 != walk.front() && node != S)
                if (node / 2 != walk.back()) walk.push_back(node / 2);
        }
        // clip to a proper U-V path: end at the first target, start at the
        // last source before it
        std::size_t j = 0;
        while (j < walk.size() && target_set.find(walk[j]) == target_set.end()) j++;
        if (j == walk.size())
            throw contradiction_error("slice paths: flow walk missed the target set");
        std::size_t i = j;
        while (source_set.find(walk[i]) == source_set.end()) {
            if (i == 0) throw contradiction_error("slice paths: flow walk missed the source set");
            i--;
        }
        std::vector<long long> clipped(walk.begin() + i, walk.begin() + j + 1);
        shorten_to_induced(ps, clipped);
        int slice = pool[trivial_n + produced];
        out.push_back(product_path_to_slice(hg, ps, clipped, slice));
        produced++;
    }
    if (produced < s2) throw contradiction_error("slice paths: decomposition lost a path");
    return out;
}

}  // namespace

std::vector<HyperPath> uv_slice_paths(const BookpileHypergraph& hg, const std::vector<int>& U,
                                      const std::vector<int>& V, int s) {
    int q = hg.q(), r = hg.r();
    if (r < 3) throw input_error("uv_slice_paths: need r >= 3");
    if (s < 1) throw input_error("uv_slice_paths: need s >= 1");
    if (!((r - 1) * (q - 1) >= q && q >= s))
        throw input_error("uv_slice_paths: requires (r-1)(q-1) >= q >= s");
    if (static_cast<int>(U.size()) < s || static_cast<int>(V.size()) < s)
        throw input_error("uv_slice_paths: terminal sets smaller than s");
    for (int v : U)
        if (!hg.in_ur(v)) throw input_error("uv_slice_paths: U must lie in the wildcard-last set");
    for (int v : V)
        if (!hg.in_ur(v)) throw input_error("uv_slice_paths: V must lie in the wildcard-last set");
    std::vector<int> pool(s);
    for (int i = 0; i < s; ++i) pool[i] = i + 1;
    return slice_path_system(hg, U, V, s, pool, {});
}

namespace {

HyperPath reverse_path(HyperPath p) {
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

// Append `next` (running from the last vertex of `base` onwards) to `base`.
void append_path(HyperPath& base, const HyperPath& next) {
    if (base.vertices.back() != next.vertices.front())
        throw contradiction_error("connect: path concatenation mismatch");
    base.vertices.insert(base.vertices.end(), next.vertices.begin() + 1, next.vertices.end());
    base.edges.insert(base.edges.end(), next.edges.begin(), next.edges.end());
}

struct Fan {
    HyperPath prefix;  // u, e1, w, e2, target
    int target = -1;
};

// Length-two path from a wildcard-last vertex into `slice`, ending at the
// smallest-id unused wildcard-last neighbor.
Fan make_fan(const BookpileHypergraph& hg, int u, int slice, std::set<int>& excluded) {
    LabeledVertex lu = hg.vertex_label(u);
    int r = hg.r(), q = hg.q();
    std::vector<int> e1 = lu.coords;
    e1[r - 1] = slice;

    LabeledVertex w;
    w.coords = e1;
    w.coords[0] = 0;  // branch at the first coordinate

    Fan fan;
    std::vector<int> target_coords = lu.coords;
    std::vector<int> e2 = e1;
    for (int c = 1; c <= q; ++c) {
        if (c == lu.coords[0]) continue;
        target_coords[0] = c;
        int tid = hg.vertex_id(LabeledVertex{target_coords});
        if (excluded.count(tid)) continue;
        e2[0] = c;
        fan.target = tid;
        break;
    }
    if (fan.target < 0) throw contradiction_error("connect: fan ran out of targets");
    excluded.insert(fan.target);
    fan.prefix.vertices = {u, hg.vertex_id(w), fan.target};
    fan.prefix.edges = {hg.edge_id(e1), hg.edge_id(e2)};
    return fan;
}

// Wildcard-last neighbors of a slice vertex, ascending by substituted value.
std::vector<int> ur_neighbors_of_slice_vertex(const BookpileHypergraph& hg, int v) {
    LabeledVertex lv = hg.vertex_label(v);
    int p = lv.alpha_bit();
    std::vector<int> out;
    LabeledVertex nb;
    nb.coords = lv.coords;
    nb.coords[hg.r() - 1] = 0;
    for (int c = 1; c <= hg.q(); ++c) {
        nb.coords[p] = c;
        out.push_back(hg.vertex_id(nb));
    }
    return out;
}

// Unique edge containing both a slice vertex v and one of its wildcard-last
// neighbors y: y's coordinates with the slice value filled in last.
long long joining_edge(const BookpileHypergraph& hg, int v, int y) {
    std::vector<int> t = hg.vertex_label(y).coords;
    t[hg.r() - 1] = hg.vertex_label(v).coords[hg.r() - 1];
    return hg.edge_id(t);
}

std::vector<HyperPath> connect_impl(const BookpileHypergraph& hg, int u, int v, int k);

// Base case: uniformity two, a complete bipartite pattern.
std::vector<HyperPath> connect_r2(const BookpileHypergraph& hg, int u, int v, int k) {
    LabeledVertex lu = hg.vertex_label(u), lv = hg.vertex_label(v);
    auto vid = [&](int a, int b) { return hg.vertex_id(LabeledVertex{{a, b}}); };
    auto eid = [&](int a, int b) { return hg.edge_id({a, b}); };
    std::vector<HyperPath> paths;

    if (lu.coords[1] == 0 && lv.coords[1] == 0) {  // both wildcard-last
        int a = lu.coords[0], b = lv.coords[0];
        for (int c = 1; c <= k; ++c)
            paths.push_back(HyperPath{{u, vid(0, c), v}, {eid(a, c), eid(b, c)}});
        return paths;
    }
    if (lu.coords[0] == 0 && lv.coords[0] == 0) {  // both wildcard-first
        int a = lu.coords[1], b = lv.coords[1];
        for (int c = 1; c <= k; ++c)
            paths.push_back(HyperPath{{u, vid(c, 0), v}, {eid(c, a), eid(c, b)}});
        return paths;
    }
    if (lu.coords[0] == 0) {  // orient as (a, wildcard) -> (wildcard, b)
        auto swapped = connect_r2(hg, v, u, k);
        for (auto& p : swapped) paths.push_back(reverse_path(std::move(p)));
        return paths;
    }
    int a = lu.coords[0], b = lv.coords[1];
    paths.push_back(HyperPath{{u, v}, {eid(a, b)}});
    int c = 0, d = 0;
    for (int t = 1; t < k; ++t) {
        do { c++; } while (c == b);
        do { d++; } while (d == a);
        paths.push_back(HyperPath{{u, vid(0, c), vid(d, 0), v}, {eid(a, c), eid(d, c), eid(d, b)}});
    }
    return paths;
}

std::vector<HyperPath> connect_same_slice(const BookpileHypergraph& hg, int u, int v, int k) {
    int r = hg.r();
    int slice = hg.slice_of_vertex(u);
    BookpileHypergraph sub(hg.q(), r - 1);
    auto drop = [&](int vid) {
        LabeledVertex lv = hg.vertex_label(vid);
        lv.coords.pop_back();
        return sub.vertex_id(lv);
    };
    std::vector<HyperPath> inner = connect_impl(sub, drop(u), drop(v), k);
    std::vector<HyperPath> out;
    for (const auto& p : inner) {
        HyperPath lifted;
        for (int w : p.vertices) {
            LabeledVertex lw = sub.vertex_label(w);
            lw.coords.push_back(slice);
            lifted.vertices.push_back(hg.vertex_id(lw));
        }
        for (long long e : p.edges) {
            std::vector<int> t = sub.edge_tuple(e);
            t.push_back(slice);
            lifted.edges.push_back(hg.edge_id(t));
        }
        out.push_back(std::move(lifted));
    }
    return out;
}

std::vector<HyperPath> connect_ur_ur(const BookpileHypergraph& hg, int u, int v, int k) {
    int q = hg.q();
    int b = q / 3;
    std::set<int> excluded{u, v};
    std::map<int, Fan> fan_of;
    std::vector<int> u_targets, v_targets;
    for (int i = 1; i <= b; ++i) {
        Fan f = make_fan(hg, u, i, excluded);
        u_targets.push_back(f.target);
        fan_of[f.target] = f;
    }
    for (int j = b + 1; j <= 2 * b; ++j) {
        Fan f = make_fan(hg, v, j, excluded);
        v_targets.push_back(f.target);
        fan_of[f.target] = f;
    }
    std::vector<int> pool;
    for (int t = 2 * b + 1; t <= q; ++t) pool.push_back(t);
    auto mids = slice_path_system(hg, u_targets, v_targets, k, pool, {u, v});

    std::vector<HyperPath> out;
    for (const auto& mid : mids) {
        HyperPath full = fan_of.at(mid.vertices.front()).prefix;
        append_path(full, mid);
        append_path(full, reverse_path(fan_of.at(mid.vertices.back()).prefix));
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<HyperPath> connect_ur_slice(const BookpileHypergraph& hg, int u, int v, int k) {
    int q = hg.q();
    int b = q / 3;
    int j = hg.slice_of_vertex(v);
    std::set<int> excluded{u};
    std::map<int, Fan> fan_of;
    std::vector<int> u_targets;
    for (int i = 1; i <= b; ++i) {
        if (i == j) continue;
        Fan f = make_fan(hg, u, i, excluded);
        u_targets.push_back(f.target);
        fan_of[f.target] = f;
    }
    std::vector<int> v_side;
    for (int y : ur_neighbors_of_slice_vertex(hg, v))
        if (y != u) v_side.push_back(y);
    std::vector<int> pool;
    for (int t = b + 1; t <= q; ++t)
        if (t != j) pool.push_back(t);
    auto mids = slice_path_system(hg, u_targets, v_side, k, pool, {u});

    std::vector<HyperPath> out;
    for (const auto& mid : mids) {
        HyperPath full = fan_of.at(mid.vertices.front()).prefix;
        append_path(full, mid);
        int y = mid.vertices.back();
        full.edges.push_back(joining_edge(hg, v, y));
        full.vertices.push_back(v);
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<HyperPath> connect_slice_slice(const BookpileHypergraph& hg, int u, int v, int k) {
    int q = hg.q();
    int i = hg.slice_of_vertex(u), j = hg.slice_of_vertex(v);
    std::vector<int> pool;
    for (int t = 1; t <= q; ++t)
        if (t != i && t != j) pool.push_back(t);
    auto mids =
        slice_path_system(hg, ur_neighbors_of_slice_vertex(hg, u),
                          ur_neighbors_of_slice_vertex(hg, v), k, pool, {});
    std::vector<HyperPath> out;
    for (const auto& mid : mids) {
        int x = mid.vertices.front(), y = mid.vertices.back();
        HyperPath full{{u}, {joining_edge(hg, u, x)}};
        full.vertices.insert(full.vertices.end(), mid.vertices.begin(), mid.vertices.end());
        full.edges.insert(full.edges.end(), mid.edges.begin(), mid.edges.end());
        full.edges.push_back(joining_edge(hg, v, y));
        full.vertices.push_back(v);
        out.push_back(std::move(full));
    }
    return out;
}

std::vector<HyperPath> connect_impl(const BookpileHypergraph& hg, int u, int v, int k) {
    if (hg.r() == 2) return connect_r2(hg, u, v, k);
    int su = hg.slice_of_vertex(u), sv = hg.slice_of_vertex(v);
    if (su == 0 && sv == 0) return connect_ur_ur(hg, u, v, k);
    if (su == 0) return connect_ur_slice(hg, u, v, k);
    if (sv == 0) {
        auto swapped = connect_ur_slice(hg, v, u, k);
        std::vector<HyperPath> out;
        for (auto& p : swapped) out.push_back(reverse_path(std::move(p)));
        return out;
    }
    if (su == sv) return connect_same_slice(hg, u, v, k);
    return connect_slice_slice(hg, u, v, k);
}

}  // namespace

std::vector<HyperPath> connect(const BookpileHypergraph& hg, int u, int v, int k) {
    if (k < 1) throw input_error("connect: need k >= 1");
    if (u < 0 || u >= hg.vertex_count() || v < 0 || v >= hg.vertex_count())
        throw input_error("connect: vertex id out of range");
    if (u == v) throw input_error("connect: endpoints must be distinct");
    int need = threshold_q(k, hg.r());
    if (hg.q() < need)
        throw input_error("connect: q=" + std::to_string(hg.q()) +
                          " below threshold_q(k=" + std::to_string(k) +
                          ", r=" + std::to_string(hg.r()) + ")=" + std::to_string(need));
    std::vector<HyperPath> paths = connect_impl(hg, u, v, k);
    if (static_cast<int>(paths.size()) < k)
        throw contradiction_error("connect: construction produced fewer than k paths");
    paths.resize(k);
    bool ok = false;
    try {
        ok = validate_disjoint(hg, paths, u, v);
    } catch (const input_error& e) {
        throw contradiction_error(std::string("connect: produced malformed path: ") + e.what());
    }
    if (!ok) throw contradiction_error("connect: produced paths are not internally disjoint");
    return paths;
}

void validate_hyperpath(const BookpileHypergraph& hg, const HyperPath& p, int u, int v) {
    if (p.vertices.empty()) throw input_error("hyperpath: empty vertex sequence");
    if (p.edges.size() + 1 != p.vertices.size())
        throw input_error("hyperpath: edge count must be one less than vertex count");
    if (p.vertices.front() != u || p.vertices.back() != v)
        throw input_error("hyperpath: endpoints do not match");
    std::set<int> seen_v;
    for (int w : p.vertices) {
        if (w < 0 || w >= hg.vertex_count()) throw input_error("hyperpath: vertex id out of range");
        if (!seen_v.insert(w).second) throw input_error("hyperpath: repeated vertex");
    }
    std::set<long long> seen_e;
    for (long long e : p.edges) {
        if (e < 0 || e >= hg.edge_count()) throw input_error("hyperpath: edge id out of range");
        if (!seen_e.insert(e).second) throw input_error("hyperpath: repeated edge");
    }
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        if (!hg.incident(p.vertices[i], p.edges[i]) || !hg.incident(p.vertices[i + 1], p.edges[i]))
            throw input_error("hyperpath: consecutive vertices not inside their edge");
    }
    std::vector<std::vector<int>> members;
    for (long long e : p.edges) {
        auto m = hg.edge_vertices(e);
        std::sort(m.begin(), m.end());
        members.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 2; j < members.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(members[i].begin(), members[i].end(), members[j].begin(),
                                  members[j].end(), std::back_inserter(inter));
            if (!inter.empty())
                throw input_error("hyperpath: non-consecutive edges intersect");
        }
}

bool validate_disjoint(const BookpileHypergraph& hg, const std::vector<HyperPath>& paths, int u,
                       int v) {
    for (const auto& p : paths) validate_hyperpath(hg, p, u, v);
    std::vector<std::vector<std::vector<int>>> members(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (long long e : paths[i].edges) {
            auto m = hg.edge_vertices(e);
            std::sort(m.begin(), m.end());
            members[i].push_back(std::move(m));
        }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            const auto& A = members[i];
            const auto& B = members[j];
            if (A.empty() || B.empty()) continue;  // trivial path: no edges to clash
            for (std::size_t a = 0; a < A.size(); ++a)
                for (std::size_t b = 0; b < B.size(); ++b) {
                    std::vector<int> inter;
                    std::set_intersection(A[a].begin(), A[a].end(), B[b].begin(), B[b].end(),
                                          std::back_inserter(inter));
                    bool first_pair = (a == 0 && b == 0);
                    bool last_pair = (a + 1 == A.size() && b + 1 == B.size());
                    if (first_pair && last_pair) return false;  // single-edge clash
                    if (first_pair) {
                        if (inter != std::vector<int>{u}) return false;
                    } else if (last_pair) {
                        if (inter != std::vector<int>{v}) return false;
                    } else if (!inter.empty()) {
                        return false;
                    }
                }
        }
    return true;
}

AuxCheck aux_hypergraph_of_copies(const std::vector<StandardCopy>& copies, int q, int r) {
    BookpileHypergraph hg(q, r);
    AuxCheck check;
    if (static_cast<long long>(copies.size()) != hg.edge_count()) {
        check.detail = "expected " + std::to_string(hg.edge_count()) + " copies, got " +
                       std::to_string(copies.size());
        return check;
    }
    std::set<long long> seen;
    for (std::size_t idx = 0; idx < copies.size(); ++idx) {
        const StandardCopy& copy = copies[idx];
        if (static_cast<int>(copy.vertices.size()) != r)
            throw input_error("copy " + std::to_string(idx) + ": wrong vertex count");
        // reconstruct the tuple the labels jointly describe
        std::vector<int> tuple(r, 0);
        std::vector<char> alpha_seen(r, 0);
        bool consistent = true;
        for (const LabeledVertex& lv : copy.vertices) {
            if (static_cast<int>(lv.coords.size()) != r || !lv.valid(q))
                throw input_error("copy " + std::to_string(idx) + ": malformed vertex label");
            int p = lv.alpha_bit();
            if (alpha_seen[p]) consistent = false;
            alpha_seen[p] = 1;
            for (int pos = 0; pos < r && consistent; ++pos) {
                if (pos == p) continue;
                if (tuple[pos] == 0)
                    tuple[pos] = lv.coords[pos];
                else if (tuple[pos] != lv.coords[pos])
                    consistent = false;
            }
        }
        for (int pos = 0; pos < r; ++pos)
            if (!alpha_seen[pos] || tuple[pos] == 0) consistent = false;
        if (!consistent) {
            check.offending_copy = static_cast<long long>(idx);
            check.detail = "copy labels do not plant one wildcard per position of a single tuple";
            return check;
        }
        if (copy.edge_coords != tuple) {
            check.offending_copy = static_cast<long long>(idx);
            check.detail = "copy edge coordinates disagree with its vertex labels";
            return check;
        }
        long long eid = hg.edge_id(tuple);
        if (!seen.insert(eid).second) {
            check.offending_copy = static_cast<long long>(idx);
            check.detail = "duplicate copy for one tuple";
            return check;
        }
    }
    check.ok = true;  // q^r distinct well-formed tuples cover [q]^r exactly
    return check;
}

std::vector<std::vector<int>> lift_paths(const Graph& h, const BookpileResult& pile,
                                         const std::vector<HyperPath>& paths) {
    if (!is_connected(h)) throw input_error("lift_paths: seed graph must be connected");
    int r = h.vertex_count();
    BookpileHypergraph hg(pile.q, r);
    if (static_cast<long long>(pile.copies.size()) != hg.edge_count())
        throw input_error("lift_paths: copy list size does not match the (q,r) structure");

    auto adj = h.adjacency();
    auto bfs_path = [&](int from, int to) {
        std::vector<int> parent(r, -2);
        std::queue<int> bfs;
        bfs.push(from);
        parent[from] = -1;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            if (x == to) break;
            for (int y : adj[x])
                if (parent[y] == -2) {
                    parent[y] = x;
                    bfs.push(y);
                }
        }
        std::vector<int> seq;
        for (int x = to; x != -1; x = parent[x]) seq.push_back(x);
        std::reverse(seq.begin(), seq.end());
        return seq;
    };

    std::vector<std::vector<int>> out;
    for (const auto& p : paths) {
        std::vector<int> gp;
        int start_alpha = hg.vertex_label(p.vertices[0]).alpha_bit();
        long long first_edge = p.edges.empty() ? -1 : p.edges[0];
        if (first_edge < 0) {
            // trivial hyperpath: locate the vertex through any incident copy
            long long e = hg.vertex_edges(p.vertices[0])[0];
            gp.push_back(pile.copies[e].vertex_ids[start_alpha]);
            out.push_back(std::move(gp));
            continue;
        }
        gp.push_back(pile.copies[first_edge].vertex_ids[start_alpha]);
        for (std::size_t hop = 0; hop < p.edges.size(); ++hop) {
            const StandardCopy& copy = pile.copies[p.edges[hop]];
            int a = hg.vertex_label(p.vertices[hop]).alpha_bit();
            int b = hg.vertex_label(p.vertices[hop + 1]).alpha_bit();
            std::vector<int> seq = bfs_path(a, b);
            for (std::size_t t = 1; t < seq.size(); ++t) gp.push_back(copy.vertex_ids[seq[t]]);
        }
        out.push_back(std::move(gp));
    }
    return out;
}

bool graph_paths_internally_disjoint(const Graph& g, const std::vector<std::vector<int>>& paths,
                                     int u, int v) {
    for (const auto& p : paths) {
        if (p.empty() || p.front() != u || p.back() != v) return false;
        std::set<int> seen;
        for (int x : p)
            if (!seen.insert(x).second) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            std::set<int> a(paths[i].begin(), paths[i].end());
            int shared = 0;
            for (int x : paths[j])
                if (a.count(x)) {
                    if (x != u && x != v) return false;
                    shared++;
                }
            if (shared != 2) return false;
        }
    return true;
}

}  // namespace forge
