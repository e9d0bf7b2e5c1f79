#include "forge/bookpile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "forge/errors.hpp"

namespace forge {

namespace {
const char* kAlpha = "α";
}

int LabeledVertex::alpha_bit() const {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] == 0) return static_cast<int>(i);
    throw input_error("labeled vertex: no wildcard entry");
}

bool LabeledVertex::valid(int q) const {
    int wildcards = 0;
    for (int c : coords) {
        if (c == 0)
            wildcards++;
        else if (c < 1 || c > q)
            return false;
    }
    return wildcards == 1;
}

std::string LabeledVertex::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out << ",";
        if (coords[i] == 0)
            out << kAlpha;
        else
            out << coords[i];
    }
    out << ")";
    return out.str();
}

LabeledVertex LabeledVertex::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    LabeledVertex v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // strip blanks
        tok.erase(std::remove_if(tok.begin(), tok.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok == kAlpha || tok == "a" || tok == "*" || tok == "A") {
            v.coords.push_back(0);
        } else {
            try {
                v.coords.push_back(std::stoi(tok));
            } catch (...) {
                throw input_error("cannot parse label entry '" + tok + "' in '" + s + "'");
            }
        }
    }
    if (v.coords.empty()) throw input_error("cannot parse label '" + s + "'");
    int wildcards = 0;
    for (int c : v.coords)
        if (c == 0) wildcards++;
    if (wildcards != 1) throw input_error("label must have exactly one wildcard: '" + s + "'");
    return v;
}

namespace {

struct BookStep {
    Graph graph;
    // origin[w] = (vertex of the input graph, copy index 1..q; 0 = identified)
    std::vector<std::pair<int, int>> origin;
};

BookStep book_expand(const Graph& g, const VertexSet& iset, int q) {
    if (q < 1) throw input_error("q_book: need q >= 1");
    if (!std::is_sorted(iset.begin(), iset.end()) ||
        std::adjacent_find(iset.begin(), iset.end()) != iset.end())
        throw input_error("q_book: vertex set must be sorted and duplicate-free");
    if (!is_independent(g, iset)) throw input_error("q_book: set is not independent");

    int n = g.vertex_count();
    int ni = static_cast<int>(iset.size());
    int n_free = n - ni;
    BookStep step;
    step.origin.assign(ni + q * n_free, {-1, -1});

    std::vector<int> shared_id(n, -1), free_rank(n, -1);
    for (int i = 0; i < ni; ++i) shared_id[iset[i]] = i;
    int rank = 0;
    for (int v = 0; v < n; ++v)
        if (shared_id[v] < 0) free_rank[v] = rank++;

    auto image = [&](int v, int copy) {
        return shared_id[v] >= 0 ? shared_id[v] : ni + (copy - 1) * n_free + free_rank[v];
    };
    for (int i = 0; i < ni; ++i) step.origin[i] = {iset[i], 0};
    for (int copy = 1; copy <= q; ++copy)
        for (int v = 0; v < n; ++v)
            if (shared_id[v] < 0) step.origin[image(v, copy)] = {v, copy};

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(q) * g.edge_count());
    for (int copy = 1; copy <= q; ++copy)
        for (auto [u, v] : g.edges()) edges.emplace_back(image(u, copy), image(v, copy));
    step.graph = Graph(ni + q * n_free, std::move(edges));
    return step;
}

}  // namespace

Graph q_book(const Graph& h, const VertexSet& iset, int q) {
    return book_expand(h, iset, q).graph;
}

BookpileResult bookpile(const Graph& h, int q, std::size_t max_vertices) {
    int r = h.vertex_count();
    if (r < 1) throw input_error("bookpile: seed graph is empty");
    if (q < 1) throw input_error("bookpile: need q >= 1");

    // size guard: r * q^(r-1) vertices, q^r * e(h) edges
    unsigned long long vcount = r;
    for (int i = 0; i + 1 < r; ++i) {
        vcount *= static_cast<unsigned long long>(q);
        if (vcount > max_vertices)
            throw capacity_error("bookpile: vertex count r*q^(r-1) exceeds cap of " +
                                 std::to_string(max_vertices));
    }
    if (vcount > max_vertices)
        throw capacity_error("bookpile: vertex count r*q^(r-1) exceeds cap of " +
                             std::to_string(max_vertices));
    unsigned long long ecount = h.edge_count();
    for (int i = 0; i < r; ++i) {
        ecount *= static_cast<unsigned long long>(q);
        if (ecount > 10 * static_cast<unsigned long long>(max_vertices))
            throw capacity_error("bookpile: edge count q^r*e(h) exceeds cap");
    }

    constexpr int kUnset = -1;
    Graph cur = h;
    std::vector<std::vector<int>> coords(r, std::vector<int>(r, kUnset));
    for (int v = 0; v < r; ++v) coords[v][v] = 0;  // wildcard at the seed position

    for (int step_pos = 0; step_pos < r; ++step_pos) {
        VertexSet glue;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (coords[v][step_pos] == 0) glue.push_back(v);
        BookStep step = book_expand(cur, glue, q);
        std::vector<std::vector<int>> next(step.graph.vertex_count());
        for (int w = 0; w < step.graph.vertex_count(); ++w) {
            auto [orig, copy] = step.origin[w];
            next[w] = coords[orig];
            if (copy >= 1) next[w][step_pos] = copy;
        }
        cur = std::move(step.graph);
        coords = std::move(next);
    }

    BookpileResult result;
    result.q = q;
    std::vector<std::string> labels(cur.vertex_count());
    std::map<std::vector<int>, int> id_of;
    for (int v = 0; v < cur.vertex_count(); ++v) {
        labels[v] = LabeledVertex{coords[v]}.to_string();
        id_of[coords[v]] = v;
    }
    cur.set_labels(std::move(labels));
    result.graph = std::move(cur);

    // standard copies, enumerated in mixed-radix order over [q]^r
    unsigned long long total = 1;
    for (int i = 0; i < r; ++i) total *= static_cast<unsigned long long>(q);
    result.copies.reserve(total);
    std::vector<int> tuple(r, 1);
    for (unsigned long long idx = 0; idx < total; ++idx) {
        StandardCopy copy;
        copy.edge_coords = tuple;
        copy.vertices.resize(r);
        copy.vertex_ids.resize(r);
        for (int p = 0; p < r; ++p) {
            std::vector<int> c = tuple;
            c[p] = 0;
            copy.vertices[p] = LabeledVertex{c};
            auto it = id_of.find(c);
            if (it == id_of.end())
                throw contradiction_error("bookpile: missing labelled vertex " +
                                          copy.vertices[p].to_string());
            copy.vertex_ids[p] = it->second;
        }
        for (auto [a, b] : h.edges())
            if (!result.graph.has_edge(copy.vertex_ids[a], copy.vertex_ids[b]))
                throw contradiction_error("bookpile: copy misses edge of its seed graph");
        result.copies.push_back(std::move(copy));
        for (int p = 0; p < r; ++p) {  // increment mixed-radix counter
            if (tuple[p] < q) {
                tuple[p]++;
                break;
            }
            tuple[p] = 1;
        }
    }
    return result;
}

bool verify_clone_coloring(const Graph& h, const Graph& hq) {
    if (!hq.has_labels()) throw input_error("verify_clone_coloring: graph has no labels");
    int r = h.vertex_count();
    std::vector<int> clone_of(hq.vertex_count());
    for (int v = 0; v < hq.vertex_count(); ++v) {
        LabeledVertex lv = LabeledVertex::parse(hq.labels()[v]);
        if (static_cast<int>(lv.coords.size()) != r)
            throw input_error("verify_clone_coloring: label arity differs from seed order");
        clone_of[v] = lv.alpha_bit();
    }
    for (auto [x, y] : hq.edges())
        if (!h.has_edge(clone_of[x], clone_of[y])) return false;
    return true;
}

}  // namespace forge
