#include "forge/graphon.hpp"

#include <cmath>
#include <fstream>

#include "forge/bookpile.hpp"
#include "forge/errors.hpp"

namespace forge {

StepGraphon StepGraphon::constant(int m, double p) {
    if (m < 1) throw input_error("graphon: need m >= 1");
    StepGraphon w;
    w.m = m;
    w.values.assign(m, std::vector<double>(m, p));
    w.validate();
    return w;
}

StepGraphon StepGraphon::identity_blocks(int m) {
    StepGraphon w = constant(m, 0.0);
    for (int a = 0; a < m; ++a) w.values[a][a] = 1.0;
    return w;
}

void StepGraphon::validate() const {
    if (m < 1) throw input_error("graphon: need m >= 1");
    if (static_cast<int>(values.size()) != m) throw input_error("graphon: values not m x m");
    for (int a = 0; a < m; ++a) {
        if (static_cast<int>(values[a].size()) != m) throw input_error("graphon: values not m x m");
        for (int b = 0; b < m; ++b) {
            if (!(values[a][b] >= 0.0 && values[a][b] <= 1.0))
                throw input_error("graphon: entry outside [0,1]");
            if (values[a][b] != values[b][a]) throw input_error("graphon: matrix not symmetric");
        }
    }
}

StepGraphon complement(const StepGraphon& w) {
    StepGraphon c = w;
    for (auto& row : c.values)
        for (double& x : row) x = 1.0 - x;
    return c;
}

namespace {

unsigned long long power_or_throw(int m, int n, unsigned long long cap, const char* who) {
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<unsigned long long>(m);
        if (total > cap)
            throw capacity_error(std::string(who) + ": m^|V| exceeds capacity of " +
                                 std::to_string(cap));
    }
    return total;
}

}  // namespace

double hom_density(const Graph& h, const StepGraphon& w, unsigned long long max_maps) {
    int n = h.vertex_count();
    if (n < 1) throw input_error("hom_density: graph must have at least one vertex");
    w.validate();
    int m = w.m;
    unsigned long long total = power_or_throw(m, n, max_maps, "hom_density");

    // edges grouped by their larger endpoint, so each recursion level
    // multiplies in exactly the factors it completes
    std::vector<std::vector<int>> pre(n);
    for (auto [u, v] : h.edges()) pre[v].push_back(u);

    std::vector<int> assign(n, 0);
    long double sum = 0.0L;
    auto rec = [&](auto&& self, int j, long double prod) -> void {
        if (j == n) {
            sum += prod;
            return;
        }
        for (int b = 0; b < m; ++b) {
            long double f = prod;
            for (int u : pre[j]) {
                f *= w.values[assign[u]][b];
                if (f == 0.0L) break;
            }
            if (f == 0.0L) continue;  // every extension stays zero
            assign[j] = b;
            self(self, j + 1, f);
        }
    };
    rec(rec, 0, 1.0L);
    return static_cast<double>(sum / static_cast<long double>(total));
}

DensityReport commonality_deficit(const Graph& h, const StepGraphon& w,
                                  unsigned long long max_maps) {
    if (h.edge_count() > 60)
        throw capacity_error("commonality_deficit: 2^(1-e) requires e(h) <= 60");
    DensityReport rep;
    rep.t_w = hom_density(h, w, max_maps);
    rep.t_comp = hom_density(h, complement(w), max_maps);
    rep.deficit = rep.t_w + rep.t_comp - std::ldexp(1.0, 1 - h.edge_count());
    return rep;
}

JensenReport jensen_check(const Graph& h, const VertexSet& iset, int q, const StepGraphon& w) {
    Graph book = q_book(h, iset, q);
    JensenReport rep;
    rep.lhs = hom_density(book, w);
    rep.rhs = std::pow(hom_density(h, w), q);
    rep.ok = rep.lhs >= rep.rhs - 1e-12;
    return rep;
}

std::vector<std::vector<double>> density_gradient(const Graph& h, const StepGraphon& w,
                                                  unsigned long long max_maps) {
    int n = h.vertex_count();
    if (n < 1) throw input_error("density_gradient: graph must have at least one vertex");
    w.validate();
    int m = w.m;
    unsigned long long total = power_or_throw(m, n, max_maps, "density_gradient");

    const auto& edges = h.edges();
    int ne = static_cast<int>(edges.size());
    std::vector<std::vector<long double>> grad(m, std::vector<long double>(m, 0.0L));
    std::vector<int> assign(n, 0);
    std::vector<long double> prefix(ne + 1), suffix(ne + 1);

    for (unsigned long long it = 0;; ++it) {
        // product of all edge factors except one, via prefix/suffix sweeps
        prefix[0] = 1.0L;
        for (int e = 0; e < ne; ++e)
            prefix[e + 1] = prefix[e] * w.values[assign[edges[e].first]][assign[edges[e].second]];
        suffix[ne] = 1.0L;
        for (int e = ne - 1; e >= 0; --e)
            suffix[e] = suffix[e + 1] * w.values[assign[edges[e].first]][assign[edges[e].second]];
        for (int e = 0; e < ne; ++e) {
            int a = assign[edges[e].first], b = assign[edges[e].second];
            grad[std::min(a, b)][std::max(a, b)] += prefix[e] * suffix[e + 1];
        }
        if (it + 1 == total) break;
        for (int j = 0; j < n; ++j) {  // odometer
            if (++assign[j] < m) break;
            assign[j] = 0;
        }
    }
    std::vector<std::vector<double>> out(m, std::vector<double>(m, 0.0));
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            double g = static_cast<double>(grad[a][b] / static_cast<long double>(total));
            out[a][b] = g;
            out[b][a] = g;
        }
    return out;
}

json graphon_to_json(const StepGraphon& w) {
    json j;
    j["m"] = w.m;
    j["values"] = w.values;
    return j;
}

StepGraphon graphon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("values"))
        throw input_error("graphon json: expected object with 'm' and 'values'");
    StepGraphon w;
    w.m = j.at("m").get<int>();
    auto vals = j.at("values").get<std::vector<std::vector<double>>>();
    if (static_cast<int>(vals.size()) != w.m) throw input_error("graphon json: values not m x m");
    for (const auto& row : vals)
        if (static_cast<int>(row.size()) != w.m)
            throw input_error("graphon json: values not m x m");
    for (int a = 0; a < w.m; ++a)
        for (int b = 0; b < w.m; ++b)
            if (std::fabs(vals[a][b] - vals[b][a]) > 1e-12)
                throw input_error("graphon json: matrix asymmetric beyond 1e-12");
    w.values = std::move(vals);
    for (int a = 0; a < w.m; ++a)
        for (int b = a + 1; b < w.m; ++b) {
            double avg = 0.5 * (w.values[a][b] + w.values[b][a]);
            w.values[a][b] = avg;
            w.values[b][a] = avg;
        }
    w.validate();
    return w;
}

StepGraphon read_graphon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graphon file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("cannot parse graphon file " + path + ": " + e.what());
    }
    return graphon_from_json(j);
}

}  // namespace forge
