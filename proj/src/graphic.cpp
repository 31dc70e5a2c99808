#include "derlog/graphic.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "derlog/restriction.hpp"

namespace derlog {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : nv_(num_vertices), adj_(num_vertices) {
    if (num_vertices <= 0) throw std::invalid_argument("graph needs at least one vertex");
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v >= nv_) throw std::invalid_argument("vertex out of range");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
        edges_.emplace_back(u, v);
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges_.begin(), edges_.end(), Edge{u, v}) != edges_.end();
}

Graph Graph::parse(std::istream& in) {
    std::string line;
    int nv = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string first;
        if (!(is >> first)) continue;
        if (nv < 0) {
            if (first != "vertices")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'vertices <n>'");
            if (!(is >> nv) || nv <= 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex count");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge");
        }
        if (!(is >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge");
        edges.emplace_back(u - 1, v - 1);  // input is 1-based
    }
    if (nv < 0) throw std::invalid_argument("missing 'vertices' header");
    return Graph(nv, std::move(edges));
}

Graph Graph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse(in);
}

int Graph::max_clique() const {
    int best = 0;
    std::vector<int> cur;
    // n <= 10 or so in practice; plain branch and bound
    std::function<void(int)> rec = [&](int start) {
        best = std::max(best, static_cast<int>(cur.size()));
        for (int v = start; v < nv_; ++v) {
            bool ok = true;
            for (int u : cur) ok = ok && adj_[v].count(u);
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return best;
}

Arrangement graphic_arrangement(const Graph& g) {
    Arrangement a(g.num_vertices());
    for (auto [u, v] : g.edges()) {
        RatVec c(g.num_vertices(), Rational(0));
        c[u] = 1;
        c[v] = -1;
        a.add(Hyperplane(c));
    }
    return a;
}

TriReport tri_count(const Graph& g) {
    TriReport rep;
    int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> common;
            std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                                  g.neighbors(v).begin(), g.neighbors(v).end(),
                                  std::back_inserter(common));
            if (common.size() >= 2) rep.has_4cycle = true;
            if (!g.has_edge(u, v) && static_cast<int>(common.size()) > rep.tri) {
                rep.tri = static_cast<int>(common.size());
                rep.witness_edge = Edge{u, v};
            }
        }
    }
    return rep;
}

int graphic_t(const Graph& g) {
    TriReport r = tri_count(g);
    int e = g.num_edges();
    if (e == 1) return e;
    if (!r.has_4cycle && e >= 2) return e - 1;
    if (r.tri == 0 && r.has_4cycle) return e - 2;
    return e - r.tri;
}

GraphicCrosscheck crosscheck_graphic_t(const Graph& g) {
    if (g.num_vertices() > 8)
        throw std::invalid_argument("crosscheck_graphic_t: general search limited to <= 8 vertices");
    GraphicCrosscheck c;
    c.formula_t = graphic_t(g);
    c.search_t = minimal_restriction(graphic_arrangement(g)).t_value;
    c.agree = c.formula_t == c.search_t;
    return c;
}

TriBoundReport check_tri_bound(const Graph& g, const DegreeSequence& seq) {
    if (seq.truncated) throw std::invalid_argument("check_tri_bound: truncated degree sequence");
    TriBoundReport rep;
    rep.tri = tri_count(g).tri;
    if (rep.tri == 0) throw std::invalid_argument("check_tri_bound: Tri(G) = 0");
    rep.d_max = seq.max_degree();
    rep.holds = rep.d_max >= rep.tri;
    rep.tight = rep.d_max == rep.tri;
    return rep;
}

} // namespace derlog
