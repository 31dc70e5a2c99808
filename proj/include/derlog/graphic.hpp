#ifndef DERLOG_GRAPHIC_HPP
#define DERLOG_GRAPHIC_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "derlog/arrangement.hpp"
#include "derlog/derivations.hpp"

namespace derlog {

using Edge = std::pair<int, int>;  // 0-based, first < second

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return nv_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    const std::set<int>& neighbors(int v) const { return adj_[v]; }

    // Text format: "vertices n" header, then one edge "u v" per 1-based line;
    // '#' starts a comment.
    static Graph parse(std::istream& in);
    static Graph parse_file(const std::string& path);

    int max_clique() const;

private:
    int nv_;
    std::vector<Edge> edges_;
    std::vector<std::set<int>> adj_;
};

struct TriReport {
    int tri = 0;                        // Tri(G)
    std::optional<Edge> witness_edge;   // a non-edge achieving it (when tri > 0)
    bool has_4cycle = false;
};

// A_G = { x_u - x_v : (u,v) in E } in l = |V| variables.
Arrangement graphic_arrangement(const Graph& g);

// Tri(G) = max over non-edges of the number of triangles the edge would
// create; 4-cycles are detected as two vertices with >= 2 common neighbors.
TriReport tri_count(const Graph& g);

// The four-case t formula of the graphic restriction theorem, evaluated
// exactly as stated.
int graphic_t(const Graph& g);

struct GraphicCrosscheck {
    int formula_t = 0;
    int search_t = 0;
    bool agree = false;
};

// Compares the formula with the general candidate search on A_G. A
// discrepancy is reported, not hidden: triangles make the formula
// overestimate t (a hyperplane through a triangle's flat collapses three
// edges into one class), so e.g. K_3 yields 2 vs 1.
GraphicCrosscheck crosscheck_graphic_t(const Graph& g);

struct TriBoundReport {
    int tri = 0;
    int d_max = 0;
    bool holds = false;
    bool tight = false;
};

// Triangle lower bound d_{A_G} >= Tri(G), applicable whenever Tri(G) > 0.
TriBoundReport check_tri_bound(const Graph& g, const DegreeSequence& seq);

} // namespace derlog

#endif
