#include "projdecomp/support.hpp"

#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "projdecomp/errors.hpp"

namespace projdecomp {

std::string_view to_string(SupportClass c) {
    switch (c) {
    case SupportClass::total_support: return "total_support";
    case SupportClass::support_only: return "support_only";
    case SupportClass::no_support: return "no_support";
    }
    return "unknown";
}

namespace {

constexpr Index unmatched = std::numeric_limits<Index>::max();

using Adjacency = std::vector<std::vector<Index>>;

/// Hopcroft-Karp maximum matching. Returns col_of_row; unmatched rows hold `unmatched`.
class HopcroftKarp {
public:
    HopcroftKarp(const Adjacency& adj, Index cols)
        : adj_(adj), col_of_row_(adj.size(), unmatched), row_of_col_(cols, unmatched), layer_(adj.size()) {}

    std::size_t run() {
        std::size_t size = 0;
        while (build_layers()) {
            for (Index r = 0; r < adj_.size(); ++r) {
                if (col_of_row_[r] == unmatched && augment(r)) {
                    ++size;
                }
            }
        }
        return size;
    }

    const std::vector<Index>& col_of_row() const { return col_of_row_; }
    const std::vector<Index>& row_of_col() const { return row_of_col_; }

private:
    static constexpr std::size_t infinite = std::numeric_limits<std::size_t>::max();

    bool build_layers() {
        std::queue<Index> frontier;
        for (Index r = 0; r < adj_.size(); ++r) {
            if (col_of_row_[r] == unmatched) {
                layer_[r] = 0;
                frontier.push(r);
            } else {
                layer_[r] = infinite;
            }
        }
        bool reached_free = false;
        while (!frontier.empty()) {
            const Index r = frontier.front();
            frontier.pop();
            for (Index c : adj_[r]) {
                const Index next = row_of_col_[c];
                if (next == unmatched) {
                    reached_free = true;
                } else if (layer_[next] == infinite) {
                    layer_[next] = layer_[r] + 1;
                    frontier.push(next);
                }
            }
        }
        return reached_free;
    }

    bool augment(Index r) {
        for (Index c : adj_[r]) {
            const Index next = row_of_col_[c];
            if (next == unmatched || (layer_[next] == layer_[r] + 1 && augment(next))) {
                col_of_row_[r] = c;
                row_of_col_[c] = r;
                return true;
            }
        }
        layer_[r] = infinite;
        return false;
    }

    const Adjacency& adj_;
    std::vector<Index> col_of_row_;
    std::vector<Index> row_of_col_;
    std::vector<std::size_t> layer_;
};

/// Iterative Tarjan; returns the component id of every vertex.
std::vector<Index> strong_components(const Adjacency& graph) {
    const Index n = graph.size();
    std::vector<Index> index(n, unmatched);
    std::vector<Index> low(n, 0);
    std::vector<Index> component(n, unmatched);
    std::vector<bool> on_stack(n, false);
    std::vector<Index> stack;
    std::vector<std::pair<Index, std::size_t>> call;  // (vertex, next edge)
    Index counter = 0;
    Index components = 0;

    for (Index root = 0; root < n; ++root) {
        if (index[root] != unmatched) {
            continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge < graph[v].size()) {
                const Index w = graph[v][edge++];
                if (index[w] == unmatched) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Index done = v;
            call.pop_back();
            if (!call.empty()) {
                Index parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                Index w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components;
                } while (w != done);
                ++components;
            }
        }
    }
    return component;
}

} // namespace

SupportDiagnosis check_support(const Matrix& pattern) {
    if (pattern.rows() != pattern.cols()) {
        throw ShapeError("support is only defined for square matrices, got " + std::to_string(pattern.rows()) +
                         "x" + std::to_string(pattern.cols()));
    }
    const Index n = pattern.rows();
    const std::vector<Triplet> nz = pattern.nonzeros();

    Adjacency adj(n);
    for (const Triplet& t : nz) {
        adj[t.row].push_back(t.col);
    }
    HopcroftKarp matching(adj, n);
    if (matching.run() != n) {
        return {SupportClass::no_support, std::nullopt};
    }

    const auto& col_of_row = matching.col_of_row();
    const auto& row_of_col = matching.row_of_col();
    Adjacency alternating(n);
    for (const Triplet& t : nz) {
        if (col_of_row[t.row] != t.col) {
            alternating[t.row].push_back(row_of_col[t.col]);
        }
    }
    const std::vector<Index> component = strong_components(alternating);
    for (const Triplet& t : nz) {
        if (col_of_row[t.row] != t.col && component[t.row] != component[row_of_col[t.col]]) {
            return {SupportClass::support_only, std::make_pair(t.row, t.col)};
        }
    }
    return {SupportClass::total_support, std::nullopt};
}

} // namespace projdecomp
