#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <tuple>
#include <vector>

namespace smellscan::model {

/// Syntactic origin of a type-to-type dependency.
enum class EdgeKind {
    Supertype,      // extends / implements
    FieldType,      // declared field type, including generic arguments
    ParameterType,  // method or constructor parameter
    ReturnType,
    Instantiation,  // `new T(..)`, array creation
    MemberAccess,   // any other use inside code: static access, locals, casts, instanceof, ...
};

std::string_view to_string(EdgeKind kind);

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    EdgeKind kind = EdgeKind::MemberAccess;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Strongly connected components by Tarjan's algorithm, iteratively so that
/// long dependency chains do not exhaust the stack. `successors[v]` lists
/// the targets of v. Returns the component id of every vertex; ids are
/// assigned in reverse topological order of the condensation.
template <class Adjacency>
std::vector<std::size_t> strongly_connected_components(const Adjacency& successors)
{
    const std::size_t n = successors.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::size_t> component(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next successor slot)
    std::size_t counter = 0;
    std::size_t components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, slot] = call.back();
            if (slot == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& next = successors[v];
            if (slot < next.size()) {
                std::size_t w = next[slot++];
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components;
                } while (w != v);
                ++components;
            }
            std::size_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return component;
}

/// Directed graph over the model's types. Only resolved, in-model targets
/// appear; self-loops are never stored.
class DependencyGraph {
public:
    DependencyGraph() = default;

    /// `edges` may contain duplicates and self-loops; both are dropped.
    DependencyGraph(std::size_t node_count, std::vector<Edge> edges)
        : successors_(node_count), predecessors_(node_count)
    {
        std::erase_if(edges, [](const Edge& e) { return e.from == e.to; });
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (const Edge& e : edges_) {
            successors_[e.from].push_back(e.to);
            predecessors_[e.to].push_back(e.from);
        }
        for (auto* lists : {&successors_, &predecessors_}) {
            for (auto& list : *lists) {
                std::sort(list.begin(), list.end());
                list.erase(std::unique(list.begin(), list.end()), list.end());
            }
        }
        component_ = strongly_connected_components(successors_);
        std::size_t count = 0;
        for (std::size_t c : component_) count = std::max(count, c + 1);
        members_.assign(count, {});
        for (std::size_t v = 0; v < component_.size(); ++v) {
            members_[component_[v]].push_back(v);
        }
    }

    std::size_t node_count() const { return successors_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Distinct targets, ascending.
    const std::vector<std::size_t>& successors(std::size_t v) const { return successors_.at(v); }
    /// Distinct sources, ascending.
    const std::vector<std::size_t>& predecessors(std::size_t v) const { return predecessors_.at(v); }

    bool has_edge(std::size_t from, std::size_t to) const
    {
        const auto& s = successors_.at(from);
        return std::binary_search(s.begin(), s.end(), to);
    }

    std::size_t component_of(std::size_t v) const { return component_.at(v); }

    /// Members of v's strongly connected component, ascending.
    const std::vector<std::size_t>& component_members(std::size_t v) const
    {
        return members_.at(component_.at(v));
    }

    friend bool operator==(const DependencyGraph& a, const DependencyGraph& b)
    {
        return a.edges_ == b.edges_ && a.successors_.size() == b.successors_.size();
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> successors_;
    std::vector<std::vector<std::size_t>> predecessors_;
    std::vector<std::size_t> component_;
    std::vector<std::vector<std::size_t>> members_;
};

} // namespace smellscan::model
