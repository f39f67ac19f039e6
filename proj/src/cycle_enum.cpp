#include "cyclesep/cycle_enum.hpp"

#include <algorithm>
#include <set>

namespace cyclesep {

bool PathTuple::contains(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PathTuple make_path(const Embedding& e, const std::vector<VertexId>& vertices) {
    if (vertices.size() < 2) throw Error(ErrorKind::UsageError, "a path needs at least 2 vertices");
    std::set<VertexId> distinct(vertices.begin(), vertices.end());
    if (distinct.size() != vertices.size()) {
        throw Error(ErrorKind::UsageError, "path vertices must be pairwise distinct");
    }
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (!e.adjacent(e.index_of(vertices[i]), e.index_of(vertices[i + 1]))) {
            throw Error(ErrorKind::UsageError,
                        "path vertices " + std::to_string(vertices[i]) + "," +
                            std::to_string(vertices[i + 1]) + " are not adjacent");
        }
    }
    return PathTuple{vertices};
}

namespace {

// Neighbors sorted by external id, the order the enumerators walk in.
std::vector<std::vector<int>> sorted_adjacency(const Embedding& e) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(e.vertex_count()));
    for (int u = 0; u < e.vertex_count(); ++u) {
        adj[static_cast<size_t>(u)] = e.rotation(u);
        std::sort(adj[static_cast<size_t>(u)].begin(), adj[static_cast<size_t>(u)].end(),
                  [&](int a, int b) { return e.id_of(a) < e.id_of(b); });
    }
    return adj;
}

struct CycleSearch {
    const Embedding& e;
    const std::vector<std::vector<int>>& adj;
    const std::function<bool(const CycleTuple&)>& visit;
    const std::vector<char>* allowed;
    int max_len;
    std::uint64_t cap;
    std::uint64_t yielded = 0;
    bool stopped = false;
    std::vector<int> stack;
    std::vector<char> on_stack;
    int root = 0;

    bool ok(int v) const { return !allowed || (*allowed)[static_cast<size_t>(v)]; }

    void emit() {
        if (yielded == cap) {
            throw Error(ErrorKind::BudgetExceeded,
                        "cycle enumeration exceeded the budget of " + std::to_string(cap));
        }
        ++yielded;
        std::vector<VertexId> ids;
        ids.reserve(stack.size());
        for (int v : stack) ids.push_back(e.id_of(v));
        CycleTuple c;
        c.raw = ids;
        c.canonical = canonical_cycle_form(ids);
        for (size_t i = 0; i < c.canonical.size(); ++i) {
            VertexId a = c.canonical[i];
            VertexId b = c.canonical[(i + 1) % c.canonical.size()];
            c.edge_set.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(c.edge_set.begin(), c.edge_set.end());
        if (!visit(c)) stopped = true;
    }

    void grow() {
        if (stopped) return;
        int cur = stack.back();
        for (int next : adj[static_cast<size_t>(cur)]) {
            if (stopped) return;
            if (next == root) {
                // Close the cycle; each one is reported from the direction
                // where the second vertex beats the last.
                if (stack.size() >= 3 &&
                    e.id_of(stack[1]) < e.id_of(stack.back())) {
                    emit();
                }
                continue;
            }
            if (!ok(next) || on_stack[static_cast<size_t>(next)]) continue;
            if (e.id_of(next) < e.id_of(root)) continue;
            if (static_cast<int>(stack.size()) >= max_len) continue;
            stack.push_back(next);
            on_stack[static_cast<size_t>(next)] = 1;
            grow();
            on_stack[static_cast<size_t>(next)] = 0;
            stack.pop_back();
        }
    }
};

} // namespace

void for_each_cycle(const Embedding& e, int max_len,
                    const std::function<bool(const CycleTuple&)>& visit,
                    const Budget& budget, const std::vector<char>* allowed_idx) {
    if (max_len < 3) throw Error(ErrorKind::UsageError, "max_len must be at least 3");
    max_len = std::min(max_len, e.vertex_count());

    auto adj = sorted_adjacency(e);
    std::vector<int> order(static_cast<size_t>(e.vertex_count()));
    for (int i = 0; i < e.vertex_count(); ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return e.id_of(a) < e.id_of(b); });

    CycleSearch search{e, adj, visit, allowed_idx, max_len, budget.cap};
    search.on_stack.assign(static_cast<size_t>(e.vertex_count()), 0);
    for (int root : order) {
        if (!search.ok(root)) continue;
        search.root = root;
        search.stack = {root};
        search.on_stack[static_cast<size_t>(root)] = 1;
        search.grow();
        search.on_stack[static_cast<size_t>(root)] = 0;
        if (search.stopped) return;
    }
}

std::vector<CycleTuple> enumerate_cycles(const Embedding& e, int max_len,
                                         const std::vector<VertexId>& through,
                                         const Budget& budget) {
    for (VertexId v : through) e.index_of(v);
    std::set<VertexId> required(through.begin(), through.end());

    std::vector<CycleTuple> out;
    for_each_cycle(
        e, max_len,
        [&](const CycleTuple& c) {
            for (VertexId v : required) {
                if (!c.contains(v)) return true;
            }
            out.push_back(c);
            return true;
        },
        budget);
    return out;
}

std::vector<PathTuple> enumerate_paths(const Embedding& e, VertexId u, VertexId v,
                                       int max_len, const Budget& budget) {
    if (u == v) throw Error(ErrorKind::UsageError, "path endpoints must differ");
    int u_idx = e.index_of(u), v_idx = e.index_of(v);
    if (max_len < 1) throw Error(ErrorKind::UsageError, "max_len must be at least 1");

    auto adj = sorted_adjacency(e);
    std::vector<PathTuple> out;
    std::vector<int> stack = {u_idx};
    std::vector<char> on_stack(static_cast<size_t>(e.vertex_count()), 0);
    on_stack[static_cast<size_t>(u_idx)] = 1;

    std::uint64_t cap = budget.cap;
    auto emit = [&]() {
        if (out.size() == cap) {
            throw Error(ErrorKind::BudgetExceeded,
                        "path enumeration exceeded the budget of " + std::to_string(cap));
        }
        std::vector<VertexId> ids;
        ids.reserve(stack.size());
        for (int x : stack) ids.push_back(e.id_of(x));
        out.push_back(PathTuple{std::move(ids)});
    };

    std::function<void()> grow = [&]() {
        int cur = stack.back();
        for (int next : adj[static_cast<size_t>(cur)]) {
            if (on_stack[static_cast<size_t>(next)]) continue;
            if (static_cast<int>(stack.size()) > max_len) continue;
            stack.push_back(next);
            if (next == v_idx) {
                emit();
            } else {
                on_stack[static_cast<size_t>(next)] = 1;
                grow();
                on_stack[static_cast<size_t>(next)] = 0;
            }
            stack.pop_back();
        }
    };
    grow();
    return out;
}

} // namespace cyclesep
