#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace klab {

/// True iff every G-edge maps to an H-edge under the total map f.
inline bool validate_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.num_vertices()) return false;
    for (int v : f)
        if (v < 0 || v >= h.num_vertices()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(f[u], f[v])) return false;
    return true;
}

struct HomInstance {
    const Graph* source = nullptr;
    const Graph* target = nullptr;
    std::map<int, int> partial;          // forced assignments
    std::uint64_t budget = UINT64_MAX;   // node-expansion limit
};

enum class HomStatus { Found, NoHom, BudgetExhausted };

struct HomResult {
    HomStatus status = HomStatus::NoHom;
    std::vector<int> mapping;     // valid only when Found
    std::uint64_t nodes_expanded = 0;
};

namespace detail {

class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, std::uint64_t budget) : g_(g), h_(h), budget_(budget) {}

    HomResult run(const std::map<int, int>& partial) {
        int n = g_.num_vertices();
        domains_.assign(n, VertexSet(h_.num_vertices()));
        for (auto& d : domains_) d.set();
        for (auto [v, img] : partial) {
            if (v < 0 || v >= n || img < 0 || img >= h_.num_vertices())
                throw BadParams("partial mapping out of range");
            VertexSet single(h_.num_vertices());
            single.set(img);
            domains_[v] = single;
        }
        // Partial must already respect mapped edges.
        for (auto [u, v] : g_.edges()) {
            auto iu = partial.find(u), iv = partial.find(v);
            if (iu != partial.end() && iv != partial.end() && !h_.has_edge(iu->second, iv->second))
                throw BadParams("partial mapping violates an edge");
        }
        assigned_.assign(n, -1);
        for (auto [v, img] : partial) assigned_[v] = img;
        result_.nodes_expanded = 0;
        if (!propagate_all()) {
            result_.status = HomStatus::NoHom;
            return result_;
        }
        bool exhausted = false;
        if (search(exhausted)) {
            result_.status = HomStatus::Found;
            result_.mapping = assigned_;
        } else {
            result_.status = exhausted ? HomStatus::BudgetExhausted : HomStatus::NoHom;
        }
        return result_;
    }

private:
    // Arc consistency: dom(u) keeps only images with a neighbor in dom(v),
    // for every source edge (u,v), to a fixed point.
    bool propagate_all() {
        std::deque<std::pair<int, int>> work;
        for (auto [u, v] : g_.edges()) {
            work.emplace_back(u, v);
            work.emplace_back(v, u);
        }
        return revise_queue(work);
    }

    bool propagate_from(int changed) {
        std::deque<std::pair<int, int>> work;
        const auto& nb = g_.neighbors(changed);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            work.emplace_back(static_cast<int>(u), changed);
        return revise_queue(work);
    }

    bool revise_queue(std::deque<std::pair<int, int>>& work) {
        while (!work.empty()) {
            auto [u, v] = work.front();
            work.pop_front();
            VertexSet support(h_.num_vertices());
            const auto& dv = domains_[v];
            for (auto t = dv.find_first(); t != VertexSet::npos; t = dv.find_next(t))
                support |= h_.neighbors(static_cast<int>(t));
            VertexSet revised = domains_[u] & support;
            if (revised == domains_[u]) continue;
            domains_[u] = revised;
            if (revised.none()) return false;
            const auto& nb = g_.neighbors(u);
            for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
                if (static_cast<int>(w) != v) work.emplace_back(static_cast<int>(w), u);
        }
        return true;
    }

    // Smallest domain first, then lowest vertex index; values in index order.
    int pick_vertex() const {
        int best = -1;
        size_t best_size = 0;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (assigned_[v] >= 0) continue;
            size_t s = domains_[v].count();
            if (best < 0 || s < best_size) {
                best = v;
                best_size = s;
            }
        }
        return best;
    }

    bool search(bool& exhausted) {
        int v = pick_vertex();
        if (v < 0) return true;
        if (result_.nodes_expanded >= budget_) {
            exhausted = true;
            return false;
        }
        ++result_.nodes_expanded;
        auto saved_domains = domains_;
        const VertexSet dom = domains_[v];
        for (auto t = dom.find_first(); t != VertexSet::npos; t = dom.find_next(t)) {
            VertexSet single(h_.num_vertices());
            single.set(t);
            domains_[v] = single;
            assigned_[v] = static_cast<int>(t);
            if (propagate_from(v) && search(exhausted)) return true;
            domains_ = saved_domains;
            assigned_[v] = -1;
            if (exhausted) return false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::uint64_t budget_;
    std::vector<VertexSet> domains_;
    std::vector<int> assigned_;
    HomResult result_;
};

} // namespace detail

/// Backtracking homomorphism search with arc-consistency pruning.
/// NoHom certifies exhaustion; BudgetExhausted is non-authoritative.
inline HomResult find_homomorphism(const HomInstance& inst) {
    if (inst.source == nullptr || inst.target == nullptr) throw BadParams("null instance");
    const Graph& g = *inst.source;
    const Graph& h = *inst.target;
    if (g.num_vertices() == 0) {
        HomResult r;
        r.status = HomStatus::Found;
        return r;
    }
    if (h.num_vertices() == 0) {
        HomResult r;
        r.status = HomStatus::NoHom;
        return r;
    }
    detail::HomSearch search(g, h, inst.budget);
    HomResult res = search.run(inst.partial);
    if (res.status == HomStatus::Found && !validate_homomorphism(g, h, res.mapping))
        throw Error("internal: search returned an invalid homomorphism");
    return res;
}

inline HomResult find_homomorphism(const Graph& g, const Graph& h,
                                   std::uint64_t budget = UINT64_MAX) {
    HomInstance inst;
    inst.source = &g;
    inst.target = &h;
    inst.budget = budget;
    return find_homomorphism(inst);
}

} // namespace klab
