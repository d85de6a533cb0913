#ifndef SURFKIN_GRID_HPP
#define SURFKIN_GRID_HPP

// Regular evaluation grids over a chart domain. A grid of n x m cells has
// (n+1) x (m+1) sample nodes; FD-based checks skip a cell margin at the
// boundary. Parallel evaluation is fanned out over rows into a preallocated
// buffer, so results and reductions are deterministic.

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "surfkin/chart.hpp"
#include "surfkin/errors.hpp"

namespace surfkin {

struct GridSpec {
    int nu = 32, nv = 32;  // cells per direction
    int margin = 2;        // boundary cells excluded from FD checks

    void validate() const {
        if (nu < 8 || nv < 8) throw ConfigError("grid must be at least 8x8 cells");
        if (margin < 0 || 2 * margin >= nu || 2 * margin >= nv)
            throw ConfigError("grid margin leaves no interior nodes");
    }
    int interior_nu() const { return nu - 2 * margin + 1; }
    int interior_nv() const { return nv - 2 * margin + 1; }
    int interior_count() const { return interior_nu() * interior_nv(); }
};

inline int worker_count() {
    if (const char* env = std::getenv("SURFKIN_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct GridNode {
    int i = 0, j = 0;      // interior indices, row-major in i
    double u = 0.0, v = 0.0;
};

inline GridNode interior_node(const Domain& dom, const GridSpec& g, int flat) {
    GridNode n;
    n.i = flat / g.interior_nv();
    n.j = flat % g.interior_nv();
    n.u = dom.u0 + (g.margin + n.i) * dom.span_u() / g.nu;
    n.v = dom.v0 + (g.margin + n.j) * dom.span_v() / g.nv;
    return n;
}

// Evaluate fn at every interior node; results land in node order regardless
// of the worker count. The first worker exception is rethrown.
template <class T, class Fn>
std::vector<T> map_interior(const Domain& dom, const GridSpec& g, Fn&& fn) {
    g.validate();
    const int total = g.interior_count();
    std::vector<T> out(total);
    const int workers = std::min(worker_count(), total);
    if (workers <= 1) {
        for (int k = 0; k < total; ++k) {
            const GridNode n = interior_node(dom, g, k);
            out[k] = fn(n);
        }
        return out;
    }
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::mutex err_mx;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int k = w; k < total; k += workers) {
                    const GridNode n = interior_node(dom, g, k);
                    out[k] = fn(n);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mx);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

} // namespace surfkin

#endif
