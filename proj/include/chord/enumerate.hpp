#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "chord/diagram.hpp"

namespace chord {

namespace detail {
template <class F>
void place(std::vector<std::uint8_t>& partner, std::vector<bool>& used, int from, F& fn) {
    const int m = static_cast<int>(partner.size());
    int p = from;
    while (p < m && used[p]) ++p;
    if (p == m) {
        fn(ChordDiagram::from_partner(partner));
        return;
    }
    used[p] = true;
    for (int q = p + 1; q < m; ++q) {
        if (used[q]) continue;
        used[q] = true;
        partner[p] = static_cast<std::uint8_t>(q);
        partner[q] = static_cast<std::uint8_t>(p);
        place(partner, used, p + 1, fn);
        used[q] = false;
    }
    used[p] = false;
}
}  // namespace detail

// Every diagram of size n, ordered by the partner chosen for the smallest
// unmatched point. first_partner >= 1 restricts to diagrams whose point 0
// is matched with that point.
template <class F>
void for_each_diagram(int n, F&& fn, int first_partner = 0) {
    std::vector<std::uint8_t> partner(2 * n);
    std::vector<bool> used(2 * n, false);
    if (n == 0) {
        fn(ChordDiagram{});
        return;
    }
    if (first_partner > 0) {
        used[0] = used[first_partner] = true;
        partner[0] = static_cast<std::uint8_t>(first_partner);
        partner[first_partner] = 0;
        detail::place(partner, used, 1, fn);
        return;
    }
    detail::place(partner, used, 0, fn);
}

std::vector<ChordDiagram> all_diagrams(int n);

int default_jobs();

// Splits the size-n sweep by the root's partner. Each task folds into its own
// accumulator; accumulators are merged in task order, so the result does not
// depend on the number of jobs.
template <class Acc, class Visit, class Merge>
Acc sweep(int n, int jobs, const Acc& init, Visit visit, Merge merge) {
    const int tasks = n == 0 ? 1 : 2 * n - 1;
    std::vector<Acc> partial(tasks, init);
    auto run = [&](int t) {
        auto fn = [&](const ChordDiagram& c) { visit(c, partial[t]); };
        for_each_diagram(n, fn, n == 0 ? 0 : t + 1);
    };
    if (jobs <= 1 || tasks == 1) {
        for (int t = 0; t < tasks; ++t) run(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min(jobs, tasks); ++w)
            pool.emplace_back([&] {
                for (int t; (t = next++) < tasks;) run(t);
            });
        for (auto& th : pool) th.join();
    }
    Acc out = init;
    for (auto& a : partial) merge(out, std::move(a));
    return out;
}

}  // namespace chord
