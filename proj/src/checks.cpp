#include "chord/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "chord/bijections.hpp"
#include "chord/enumerate.hpp"
#include "chord/oracles.hpp"
#include "chord/patterns.hpp"
#include "chord/series.hpp"
#include "chord/stirling.hpp"
#include "chord/structure.hpp"
#include "chord/triangulation.hpp"

namespace chord {

void CheckOutcome::require(bool ok, const std::string& line) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
}

namespace {

struct Tally {
    long checked = 0;
    long failed = 0;
    std::vector<std::string> examples;

    void fail(const std::string& why) {
        ++failed;
        if (examples.size() < 3) examples.push_back(why);
    }
    void expect(bool ok, const ChordDiagram& c, const char* what) {
        if (!ok) fail(std::string(what) + " at " + to_text(c));
    }
};

void merge_tally(Tally& a, Tally&& b) {
    a.checked += b.checked;
    a.failed += b.failed;
    for (auto& e : b.examples)
        if (a.examples.size() < 3) a.examples.push_back(std::move(e));
}

template <class F>
Tally scan(int n, int jobs, F f) {
    return sweep(
        n, jobs, Tally{},
        [&](const ChordDiagram& c, Tally& t) {
            ++t.checked;
            f(c, t);
        },
        merge_tally);
}

void absorb(CheckOutcome& out, const std::string& label, const Tally& t) {
    out.require(t.failed == 0, label + ": " + std::to_string(t.checked) + " checked, " + std::to_string(t.failed) +
                                   " failed");
    for (const auto& e : t.examples) out.info(e);
}

template <class F>
void scan_range(CheckOutcome& out, const std::string& label, int lo, int hi, int jobs, F f) {
    for (int n = lo; n <= hi; ++n) absorb(out, label + " n=" + std::to_string(n), scan(n, jobs, f));
}

std::string str(const mpz_class& z) { return z.get_str(); }

bool connected_nonempty(const ChordDiagram& c) { return c.size() > 0 && is_connected(c); }

// ---------------------------------------------------------------- diagram core

CheckOutcome core_pairs(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "pair classification", 0, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        const int n = c.size();
        t.expect(crossings(c) + nestings(c) + disjoint_pairs(c) == n * (n - 1) / 2, c, "pair sum");
    });
    return out;
}

CheckOutcome core_text(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "text and json round trip", 0, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        t.expect(parse_text(to_text(c)) == c, c, "text");
        t.expect(diagram_from_json(to_json(c)) == c, c, "json");
    });
    return out;
}

CheckOutcome core_arcs(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "intersection arcs", 0, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        std::vector<std::pair<int, int>> naive;
        const auto& ch = c.chords();
        for (int a = 0; a < c.size(); ++a)
            for (int b = a + 1; b < c.size(); ++b)
                if (ch[a].source < ch[b].source && ch[b].source < ch[a].sink && ch[a].sink < ch[b].sink)
                    naive.emplace_back(a, b);
        auto g = intersection_graph(c);
        auto arcs = g.arcs;
        std::sort(arcs.begin(), arcs.end());
        t.expect(arcs == naive && g.vertices == c.size(), c, "arc set");
    });
    return out;
}

// ------------------------------------------------------------------ structure

CheckOutcome order_agree(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "orders agree to t1", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        auto io = intersection_order(c);
        int t1 = first_terminal(c);
        bool ok = true;
        for (int l = 1; l < t1; ++l) ok = ok && io.chord[l - 1] < io.chord[l];
        ok = ok && c.chord(io.chord[t1 - 1]).sink == c.points() - 1;
        t.expect(ok, c, "order agreement");
    });
    return out;
}

CheckOutcome component_neighbors(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "components after head", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        Mask rest = c.all() & ~head_chords(c);
        for (const auto& b : indecomposable_blocks(c, rest))
            for (int x : mask_to_list(b.chords)) t.expect((c.right_neighbors(x) & ~b.chords) == 0, c, "outgoing arc");
    });
    return out;
}

ChordDiagram without_root(const ChordDiagram& c) { return induced_subdiagram(c, c.all() & ~Mask{1}); }

CheckOutcome one_terminal_characterization(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "1-terminal characterization", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        bool i = is_one_terminal(c);
        auto r = without_root(c);
        bool ii = connected_nonempty(r) && is_one_terminal(r);
        auto io = intersection_order(c);
        int last = io.chord[c.size() - 1];
        bool iii = true;
        for (int x = 0; x < c.size() && iii; ++x) iii = exists_nonnesting_induced_path(c, x, last);
        t.expect(i == ii && ii == iii, c, "characterization");
    });
    return out;
}

CheckOutcome traced_subdiagrams(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "traced subdiagrams", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c) || !is_one_terminal(c)) return;
        const int n = c.size();
        for (int x = 0; x < n; ++x) {
            Mask m = traced_subdiagram(c, x);
            auto sub = induced_subdiagram(c, m);
            int pos = popcount(m & (bit(x) - 1));
            t.expect((m >> x) & 1, c, "base chord missing");
            t.expect(is_one_terminal(sub) && pos == sub.size() - 1, c, "traced not 1-terminal with base last");
        }
        const int d = n - 1;
        t.expect(traced_subdiagram(c, d) == c.all(), c, "terminal traced is everything");
        Mask seen = 0;
        bool disjoint = true;
        for (int y : mask_to_list(c.neighbors(d))) {
            Mask m = traced_subdiagram(c, y);
            disjoint = disjoint && !(seen & m);
            seen |= m;
        }
        t.expect(disjoint && seen == (c.all() & ~bit(d)), c, "neighbor traced partition");
    });
    return out;
}

CheckOutcome kterm_kconn(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "k-terminal implies k-connected", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        int term = terminality(c);
        if (term == 0) return;
        int kappa = vertex_connectivity(c);
        for (int k = 1; k <= std::min(term, c.size() - 1); ++k) t.expect(kappa >= k, c, "connectivity below k");
    });
    return out;
}

CheckOutcome nonnesting_connectivity(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "nonnesting connectivity vs terminality (k < n)", 1, budget, jobs,
               [](const ChordDiagram& c, Tally& t) {
                   if (nestings(c) != 0) return;
                   int kappa = vertex_connectivity(c);
                   for (int k = 1; k < c.size(); ++k)
                       t.expect((kappa >= k) == is_k_terminal(c, k), c, "equivalence");
               });
    return out;
}

CheckOutcome order_extension(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "intersection order extends reachability", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        auto io = intersection_order(c);
        for (auto [a, b] : intersection_graph(c).arcs) t.expect(io.label[a] < io.label[b], c, "arc against order");
    });
    return out;
}

// ------------------------------------------------------------------- patterns

bool is_induced_cycle_graph(const ChordDiagram& c) {
    if (c.size() < 3 || !is_connected(c)) return false;
    for (int x = 0; x < c.size(); ++x)
        if (popcount(c.neighbors(x)) != 2) return false;
    return true;
}

CheckOutcome cycle_realizations_check(int budget, int jobs) {
    CheckOutcome out;
    for (int m = 3; m <= std::max(3, std::min(budget, 7)); ++m) {
        long cnt = sweep(
            m, jobs, 0L, [](const ChordDiagram& c, long& a) { a += is_induced_cycle_graph(c); },
            [](long& a, long&& b) { a += b; });
        long want = m == 3 ? 1 : 2;
        out.require(cnt == want && static_cast<long>(cycle_realizations(m).size()) == want,
                    "induced " + std::to_string(m) + "-cycle realizations: enumerated " + std::to_string(cnt) +
                        ", expected " + std::to_string(want));
    }
    return out;
}

CheckOutcome top_cycle_one_terminal(int budget, int jobs) {
    CheckOutcome out;
    const PatternClass tree = PatternClass::parse("tree");
    scan_range(out, "top-cycle-free 1-terminal characterization", 1, budget, jobs,
               [&](const ChordDiagram& c, Tally& t) {
                   if (!is_connected(c) || contains_any_top_cycle(c)) return;
                   bool rhs = in_class(c, tree);
                   if (rhs) {
                       for (int x = 0; x < c.size(); ++x) {
                           int r = popcount(c.right_neighbors(x));
                           if (r != 0 && r != 1) rhs = false;
                       }
                       int terminals = 0;
                       for (int x = 0; x < c.size(); ++x) terminals += c.right_neighbors(x) == 0;
                       rhs = rhs && terminals >= 1;
                   }
                   t.expect(is_one_terminal(c) == rhs, c, "characterization");
               });
    return out;
}

CheckOutcome class_definitions(int budget, int jobs) {
    CheckOutcome out;
    const auto nc = PatternClass::parse("noncrossing");
    const auto nn = PatternClass::parse("nonnesting");
    scan_range(out, "noncrossing/nonnesting definitions", 0, budget, jobs, [&](const ChordDiagram& c, Tally& t) {
        t.expect(in_class(c, nc) == (crossings(c) == 0), c, "noncrossing");
        t.expect(in_class(c, nn) == (nestings(c) == 0), c, "nonnesting");
    });
    return out;
}

CheckOutcome complete_nesting_symmetry(int budget, int jobs) {
    CheckOutcome out;
    const auto k3 = PatternClass::parse("K3-free");
    const auto n3 = PatternClass::parse("N3-free");
    for (int n = 1; n <= budget; ++n) {
        auto a = count_class(n, k3, Variant::All, {}, jobs).total();
        auto b = count_class(n, n3, Variant::All, {}, jobs).total();
        out.require(a == b, "n=" + std::to_string(n) + ": K3-free " + str(a) + ", N3-free " + str(b));
    }
    return out;
}

// ---------------------------------------------------------------- bijections

CheckOutcome psi_bijection(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "chi after psi on 1-terminal", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!connected_nonempty(c) || !is_one_terminal(c)) return;
        t.expect(chi(psi(c)) == c, c, "chi(psi)");
    });
    scan_range(out, "psi after chi on all", 0, budget - 1, jobs, [](const ChordDiagram& c, Tally& t) {
        auto x = chi(c);
        t.expect(is_one_terminal(x) && psi(x) == c, c, "psi(chi)");
    });
    return out;
}

CheckOutcome psi_right_neighbors(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "right-neighbor counts drop by one", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c) || !is_one_terminal(c)) return;
        auto p = psi(c);
        for (int x = 0; x + 1 < c.size(); ++x)
            t.expect(popcount(p.right_neighbors(x)) == popcount(c.right_neighbors(x)) - 1, c, "drop");
    });
    return out;
}

CheckOutcome psi_statistics(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "crossings m -> m-n+1, nestings kept", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!connected_nonempty(c) || !is_one_terminal(c)) return;
        auto p = psi(c);
        t.expect(crossings(p) == crossings(c) - c.size() + 1, c, "crossings");
        t.expect(nestings(p) == nestings(c), c, "nestings");
    });
    return out;
}

CheckOutcome psi_kterm(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "k-terminal iff image (k-1)-terminal", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c) || !is_one_terminal(c)) return;
        auto p = psi(c);
        for (int k = 2; k <= c.size(); ++k) t.expect(is_k_terminal(c, k) == is_k_terminal(p, k - 1), c, "terminality");
    });
    return out;
}

CheckOutcome psi_noncrossing(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "image noncrossing iff top-cycle-free", 1, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!connected_nonempty(c) || !is_one_terminal(c)) return;
        t.expect((crossings(psi(c)) == 0) == !contains_any_top_cycle(c), c, "noncrossing image");
    });
    for (int k = 1; k <= 3; ++k)
        for (int m = k; m <= std::min(budget, k + 5); ++m) {
            std::set<ChordDiagram> images;
            long bad = 0;
            for_each_diagram(m, [&](const ChordDiagram& c) {
                if (!is_k_terminal_minimal(c, k)) return;
                ChordDiagram x = c;
                for (int r = 0; r < k; ++r) x = psi(x);
                if (crossings(x) != 0) ++bad;
                images.insert(x);
            });
            mpz_class want = catalan(m - k);
            out.require(bad == 0 && images.size() == want.get_ui(),
                        "psi^" + std::to_string(k) + " on " + std::to_string(k) + "-terminal-minimal size " +
                            std::to_string(m) + ": " + std::to_string(images.size()) + " distinct noncrossing images, catalan " +
                            str(want));
        }
    return out;
}

struct ConnData {
    std::set<std::array<int, 3>> seen;
    Tally tally;
};

CheckOutcome psi_connectivity(int budget, int jobs) {
    CheckOutcome out;
    const int witness_max = std::min(budget, 7);
    for (int n = 2; n <= budget; ++n) {
        ConnData d = sweep(
            n, jobs, ConnData{},
            [&](const ChordDiagram& c, ConnData& acc) {
                if (!is_connected(c) || !is_one_terminal(c)) return;
                ++acc.tally.checked;
                int k = n - vertex_connectivity(c);
                int j = vertex_connectivity(psi(c));
                acc.tally.expect(k >= 1 && k < n && j >= std::max(0, n - 2 * k) && j < n - k, c, "bounds");
                acc.seen.insert({n, k, j});
            },
            [](ConnData& a, ConnData&& b) {
                merge_tally(a.tally, std::move(b.tally));
                a.seen.insert(b.seen.begin(), b.seen.end());
            });
        absorb(out, "connectivity bounds n=" + std::to_string(n), d.tally);
        if (n > witness_max) continue;
        std::vector<std::string> missing;
        int feasible = 0;
        for (int k = 1; k < n; ++k)
            for (int j = std::max(0, n - 2 * k); j < n - k; ++j) {
                ++feasible;
                if (!d.seen.count({n, k, j}))
                    missing.push_back("(k=" + std::to_string(k) + ",j=" + std::to_string(j) + ")");
            }
        std::string m;
        for (auto& s : missing) m += " " + s;
        out.require(missing.empty(), "witnesses n=" + std::to_string(n) + ": " +
                                         std::to_string(feasible - static_cast<int>(missing.size())) + "/" +
                                         std::to_string(feasible) + " (n,k,j) realized" +
                                         (missing.empty() ? "" : "; missing" + m));
    }
    return out;
}

CheckOutcome psi_witnesses(int budget, int) {
    CheckOutcome out;
    auto w = witness_search(4, [](const ChordDiagram& c) {
        return is_connected(c) && is_one_terminal(c) && vertex_connectivity(c) == 2 &&
               vertex_connectivity(psi(c)) == 0;
    });
    out.require(w.has_value(), "2-connected 1-terminal diagram with disconnected image at size 4: " +
                                   (w ? to_text(*w) + " -> " + to_text(psi(*w)) : std::string("none")));
    // shifted permutation diagrams realizing the drop construction
    for (int n = 3; n <= std::min(budget, 6); ++n) {
        std::set<std::pair<int, int>> kj;
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_shifted_permutation_diagram(c)) return;
            kj.insert({n - vertex_connectivity(c), vertex_connectivity(psi(c))});
        });
        std::string s;
        for (auto [k, j] : kj) s += " (" + std::to_string(k) + "," + std::to_string(j) + ")";
        out.require(!kj.empty(), "shifted permutation diagrams n=" + std::to_string(n) + " realize (k,j):" + s);
    }
    return out;
}

bool blocks_are_increasing_intervals(const Parts& parts) {
    int next = 1;
    for (const auto& p : parts)
        for (int b : p.block)
            if (b != next++) return false;
    return true;
}

CheckOutcome alpha_beta(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "beta after alpha", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        auto parts = alpha(c);
        validate_parts(parts);
        t.expect(beta(parts) == c, c, "round trip");
        t.expect(valency(c, c.size() > 0 ? intersection_order(c).chord[first_terminal(c) - 1] : 0) ==
                     static_cast<int>(parts.size()),
                 c, "terminal valency equals part count");
    });
    // random valid tuples
    std::vector<ChordDiagram> pieces;
    for (int n = 1; n <= 4; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (is_connected(c)) pieces.push_back(c);
        });
    std::mt19937 rng(20240607);
    long tried = 0, bad = 0;
    std::string example;
    for (int trial = 0; trial < 3000; ++trial) {
        int j = 1 + static_cast<int>(rng() % 5);
        std::vector<int> pos(j);
        for (int i = 0; i < j; ++i) pos[i] = i + 1;
        std::shuffle(pos.begin(), pos.end(), rng);
        Parts parts;
        for (int i = 0; i < j;) {
            int take = 1 + static_cast<int>(rng() % std::min(3, j - i));
            std::vector<int> block(pos.begin() + i, pos.begin() + i + take);
            std::sort(block.begin(), block.end());
            std::vector<const ChordDiagram*> fit;
            for (const auto& p : pieces)
                if (first_terminal(p) >= take) fit.push_back(&p);
            parts.push_back({*fit[rng() % fit.size()], block});
            i += take;
        }
        ++tried;
        try {
            validate_parts(parts);
        } catch (const DiagramError&) {
            continue;
        }
        if (alpha(beta(parts)) != parts) {
            ++bad;
            if (example.empty()) example = to_text(beta(parts));
        }
    }
    out.require(bad == 0, "alpha after beta on " + std::to_string(tried) + " random tuples: " + std::to_string(bad) +
                              " mismatches" + (example.empty() ? "" : " e.g. " + example));
    return out;
}

CheckOutcome alpha_top_cycle(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "top-cycle-free gives increasing interval blocks", 2, budget, jobs,
               [](const ChordDiagram& c, Tally& t) {
                   if (!is_connected(c) || contains_any_top_cycle(c)) return;
                   t.expect(blocks_are_increasing_intervals(alpha(c)), c, "blocks");
               });
    // beta on every interval-blocked tuple of top-cycle-free parts
    std::vector<ChordDiagram> pieces;
    for (int n = 1; n <= 3; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (is_connected(c) && !contains_any_top_cycle(c)) pieces.push_back(c);
        });
    long total = 0, bad = 0;
    std::string example;
    std::function<void(Parts&, int, int)> grow = [&](Parts& cur, int next, int j) {
        if (next > j) {
            auto c = beta(cur);
            ++total;
            if (contains_any_top_cycle(c)) {
                ++bad;
                if (example.empty()) example = to_text(c);
            }
            return;
        }
        for (int len = 1; next + len - 1 <= j; ++len)
            for (const auto& p : pieces) {
                if (first_terminal(p) < len) continue;
                std::vector<int> block;
                for (int i = 0; i < len; ++i) block.push_back(next + i);
                cur.push_back({p, block});
                grow(cur, next + len, j);
                cur.pop_back();
            }
    };
    for (int j = 1; j <= std::min(4, budget); ++j) {
        Parts cur;
        grow(cur, 1, j);
    }
    out.require(bad == 0, "beta keeps top-cycle-freeness on " + std::to_string(total) + " interval tuples" +
                              (example.empty() ? "" : "; counterexample " + example));
    return out;
}

CheckOutcome alpha_interval_witness(int budget, int) {
    CheckOutcome out;
    for (int n = 2; n <= std::min(budget, 6); ++n) {
        auto w = witness_search(n, [](const ChordDiagram& c) {
            if (!is_connected(c)) return false;
            for (const auto& p : alpha(c))
                for (std::size_t i = 1; i < p.block.size(); ++i)
                    if (p.block[i] != p.block[i - 1] + 1) return true;
            return false;
        });
        out.info("connected diagram with a non-interval block at n=" + std::to_string(n) + ": " +
                 (w ? to_text(*w) : std::string("none")));
    }
    return out;
}

CheckOutcome omega_gamma(int budget, int jobs) {
    CheckOutcome out;
    std::vector<std::string> expected_totals = {"1", "1", "3", "13", "68", "399", "2530"};
    for (int n = 1; n <= budget; ++n) {
        struct Acc {
            Tally tally;
            std::map<int, std::set<std::string>> codes;  // t1 -> codes
            std::map<int, long> counts;
        };
        Acc a = sweep(
            n, jobs, Acc{},
            [&](const ChordDiagram& c, Acc& acc) {
                if (!is_connected(c) || contains_any_top_cycle(c)) return;
                ++acc.tally.checked;
                auto tri = omega(c);
                int t1 = first_terminal(c);
                acc.tally.expect(tri.exterior_count() == (n == 1 ? 2 : t1 + 1), c, "exterior count");
                acc.tally.expect(tri.interior_count() == (n == 1 ? 0 : n - t1), c, "interior count");
                acc.codes[t1].insert(canonical_code(tri));
                ++acc.counts[t1];
                if (n == 1) return;
                auto g = gamma(tri);
                auto parts = alpha(c);
                bool same = g.size() == parts.size();
                for (std::size_t i = 0; same && i < g.size(); ++i)
                    same = canonical_code(g[i].triangulation) == canonical_code(omega(parts[i].diagram)) &&
                           g[i].index == static_cast<int>(parts[i].block.size());
                acc.tally.expect(same, c, "gamma(omega) vs omega(alpha)");
            },
            [](Acc& x, Acc&& y) {
                merge_tally(x.tally, std::move(y.tally));
                for (auto& [k, s] : y.codes) x.codes[k].insert(s.begin(), s.end());
                for (auto& [k, v] : y.counts) x.counts[k] += v;
            });
        absorb(out, "omega/gamma coherence n=" + std::to_string(n), a.tally);
        long total = 0;
        bool inj = true, per = true;
        std::string detail;
        for (auto& [t1, cnt] : a.counts) {
            total += cnt;
            inj = inj && static_cast<long>(a.codes[t1].size()) == cnt;
            mpz_class want = t1 >= 2 ? corollary_count(n, t1) : mpz_class(1);
            per = per && want == cnt;
            detail += " t1=" + std::to_string(t1) + ":" + std::to_string(cnt) + "/" + str(want);
        }
        std::set<std::string> all;
        for (auto& [t1, s] : a.codes) all.insert(s.begin(), s.end());
        inj = inj && static_cast<long>(all.size()) == total;
        out.require(inj, "omega injective n=" + std::to_string(n) + ": " + std::to_string(all.size()) +
                             " codes for " + std::to_string(total) + " diagrams");
        out.require(per, "per-t1 image counts vs map-count formula n=" + std::to_string(n) + ":" + detail);
        if (n <= static_cast<int>(expected_totals.size()))
            out.require(std::to_string(total) == expected_totals[n - 1],
                        "total n=" + std::to_string(n) + ": " + std::to_string(total));
    }
    return out;
}

StirlingWord drop_ones(const StirlingWord& w) {
    StirlingWord r;
    for (int x : w)
        if (x != 1) r.push_back(x - 1);
    return r;
}

CheckOutcome zeta_suite(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "zeta word, inverse, prefix/suffix, psi compatibility", 0, budget, jobs,
               [](const ChordDiagram& c, Tally& t) {
                   auto w = zeta(c);
                   t.expect(is_stirling(w) && static_cast<int>(w.size()) == 2 * c.size(), c, "not a Stirling word");
                   t.expect(zeta_inverse(w) == c, c, "inverse");
                   if (c.size() == 0) return;
                   bool one = connected_nonempty(c) && is_one_terminal(c);
                   t.expect(one == (w.front() == 1 && w.back() == 1), c, "prefix/suffix");
                   if (one) t.expect(zeta(psi(c)) == drop_ones(w), c, "zeta(psi) vs deleting ones");
               });
    for (int n = 0; n <= budget; ++n) {
        auto words = all_stirling_words(n);
        std::set<ChordDiagram> images;
        for (const auto& w : words) images.insert(zeta_inverse(w));
        out.require(images.size() == words.size() && words.size() == double_factorial(n).get_ui(),
                    "zeta inverse bijective n=" + std::to_string(n) + ": " + std::to_string(words.size()) + " words");
    }
    return out;
}

CheckOutcome eta_theta_suite(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 0; n <= budget; ++n) {
        auto trees = all_trees(n + 1);
        std::set<StirlingWord> words;
        long bad = 0;
        for (const auto& t : trees) {
            auto w = eta(t);
            if (!is_stirling(w) || eta_inverse(w) != t) ++bad;
            words.insert(w);
        }
        auto want = double_factorial(n);
        out.require(bad == 0 && words.size() == trees.size() && trees.size() == want.get_ui(),
                    "eta bijective on trees with " + std::to_string(n + 1) + " vertices: " + std::to_string(trees.size()) +
                        " trees, " + std::to_string(words.size()) + " words, expected " + str(want));
    }
    for (int n = 1; n <= budget + 1; ++n) {
        Tally t = scan(n, jobs, [](const ChordDiagram& c, Tally& tl) {
            if (!is_connected(c) || !is_one_terminal(c)) return;
            auto tr = theta(c);
            tl.expect(tr.size() == c.size() && theta_inverse(tr) == c, c, "theta round trip");
        });
        absorb(out, "theta round trip size " + std::to_string(n), t);
        long back = 0;
        for (const auto& tr : all_trees(n)) back += theta(theta_inverse(tr)) == tr ? 0 : 1;
        out.require(back == 0, "theta inverse round trip on all trees with " + std::to_string(n) + " vertices");
    }
    return out;
}

CheckOutcome composite_maps_differ(int budget, int) {
    CheckOutcome out;
    std::string found;
    for (int n = 1; n <= std::min(budget, 4) && found.empty(); ++n)
        for (const auto& w : all_stirling_words(n))
            if (zeta_inverse(w) != stirling_via_trees(w)) {
                found = word_to_text(w) + ": " + to_text(zeta_inverse(w)) + " vs " + to_text(stirling_via_trees(w));
                break;
            }
    out.require(!found.empty(), "composite maps differ on a word of size <= 4: " + (found.empty() ? "none" : found));
    return out;
}

CheckOutcome root_share_roundtrip(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "root-share decompose/compose", 2, budget, jobs, [](const ChordDiagram& c, Tally& t) {
        if (!is_connected(c)) return;
        auto r = root_share_decompose(c);
        t.expect(is_connected(r.root_side) && is_connected(r.outer), c, "parts connected");
        t.expect(r.index >= 1 && r.index <= 2 * r.outer.size() - 1, c, "index range");
        t.expect(root_share_compose(r.root_side, r.outer, r.index) == c, c, "compose");
        t.expect(first_terminal(r.outer) == first_terminal(c) - 1, c, "t1 drops by one");
        auto f = f_monomial(r.root_side) * WeightPolynomial::f(first_terminal(r.root_side) - 1) * f_monomial(r.outer);
        t.expect(f == f_monomial(c), c, "weight factorization");
    });
    return out;
}

// --------------------------------------------------------------------- series

CheckOutcome equation_solution(int budget, int jobs) {
    CheckOutcome out;
    for (Op op : {Op::Bin, Op::Div}) {
        auto s = solve_tree_like(op, budget);
        auto d = diagram_series(op, budget, {}, jobs);
        for (int n = 1; n <= budget; ++n) {
            std::size_t terms = 0;
            for (const auto& w : s.coeff[n].coeffs()) terms += w.terms().size();
            out.require(s.coeff[n] == d.coeff[n], op_name(op) + " [x^" + std::to_string(n) + "]: " +
                                                      std::to_string(terms) + " symbolic terms");
        }
    }
    return out;
}

CheckOutcome monomial_factor(int budget, int jobs) {
    CheckOutcome out;
    scan_range(out, "weight factorization over head and components", 1, budget, jobs,
               [](const ChordDiagram& c, Tally& t) {
                   if (!is_connected(c)) return;
                   auto io = intersection_order(c);
                   Mask head = head_chords(c);
                   int t1 = first_terminal(c);
                   WeightPolynomial w = f_monomial(induced_subdiagram(c, head));
                   auto comps = component_masks(c, c.all() & ~head);
                   auto first_label = [&](Mask m) {
                       int best = c.size() + 1;
                       for (int x : mask_to_list(m)) best = std::min(best, io.label[x]);
                       return best;
                   };
                   std::sort(comps.begin(), comps.end(),
                             [&](Mask a, Mask b) { return first_label(a) < first_label(b); });
                   int prev_last_terminal = t1;
                   int prev_max_label = t1;
                   bool contiguous = true;
                   for (Mask m : comps) {
                       auto b = induced_subdiagram(c, m);
                       contiguous = contiguous && first_label(m) == prev_max_label + 1;
                       prev_max_label += b.size();
                       std::vector<int> term_labels;
                       for (int x : mask_to_list(m))
                           if (c.right_neighbors(x) == 0) term_labels.push_back(io.label[x]);
                       std::sort(term_labels.begin(), term_labels.end());
                       w = w * WeightPolynomial::f(term_labels.front() - prev_last_terminal) * f_monomial(b);
                       prev_last_terminal = term_labels.back();
                   }
                   t.expect(contiguous, c, "component labels not contiguous");
                   t.expect(w == f_monomial(c), c, "factorization");
               });
    return out;
}

CheckOutcome top_degree(int budget, int) {
    CheckOutcome out;
    for (Op op : {Op::Bin, Op::Div}) {
        auto s = solve_tree_like(op, budget);
        bool ok = true;
        for (int n = 1; n <= budget; ++n) {
            ok = ok && s.coeff[n].degree() == n && !s.coeff[n][n].is_zero();
            for (const auto& [m, c] : s.coeff[n][n].terms()) {
                ok = ok && m.exp[Monomial::f_slot(0)] == n;
                for (int i = 1; i <= kMaxIndex; ++i) ok = ok && m.exp[Monomial::f_slot(i)] == 0;
            }
        }
        out.require(ok, op_name(op) + ": [x^n] has y-degree n with top coefficient divisible by f0^n only, n <= " +
                            std::to_string(budget));
    }
    return out;
}

CheckOutcome unit_weights(int budget, int jobs) {
    CheckOutcome out;
    auto s = solve_tree_like(Op::Bin, budget, phi_all_ones(budget));
    std::vector<mpq_class> ones(kMaxIndex + 1, 1);
    for (int n = 1; n <= budget; ++n) {
        // each connected C contributes sum_{i=1}^{t1} 1/i! at y = 1
        struct Acc {
            mpq_class total = 0;
            long conn = 0, one = 0;
        };
        Acc a = sweep(
            n, jobs, Acc{},
            [](const ChordDiagram& c, Acc& acc) {
                if (!is_connected(c)) return;
                ++acc.conn;
                int t1 = first_terminal(c);
                if (t1 == c.size()) ++acc.one;
                for (int i = 1; i <= t1; ++i) acc.total += 1 / factorial(i);
            },
            [](Acc& x, Acc&& y) {
                x.total += y.total;
                x.conn += y.conn;
                x.one += y.one;
            });
        mpq_class ysum = 0;
        for (int i = 0; i <= s.coeff[n].degree(); ++i) ysum += s.coeff[n][i].evaluate(ones, ones);
        mpq_class lin = s.coeff[n][1].evaluate(ones, ones);
        mpq_class diag = s.coeff[n][n].evaluate(ones, ones) * factorial(n);
        out.require(ysum == a.total && lin == a.conn && diag == a.one,
                    "n=" + std::to_string(n) + ": y=1 total " + ysum.get_str() + ", [y] " + lin.get_str() +
                        " connected, n![y^n] " + diag.get_str() + " 1-terminal");
    }
    return out;
}

CheckOutcome diff_eq(int budget, int) {
    CheckOutcome out;
    auto b = check_rge(Op::Bin, budget);
    out.require(b.ok, "binomial solution satisfies the differential identity to order " + std::to_string(budget) +
                          (b.ok ? "" : ": " + b.detail));
    auto d = check_rge(Op::Div, std::min(budget, 3));
    out.require(!d.ok, "divided-power solution violates it: " + (d.ok ? std::string("no violation found") : d.detail));
    auto g = solve_tree_like(Op::Bin, std::min(budget, 5));
    auto sym = rge_counterexample(g);
    out.info(std::string("symbolic phi, binomial: ") +
             (sym ? "identity fails first at i=" + std::to_string(sym->first) + " n=" + std::to_string(sym->second)
                  : "identity holds"));
    return out;
}

CheckOutcome root_share_identity(int budget, int jobs) {
    CheckOutcome out;
    auto r = check_root_share_identity(budget, jobs);
    out.require(r.ok, "convolution identity over connected diagrams, 2 <= n <= " + std::to_string(budget) +
                          ", 1 <= i <= n" + (r.ok ? "" : ": " + r.detail));
    return out;
}

CheckOutcome cocycle(int budget, int) {
    CheckOutcome out;
    auto a = check_cocycle(Coalgebra::Binomial, Op::Bin, budget);
    out.require(a.ok, "binomial coalgebra with binomial operator to degree " + std::to_string(budget));
    auto b = check_cocycle(Coalgebra::DividedPower, Op::Div, budget);
    out.require(b.ok, "divided-power coalgebra with divided-power operator to degree " + std::to_string(budget));
    auto c = check_cocycle(Coalgebra::Binomial, Op::Div, budget);
    out.require(!c.ok, "crossed pairing fails: " + c.detail);
    auto d = check_cocycle(Coalgebra::DividedPower, Op::Bin, budget);
    out.require(!d.ok, "other crossed pairing fails: " + d.detail);
    return out;
}

CheckOutcome ogf(int budget, int jobs) {
    CheckOutcome out;
    auto r = ogf_checks(budget, jobs);
    for (const auto& l : r.lines) {
        if (l.rfind("skip", 0) == 0)
            out.info(l);
        else
            out.require(l.rfind("ok", 0) == 0, l.substr(5));
    }
    return out;
}

// ---------------------------------------------------------------- enumeration

CheckOutcome counts_all(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 0; n <= budget; ++n) {
        auto c = count_simple(n, [](const ChordDiagram&) { return true; }, jobs);
        out.require(c == double_factorial(n), "all diagrams n=" + std::to_string(n) + ": " + str(c));
    }
    return out;
}

CheckOutcome counts_connected(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 1; n <= budget; ++n) {
        auto c = count_simple(n, [](const ChordDiagram& d) { return is_connected(d); }, jobs);
        out.require(c == stein(n), "connected n=" + std::to_string(n) + ": " + str(c) + " (recurrence " + str(stein(n)) + ")");
    }
    return out;
}

CheckOutcome counts_one_terminal(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 1; n <= budget; ++n) {
        auto c = count_simple(n, [](const ChordDiagram& d) { return is_connected(d) && is_one_terminal(d); }, jobs);
        out.require(c == one_terminal(n), "1-terminal n=" + std::to_string(n) + ": " + str(c));
    }
    return out;
}

CheckOutcome counts_top_cycle_refined(int budget, int jobs) {
    CheckOutcome out;
    const auto cls = PatternClass::parse("top-cycle-free");
    std::vector<std::string> golden = {"1", "1", "3", "13", "68", "399", "2530"};
    for (int n = 1; n <= budget; ++n) {
        auto table = count_class(n, cls, Variant::Connected, {Statistic::T1}, jobs);
        bool ok = true;
        std::string detail;
        mpz_class brown_sum = n == 1 ? mpz_class(1) : mpz_class(0);
        for (int i = 2; i <= n; ++i) {
            auto it = table.rows.find({i});
            mpz_class got = it == table.rows.end() ? mpz_class(0) : it->second;
            ok = ok && got == corollary_count(n, i);
            brown_sum += brown(i - 2, n - i);
            detail += " " + str(got);
        }
        ok = ok && table.total() == brown_sum;
        if (n <= static_cast<int>(golden.size())) ok = ok && str(table.total()) == golden[n - 1];
        out.require(ok, "n=" + std::to_string(n) + " total " + str(table.total()) + ", by t1:" + detail);
    }
    return out;
}

CheckOutcome counts_catalan_classes(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 0; n <= budget; ++n) {
        auto nc = count_class(n, PatternClass::parse("noncrossing"), Variant::All, {}, jobs).total();
        auto nn = count_class(n, PatternClass::parse("nonnesting"), Variant::All, {}, jobs).total();
        out.require(nc == catalan(n) && nn == catalan(n),
                    "n=" + std::to_string(n) + ": noncrossing " + str(nc) + ", nonnesting " + str(nn));
    }
    return out;
}

CheckOutcome counts_kconn_nonnesting(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 1; n <= budget; ++n) {
        auto t = count_class(n, PatternClass::parse("nonnesting"), Variant::All, {Statistic::Kappa}, jobs);
        std::string detail;
        bool ok = true;
        for (int k = 1; k < n; ++k) {
            mpz_class at_least = 0;
            for (auto& [key, v] : t.rows)
                if (key[0] >= k) at_least += v;
            ok = ok && at_least == catalan(n - k);
            detail += " k=" + std::to_string(k) + ":" + str(at_least);
        }
        out.require(ok, "k-connected nonnesting n=" + std::to_string(n) + ":" + detail);
    }
    return out;
}

CheckOutcome counts_stanley(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 0; n <= budget; ++n) {
        auto c = count_class(n, PatternClass::parse("K3-free"), Variant::All, {}, jobs).total();
        out.require(c == stanley(n), "K3-free n=" + std::to_string(n) + ": " + str(c) + " vs " + str(stanley(n)));
    }
    return out;
}

CheckOutcome counts_jelinek(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 0; n <= budget; ++n) {
        auto a = count_class(n, PatternClass::parse("top-cycle-free"), Variant::All, {}, jobs).total();
        auto b = count_class(n, PatternClass::parse("perm-free:213"), Variant::All, {}, jobs).total();
        auto c = count_class(n, PatternClass::parse("perm-free:132"), Variant::All, {}, jobs).total();
        out.require(a == b && b == c, "n=" + std::to_string(n) + ": top-cycle-free " + str(a) + ", 213-free " + str(b) +
                                          ", 132-free " + str(c));
    }
    return out;
}

CheckOutcome counts_one_terminal_top_cycle(int budget, int jobs) {
    CheckOutcome out;
    for (int n = 1; n <= budget; ++n) {
        auto a = count_class(n, PatternClass::parse("top-cycle-free"), Variant::OneTerminal, {}, jobs).total();
        auto b = count_class(n, PatternClass::parse("tree"), Variant::OneTerminal, {}, jobs).total();
        out.require(a == catalan(n - 1) && a == b, "n=" + std::to_string(n) + ": top-cycle-free " + str(a) +
                                                       ", tree " + str(b) + ", catalan " + str(catalan(n - 1)));
    }
    return out;
}

CheckOutcome counts_kterm_minimal(int budget, int jobs) {
    CheckOutcome out;
    for (int k = 1; k <= 2; ++k)
        for (int n = k; n <= budget; ++n) {
            auto c = count_simple(n, [k](const ChordDiagram& d) { return is_k_terminal_minimal(d, k); }, jobs);
            out.require(c == catalan(n - k), std::to_string(k) + "-terminal-minimal n=" + std::to_string(n) + ": " +
                                                 str(c) + " vs catalan " + str(catalan(n - k)));
        }
    return out;
}

CheckOutcome conjectures(int budget, int jobs) {
    CheckOutcome out;
    auto a = conjecture_report(budget, jobs);
    auto b = conjecture_report(budget, 1);
    out.require(a.to_json().dump() == b.to_json().dump(), "report identical across job counts");
    std::istringstream is(a.to_table());
    for (std::string line; std::getline(is, line);) out.info(line);
    return out;
}

std::vector<CheckInfo> build() {
    return {
        {"core-pair-classification", "every chord pair crosses, nests or is disjoint", 7, false, core_pairs},
        {"core-text-roundtrip", "text and JSON serialization round trip", 7, false, core_text},
        {"core-intersection-arcs", "directed intersection graph matches a pairwise test", 7, false, core_arcs},
        {"lem-order-agree", "standard and intersection orders agree up to t1, whose chord has the last sink", 7, false,
         order_agree},
        {"lem-component-neighbors", "components left after removing the head have no outgoing arcs", 7, false,
         component_neighbors},
        {"cor-one-terminal-characterization", "1-terminal iff root-deleted 1-terminal iff nonnesting induced paths",
         7, false, one_terminal_characterization},
        {"lem-traced-subdiagrams", "traced subdiagrams are 1-terminal and partition the diagram", 7, false,
         traced_subdiagrams},
        {"prop-kterm-kconn", "k-terminal diagrams with more than k chords are k-connected", 7, false, kterm_kconn},
        {"lem-nonnesting-connectivity", "nonnesting: k-connected iff k-terminal, for k < n", 8, false,
         nonnesting_connectivity},
        {"order-linear-extension", "intersection order extends the reachability order", 7, false, order_extension},
        {"patterns-cycle-realizations", "one induced 3-cycle diagram, two for each larger cycle", 6, false,
         cycle_realizations_check},
        {"lem-top-cycle-one-terminal", "top-cycle-free 1-terminal iff tree with out-degrees at most one", 7, false,
         top_cycle_one_terminal},
        {"patterns-class-definitions", "noncrossing and nonnesting classes match statistics", 7, false,
         class_definitions},
        {"count-k3-n3", "K3-free and N3-free diagrams are equinumerous", 6, false, complete_nesting_symmetry},
        {"thm-psi-bijection", "psi is a bijection from 1-terminal size n to all size n-1", 8, false, psi_bijection},
        {"lem-psi-right-neighbors", "psi lowers each right-neighbor count by one", 7, false, psi_right_neighbors},
        {"thm-psi-nest-cross", "psi transfers crossing and nesting counts", 8, false, psi_statistics},
        {"prop-psi-kterm", "k-terminal iff psi image is (k-1)-terminal", 7, false, psi_kterm},
        {"prop-psi-noncrossing", "noncrossing images and iterated psi on k-terminal-minimal diagrams", 7, false,
         psi_noncrossing},
        {"thm-psi-connectivity", "connectivity bounds under psi with witnesses", 7, false, psi_connectivity},
        {"psi-witnesses", "connectivity-drop and shifted permutation witnesses", 6, false, psi_witnesses},
        {"alpha-beta-roundtrip", "beta inverts alpha; alpha inverts beta on random tuples", 7, false, alpha_beta},
        {"alpha-top-cycle-intervals", "top-cycle-free gives interval blocks; beta keeps top-cycle-freeness", 7,
         false, alpha_top_cycle},
        {"alpha-noninterval-witness", "search for connected diagrams with non-interval blocks", 6, true,
         alpha_interval_witness},
        {"omega-gamma", "triangulation map: coherence, injectivity and counts", 6, false, omega_gamma},
        {"zeta-stirling", "zeta bijection, prefix/suffix property, psi compatibility", 7, false, zeta_suite},
        {"eta-theta-bijective", "eta and theta are bijections", 7, false, eta_theta_suite},
        {"composite-maps-differ", "the two word-to-diagram maps differ", 4, false, composite_maps_differ},
        {"root-share-decomposition", "root-share decomposition round trip and weight factorization", 7, false,
         root_share_roundtrip},
        {"thm-equation-sol", "diagram sums solve the tree-like equation for both operators", 6, false,
         equation_solution},
        {"lem-monomial-factor", "weight factorization over head and later components", 6, false, monomial_factor},
        {"series-top-degree", "top y-degree coefficient is a multiple of f0^n", 6, false, top_degree},
        {"series-unit-weights", "unit weights recover diagram counts", 6, false, unit_weights},
        {"thm-diff-eq", "differential identity holds for binomial and fails for divided power", 8, false, diff_eq},
        {"lem-root-share-identity", "root-share convolution identity", 6, false, root_share_identity},
        {"cocycle-identity", "1-cocycle identity for matching pairs, failure for crossed pairs", 6, false, cocycle},
        {"ogf-identities", "Stein recurrence, forbidden-class functional equation, EGF integral equation", 7, false,
         ogf},
        {"count-all-diagrams", "all diagrams number (2n-1)!!", 8, false, counts_all},
        {"count-connected-stein", "connected diagrams follow the Stein recurrence", 8, false, counts_connected},
        {"count-one-terminal", "1-terminal diagrams number (2n-3)!!", 8, false, counts_one_terminal},
        {"count-top-cycle-refined", "connected top-cycle-free counts by t1 match the map-count formula", 7, false,
         counts_top_cycle_refined},
        {"count-catalan-classes", "noncrossing and nonnesting diagrams are Catalan", 8, false,
         counts_catalan_classes},
        {"count-kconn-nonnesting", "k-connected nonnesting diagrams of size n number C_{n-k}", 7, false,
         counts_kconn_nonnesting},
        {"count-triangle-free-stanley", "K3-free diagrams match the Stanley interval count", 6, false,
         counts_stanley},
        {"count-jelinek", "top-cycle-free, 213-free and 132-free diagrams are equinumerous", 6, false,
         counts_jelinek},
        {"count-one-terminal-top-cycle", "1-terminal top-cycle-free diagrams are Catalan and are trees", 7, false,
         counts_one_terminal_top_cycle},
        {"count-kterm-minimal", "k-terminal-minimal diagrams of size n number C_{n-k}", 6, false,
         counts_kterm_minimal},
        {"conjecture-report", "conjecture comparison report with offset scanning", 6, true, conjectures},
    };
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> r = build();
    return r;
}

const CheckInfo* find_check(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace chord
