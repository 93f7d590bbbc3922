#include "charpoly/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "charpoly/partitions.hpp"

namespace charpoly {

void BettiProfile::validate() const {
    if (b.empty() || b[0] < 1)
        throw std::invalid_argument("BettiProfile: b0 must be >= 1");
    for (const Int& x : b)
        if (x < 0) throw std::invalid_argument("BettiProfile: entries must be >= 0");
}

UniPoly BettiProfile::to_poly() const {
    std::vector<Rat> c;
    c.reserve(b.size());
    for (const Int& x : b) c.emplace_back(x);
    return UniPoly(std::move(c));
}

Int BettiProfile::total() const {
    return std::accumulate(b.begin(), b.end(), Int(0));
}

void HessenbergFunction::validate() const {
    const int size = n();
    if (size < 1) throw std::invalid_argument("HessenbergFunction: empty");
    for (int i = 1; i <= size; ++i) {
        if (h[i - 1] < i || h[i - 1] > size)
            throw std::invalid_argument("HessenbergFunction: need i <= h(i) <= n");
        if (i > 1 && h[i - 1] < h[i - 2])
            throw std::invalid_argument("HessenbergFunction: must be non-decreasing");
    }
}

void SimpleGraph::validate() const {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& [a, bb] = edges[i];
        if (a < 0 || bb >= n || a >= bb)
            throw std::invalid_argument("SimpleGraph: edge out of range or loop");
        if (i > 0 && edges[i] == edges[i - 1])
            throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
}

SimpleGraph SimpleGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    SimpleGraph g{n, std::move(edges)};
    g.validate();
    return g;
}

namespace {

// f(t^r) for a univariate polynomial f.
UniPoly spread_powers(const UniPoly& f, int r) {
    if (f.is_zero()) return f;
    std::vector<Rat> c(static_cast<size_t>(f.degree() * r + 1), Rat(0));
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<size_t>(i * r)] = f.coeff(i);
    return UniPoly(std::move(c));
}

}  // namespace

BivarPoly nfold_char_poly(const BettiProfile& b, int n) {
    b.validate();
    if (n < 0) throw std::invalid_argument("nfold_char_poly: n must be >= 0");
    const UniPoly px = b.to_poly();
    BivarPoly out;
    for (const Partition& lam : partitions_of(n)) {
        UniPoly prod = UniPoly::constant(Rat(1));
        for (int part : lam) prod *= spread_powers(px, part);
        prod *= Rat(1) / Rat(z_of(lam));
        out += BivarPoly::from_t_poly(prod, static_cast<int>(lam.size()));
    }
    return out;
}

BivarPoly nfold_char_poly_coeff_form(const BettiProfile& b, int n) {
    b.validate();
    if (n < 0) throw std::invalid_argument("nfold_char_poly_coeff_form: n must be >= 0");
    const int d = static_cast<int>(b.b.size()) - 1;
    BivarPoly out;
    std::vector<int> parts(static_cast<size_t>(d) + 1, 0);
    // Walk all (n_0, ..., n_d) with sum n; accumulate the m-polynomial
    // product and the t-exponent sum as we go.
    auto rec = [&](auto&& self, int slot, int left, const UniPoly& mpoly, int texp) -> void {
        if (slot == d) {
            UniPoly f = mpoly * rising_multiset(UniPoly::monomial(1, Rat(b.b[static_cast<size_t>(d)])),
                                                static_cast<unsigned>(left));
            out += BivarPoly::from_m_poly(f, texp + d * left);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            UniPoly f = mpoly * rising_multiset(
                                    UniPoly::monomial(1, Rat(b.b[static_cast<size_t>(slot)])),
                                    static_cast<unsigned>(take));
            self(self, slot + 1, left - take, f, texp + slot * take);
        }
    };
    rec(rec, 0, n, UniPoly::constant(Rat(1)), 0);
    return out;
}

BivarPoly git_char_poly(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("git_char_poly: n must be odd and >= 3");
    const int r = (n - 1) / 2;
    BivarPoly out;
    for (int j = 0; j < r; ++j) {
        UniPoly mpoly = rising_multiset(UniPoly::variable(), static_cast<unsigned>(n - j)) *
                        rising_multiset(UniPoly::variable(), static_cast<unsigned>(j));
        for (int i = 0; i <= r - j - 1; ++i)
            out += BivarPoly::from_m_poly(mpoly, j + 2 * i);
    }
    return out;
}

UniPoly hessenberg_char_poly_t1(const HessenbergFunction& h) {
    h.validate();
    UniPoly f = UniPoly::constant(Rat(1));
    for (int i = 1; i <= h.n(); ++i)
        f *= UniPoly::variable() + UniPoly::constant(Rat(h.h[i - 1] - i));
    return f;
}

UniPoly hessenberg_chromatic(const HessenbergFunction& h) {
    h.validate();
    UniPoly f = UniPoly::constant(Rat(1));
    for (int i = 1; i <= h.n(); ++i)
        f *= UniPoly::variable() - UniPoly::constant(Rat(h.h[i - 1] - i));
    return f;
}

UniPoly hessenberg_invariant_poincare(const HessenbergFunction& h) {
    h.validate();
    UniPoly f = UniPoly::constant(Rat(1));
    for (int i = 1; i <= h.n(); ++i) f *= q_integer(h.h[i - 1] - i + 1);
    return f;
}

UniPoly hessenberg_linear_coeff(const HessenbergFunction& h) {
    h.validate();
    const int size = h.n();
    UniPoly f = q_integer(size) * (Rat(1) / Rat(size));
    for (int i = 1; i <= size - 1; ++i) f *= q_integer(h.h[i - 1] - i);
    return f;
}

SimpleGraph incomparability_graph(const HessenbergFunction& h) {
    h.validate();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= h.n(); ++i)
        for (int j = i + 1; j <= h.h[i - 1]; ++j) edges.emplace_back(i - 1, j - 1);
    return SimpleGraph::from_edges(h.n(), std::move(edges));
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
    std::vector<HessenbergFunction> out;
    std::vector<int> cur(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(HessenbergFunction{cur});
            return;
        }
        const int lo = std::max(i, i > 1 ? cur[static_cast<size_t>(i - 2)] : 1);
        for (int v = lo; v <= n; ++v) {
            cur[static_cast<size_t>(i - 1)] = v;
            self(self, i + 1);
        }
    };
    if (n >= 1) rec(rec, 1);
    return out;
}

namespace {

// ---- chromatic polynomial via deletion-contraction ----

struct EdgeGraph {
    int n = 0;                                // vertices 0..n-1, none isolated
    std::vector<std::pair<int, int>> edges;   // normalized

    std::string key() const {
        std::ostringstream os;
        os << n << ':';
        for (const auto& [a, b] : edges) os << a << '-' << b << ',';
        return os.str();
    }
};

UniPoly falling_factorial_poly(int k) {
    UniPoly f = UniPoly::constant(Rat(1));
    for (int i = 0; i < k; ++i) f *= UniPoly::variable() - UniPoly::constant(Rat(i));
    return f;
}

// Compacts a vertex-relabeled copy: vertices renumbered 0..v-1 preserving
// order of appearance in the sorted edge list.  The key is canonical for the
// labeled subgraph; isomorphic subgraphs with different labelings may hash
// apart, which affects only the memo hit rate, never correctness.
EdgeGraph compact(int n, std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<int> label(static_cast<size_t>(n), -1);
    int next = 0;
    for (auto& [a, b] : edges) {
        if (label[static_cast<size_t>(a)] < 0) label[static_cast<size_t>(a)] = next++;
        if (label[static_cast<size_t>(b)] < 0) label[static_cast<size_t>(b)] = next++;
        a = label[static_cast<size_t>(a)];
        b = label[static_cast<size_t>(b)];
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return EdgeGraph{next, std::move(edges)};
}

std::vector<std::vector<int>> components_of(int n,
                                            const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, verts;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int u : adj[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(u)] < 0) {
                    comp[static_cast<size_t>(u)] = comp[static_cast<size_t>(s)];
                    stack.push_back(u);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

UniPoly chrom_connected(const EdgeGraph& g);

// Chromatic polynomial of an arbitrary edge graph: product over connected
// components (isolated vertices contribute a factor of m each).
UniPoly chrom_any(int n, const std::vector<std::pair<int, int>>& edges) {
    UniPoly result = UniPoly::constant(Rat(1));
    int isolated = 0;
    for (const auto& comp : components_of(n, edges)) {
        if (comp.size() == 1) {
            ++isolated;
            continue;
        }
        std::vector<int> index(static_cast<size_t>(n), -1);
        for (size_t i = 0; i < comp.size(); ++i) index[static_cast<size_t>(comp[i])] = static_cast<int>(i);
        std::vector<std::pair<int, int>> sub;
        for (const auto& [a, b] : edges)
            if (index[static_cast<size_t>(a)] >= 0 && index[static_cast<size_t>(b)] >= 0)
                sub.emplace_back(index[static_cast<size_t>(a)], index[static_cast<size_t>(b)]);
        result *= chrom_connected(compact(static_cast<int>(comp.size()), std::move(sub)));
    }
    if (isolated > 0) result *= UniPoly::monomial(isolated);
    return result;
}

UniPoly chrom_connected(const EdgeGraph& g) {
    const int v = g.n;
    const int e = static_cast<int>(g.edges.size());
    if (e == v * (v - 1) / 2) return falling_factorial_poly(v);  // complete
    if (e == v - 1) {  // connected and acyclic
        UniPoly f = UniPoly::variable();
        for (int i = 0; i < e; ++i) f *= UniPoly::variable() - UniPoly::constant(Rat(1));
        return f;
    }
    if (e == v) {  // connected with exactly one cycle; a pure cycle if 2-regular
        std::vector<int> deg(static_cast<size_t>(v), 0);
        for (const auto& [a, b] : g.edges) {
            ++deg[static_cast<size_t>(a)];
            ++deg[static_cast<size_t>(b)];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) {
            // (m-1)^v + (-1)^v (m-1)
            UniPoly m1 = UniPoly::variable() - UniPoly::constant(Rat(1));
            UniPoly f = UniPoly::constant(Rat(1));
            for (int i = 0; i < v; ++i) f *= m1;
            return v % 2 == 0 ? f + m1 : f - m1;
        }
    }

    static std::map<std::string, UniPoly> memo;
    static std::mutex mtx;
    const std::string key = g.key();
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // Pick the edge with the largest endpoint-degree sum; removing it tends
    // to hit the complete/forest shortcuts sooner.
    std::vector<int> deg(static_cast<size_t>(v), 0);
    for (const auto& [a, b] : g.edges) {
        ++deg[static_cast<size_t>(a)];
        ++deg[static_cast<size_t>(b)];
    }
    size_t best = 0;
    int best_score = -1;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        int score = deg[static_cast<size_t>(g.edges[i].first)] +
                    deg[static_cast<size_t>(g.edges[i].second)];
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    const auto [ea, eb] = g.edges[best];

    std::vector<std::pair<int, int>> del = g.edges;
    del.erase(del.begin() + static_cast<long>(best));
    UniPoly deleted = chrom_any(v, del);

    std::vector<std::pair<int, int>> con;
    con.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        int x = a == eb ? ea : a;
        int y = b == eb ? ea : b;
        if (x != y) con.emplace_back(x, y);
    }
    UniPoly contracted = chrom_connected(compact(v, std::move(con)));

    UniPoly result = deleted - contracted;
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

UniPoly chromatic_polynomial(const SimpleGraph& g, int max_n) {
    g.validate();
    if (g.n > max_n) throw std::domain_error("chromatic_polynomial: size bound exceeded");
    if (g.n == 0) return UniPoly::constant(Rat(1));
    return chrom_any(g.n, g.edges);
}

UniPoly chromatic_count_oracle(const SimpleGraph& g, int max_n) {
    g.validate();
    if (g.n > max_n) throw std::domain_error("chromatic_count_oracle: size bound exceeded");
    if (g.n == 0) return UniPoly::constant(Rat(1));
    const int n = g.n;
    std::vector<unsigned> adj(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<size_t>(a)] |= 1u << b;
        adj[static_cast<size_t>(b)] |= 1u << a;
    }
    const unsigned full = (1u << n) - 1u;

    // A[S][k] = number of partitions of the vertex subset S into k nonempty
    // independent sets; peel the independent set containing the lowest vertex.
    std::vector<std::vector<Int>> A(full + 1,
                                    std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    A[0][0] = 1;
    for (unsigned S = 1; S <= full; ++S) {
        const unsigned low = S & (~S + 1u);
        const unsigned rest = S & ~low;
        // Independent subsets I of S containing `low`: I = {low} union J with
        // J a submask of rest avoiding neighbors; test independence directly.
        for (unsigned J = rest;; J = (J - 1) & rest) {
            const unsigned I = J | low;
            bool indep = true;
            for (unsigned probe = I; probe && indep;) {
                const unsigned vbit = probe & (~probe + 1u);
                const int v = std::countr_zero(vbit);
                if (adj[static_cast<size_t>(v)] & I) indep = false;
                probe &= ~vbit;
            }
            if (indep) {
                const unsigned S2 = S & ~I;
                for (int k = 1; k <= n; ++k)
                    if (A[S2][static_cast<size_t>(k - 1)] != 0)
                        A[S][static_cast<size_t>(k)] += A[S2][static_cast<size_t>(k - 1)];
            }
            if (J == 0) break;
        }
    }

    // Count proper colorings at m0 = 0..n, then interpolate.
    std::vector<Rat> xs, ys;
    for (int m0 = 0; m0 <= n; ++m0) {
        Int count = 0;
        for (int k = 0; k <= n; ++k) {
            if (A[full][static_cast<size_t>(k)] == 0) continue;
            Int ways = 1;
            for (int i = 0; i < k; ++i) ways *= Int(m0 - i);
            count += A[full][static_cast<size_t>(k)] * ways;
        }
        xs.emplace_back(m0);
        ys.emplace_back(count);
    }
    return interpolate(xs, ys);
}

SymFunc csf_p_expansion(const SimpleGraph& g, int max_edges) {
    g.validate();
    const int e = static_cast<int>(g.edges.size());
    if (e > max_edges) throw std::domain_error("csf_p_expansion: size bound exceeded");
    SymFunc out;
    std::vector<int> parent(static_cast<size_t>(g.n));
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (unsigned long mask = 0; mask < (1ul << e); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        int bits = 0;
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1ul) {
                ++bits;
                int ra = find(g.edges[static_cast<size_t>(i)].first);
                int rb = find(g.edges[static_cast<size_t>(i)].second);
                if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
            }
        std::map<int, int> size;
        for (int v = 0; v < g.n; ++v) ++size[find(v)];
        Partition lam;
        for (const auto& [root, s] : size) lam.push_back(s);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        out += SymFunc::p(lam) * Rat(bits % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace charpoly
