#include "charpoly/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace charpoly {

int tree_compare(const WTree& a, const WTree& b) {
    if (a.weight != b.weight) return a.weight < b.weight ? -1 : 1;
    if (a.inputs != b.inputs) return a.inputs < b.inputs ? -1 : 1;
    const size_t na = a.children.size(), nb = b.children.size();
    for (size_t i = 0; i < na && i < nb; ++i) {
        int c = tree_compare(a.children[i], b.children[i]);
        if (c != 0) return c;
    }
    if (na != nb) return na < nb ? -1 : 1;
    return 0;
}

int tree_inputs_total(const WTree& t) {
    int n = t.inputs;
    for (const WTree& c : t.children) n += tree_inputs_total(c);
    return n;
}

int tree_weight_total(const WTree& t) {
    int w = t.weight;
    for (const WTree& c : t.children) w += tree_weight_total(c);
    return w;
}

int tree_vertex_count(const WTree& t) {
    int v = 1;
    for (const WTree& c : t.children) v += tree_vertex_count(c);
    return v;
}

std::string tree_to_string(const WTree& t) {
    std::ostringstream os;
    os << "(w=" << t.weight << ", in=" << t.inputs << ", [";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) os << ", ";
        os << tree_to_string(t.children[i]);
    }
    os << "])";
    return os.str();
}

namespace {

// Runs of equal children (children are canonically sorted, so isomorphic
// siblings are adjacent).  Each run is (first index, multiplicity).
std::vector<std::pair<size_t, int>> child_runs(const WTree& t) {
    std::vector<std::pair<size_t, int>> runs;
    size_t i = 0;
    while (i < t.children.size()) {
        size_t j = i + 1;
        while (j < t.children.size() && t.children[j] == t.children[i]) ++j;
        runs.emplace_back(i, static_cast<int>(j - i));
        i = j;
    }
    return runs;
}

const WTree& leaf_tree() {
    static const WTree leaf{0, 1, {}};
    return leaf;
}

const std::vector<WTree>& trees_positive(int n, int k);

// All trees with n >= 2 inputs, total weight k, and root weight >= min_root_w.
// A tree is a root vertex carrying n0 direct inputs and weight w0, with a
// multiset of positive-root-weight subtrees as children; the valency bound
// at the root is w0 <= n0 + #children - 2.
std::vector<WTree> build_trees(int n, int k, int min_root_w) {
    struct Cand {
        const WTree* t;
        int n_inputs;
        int weight;
    };
    std::vector<Cand> cands;
    // Children must themselves satisfy the valency conditions with root
    // weight >= 1, which forces at least 3 inputs and weight >= 1.
    const int child_w_max = k - min_root_w;
    for (int a = 3; a <= n; ++a)
        for (int w = 1; w <= child_w_max; ++w)
            for (const WTree& t : trees_positive(a, w))
                cands.push_back(Cand{&t, a, w});

    std::vector<WTree> out;
    std::vector<const WTree*> forest;

    // Multiset choice over the candidate list: indices non-decreasing.
    auto rec = [&](auto&& self, size_t from, int inputs_left, int weight_left) -> void {
        // Close the forest here: the root absorbs the remaining budget.
        const int n0 = inputs_left;
        const int c = static_cast<int>(forest.size());
        const int w0 = weight_left;
        if (w0 >= min_root_w && w0 <= n0 + c - 2) {
            WTree t;
            t.weight = w0;
            t.inputs = n0;
            t.children.reserve(forest.size());
            for (const WTree* f : forest) t.children.push_back(*f);
            std::sort(t.children.begin(), t.children.end());
            out.push_back(std::move(t));
        }
        for (size_t i = from; i < cands.size(); ++i) {
            if (cands[i].n_inputs > inputs_left) continue;
            if (cands[i].weight > weight_left - min_root_w) continue;
            forest.push_back(cands[i].t);
            self(self, i, inputs_left - cands[i].n_inputs, weight_left - cands[i].weight);
            forest.pop_back();
        }
    };
    rec(rec, 0, n, k);

    std::sort(out.begin(), out.end(), [](const WTree& a, const WTree& b) {
        int va = tree_vertex_count(a), vb = tree_vertex_count(b);
        if (va != vb) return va < vb;
        return tree_compare(a, b) < 0;
    });
    return out;
}

// Memoized family of trees with positive root weight (used as children).
const std::vector<WTree>& trees_positive(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<WTree>> memo;
    static std::mutex mtx;
    const std::pair<int, int> key{n, k};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::vector<WTree> result =
        (n < 2 || k < 1) ? std::vector<WTree>{} : build_trees(n, k, 1);
    std::lock_guard<std::mutex> lock(mtx);
    // Map insertion never invalidates references to existing values, so the
    // candidate pointers handed out earlier stay valid.
    return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<WTree> enumerate_trees(int n, int k, bool positive_root_weight) {
    if (n < 0 || k < 0) throw std::invalid_argument("enumerate_trees: n, k must be >= 0");
    if (n <= 1) {
        // The bare leg is the unique (formal) tree with one input; it belongs
        // to both families.  There are no trees without inputs.
        if (n == 1 && k == 0) return {leaf_tree()};
        return {};
    }
    if (positive_root_weight) return trees_positive(n, k);
    return build_trees(n, k, 0);
}

Int stab_order(const WTree& t) {
    Int s = factorial(static_cast<unsigned>(t.inputs));
    for (const auto& [first, r] : child_runs(t)) {
        Int cs = stab_order(t.children[first]);
        for (int i = 0; i < r; ++i) s *= cs;
        s *= factorial(static_cast<unsigned>(r));
    }
    return s;
}

SymFunc ch_UT(const WTree& t) {
    SymFunc f = SymFunc::h(t.inputs);
    for (const auto& [first, r] : child_runs(t))
        f = f * plethysm(SymFunc::h(r), ch_UT(t.children[first]));
    return f;
}

UniPoly char_poly_UT(const WTree& t) {
    UniPoly f = rising_multiset(UniPoly::variable(), static_cast<unsigned>(t.inputs));
    for (const auto& [first, r] : child_runs(t))
        f *= rising_multiset(char_poly_UT(t.children[first]), static_cast<unsigned>(r));
    return f;
}

UniPoly omega_char_poly_UT(const WTree& t) {
    UniPoly f = falling_binomial(UniPoly::variable(), static_cast<unsigned>(t.inputs));
    for (const auto& [first, r] : child_runs(t)) {
        const WTree& child = t.children[first];
        UniPoly s = omega_char_poly_UT(child);
        // Applying omega to h_r composed with a degree-d function turns the
        // outer h_r into e_r exactly when d is odd; under the principal
        // specialization this exchanges the multiset count for the binomial.
        if (tree_inputs_total(child) % 2 != 0)
            f *= falling_binomial(s, static_cast<unsigned>(r));
        else
            f *= rising_multiset(s, static_cast<unsigned>(r));
    }
    return f;
}

namespace {

// Depth-first labeling: each vertex's legs get consecutive indices, then its
// children are visited in canonical order.  Collects stabilizer generators:
// adjacent transpositions within a vertex's legs, and block swaps of
// adjacent isomorphic sibling subtrees.
void collect_generators(const WTree& t, int& next, int n, std::vector<Perm>& gens,
                        int& subtree_start) {
    subtree_start = next;
    for (int i = 0; i + 1 < t.inputs; ++i) {
        Perm p = perm_identity(n);
        std::swap(p[next + i], p[next + i + 1]);
        gens.push_back(std::move(p));
    }
    next += t.inputs;

    std::vector<int> child_starts(t.children.size());
    for (size_t c = 0; c < t.children.size(); ++c)
        collect_generators(t.children[c], next, n, gens, child_starts[c]);

    for (const auto& [first, r] : child_runs(t)) {
        const int sz = tree_inputs_total(t.children[first]);
        for (int j = 0; j + 1 < r; ++j) {
            const int a = child_starts[first + j];
            const int b = child_starts[first + j + 1];
            Perm p = perm_identity(n);
            for (int i = 0; i < sz; ++i) {
                p[a + i] = b + i;
                p[b + i] = a + i;
            }
            gens.push_back(std::move(p));
        }
    }
}

// Canonical form of a colored tree: colors sorted within each vertex,
// colored child keys sorted.  Two colorings of the same tree are related by
// a stabilizer element exactly when their keys agree.  `pos` walks the flat
// color tuple in depth-first vertex order.  When `proper` is set, returns
// the empty string for colorings violating properness: repeated colors at a
// vertex, or isomorphic sibling subtrees with an odd number of inputs
// receiving isomorphic colorings.
std::string colored_key(const WTree& t, const std::vector<int>& colors, size_t& pos,
                        bool proper) {
    std::vector<int> own(colors.begin() + static_cast<long>(pos),
                         colors.begin() + static_cast<long>(pos) + t.inputs);
    pos += static_cast<size_t>(t.inputs);
    std::sort(own.begin(), own.end());
    if (proper)
        for (size_t i = 0; i + 1 < own.size(); ++i)
            if (own[i] == own[i + 1]) return {};

    std::vector<std::string> child_keys(t.children.size());
    for (size_t c = 0; c < t.children.size(); ++c) {
        child_keys[c] = colored_key(t.children[c], colors, pos, proper);
        if (proper && child_keys[c].empty()) return {};
    }
    if (proper) {
        for (const auto& [first, r] : child_runs(t)) {
            if (r < 2 || tree_inputs_total(t.children[first]) % 2 == 0) continue;
            std::set<std::string> distinct;
            for (int j = 0; j < r; ++j)
                if (!distinct.insert(child_keys[first + j]).second) return {};
        }
    }
    std::sort(child_keys.begin(), child_keys.end());

    std::ostringstream os;
    os << '(' << t.weight << ';' << t.inputs << ';';
    for (int c : own) os << c << ',';
    os << ';';
    for (const std::string& k : child_keys) os << k;
    os << ')';
    return os.str();
}

Int count_colorings(const WTree& t, int m0, bool proper) {
    if (m0 < 1) throw std::invalid_argument("coloring oracle: m0 must be >= 1");
    const int n = tree_inputs_total(t);
    if (n > 8 || m0 > 4) throw std::domain_error("coloring oracle: size bound exceeded");

    std::set<std::string> forms;
    std::vector<int> colors(static_cast<size_t>(n), 0);
    while (true) {
        size_t pos = 0;
        std::string key = colored_key(t, colors, pos, proper);
        if (!key.empty()) forms.insert(std::move(key));
        // Next tuple in [0, m0)^n.
        size_t i = 0;
        for (; i < colors.size(); ++i) {
            if (++colors[i] < m0) break;
            colors[i] = 0;
        }
        if (i == colors.size()) break;
    }
    return Int(forms.size());
}

}  // namespace

std::vector<Perm> stabilizer_generators(const WTree& t) {
    const int n = tree_inputs_total(t);
    std::vector<Perm> gens;
    int next = 0, start = 0;
    collect_generators(t, next, n, gens, start);
    return gens;
}

Int coloring_count_oracle(const WTree& t, int m0) { return count_colorings(t, m0, false); }

Int proper_coloring_count_oracle(const WTree& t, int m0) {
    return count_colorings(t, m0, true);
}

namespace {

UniPoly oracle_sum(int n, int k, bool positive_root_weight, int max_n_bound) {
    if (n > max_n_bound) throw std::domain_error("tree oracle: size bound exceeded");
    UniPoly sum;
    for (const WTree& t : enumerate_trees(n, k, positive_root_weight))
        sum += char_poly_UT(t);
    return sum;
}

}  // namespace

UniPoly oracle_Q(int n, int k, int max_n_bound) { return oracle_sum(n, k, false, max_n_bound); }

UniPoly oracle_Qplus(int n, int k, int max_n_bound) {
    return oracle_sum(n, k, true, max_n_bound);
}

}  // namespace charpoly
