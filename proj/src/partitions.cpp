#include "charpoly/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace charpoly {

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of_max_part(n, n); }

std::vector<Partition> partitions_of_max_part(int n, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, max_part, cur, out);
    return out;
}

bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

Int z_of(const Partition& p) {
    Int z = 1;
    for (auto [part, mult] : part_multiplicities(p)) {
        z *= int_pow(Int(part), static_cast<unsigned>(mult));
        z *= factorial(static_cast<unsigned>(mult));
    }
    return z;
}

std::vector<std::pair<int, int>> part_multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int x : p) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(static_cast<size_t>(p[0]), 0);
    for (int x : p)
        for (int i = 0; i < x; ++i) ++out[static_cast<size_t>(i)];
    return out;
}

Partition cycle_type(const Perm& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    Partition type;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = sigma[static_cast<size_t>(j)];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

Perm perm_identity(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm inv(a.size());
    for (size_t i = 0; i < a.size(); ++i) inv[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return inv;
}

}  // namespace charpoly
