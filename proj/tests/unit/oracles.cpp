#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

std::size_t rank_mod_p(const IntRows& a, long p) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<long> x(cols, 0);
    std::size_t kernel = 0;
    while (true) {
        bool zero = true;
        for (std::size_t r = 0; r < rows && zero; ++r) {
            long s = 0;
            for (std::size_t c = 0; c < cols; ++c) s = (s + a[r][c] * x[c]) % p;
            zero = ((s % p) + p) % p == 0;
        }
        if (zero) ++kernel;
        std::size_t k = 0;
        while (k < cols && ++x[k] == p) x[k++] = 0;
        if (k == cols) break;
    }
    std::size_t nullity = 0;
    for (std::size_t v = 1; v < kernel; v *= static_cast<std::size_t>(p)) ++nullity;
    return cols - nullity;
}

long long det(const IntRows& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long sum = 0;
    do {
        long long term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        sum += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

}  // namespace

std::pair<std::size_t, std::vector<long long>> cokernel(const IntRows& a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<long long> divisors{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        long long g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                IntRows minor(k, std::vector<long>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
                g = std::gcd(g, det(minor));
            }
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<long long> torsion;
    for (std::size_t k = 1; k < divisors.size(); ++k) {
        const long long f = divisors[k] / divisors[k - 1];
        if (f > 1) torsion.push_back(f);
    }
    return {rows - (divisors.size() - 1), torsion};
}

std::vector<Interval> intervals(int n) {
    std::vector<Interval> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) out.push_back({a, b});
    return out;
}

// submodules of [a, b] are [a, k], quotients are [k, b]
long hom(const Interval& x, const Interval& y) { return (x.a <= y.a && y.a <= x.b && x.b <= y.b) ? 1 : 0; }

long euler(int n, const Interval& x, const Interval& y) {
    auto in = [](const Interval& i, int v) { return (i.a <= v && v <= i.b) ? 1L : 0L; };
    long s = 0;
    for (int v = 1; v <= n; ++v) s += in(x, v) * in(y, v);
    for (int v = 2; v <= n; ++v) s -= in(x, v) * in(y, v - 1);  // arrow v -> v-1
    return s;
}

long ext(int n, const Interval& x, const Interval& y) { return hom(x, y) - euler(n, x, y); }

long paths(int n, int from, int to) { return (1 <= to && to <= from && from <= n) ? 1 : 0; }

std::vector<StalkSet> orthogonal_sets(int n, int m) {
    if (m < 2) throw std::invalid_argument("m >= 2");
    const auto iv = intervals(n);
    std::vector<std::pair<int, int>> obj;
    for (int i = 0; i < static_cast<int>(iv.size()); ++i)
        for (int k = 0; k < m; ++k) obj.emplace_back(i, k);
    const std::size_t count = obj.size();
    if (count > 24) throw std::invalid_argument("too many objects");

    auto wrap = [m](int x) { return ((x % m) + m) % m; };
    // dim Hom(X in degree k, Y in degree l) = Hom(X, Y[k - l])
    auto hom_at = [&](std::size_t x, std::size_t y, int shift) {
        const int i = wrap(obj[x].second - obj[y].second + shift);
        const Interval &a = iv[obj[x].first], &b = iv[obj[y].first];
        return i == 0 ? hom(a, b) : (i == 1 ? ext(n, a, b) : 0);
    };
    auto compatible = [&](std::size_t x, std::size_t y) {
        for (int j = 1; j < m; ++j)
            if (hom_at(x, y, j) != 0 || hom_at(y, x, j) != 0) return false;
        return true;
    };
    std::vector<std::uint32_t> adj(count, 0);
    for (std::size_t x = 0; x < count; ++x)
        for (std::size_t y = 0; y < count; ++y)
            if (compatible(x, y)) adj[x] |= 1u << y;

    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<StalkSet> out;
    for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
        bool clique = true;
        for (std::size_t x = 0; x < count && clique; ++x)
            if ((mask >> x & 1) && (mask & ~adj[x]) != 0) clique = false;
        if (!clique) continue;
        bool maximal = true;
        for (std::size_t y = 0; y < count && maximal; ++y)
            if (!(mask >> y & 1) && (mask & ~adj[y]) == 0 && (adj[y] >> y & 1)) maximal = false;
        if (!maximal) continue;

        std::vector<std::pair<int, int>> best;
        for (int s = 0; s < m; ++s) {
            std::vector<std::pair<int, int>> shifted;
            for (std::size_t x = 0; x < count; ++x)
                if (mask >> x & 1) shifted.emplace_back(obj[x].first, wrap(obj[x].second + s));
            std::sort(shifted.begin(), shifted.end());
            if (best.empty() || shifted < best) best = shifted;
        }
        if (!seen.insert(best).second) continue;
        StalkSet set{best, 0};
        for (std::size_t x = 0; x < count; ++x)
            for (std::size_t y = 0; y < count; ++y)
                if ((mask >> x & 1) && (mask >> y & 1)) set.end_dim += hom_at(x, y, 0);
        out.push_back(std::move(set));
    }
    std::sort(out.begin(), out.end(), [](const StalkSet& a, const StalkSet& b) { return a.members < b.members; });
    return out;
}

}  // namespace oracle
