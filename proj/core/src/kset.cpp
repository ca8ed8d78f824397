#include "ramseyforge/kset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramseyforge {

KSet::KSet(std::vector<int> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) {
        throw std::invalid_argument("KSet: empty element list");
    }
    if (elems_.front() < 1) {
        throw std::invalid_argument("KSet: elements must be >= 1");
    }
    for (std::size_t i = 1; i < elems_.size(); ++i) {
        if (elems_[i] <= elems_[i - 1]) {
            throw std::invalid_argument("KSet: elements must be strictly increasing");
        }
    }
}

bool KSet::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

KSet KSet::without_position(int i) const {
    if (i < 1 || i > arity()) {
        throw std::invalid_argument("KSet::without_position: position out of range");
    }
    std::vector<int> rest;
    rest.reserve(elems_.size() - 1);
    for (int j = 0; j < arity(); ++j) {
        if (j != i - 1) rest.push_back(elems_[static_cast<std::size_t>(j)]);
    }
    return KSet(std::move(rest));
}

std::string KSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(elems_[i]);
    }
    out += '}';
    return out;
}

std::uint64_t n_choose_k(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        // exact: before dividing, result holds C(n-k+i-1, i-1) * (n-k+i)
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<KSet> ksubsets(int N, int k) {
    if (k < 1 || k > N) {
        throw std::invalid_argument("ksubsets: need 1 <= k <= N");
    }
    std::vector<KSet> out;
    out.reserve(n_choose_k(N, k));
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(KSet(cur));
        // advance to the lexicographic successor
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == N - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

bool is_shift(const KSet& x, const KSet& y) {
    if (x.arity() != y.arity()) {
        throw std::invalid_argument("is_shift: arity mismatch");
    }
    const int k = x.arity();
    for (int i = 1; i <= k - 1; ++i) {
        if (x.element(i + 1) != y.element(i)) return false;
    }
    return true;
}

std::vector<KSet> windows(const KSet& s, int w) {
    if (w < 1 || w > s.arity()) {
        throw std::invalid_argument("windows: width out of range");
    }
    const int count = s.arity() - w + 1;
    std::vector<KSet> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int start = 1; start <= count; ++start) {
        std::vector<int> win(static_cast<std::size_t>(w));
        for (int j = 0; j < w; ++j) win[static_cast<std::size_t>(j)] = s.element(start + j);
        out.push_back(KSet(std::move(win)));
    }
    return out;
}

std::vector<KSet> segments(const KSet& x, int parts) {
    if (parts < 1 || x.arity() % parts != 0) {
        throw std::invalid_argument("segments: parts must divide the arity");
    }
    const int size = x.arity() / parts;
    std::vector<KSet> out;
    out.reserve(static_cast<std::size_t>(parts));
    for (int p = 0; p < parts; ++p) {
        std::vector<int> seg(static_cast<std::size_t>(size));
        for (int j = 0; j < size; ++j) {
            seg[static_cast<std::size_t>(j)] = x.element(p * size + j + 1);
        }
        out.push_back(KSet(std::move(seg)));
    }
    return out;
}

OrderedPath path_from_superset(const KSet& s, int k) {
    if (k < 1 || s.arity() < k) {
        throw std::invalid_argument("path_from_superset: need |S| >= k >= 1");
    }
    return OrderedPath{windows(s, k)};
}

std::uint64_t rank(const KSet& x, int N) {
    const int k = x.arity();
    if (N < x.max()) {
        throw std::invalid_argument("rank: element exceeds N");
    }
    // count subsets that precede x in lexicographic order
    std::uint64_t r = 0;
    int prev = 0;
    for (int i = 1; i <= k; ++i) {
        for (int v = prev + 1; v < x.element(i); ++v) {
            r += n_choose_k(N - v, k - i);
        }
        prev = x.element(i);
    }
    return r;
}

KSet unrank(std::uint64_t r, int N, int k) {
    if (k < 1 || k > N || r >= n_choose_k(N, k)) {
        throw std::invalid_argument("unrank: rank out of range");
    }
    std::vector<int> elems;
    elems.reserve(static_cast<std::size_t>(k));
    int v = 1;
    for (int i = 1; i <= k; ++i) {
        while (true) {
            const std::uint64_t block = n_choose_k(N - v, k - i);
            if (r < block) break;
            r -= block;
            ++v;
        }
        elems.push_back(v);
        ++v;
    }
    return KSet(std::move(elems));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> shift_edges(int N, int k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    if (k + 1 > N) return edges;  // no supersets, no edges
    edges.reserve(n_choose_k(N, k + 1));
    for (const KSet& s : ksubsets(N, k + 1)) {
        const KSet from = s.without_position(k + 1);
        const KSet to = s.without_position(1);
        edges.emplace_back(rank(from, N), rank(to, N));
    }
    return edges;
}

}  // namespace ramseyforge
