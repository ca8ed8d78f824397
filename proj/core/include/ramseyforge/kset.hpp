#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramseyforge {

// A k-element subset of [N] = {1, 2, ..., N}, stored as a strictly
// increasing sequence. This is the vertex type of shift graphs and the
// domain of every coloring in the library. Elements are 1-based everywhere,
// including in file formats.
class KSet {
public:
    KSet() = default;
    // Throws std::invalid_argument unless elements is nonempty, strictly
    // increasing and all entries are >= 1.
    explicit KSet(std::vector<int> elements);

    int arity() const { return static_cast<int>(elems_.size()); }
    // 1-based access: element(1) is the smallest member.
    int element(int i) const { return elems_[static_cast<std::size_t>(i - 1)]; }
    int min() const { return elems_.front(); }
    int max() const { return elems_.back(); }
    const std::vector<int>& elements() const { return elems_; }

    bool contains(int x) const;
    // Copy with the i-th smallest element removed (1-based position).
    KSet without_position(int i) const;

    std::string str() const;  // "{1,2,3}"

    friend bool operator==(const KSet& a, const KSet& b) { return a.elems_ == b.elems_; }
    friend bool operator<(const KSet& a, const KSet& b) { return a.elems_ < b.elems_; }

private:
    std::vector<int> elems_;
};

// A directed path in the shift graph: consecutive vertices are in shift
// position. Equivalently, the consecutive k-windows of the union of its
// vertices.
struct OrderedPath {
    std::vector<KSet> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

std::uint64_t n_choose_k(int n, int k);

// All C(N,k) k-subsets of [N] in lexicographic order.
std::vector<KSet> ksubsets(int N, int k);

// Oriented shift adjacency: x_{i+1} = y_i for i = 1..k-1, X before Y.
// Vacuously true for arity 1 (and only there can X == Y hold).
bool is_shift(const KSet& x, const KSet& y);

// The |S|-w+1 consecutive w-element windows of S, in order.
std::vector<KSet> windows(const KSet& s, int w);

// Split X into `parts` consecutive blocks of equal size.
std::vector<KSet> segments(const KSet& x, int parts);

// The path of all |S|-k+1 consecutive k-windows of S.
OrderedPath path_from_superset(const KSet& s, int k);

// Lexicographic rank of a k-subset of [N] (0-based), and its inverse.
std::uint64_t rank(const KSet& x, int N);
KSet unrank(std::uint64_t r, int N, int k);

// Directed edges of the shift graph Sh(N,k) as 0-based rank pairs,
// ordered by the (k+1)-superset that induces each edge. For every
// (k+1)-subset S, the unique edge is (S minus its last element,
// S minus its first element). Self-pairs never occur.
std::vector<std::pair<std::uint64_t, std::uint64_t>> shift_edges(int N, int k);

}  // namespace ramseyforge
