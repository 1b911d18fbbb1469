#pragma once

// Permutations of {1..n}, stored as 1-based image arrays.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kneser_dist {

struct Permutation {
    std::vector<int> images;  // images[i] is the image of i+1

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int x) const { return images[x - 1]; }

    static Permutation identity(int n) {
        Permutation p;
        p.images.resize(n);
        std::iota(p.images.begin(), p.images.end(), 1);
        return p;
    }

    static Permutation from_images(std::vector<int> imgs) {
        const int n = static_cast<int>(imgs.size());
        std::vector<char> seen(n + 1, 0);
        for (int v : imgs) {
            if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection on {1..n}");
            seen[v] = 1;
        }
        Permutation p;
        p.images = std::move(imgs);
        return p;
    }

    // e.g. from_cycles(5, {{1,2},{3,4,5}}) is (1 2)(3 4 5); omitted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        Permutation p = identity(n);
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                const int from = c[i], to = c[(i + 1) % c.size()];
                if (from < 1 || from > n) throw std::invalid_argument("from_cycles: point out of range");
                p.images[from - 1] = to;
            }
        }
        return from_images(std::move(p.images));  // re-validate
    }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (images[i] != i + 1) return false;
        return true;
    }

    // (this âˆ˜ o)(x) = this(o(x))
    Permutation compose(const Permutation& o) const {
        if (o.n() != n()) throw std::invalid_argument("compose: size mismatch");
        Permutation r;
        r.images.resize(images.size());
        for (int i = 0; i < n(); ++i) r.images[i] = images[o.images[i] - 1];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (int i = 0; i < n(); ++i) r.images[images[i] - 1] = i + 1;
        return r;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
};

// Visits all n! image arrays in lexicographic order, identity first.
// The callback receives the raw image vector to keep hot loops allocation-free.
template <class F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        f(const_cast<const std::vector<int>&>(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

// First permutation (lex order) satisfying pred, or nullopt.
template <class P>
std::optional<Permutation> find_permutation(int n, P&& pred) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        if (pred(const_cast<const std::vector<int>&>(img)))
            return Permutation::from_images(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
}

// Lexicographic unranking via the factorial number system; used to split
// S_n scans across workers.
inline std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> fact(n, 1);
    for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    std::vector<int> img;
    img.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = fact[i];
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        if (idx >= pool.size()) throw std::invalid_argument("unrank_permutation: rank out of range");
        img.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return img;
}

}  // namespace kneser_dist
