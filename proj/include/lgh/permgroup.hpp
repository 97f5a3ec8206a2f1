// Permutation groups on {0..n-1} with a deterministic Schreier-Sims
// stabilizer chain: exact order, membership, and point orbits.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgh {

using Perm = std::vector<int32_t>; // image by position: p[i] is where i goes

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
// Apply a, then b.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);

class PermGroup {
public:
    explicit PermGroup(int n);

    // Adds a group element; returns false when it was already contained.
    bool add(const Perm& g);
    bool contains(const Perm& g) const;
    // Product of the transversal sizes along the stabilizer chain.
    unsigned long long order() const;
    int degree() const { return n_; }
    // Orbit of a point under the whole group, sorted.
    std::vector<int32_t> orbit(int32_t p) const;
    const std::vector<Perm>& generators() const { return gens_; }

private:
    struct Level {
        int32_t base;
        std::vector<Perm> gens;                  // fix all earlier base points
        std::unordered_map<int32_t, Perm> tr;    // orbit point -> coset rep
    };

    // Sifts g through levels starting at `from`; returns the residue and the
    // level where sifting stopped (levels_.size() when g ran the whole chain).
    std::pair<Perm, size_t> sift(Perm g, size_t from) const;
    void rebuild_transversal(size_t level);
    void close(size_t level); // restore the chain condition from `level` down

    int n_;
    std::vector<Perm> gens_; // user-supplied generators that extended the group
    std::vector<Level> levels_;
};

} // namespace lgh
