#include "lgh/permgroup.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>

namespace lgh {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int32_t)i) return false;
    return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
    return c;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int32_t)i;
    return q;
}

PermGroup::PermGroup(int n) : n_(n) {}

std::pair<Perm, size_t> PermGroup::sift(Perm g, size_t from) const {
    for (size_t i = from; i < levels_.size(); ++i) {
        int32_t x = g[levels_[i].base];
        auto it = levels_[i].tr.find(x);
        if (it == levels_[i].tr.end()) return {std::move(g), i};
        g = perm_compose(g, perm_inverse(it->second));
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::rebuild_transversal(size_t level) {
    Level& lv = levels_[level];
    lv.tr.clear();
    lv.tr.emplace(lv.base, perm_identity(n_));
    std::deque<int32_t> queue{lv.base};
    while (!queue.empty()) {
        int32_t x = queue.front();
        queue.pop_front();
        const Perm u = lv.tr.at(x);
        for (const Perm& s : lv.gens) {
            int32_t y = s[x];
            if (lv.tr.emplace(y, perm_compose(u, s)).second) queue.push_back(y);
        }
    }
}

void PermGroup::close(size_t level) {
    // Verify the chain condition from `level` back up to the top. A failure
    // inserts the offending residue deeper and restarts there.
    ptrdiff_t i = (ptrdiff_t)level;
    while (i >= 0) {
        rebuild_transversal(i);
        Level& lv = levels_[i];
        bool clean = true;
        // orbit points in deterministic discovery order
        std::vector<int32_t> orbit_pts;
        orbit_pts.push_back(lv.base);
        for (size_t k = 0; k < orbit_pts.size() && clean; ++k) {
            const Perm& u = lv.tr.at(orbit_pts[k]);
            for (const Perm& s : lv.gens) {
                int32_t y = s[orbit_pts[k]];
                if (std::none_of(orbit_pts.begin(), orbit_pts.end(),
                                 [&](int32_t z) { return z == y; }))
                    orbit_pts.push_back(y);
                Perm w = perm_compose(u, s);
                Perm h = perm_compose(w, perm_inverse(lv.tr.at(w[lv.base])));
                auto [res, lvl] = sift(std::move(h), i + 1);
                if (perm_is_identity(res)) continue;
                if (lvl == levels_.size()) {
                    int32_t b = 0;
                    while (res[b] == b) ++b;
                    levels_.push_back(Level{b, {}, {}});
                    lvl = levels_.size() - 1;
                }
                for (size_t j = (size_t)i + 1; j <= lvl; ++j)
                    levels_[j].gens.push_back(res);
                i = (ptrdiff_t)lvl + 1; // re-enter at the level that grew
                clean = false;
                break;
            }
        }
        --i;
    }
}

bool PermGroup::add(const Perm& g) {
    if ((int)g.size() != n_)
        throw std::invalid_argument("PermGroup::add: wrong degree");
    auto [res, lvl] = sift(g, 0);
    if (perm_is_identity(res)) return false;
    if (lvl == levels_.size()) {
        int32_t b = 0;
        while (res[b] == b) ++b;
        levels_.push_back(Level{b, {}, {}});
        lvl = levels_.size() - 1;
    }
    for (size_t j = 0; j <= lvl; ++j) levels_[j].gens.push_back(res);
    gens_.push_back(g);
    close(lvl);
    return true;
}

bool PermGroup::contains(const Perm& g) const {
    if ((int)g.size() != n_)
        throw std::invalid_argument("PermGroup::contains: wrong degree");
    auto [res, lvl] = sift(g, 0);
    (void)lvl;
    return perm_is_identity(res);
}

unsigned long long PermGroup::order() const {
    unsigned long long o = 1;
    for (const Level& lv : levels_) o *= (unsigned long long)lv.tr.size();
    return o;
}

std::vector<int32_t> PermGroup::orbit(int32_t p) const {
    std::vector<bool> seen(n_, false);
    seen[p] = true;
    std::deque<int32_t> queue{p};
    std::vector<int32_t> out{p};
    const std::vector<Perm>* gens = levels_.empty() ? nullptr : &levels_[0].gens;
    while (gens && !queue.empty()) {
        int32_t x = queue.front();
        queue.pop_front();
        for (const Perm& s : *gens) {
            int32_t y = s[x];
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lgh
