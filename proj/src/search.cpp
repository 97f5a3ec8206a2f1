#include "lgh/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lgh/graph.hpp"
#include "lgh/quadric.hpp"
#include "lgh/spread.hpp"

namespace lgh {

namespace {

// Depth-first enumeration over line ids in increasing order. Each count-1
// pencil keeps a watch on one line that could still complete it; buckets map
// a line to the pencils watching it, so support loss (by exclusion or by the
// frontier moving past the watch) is detected without rescanning all 1785
// pencils at every node. Watches never need undoing: backtracking only
// relaxes exclusions and lowers the frontier, which keeps old watches valid,
// and the trail restores exclusions in reverse order of their creation.
class Searcher {
public:
    Searcher(const GeometryTables& t, const SearchConfig& cfg)
        : t_(t), cfg_(cfg), n_(t.n_lines()),
          cnt_(t.pencils.size(), 0), in_set_(n_, 0), excl_(n_, 0),
          dead_lines_(n_), watch_(t.pencils.size(), -1), bucket_(n_) {}

    SearchReport run() {
        bool viable = seed();
        if (viable) dfs(frontier0_);
        std::sort(rep_.found.begin(), rep_.found.end(),
                  [](const LineSet& a, const LineSet& b) { return a.lines < b.lines; });
        rep_.nodes = nodes_;
        rep_.exhausted = exhausted_;
        return std::move(rep_);
    }

private:
    bool seed() {
        std::vector<int32_t> lines;
        if (cfg_.seed == SeedMode::fix_first_line) {
            std::vector<int32_t> ext = external_lines(t_, standard_hyperbolic());
            lines.push_back(*std::min_element(ext.begin(), ext.end()));
        } else if (cfg_.seed == SeedMode::fix_first_pencil_pair) {
            SpreadModel sp = build_spread(t_);
            std::vector<int32_t> set = build_96(t_, sp, 1);
            std::sort(set.begin(), set.end());
            for (size_t a = 0; a < set.size() && lines.empty(); ++a)
                for (size_t b = a + 1; b < set.size(); ++b)
                    if (meet_id(t_, set[a], set[b])) {
                        lines = {set[a], set[b]};
                        break;
                    }
        }
        if (lines.empty()) {
            frontier0_ = 0;
            return true;
        }
        frontier0_ = lines.front() + 1;
        for (int32_t l : lines)
            if (excl_[l] || !add_line(l, frontier0_)) return false;
        return true;
    }

    // Registers a fresh watch for a count-1 pencil; false when no line at or
    // past the frontier can still complete it.
    bool rewatch(int32_t pc, int frontier) {
        for (int32_t m : t_.pencil_lines_tab[pc])
            if (m >= frontier && !in_set_[m] && !excl_[m]) {
                watch_[pc] = m;
                bucket_[m].push_back(pc);
                return true;
            }
        watch_[pc] = -1;
        return false;
    }

    // Rehomes the count-1 pencils watching line m (just excluded, or about to
    // fall behind the frontier). Entries whose watch moved on are dropped;
    // count-0 and count-2 entries are kept for when undo revives them.
    bool sweep_bucket(int32_t m, int frontier) {
        std::vector<int32_t>& b = bucket_[m];
        bool ok = true;
        size_t keep = 0;
        for (size_t k = 0; k < b.size(); ++k) {
            int32_t pc = b[k];
            if (watch_[pc] != m) continue; // moved to another bucket
            if (cnt_[pc] != 1) {
                b[keep++] = pc;
                continue;
            }
            if (!rewatch(pc, frontier)) ok = false;
        }
        b.resize(keep);
        return ok;
    }

    // Adds line l with child frontier `frontier`; false when propagation hits
    // a pencil that can no longer be completed. Caller must undo either way.
    bool add_line(int32_t l, int frontier) {
        in_set_[l] = 1;
        dead_lines_.set(l);
        chosen_.push_back(l);
        trail_.push_back(kMark);
        bool ok = true;
        size_t first_excluded = trail_.size();
        for (int32_t pc : t_.line_pencils[l]) {
            uint8_t c = ++cnt_[pc];
            if (c == 1) {
                ++ones_;
                ok = rewatch(pc, frontier) && ok;
            } else if (c == 2) {
                --ones_;
                for (int32_t m : t_.pencil_lines_tab[pc])
                    if (!in_set_[m] && !excl_[m]) {
                        excl_[m] = 1;
                        dead_lines_.set(m);
                        trail_.push_back(m);
                    }
            } else {
                ok = false; // count 3: l met two chosen lines in one pencil
            }
        }
        for (size_t k = first_excluded; k < trail_.size(); ++k)
            ok = sweep_bucket(trail_[k], frontier) && ok;
        return ok;
    }

    void undo_add() {
        int32_t l = chosen_.back();
        chosen_.pop_back();
        in_set_[l] = 0;
        dead_lines_.reset(l);
        for (int32_t pc : t_.line_pencils[l]) {
            uint8_t c = cnt_[pc]--;
            if (c == 1) --ones_;
            else if (c == 2) ++ones_;
        }
        while (trail_.back() != kMark) {
            excl_[trail_.back()] = 0;
            dead_lines_.reset(trail_.back());
            trail_.pop_back();
        }
        trail_.pop_back();
    }

    void emit() {
        std::vector<int32_t> lines = chosen_;
        std::sort(lines.begin(), lines.end());
        LineSet set = make_line_set(t_, std::move(lines));
        if (verify_hyperoval(t_, set))
            throw std::logic_error("search: emitted state fails verification");
        rep_.found.push_back(std::move(set));
    }

    int available_from(int frontier) const {
        const std::vector<uint64_t>& w = dead_lines_.words();
        int dead = 0;
        std::size_t first = (std::size_t)frontier >> 6;
        for (std::size_t k = first; k < w.size(); ++k) {
            uint64_t word = w[k];
            if (k == first && (frontier & 63)) word &= ~uint64_t{0} << (frontier & 63);
            dead += std::popcount(word);
        }
        return n_ - frontier - dead;
    }

    void dfs(int frontier) {
        if (stop_) return;
        int size = (int)chosen_.size();
        if (ones_ == 0 && size > 0) {
            ++rep_.size_histogram[size];
            if (size >= cfg_.min_size && size <= cfg_.max_size) emit();
        }
        if (size >= cfg_.max_size) return;
        if (size + available_from(frontier) < cfg_.min_size) return;
        if (size + (ones_ + 24) / 25 > cfg_.max_size) return;
        int swept = frontier;
        for (int i = frontier; i < n_; ++i) {
            while (swept < i)
                if (!sweep_bucket(swept++, i)) return;
            if (in_set_[i] || excl_[i]) continue;
            bool addable = true;
            for (int32_t pc : t_.line_pencils[i]) addable = addable && cnt_[pc] <= 1;
            if (!addable) continue; // unreachable: count-2 pencils exclude
            if (nodes_ == cfg_.node_budget) {
                exhausted_ = true;
                stop_ = true;
                return;
            }
            ++nodes_;
            if (add_line(i, i + 1)) dfs(i + 1);
            undo_add();
            if (stop_) return;
        }
    }

    static constexpr int32_t kMark = -1;

    const GeometryTables& t_;
    const SearchConfig& cfg_;
    int n_;
    std::vector<uint8_t> cnt_;
    std::vector<char> in_set_, excl_;
    BitVec dead_lines_; // in_set or excluded
    std::vector<int32_t> watch_;
    std::vector<std::vector<int32_t>> bucket_;
    std::vector<int32_t> chosen_, trail_;
    int ones_ = 0; // pencils at count exactly 1
    int frontier0_ = 0;
    long long nodes_ = 0;
    bool exhausted_ = false, stop_ = false;
    SearchReport rep_;
};

} // namespace

SearchReport enumerate_hyperovals(const GeometryTables& t, const SearchConfig& cfg) {
    if (t.q != 4 || !t.pencils_materialized())
        throw std::invalid_argument("enumerate_hyperovals: needs q = 4 tables");
    if (cfg.node_budget < 1)
        throw std::invalid_argument("enumerate_hyperovals: budget must be positive");
    if (cfg.min_size < 1 || cfg.max_size < cfg.min_size)
        throw std::invalid_argument("enumerate_hyperovals: need 1 <= min_size <= max_size");
    if (cfg.threads < 0)
        throw std::invalid_argument("enumerate_hyperovals: bad thread hint");
    return Searcher(t, cfg).run();
}

SetSignature set_signature(const GeometryTables& t, const LineSet& set) {
    if (verify_hyperoval(t, set))
        throw std::invalid_argument("set_signature: set is not a hyperoval");
    Graph g = collinearity_graph(t, set);
    SixCliqueCensus census = six_clique_census(t, g);
    return SetSignature{(int32_t)set.lines.size(), canonical_form(g),
                        (int64_t)census.point_cliques.size(),
                        (int64_t)census.plane_cliques.size()};
}

} // namespace lgh
