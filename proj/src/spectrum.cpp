#include "potlab/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace potlab {
namespace {

// Exact fraction on 64-bit with normalized positive denominator. The
// balance systems here are tiny (entries bounded by tile sizes), so 64 bits
// with 128-bit intermediates is far more than enough.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::logic_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(std::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    static long long checked(__int128 v) {
        if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
            throw std::overflow_error("rational arithmetic overflow");
        return static_cast<long long>(v);
    }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(static_cast<__int128>(a.num) * b.den +
                           static_cast<__int128>(b.num) * a.den),
                   checked(static_cast<__int128>(a.den) * b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(checked(static_cast<__int128>(a.num) * b.den -
                           static_cast<__int128>(b.num) * a.den),
                   checked(static_cast<__int128>(a.den) * b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(static_cast<__int128>(a.num) * b.num),
                   checked(static_cast<__int128>(a.den) * b.den));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::logic_error("division by zero");
        return Rat(checked(static_cast<__int128>(a.num) * b.den),
                   checked(static_cast<__int128>(a.den) * b.num));
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// Reduced row echelon form; returns pivot column per row (-1 rows removed).
struct Rref {
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivot_cols;  // ascending
    std::vector<int> free_cols;   // ascending
};

Rref rref_of(const NetColorMatrix& m) {
    const int nc = m.tile_count;
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : m.rows) {
        std::vector<Rat> row(static_cast<size_t>(nc));
        for (int j = 0; j < nc; ++j) row[static_cast<size_t>(j)] = Rat(r[static_cast<size_t>(j)]);
        rows.push_back(std::move(row));
    }
    std::vector<int> pivots;
    size_t lead = 0;
    for (int col = 0; col < nc && lead < rows.size(); ++col) {
        size_t sel = lead;
        while (sel < rows.size() && rows[sel][static_cast<size_t>(col)].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[lead], rows[sel]);
        Rat inv = Rat(1) / rows[lead][static_cast<size_t>(col)];
        for (auto& x : rows[lead]) x = x * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead) continue;
            Rat factor = rows[r][static_cast<size_t>(col)];
            if (factor.is_zero()) continue;
            for (int j = 0; j < nc; ++j)
                rows[r][static_cast<size_t>(j)] =
                    rows[r][static_cast<size_t>(j)] - factor * rows[lead][static_cast<size_t>(j)];
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    Rref out;
    out.rows = std::move(rows);
    out.pivot_cols = std::move(pivots);
    for (int j = 0; j < nc; ++j)
        if (!std::binary_search(out.pivot_cols.begin(), out.pivot_cols.end(), j))
            out.free_cols.push_back(j);
    return out;
}

// Enumerates nonzero nonnegative integer solutions. Free variables are
// assigned level by level (by their sum); every solution with order n has
// free-part sum <= n, which justifies the early stop in min_order.
struct SolutionEnum {
    const Rref& rref;
    int tile_count;
    // visit(counts, order) -> bool keep_going
    template <typename Visit>
    void run(int max_free_sum, int max_total, Visit&& visit) const {
        std::vector<int> free_val(rref.free_cols.size(), 0);
        if (rref.free_cols.empty()) return;  // only the zero solution exists
        bool stop = false;
        dfs(0, 0, max_free_sum, -1, max_total, free_val, visit, stop);
    }

    // Free parts summing to exactly `target`.
    template <typename Visit>
    void run_exact(int target, int max_total, Visit&& visit) const {
        std::vector<int> free_val(rref.free_cols.size(), 0);
        if (rref.free_cols.empty()) return;
        bool stop = false;
        dfs(0, 0, target, target, max_total, free_val, visit, stop);
    }

    template <typename Visit>
    void dfs(size_t idx, int used, int max_free_sum, int exact_sum, int max_total,
             std::vector<int>& free_val, Visit&& visit, bool& stop) const {
        if (stop) return;
        if (idx + 1 == rref.free_cols.size() && exact_sum >= 0) {
            free_val[idx] = exact_sum - used;
            dfs(idx + 1, exact_sum, max_free_sum, exact_sum, max_total, free_val, visit, stop);
            free_val[idx] = 0;
            return;
        }
        if (idx == rref.free_cols.size()) {
            if (used == 0) return;
            if (exact_sum >= 0 && used != exact_sum) return;
            std::vector<int> counts(static_cast<size_t>(tile_count), 0);
            for (size_t i = 0; i < rref.free_cols.size(); ++i)
                counts[static_cast<size_t>(rref.free_cols[i])] = free_val[i];
            long long total = used;
            for (size_t r = 0; r < rref.rows.size(); ++r) {
                Rat acc(0);
                for (size_t i = 0; i < rref.free_cols.size(); ++i) {
                    if (free_val[i] == 0) continue;
                    acc = acc + rref.rows[r][static_cast<size_t>(rref.free_cols[i])] *
                                    Rat(free_val[i]);
                }
                Rat value = Rat(0) - acc;  // pivot = -(sum over free columns)
                if (!value.is_integer() || value.num < 0) return;
                counts[static_cast<size_t>(rref.pivot_cols[r])] = static_cast<int>(value.num);
                total += value.num;
                if (total > max_total) return;
            }
            if (total < 1 || total > max_total) return;
            if (!visit(counts, static_cast<int>(total))) stop = true;
            return;
        }
        for (int v = 0; used + v <= max_free_sum; ++v) {
            free_val[idx] = v;
            dfs(idx + 1, used + v, max_free_sum, exact_sum, max_total, free_val, visit, stop);
            if (stop) return;
        }
        free_val[idx] = 0;
    }
};

}  // namespace

NetColorMatrix build_system(const Pot& p) {
    if (p.empty()) throw std::invalid_argument("cannot build a balance system for an empty pot");
    NetColorMatrix m;
    m.colors = p.colors();
    m.tile_count = p.size();
    for (int color : m.colors) {
        std::vector<int> row(static_cast<size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i)
            row[static_cast<size_t>(i)] = p.tile(i).count(color) - p.tile(i).count(-color);
        m.rows.push_back(std::move(row));
    }
    return m;
}

int UsageVector::order() const {
    int s = 0;
    for (int c : counts) s += c;
    return s;
}

bool operator<(const UsageVector& a, const UsageVector& b) {
    int oa = a.order(), ob = b.order();
    if (oa != ob) return oa < ob;
    return a.counts < b.counts;
}

std::vector<UsageVector> enumerate_usage(const Pot& p, int max_total) {
    if (max_total < 1) return {};
    NetColorMatrix m = build_system(p);
    Rref rref = rref_of(m);
    std::vector<UsageVector> out;
    SolutionEnum en{rref, m.tile_count};
    en.run(max_total, max_total, [&](const std::vector<int>& counts, int) {
        out.push_back(UsageVector{counts});
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

MinimalSolutions minimal_solutions(const Pot& p, int max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    std::vector<UsageVector> all = enumerate_usage(p, max_order);

    auto dominates = [](const UsageVector& small, const UsageVector& big) {
        for (size_t i = 0; i < small.counts.size(); ++i)
            if (small.counts[i] > big.counts[i]) return false;
        return true;
    };

    MinimalSolutions result;
    result.max_order = max_order;
    for (const UsageVector& s : all) {
        bool minimal = true;
        for (const UsageVector& t : all) {
            if (&t == &s) continue;
            if (t.order() <= s.order() && !(t == s) && dominates(t, s)) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.generators.push_back(s);
    }

    // Closure audit: every solution must decompose over the generators.
    for (const UsageVector& s : all) {
        bool ok = false;
        for (const UsageVector& gen : result.generators) {
            if (gen == s) {
                ok = true;
                break;
            }
            if (!dominates(gen, s)) continue;
            UsageVector rest;
            rest.counts.resize(s.counts.size());
            for (size_t i = 0; i < s.counts.size(); ++i)
                rest.counts[i] = s.counts[i] - gen.counts[i];
            if (std::binary_search(all.begin(), all.end(), rest) || rest.order() == 0) {
                ok = true;
                break;
            }
        }
        if (!ok) throw std::logic_error("solution set is not generated by its minimal elements");
    }

    std::vector<int> orders;
    for (const UsageVector& s : all) orders.push_back(s.order());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    result.orders = std::move(orders);
    return result;
}

MinOrderResult min_order(const Pot& p, int bound) {
    MinOrderResult res;
    res.bound = bound;
    NetColorMatrix m = build_system(p);
    Rref rref = rref_of(m);
    if (rref.free_cols.empty()) {
        res.provably_infeasible = true;
        return res;
    }
    SolutionEnum en{rref, m.tile_count};
    int best = bound + 1;
    // A solution of order n has free-part sum <= n, so once level reaches the
    // incumbent, no smaller order can still appear.
    for (int level = 1; level <= bound && level < best; ++level) {
        en.run_exact(level, bound, [&](const std::vector<int>&, int total) {
            best = std::min(best, total);
            return true;
        });
    }
    if (best <= bound) res.order = best;
    return res;
}

}  // namespace potlab
