#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsolve/errors.hpp"
#include "qsolve/rational.hpp"

namespace qsolve {

/// Integer partition λ_1 ≥ λ_2 ≥ … > 0. The empty partition (L=0) is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        int prev = INT32_MAX;
        for (int p : parts_) {
            if (p <= 0 || p > prev) throw BadPartition("parts must be weakly decreasing positive integers");
            prev = p;
        }
    }

    /// parse a comma-separated list like "6,6"
    static Partition parse(const std::string& text);

    int rows() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        int L = 0;
        for (int p : parts_) L += p;
        return L;
    }
    /// 1-indexed row length; 0 beyond the last row
    int part(int a) const { return (a >= 1 && a <= rows()) ? parts_[static_cast<size_t>(a - 1)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const {
        std::vector<int> cols;
        int width = part(1);
        cols.reserve(static_cast<size_t>(width));
        for (int c = 1; c <= width; ++c) {
            int h = 0;
            for (int a = 1; a <= rows(); ++a)
                if (part(a) >= c) ++h;
            cols.push_back(h);
        }
        return Partition(std::move(cols));
    }

    bool contains_box(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts_ < y.parts_; }

  private:
    std::vector<int> parts_;
};

inline Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw BadPartition("empty part in partition string");
            try {
                parts.push_back(std::stoi(cur));
            } catch (...) {
                throw BadPartition("bad partition entry: " + cur);
            }
            cur.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            cur += ch;
        }
    }
    return Partition(std::move(parts));
}

/// The N|M fat hook: rows beyond the N-th must have length ≤ M.
struct FatHook {
    int N = 0;
    int M = 0;
};

inline bool fits_fat_hook(const Partition& lam, const FatHook& hook) {
    for (int a = hook.N + 1; a <= lam.rows(); ++a)
        if (lam.part(a) > hook.M) return false;
    return true;
}

/// smallest N with λ inside the N|N fat hook
inline int minimal_symmetric_hook(const Partition& lam) {
    for (int n = 0;; ++n)
        if (fits_fat_hook(lam, FatHook{n, n})) return n;
}

/// hook length of each box, keyed (row, col), both 1-indexed
inline std::map<std::pair<int, int>, int> hook_lengths(const Partition& lam) {
    Partition t = lam.transpose();
    std::map<std::pair<int, int>, int> h;
    for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            int arm = lam.part(r) - c;
            int leg = t.part(c) - r;
            h[{r, c}] = arm + leg + 1;
        }
    return h;
}

/// multiplicity d_λ of the S_L irrep: L! / Π hooks (hook length formula)
inline Integer multiplicity(const Partition& lam) {
    Integer d = factorial(static_cast<unsigned>(lam.weight()));
    for (auto& [box, h] : hook_lengths(lam)) {
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(h));
        d = q;
    }
    return d;
}

/// all partitions of L (optionally restricted to a fat hook), in descending
/// lexicographic order: (L), (L-1,1), …, (1,…,1)
inline std::vector<Partition> enumerate_partitions(int L, std::optional<FatHook> hook = std::nullopt) {
    if (L < 0) throw BadPartition("negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            Partition p(cur);
            if (!hook || fits_fat_hook(p, *hook)) out.push_back(std::move(p));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, L, L == 0 ? 1 : L);
    return out;
}

/// Degree table M_{a,s} on the lattice vertices of the Young-diagram region.
/// Coordinates follow the diagram figures: a counts rows upward from the
/// bottom-left outer corner (0,0), s counts columns rightward. Vertex (a,s)
/// belongs to the region iff s ≤ row_limit(a), with row_limit(0)=λ_1 and
/// row_limit(a)=λ_a for 1 ≤ a ≤ rows.
class DegreeTable {
  public:
    explicit DegreeTable(const Partition& lam) : lam_(lam), t_(lam.transpose()) {
        L_ = lam.weight();
        prefix_rows_.assign(static_cast<size_t>(lam.rows()) + 1, 0);
        for (int a = 1; a <= lam.rows(); ++a) prefix_rows_[static_cast<size_t>(a)] = prefix_rows_[static_cast<size_t>(a - 1)] + lam.part(a);
        prefix_cols_.assign(static_cast<size_t>(t_.rows()) + 1, 0);
        for (int s = 1; s <= t_.rows(); ++s) prefix_cols_[static_cast<size_t>(s)] = prefix_cols_[static_cast<size_t>(s - 1)] + t_.part(s);
    }

    const Partition& partition() const { return lam_; }
    int length() const { return L_; }
    int max_a() const { return lam_.rows(); }
    int row_limit(int a) const {
        if (a == 0) return lam_.part(1);
        return lam_.part(a);
    }
    bool in_region(int a, int s) const {
        if (a < 0 || s < 0 || a > max_a()) return false;
        return s <= row_limit(a);
    }

    /// M_{a,s} = L − Σ_{b≤a} λ_b − Σ_{t≤s} λ′_t + a·s (valid on the region)
    int M(int a, int s) const {
        if (!in_region(a, s)) throw Error("vertex outside Young-diagram region");
        long v = L_ - prefix_rows_[static_cast<size_t>(std::min(a, lam_.rows()))] -
                 prefix_cols_[static_cast<size_t>(std::min(s, t_.rows()))] + static_cast<long>(a) * s;
        return static_cast<int>(v);
    }

    bool is_boundary(int a, int s) const { return M(a, s) == 0; }

    /// vertices of the region, ordered by (a+s, a) ascending
    std::vector<std::pair<int, int>> vertices() const {
        std::vector<std::pair<int, int>> v;
        for (int a = 0; a <= max_a(); ++a)
            for (int s = 0; s <= row_limit(a); ++s) v.push_back({a, s});
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) {
            if (x.first + x.second != y.first + y.second) return x.first + x.second < y.first + y.second;
            return x.first < y.first;
        });
        return v;
    }

    /// lower-left corners (a,s) of unit plaquettes whose four corners all lie
    /// in the region, i.e. box (a+1, s+1) lies in λ
    std::vector<std::pair<int, int>> plaquettes() const {
        std::vector<std::pair<int, int>> v;
        for (int a = 0; a + 1 <= max_a(); ++a)
            for (int s = 0; s + 1 <= lam_.part(a + 1); ++s) v.push_back({a, s});
        std::sort(v.begin(), v.end(), [](auto& x, auto& y) {
            if (x.first + x.second != y.first + y.second) return x.first + x.second < y.first + y.second;
            return x.first < y.first;
        });
        return v;
    }

  private:
    Partition lam_;
    Partition t_;
    int L_ = 0;
    std::vector<long> prefix_rows_;
    std::vector<long> prefix_cols_;
};

}  // namespace qsolve
