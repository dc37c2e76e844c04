#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace smashext {

// Finite group given by its multiplication table. The table is validated on
// construction: associativity, a two-sided identity, and inverses.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {})
        : table_(std::move(table)), labels_(std::move(labels)) {
        n_ = table_.size();
        if (n_ == 0) throw std::invalid_argument("FiniteGroup: empty table");
        for (const auto& row : table_) {
            if (row.size() != n_) throw std::invalid_argument("FiniteGroup: table not square");
            for (std::size_t v : row)
                if (v >= n_) throw std::invalid_argument("FiniteGroup: index out of range");
        }
        identity_ = find_identity();
        inverse_.assign(n_, n_);
        for (std::size_t g = 0; g < n_; ++g) {
            for (std::size_t h = 0; h < n_; ++h)
                if (table_[g][h] == identity_ && table_[h][g] == identity_) {
                    inverse_[g] = h;
                    break;
                }
            if (inverse_[g] == n_) throw std::invalid_argument("FiniteGroup: missing inverse");
        }
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw std::invalid_argument("FiniteGroup: table not associative");
        if (labels_.empty()) {
            labels_.resize(n_);
            for (std::size_t g = 0; g < n_; ++g)
                labels_[g] = g == identity_ ? "e" : default_label(g);
        }
        if (labels_.size() != n_) throw std::invalid_argument("FiniteGroup: label count mismatch");
    }

    static FiniteGroup cyclic(std::size_t n) {
        if (n == 0) throw std::invalid_argument("FiniteGroup::cyclic: order must be positive");
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        std::vector<std::string> labels(n);
        for (std::size_t g = 0; g < n; ++g)
            labels[g] = g == 0 ? "e" : (g == 1 ? "g" : "g" + std::to_string(g));
        return FiniteGroup(std::move(t), std::move(labels));
    }

    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
        std::size_t n = a.order() * b.order();
        auto idx = [&](std::size_t x, std::size_t y) { return x * b.order() + y; };
        std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
        std::vector<std::string> labels(n);
        for (std::size_t x = 0; x < a.order(); ++x)
            for (std::size_t y = 0; y < b.order(); ++y) {
                labels[idx(x, y)] = "(" + a.label(x) + "," + b.label(y) + ")";
                for (std::size_t u = 0; u < a.order(); ++u)
                    for (std::size_t v = 0; v < b.order(); ++v)
                        t[idx(x, y)][idx(u, v)] = idx(a.mul(x, u), b.mul(y, v));
            }
        return FiniteGroup(std::move(t), std::move(labels));
    }

    std::size_t order() const { return n_; }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& label(std::size_t g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    std::size_t index_of(const std::string& label) const {
        for (std::size_t g = 0; g < n_; ++g)
            if (labels_[g] == label) return g;
        throw std::invalid_argument("FiniteGroup: unknown element label '" + label + "'");
    }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table_ == b.table_;
    }

private:
    std::size_t find_identity() const {
        for (std::size_t e = 0; e < n_; ++e) {
            bool ok = true;
            for (std::size_t g = 0; g < n_ && ok; ++g)
                ok = table_[e][g] == g && table_[g][e] == g;
            if (ok) return e;
        }
        throw std::invalid_argument("FiniteGroup: no identity element");
    }

    static std::string default_label(std::size_t g) { return "g" + std::to_string(g); }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string> labels_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

}  // namespace smashext
