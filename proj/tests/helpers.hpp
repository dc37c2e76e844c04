#pragma once

#include <cstdint>
#include <vector>

#include "smashext/graded_basis.hpp"
#include "smashext/quiver.hpp"

namespace testhelpers {

using namespace smashext;

// Deterministic 64-bit generator (xorshift*); the standard distributions are
// not pinned across platforms, so tests draw raw values.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        s_ ^= s_ >> 12;
        s_ ^= s_ << 25;
        s_ ^= s_ >> 27;
        return s_ * 0x2545f4914f6cdd1dull;
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    // small rational with numerator in [-bound, bound], denominator in [1, dbound]
    Rational rational(long bound = 9, long dbound = 4) {
        long num = static_cast<long>(below(2 * bound + 1)) - bound;
        long den = 1 + static_cast<long>(below(dbound));
        return Rational(num, den);
    }

private:
    std::uint64_t s_;
};

// Rank by fraction-free (Bareiss) elimination over integers after clearing
// denominators: an oracle independent of the library's rref path.
inline std::size_t bareiss_rank(const MatrixQ& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class den = m(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                a[i][j] = num / prev;  // exact by Bareiss
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline MatrixQ random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int zero_weight = 2) {
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.below(static_cast<std::uint64_t>(zero_weight) + 1) == 0)
                m(i, j) = rng.rational();
    return m;
}

// k[x,y,z] as a one-vertex quiver with commutation relations; optionally
// carries the Z/n grading with every arrow in the generator class.
inline Presentation kxyz(std::optional<std::size_t> cyclic_order = std::nullopt) {
    std::optional<FiniteGroup> grp;
    std::size_t gdeg = 0;
    if (cyclic_order) {
        grp = FiniteGroup::cyclic(*cyclic_order);
        gdeg = *cyclic_order == 1 ? 0 : 1;
    }
    Quiver q({"v"},
             {{"x", 0, 0, 1, gdeg}, {"y", 0, 0, 1, gdeg}, {"z", 0, 0, 1, gdeg}}, grp);
    auto arrow = [&](const char* l) { return Path::of_arrow(q, q.arrow_index(l)); };
    auto word2 = [&](const char* a, const char* b) {
        return *compose(arrow(a), arrow(b));  // "ab": b first
    };
    std::vector<PathElement> rels = {
        PathElement({{Rational(1), word2("x", "y")}, {Rational(-1), word2("y", "x")}}),
        PathElement({{Rational(1), word2("x", "z")}, {Rational(-1), word2("z", "x")}}),
        PathElement({{Rational(1), word2("z", "y")}, {Rational(-1), word2("y", "z")}}),
    };
    return Presentation(std::move(q), std::move(rels), 2);
}

// Down-up style cubic algebra k<x,y>/(x^2 y - y x^2, x y^2 - y^2 x),
// optionally Z/2-graded with both arrows in the generator class.
inline Presentation dcubic(bool graded = false) {
    std::optional<FiniteGroup> grp;
    std::size_t gdeg = 0;
    if (graded) {
        grp = FiniteGroup::cyclic(2);
        gdeg = 1;
    }
    Quiver q({"v"}, {{"x", 0, 0, 1, gdeg}, {"y", 0, 0, 1, gdeg}}, grp);
    auto arrow = [&](const char* l) { return Path::of_arrow(q, q.arrow_index(l)); };
    auto word = [&](std::initializer_list<const char*> ls) {
        // listed left to right, composed right to left
        std::vector<const char*> v(ls);
        Path p = arrow(v.back());
        for (auto it = v.rbegin() + 1; it != v.rend(); ++it) p = *compose(arrow(*it), p);
        return p;
    };
    std::vector<PathElement> rels = {
        PathElement({{Rational(1), word({"x", "x", "y"})}, {Rational(-1), word({"y", "x", "x"})}}),
        PathElement({{Rational(1), word({"x", "y", "y"})}, {Rational(-1), word({"y", "y", "x"})}}),
    };
    return Presentation(std::move(q), std::move(rels), 3);
}

inline PathElement word_element(const Quiver& q, const Rational& c,
                                std::initializer_list<const char*> labels) {
    std::vector<const char*> v(labels);
    Path p = Path::of_arrow(q, q.arrow_index(v.back()));
    for (auto it = v.rbegin() + 1; it != v.rend(); ++it)
        p = *compose(Path::of_arrow(q, q.arrow_index(*it)), p);
    return PathElement::single(c, p);
}

}  // namespace testhelpers
