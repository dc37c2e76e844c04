#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/group.hpp"
#include "smashext/rational.hpp"

namespace smashext {

// Quiver with N-graded arrows and an optional G-grading. Arrow gdeg indexes
// into the attached group; without a group all gdeg must be 0.
struct Arrow {
    std::string label;
    std::size_t src = 0;
    std::size_t tgt = 0;
    int ndeg = 1;
    std::size_t gdeg = 0;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           std::optional<FiniteGroup> group = std::nullopt)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)), group_(std::move(group)) {
        if (vertices_.empty()) throw std::invalid_argument("Quiver: no vertices");
        std::vector<std::string> seen;
        for (const auto& v : vertices_) {
            if (std::find(seen.begin(), seen.end(), v) != seen.end())
                throw std::invalid_argument("Quiver: duplicate vertex label '" + v + "'");
            seen.push_back(v);
        }
        for (const auto& a : arrows_) {
            if (a.src >= vertices_.size() || a.tgt >= vertices_.size())
                throw std::invalid_argument("Quiver: arrow '" + a.label + "' has bad endpoints");
            if (a.ndeg <= 0)
                throw std::invalid_argument("Quiver: arrow '" + a.label + "' has nonpositive degree");
            if (group_) {
                if (a.gdeg >= group_->order())
                    throw std::invalid_argument("Quiver: arrow '" + a.label + "' gdeg out of range");
            } else if (a.gdeg != 0) {
                throw std::invalid_argument("Quiver: gdeg set but no group attached");
            }
            if (std::find(seen.begin(), seen.end(), a.label) != seen.end())
                throw std::invalid_argument("Quiver: duplicate label '" + a.label + "'");
            seen.push_back(a.label);
        }
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::optional<FiniteGroup>& group() const { return group_; }

    std::size_t arrow_index(const std::string& label) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].label == label) return i;
        throw std::invalid_argument("Quiver: unknown arrow '" + label + "'");
    }
    std::size_t vertex_index(const std::string& label) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == label) return i;
        throw std::invalid_argument("Quiver: unknown vertex '" + label + "'");
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::optional<FiniteGroup> group_;
};

// A path stores its arrows in traversal order: traversal[0] is crossed
// first. The displayed word reads left to right in composition order, i.e.
// reversed traversal, matching how relations are written ("xy" applies y
// first). A path with empty traversal is the idempotent at its vertex.
struct Path {
    std::size_t src = 0;
    std::size_t tgt = 0;
    int ndeg = 0;
    std::vector<std::size_t> traversal;

    static Path vertex(std::size_t v) { return Path{v, v, 0, {}}; }

    static Path of_arrow(const Quiver& q, std::size_t a) {
        const Arrow& ar = q.arrows()[a];
        return Path{ar.src, ar.tgt, ar.ndeg, {a}};
    }

    bool is_vertex() const { return traversal.empty(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.src == b.src && a.traversal == b.traversal;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.ndeg != b.ndeg) return a.ndeg < b.ndeg;
        if (a.src != b.src) return a.src < b.src;
        return a.traversal < b.traversal;
    }
};

// p * q = "p after q"; requires src(p) = tgt(q). Returns nullopt otherwise.
inline std::optional<Path> compose(const Path& p, const Path& q) {
    if (p.src != q.tgt) return std::nullopt;
    Path r;
    r.src = q.src;
    r.tgt = p.tgt;
    r.ndeg = p.ndeg + q.ndeg;
    r.traversal = q.traversal;
    r.traversal.insert(r.traversal.end(), p.traversal.begin(), p.traversal.end());
    return r;
}

inline std::size_t path_gdeg(const Quiver& q, const Path& p) {
    if (!q.group()) return 0;
    const FiniteGroup& g = *q.group();
    std::size_t acc = g.identity();
    // Ordered product of arrow gdegs, later arrows multiplying on the left.
    for (std::size_t a : p.traversal) acc = g.mul(q.arrows()[a].gdeg, acc);
    return acc;
}

inline std::string path_label(const Quiver& q, const Path& p) {
    if (p.is_vertex()) return "e_" + q.vertices()[p.src];
    std::string s;
    for (auto it = p.traversal.rbegin(); it != p.traversal.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += q.arrows()[*it].label;
    }
    return s;
}

// Formal rational combination of paths, kept sorted with zero terms dropped.
class PathElement {
public:
    PathElement() = default;
    PathElement(std::vector<std::pair<Rational, Path>> terms) : terms_(std::move(terms)) {
        normalize();
    }

    static PathElement single(const Rational& c, Path p) {
        return PathElement({{c, std::move(p)}});
    }

    const std::vector<std::pair<Rational, Path>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // All terms share one N-degree? (Zero elements count as homogeneous.)
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_[0].second.ndeg;
        for (const auto& t : terms_)
            if (t.second.ndeg != d) return std::nullopt;
        return d;
    }

    bool is_parallel() const {
        if (terms_.empty()) return true;
        std::size_t s = terms_[0].second.src, t = terms_[0].second.tgt;
        for (const auto& tm : terms_)
            if (tm.second.src != s || tm.second.tgt != t) return false;
        return true;
    }

    PathElement& operator+=(const PathElement& o) {
        for (const auto& t : o.terms_) terms_.push_back(t);
        normalize();
        return *this;
    }
    friend PathElement operator+(PathElement a, const PathElement& b) { a += b; return a; }
    friend PathElement operator*(const Rational& c, const PathElement& e) {
        std::vector<std::pair<Rational, Path>> terms = e.terms_;
        for (auto& t : terms) t.first *= c;
        return PathElement(std::move(terms));
    }
    friend PathElement operator-(PathElement a, const PathElement& b) {
        return a + Rational(-1) * b;
    }

    // Two-sided product; non-composable path pairs contribute zero.
    friend PathElement operator*(const PathElement& a, const PathElement& b) {
        std::vector<std::pair<Rational, Path>> terms;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                if (auto p = compose(ta.second, tb.second))
                    terms.emplace_back(ta.first * tb.first, std::move(*p));
        return PathElement(std::move(terms));
    }

    // Scale so the first term has coefficient 1; canonical form for set
    // comparisons of relations.
    PathElement monic() const {
        if (terms_.empty()) return *this;
        return terms_[0].first.inv() * *this;
    }

    friend bool operator==(const PathElement& a, const PathElement& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].first == b.terms_[i].first) ||
                !(a.terms_[i].second == b.terms_[i].second))
                return false;
        return true;
    }

    std::string str(const Quiver& q) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [c, p] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*" + path_label(q, p);
        }
        return s;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        std::vector<std::pair<Rational, Path>> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().second == t.second)
                out.back().first += t.first;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& t) { return t.first.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
    }

    std::vector<std::pair<Rational, Path>> terms_;
};

// R = kQ/I with homogeneous relations. Relations must be parallel and
// N-homogeneous; with homogeneity_degree set, all must live in that degree.
class Presentation {
public:
    Presentation(Quiver quiver, std::vector<PathElement> relations,
                 std::optional<int> homogeneity_degree = std::nullopt)
        : quiver_(std::move(quiver)),
          relations_(std::move(relations)),
          homogeneity_degree_(homogeneity_degree) {
        for (const auto& r : relations_) {
            if (r.is_zero()) throw std::invalid_argument("Presentation: zero relation");
            auto d = r.homogeneous_degree();
            if (!d) throw std::invalid_argument("Presentation: inhomogeneous relation");
            if (!r.is_parallel()) throw std::invalid_argument("Presentation: non-parallel relation");
            if (*d < 1) throw std::invalid_argument("Presentation: relation of degree < 1");
            if (homogeneity_degree_ && *d != *homogeneity_degree_)
                throw std::invalid_argument("Presentation: relation degree differs from declared d");
        }
    }

    const Quiver& quiver() const { return quiver_; }
    const std::vector<PathElement>& relations() const { return relations_; }
    std::optional<int> homogeneity_degree() const { return homogeneity_degree_; }

private:
    Quiver quiver_;
    std::vector<PathElement> relations_;
    std::optional<int> homogeneity_degree_;
};

// All paths of total N-degree d, ordered by (source vertex, traversal
// sequence) lexicographically in arrow declaration order; optional endpoint
// filter. Degree-0 paths are the vertex idempotents.
inline std::vector<Path> enumerate_paths(
    const Quiver& q, int d,
    std::optional<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> endpoints =
        std::nullopt) {
    if (d < 0) throw std::invalid_argument("enumerate_paths: negative degree");
    std::optional<std::size_t> want_src, want_tgt;
    if (endpoints) {
        want_src = endpoints->first;
        want_tgt = endpoints->second;
    }
    std::vector<Path> out;
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t at, int remaining, std::size_t src) -> void {
        if (remaining == 0) {
            if (!want_tgt || *want_tgt == at) {
                Path p;
                p.src = src;
                p.tgt = at;
                p.ndeg = d;
                p.traversal = stack;
                out.push_back(std::move(p));
            }
            return;
        }
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const Arrow& ar = q.arrows()[a];
            if (ar.src != at || ar.ndeg > remaining) continue;
            stack.push_back(a);
            self(self, ar.tgt, remaining - ar.ndeg, src);
            stack.pop_back();
        }
    };
    for (std::size_t v = 0; v < q.vertices().size(); ++v) {
        if (want_src && *want_src != v) continue;
        dfs(dfs, v, d, v);
    }
    return out;
}

}  // namespace smashext
