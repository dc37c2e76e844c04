#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smashext/matrix.hpp"
#include "smashext/quiver.hpp"

namespace smashext {

// Chosen monomial basis of one graded piece R_d together with the matrix
// rewriting any degree-d path into that basis.
struct GradedBasis {
    int degree = 0;
    std::vector<Path> monomials;
    MatrixQ normal_form;  // dim(R_d) x #paths(d): column j = coordinates of path j
};

struct GHomogeneityReport {
    bool ok = true;
    std::string message;         // first offending relation on failure
    std::vector<std::size_t> relation_gdeg;  // per relation, when ok
};

// Degree-wise bases and normal forms for R = kQ/I, built by exact linear
// algebra. Ideal spans are grown degree by degree: I_d is spanned by
// a*I_{d-|a|}, I_{d-|a|}*a over arrows a, plus generators of degree d.
// Everything decomposes over (source, target) vertex pairs, which keeps
// the eliminations block-local.
class PresentationBasis {
public:
    explicit PresentationBasis(Presentation pres) : pres_(std::move(pres)) {}

    const Presentation& presentation() const { return pres_; }
    const Quiver& quiver() const { return pres_.quiver(); }

    void compute_up_to(int d) {
        while (computed_ < d) build_degree(computed_ + 1);
    }

    std::size_t dim(int d) {
        require(d);
        return degrees_[d].basis.size();
    }

    const std::vector<Path>& paths(int d) {
        require(d);
        return degrees_[d].paths;
    }

    // Basis monomials = non-pivot paths of the ideal elimination, in global
    // path order.
    const std::vector<Path>& basis(int d) {
        require(d);
        return degrees_[d].basis;
    }

    std::size_t path_index(int d, const Path& p) {
        require(d);
        auto it = degrees_[d].index.find(key(p));
        if (it == degrees_[d].index.end())
            throw std::invalid_argument("PresentationBasis: path not of this degree");
        return it->second;
    }

    // Coordinates of the residue class of a degree-d path.
    QVec reduce_path(int d, const Path& p) {
        require(d);
        DegreeData& dd = degrees_[d];
        std::size_t j = path_index(d, p);
        QVec coords(dd.basis.size());
        auto& blk = dd.blocks[block_of(p)];
        QVec local(blk.paths.size());
        local[blk.local_index.at(j)] = Rational(1);
        blk.ideal.reduce(local);
        for (std::size_t l = 0; l < local.size(); ++l) {
            if (local[l].is_zero()) continue;
            auto bit = dd.basis_pos.find(blk.paths[l]);  // keyed by global path index
            if (bit == dd.basis_pos.end())
                throw std::logic_error("PresentationBasis: reduced support off basis");
            coords[bit->second] += local[l];
        }
        return coords;
    }

    // Coordinates of a homogeneous element of degree d. Throws on
    // inhomogeneous input.
    QVec normal_form(const PathElement& e, int d) {
        auto hd = e.homogeneous_degree();
        if (!hd) throw std::invalid_argument("normal_form: inhomogeneous element");
        if (!e.is_zero() && *hd != d)
            throw std::invalid_argument("normal_form: element degree differs from requested");
        require(d);
        QVec coords(degrees_[d].basis.size());
        for (const auto& [c, p] : e.terms()) {
            QVec pc = reduce_path(d, p);
            axpy(coords, c, pc);
        }
        return coords;
    }

    // The class of basis monomial i (degree d1) times basis monomial j
    // (degree d2), in the degree-(d1+d2) basis.
    QVec mul_basis(int d1, std::size_t i, int d2, std::size_t j) {
        require(d1);
        require(d2);
        auto p = compose(degrees_[d1].basis[i], degrees_[d2].basis[j]);
        if (!p) return QVec(dim(d1 + d2));
        return reduce_path(d1 + d2, *p);
    }

    // Matrix of left multiplication by arrow a: R_d -> R_{d+|a|} on basis
    // coordinates.
    MatrixQ arrow_left_mult(std::size_t a, int d) {
        require(d);
        const Arrow& ar = quiver().arrows()[a];
        int d2 = d + ar.ndeg;
        require(d2);
        auto ck = std::make_pair(a, d);
        auto it = left_mult_cache_.find(ck);
        if (it != left_mult_cache_.end()) return it->second;
        MatrixQ m(dim(d2), dim(d));
        Path ap = Path::of_arrow(quiver(), a);
        for (std::size_t j = 0; j < degrees_[d].basis.size(); ++j) {
            auto p = compose(ap, degrees_[d].basis[j]);
            if (!p) continue;
            m.set_col(j, reduce_path(d2, *p));
        }
        left_mult_cache_.emplace(ck, m);
        return m;
    }

    // Reduced spanning rows of I_d in global path coordinates.
    std::vector<QVec> ideal_rows_global(int d) {
        require(d);
        DegreeData& dd = degrees_[d];
        std::vector<QVec> out;
        for (const auto& [bk, blk] : dd.blocks)
            for (const QVec& row : blk.ideal.rows()) {
                QVec g(dd.paths.size());
                for (std::size_t l = 0; l < row.size(); ++l) g[blk.paths[l]] = row[l];
                out.push_back(std::move(g));
            }
        return out;
    }

    // Membership of a global-coordinate vector in I_d.
    bool in_ideal(int d, const QVec& v) {
        require(d);
        DegreeData& dd = degrees_[d];
        if (v.size() != dd.paths.size())
            throw std::invalid_argument("in_ideal: coordinate length mismatch");
        for (auto& [bk, blk] : dd.blocks) {
            QVec local(blk.paths.size());
            for (std::size_t l = 0; l < blk.paths.size(); ++l) local[l] = v[blk.paths[l]];
            if (!blk.ideal.contains(std::move(local))) return false;
        }
        // Entries outside every block cannot occur: blocks partition paths.
        return true;
    }

    GradedBasis graded_basis(int d) {
        require(d);
        DegreeData& dd = degrees_[d];
        GradedBasis gb;
        gb.degree = d;
        gb.monomials = dd.basis;
        gb.normal_form = MatrixQ(dd.basis.size(), dd.paths.size());
        for (std::size_t j = 0; j < dd.paths.size(); ++j)
            gb.normal_form.set_col(j, reduce_path(d, dd.paths[j]));
        return gb;
    }

    std::vector<std::size_t> hilbert_function(int D) {
        std::vector<std::size_t> h;
        for (int d = 0; d <= D; ++d) h.push_back(dim(d));
        return h;
    }

    // Adds the degree-d span of extra homogeneous elements (and its ideal
    // closure in later degrees) on top of the presentation's own relations:
    // used for comparing ideals. Returns the dimension of kQ_d / (I + J)_d.
    // Not cached; builds a scratch copy.
    static std::vector<std::size_t> quotient_dims_with(
        const Presentation& pres, const std::vector<PathElement>& extra, int D) {
        std::vector<PathElement> rels = pres.relations();
        for (const auto& e : extra) rels.push_back(e);
        Presentation p2(pres.quiver(), std::move(rels), std::nullopt);
        PresentationBasis b(p2);
        return b.hilbert_function(D);
    }

private:
    struct Block {
        std::vector<std::size_t> paths;              // global path indices
        std::map<std::size_t, std::size_t> local_index;  // global -> local
        RowSpace ideal{0};
    };
    struct DegreeData {
        std::vector<Path> paths;
        std::map<std::vector<std::size_t>, std::size_t> index;
        std::map<std::pair<std::size_t, std::size_t>, Block> blocks;
        std::vector<Path> basis;
        std::map<std::size_t, std::size_t> basis_pos;  // global path index -> basis position
    };

    static std::vector<std::size_t> key(const Path& p) {
        std::vector<std::size_t> k;
        k.push_back(p.src);
        k.insert(k.end(), p.traversal.begin(), p.traversal.end());
        return k;
    }

    static std::pair<std::size_t, std::size_t> block_of(const Path& p) {
        return {p.src, p.tgt};
    }

    void require(int d) {
        if (d < 0) throw std::invalid_argument("PresentationBasis: negative degree");
        compute_up_to(d);
    }

    void add_ideal_row(DegreeData& dd, const std::vector<std::pair<Rational, std::size_t>>& terms) {
        if (terms.empty()) return;
        auto bk = block_of(dd.paths[terms[0].second]);
        Block& blk = dd.blocks[bk];
        QVec v(blk.paths.size());
        for (const auto& [c, gi] : terms) v[blk.local_index.at(gi)] += c;
        blk.ideal.add_row(std::move(v));
    }

    void build_degree(int d) {
        DegreeData dd;
        dd.paths = enumerate_paths(quiver(), d);
        for (std::size_t i = 0; i < dd.paths.size(); ++i) {
            dd.index.emplace(key(dd.paths[i]), i);
            auto bk = block_of(dd.paths[i]);
            auto [it, inserted] = dd.blocks.try_emplace(bk);
            it->second.local_index.emplace(i, it->second.paths.size());
            it->second.paths.push_back(i);
        }
        for (auto& [bk, blk] : dd.blocks) blk.ideal = RowSpace(blk.paths.size());

        // Generator relations of this exact degree.
        for (const auto& r : pres_.relations()) {
            if (*r.homogeneous_degree() != d) continue;
            std::vector<std::pair<Rational, std::size_t>> terms;
            for (const auto& [c, p] : r.terms()) terms.emplace_back(c, dd.index.at(key(p)));
            add_ideal_row(dd, terms);
        }

        // Closure of lower-degree ideal pieces under one arrow on either side.
        for (std::size_t a = 0; a < quiver().arrows().size(); ++a) {
            const Arrow& ar = quiver().arrows()[a];
            int dl = d - ar.ndeg;
            if (dl < 0) continue;
            const DegreeData& lower = degrees_[dl];
            for (const auto& [bk, blk] : lower.blocks) {
                for (const QVec& row : blk.ideal.rows()) {
                    std::vector<std::pair<Rational, std::size_t>> left, right;
                    for (std::size_t l = 0; l < row.size(); ++l) {
                        if (row[l].is_zero()) continue;
                        const Path& p = lower.paths[blk.paths[l]];
                        if (auto lp = compose(Path::of_arrow(quiver(), a), p))
                            left.emplace_back(row[l], dd.index.at(key(*lp)));
                        if (auto rp = compose(p, Path::of_arrow(quiver(), a)))
                            right.emplace_back(row[l], dd.index.at(key(*rp)));
                    }
                    add_ideal_row(dd, left);
                    add_ideal_row(dd, right);
                }
            }
        }

        // Basis = non-pivot paths, kept in global path order.
        std::vector<bool> is_pivot(dd.paths.size(), false);
        for (const auto& [bk, blk] : dd.blocks)
            for (std::size_t pc : blk.ideal.pivots()) is_pivot[blk.paths[pc]] = true;
        for (std::size_t i = 0; i < dd.paths.size(); ++i)
            if (!is_pivot[i]) {
                dd.basis_pos.emplace(i, dd.basis.size());
                dd.basis.push_back(dd.paths[i]);
            }

        degrees_.push_back(std::move(dd));
        ++computed_;
    }

    Presentation pres_;
    int computed_ = -1;
    std::vector<DegreeData> degrees_;
    std::map<std::pair<std::size_t, int>, MatrixQ> left_mult_cache_;
};

// Verifies that every relation is G-homogeneous (the quiver must carry a
// group); reports the first offender otherwise.
inline GHomogeneityReport check_g_homogeneity(const Presentation& pres) {
    GHomogeneityReport rep;
    const Quiver& q = pres.quiver();
    if (!q.group()) {
        rep.ok = false;
        rep.message = "quiver carries no group grading";
        return rep;
    }
    for (std::size_t i = 0; i < pres.relations().size(); ++i) {
        const auto& r = pres.relations()[i];
        std::size_t g0 = path_gdeg(q, r.terms()[0].second);
        for (const auto& [c, p] : r.terms()) {
            if (path_gdeg(q, p) != g0) {
                rep.ok = false;
                rep.message = "relation " + std::to_string(i) + " (" + r.str(q) +
                              ") mixes G-degrees " + q.group()->label(g0) + " and " +
                              q.group()->label(path_gdeg(q, p));
                return rep;
            }
        }
        rep.relation_gdeg.push_back(g0);
    }
    return rep;
}

}  // namespace smashext
