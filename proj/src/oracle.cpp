#include "graphzz/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace graphzz::oracle {

namespace {

struct dsu {
    std::vector<int> parent;
    explicit dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

int homology_space::edge_index(const simplex& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    GZ_CHECK(it != edges_.end() && *it == e, "edge not present in snapshot");
    return static_cast<int>(it - edges_.begin());
}

homology_space::homology_space(const std::vector<simplex>& snapshot, int p) : p_(p) {
    GZ_CHECK(p == 0 || p == 1, "homology dimension must be 0 or 1");
    std::vector<simplex> tris;
    for (const simplex& s : snapshot) {
        if (s.kind == simplex_kind::vertex) verts_.push_back(s.v[0]);
        if (s.kind == simplex_kind::edge) edges_.push_back(s);
        if (s.kind == simplex_kind::triangle) tris.push_back(s);
    }
    std::sort(verts_.begin(), verts_.end());
    std::sort(edges_.begin(), edges_.end());

    auto vpos = [&](vertex_t v) {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        GZ_CHECK(it != verts_.end() && *it == v, "vertex not present in snapshot");
        return static_cast<int>(it - verts_.begin());
    };

    if (p_ == 0) {
        dsu uf(verts_.size());
        for (const simplex& e : edges_) uf.unite(vpos(e.v[0]), vpos(e.v[1]));
        std::map<int, int> slot;  // dsu root -> component index, by min vertex order
        comp_of_.resize(verts_.size());
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            int r = uf.find(static_cast<int>(i));
            auto [it, fresh] = slot.try_emplace(r, static_cast<int>(comp_rep_.size()));
            if (fresh) comp_rep_.push_back(verts_[i]);
            comp_of_[i] = it->second;
        }
        dim_ = static_cast<int>(comp_rep_.size());
        return;
    }

    // dimension 1: fundamental cycles of the graph modulo triangle boundaries
    const int ne = static_cast<int>(edges_.size());
    // spanning forest and fundamental cycles
    dsu uf(verts_.size());
    std::vector<std::vector<std::pair<int, int>>> forest(verts_.size());  // (neighbor pos, edge)
    std::vector<int> nontree;
    for (int ei = 0; ei < ne; ++ei) {
        int a = vpos(edges_[static_cast<std::size_t>(ei)].v[0]);
        int b = vpos(edges_[static_cast<std::size_t>(ei)].v[1]);
        if (uf.unite(a, b)) {
            forest[static_cast<std::size_t>(a)].push_back({b, ei});
            forest[static_cast<std::size_t>(b)].push_back({a, ei});
        } else {
            nontree.push_back(ei);
        }
    }
    auto forest_path = [&](int from, int to) {
        // BFS in the spanning forest, returning the edge set of the path
        std::vector<int> prev_edge(verts_.size(), -1), prev_node(verts_.size(), -1);
        std::vector<int> queue{from};
        std::vector<bool> seen(verts_.size(), false);
        seen[static_cast<std::size_t>(from)] = true;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            if (x == to) break;
            for (auto [y, ei] : forest[static_cast<std::size_t>(x)]) {
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = true;
                prev_edge[static_cast<std::size_t>(y)] = ei;
                prev_node[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
        std::vector<int> path;
        for (int x = to; x != from; x = prev_node[static_cast<std::size_t>(x)]) {
            GZ_CHECK(prev_edge[static_cast<std::size_t>(x)] >= 0, "forest path missing");
            path.push_back(prev_edge[static_cast<std::size_t>(x)]);
        }
        return path;
    };

    const int k = static_cast<int>(nontree.size());
    aug_base_ = ne;
    width_ = ne + k;
    const int width = width_;
    auto reduce_limited = [&](bitvec& v) {
        // reduce only by pivots inside the edge block
        while (true) {
            int piv = v.lowest();
            if (piv < 0 || piv >= ne) break;
            auto it = std::find_if(solver_.begin(), solver_.end(), [&](const bitvec& r) {
                return r.lowest() == piv;
            });
            if (it == solver_.end()) break;
            v ^= *it;
        }
    };
    for (const simplex& t : tris) {
        bitvec v(width);
        v.flip(edge_index(simplex::edge(t.v[0], t.v[1])));
        v.flip(edge_index(simplex::edge(t.v[0], t.v[2])));
        v.flip(edge_index(simplex::edge(t.v[1], t.v[2])));
        reduce_limited(v);
        if (v.lowest() >= 0 && v.lowest() < ne) solver_.push_back(v);
    }
    for (int j = 0; j < k; ++j) {
        int ei = nontree[static_cast<std::size_t>(j)];
        bitvec v(width);
        v.flip(ei);
        int a = vpos(edges_[static_cast<std::size_t>(ei)].v[0]);
        int b = vpos(edges_[static_cast<std::size_t>(ei)].v[1]);
        for (int pe : forest_path(a, b)) v.flip(pe);
        v.flip(ne + j);  // augmentation slot
        reduce_limited(v);
        int piv = v.lowest();
        if (piv >= 0 && piv < ne) {
            chosen_.push_back(j);
            std::vector<simplex> cyc;
            // recover this generator's edge set from the unreduced cycle
            bitvec raw(width);
            raw.flip(ei);
            for (int pe : forest_path(a, b)) raw.flip(pe);
            for (int e = 0; e < ne; ++e)
                if (raw.get(e)) cyc.push_back(edges_[static_cast<std::size_t>(e)]);
            gen_cycles_.push_back(std::move(cyc));
            solver_.push_back(v);
        }
        // a dependent cycle contributes no basis class
    }
    dim_ = static_cast<int>(chosen_.size());
}

bitvec homology_space::coords_of_vertex(vertex_t v) const {
    GZ_CHECK(p_ == 0, "vertex coordinates need dimension 0");
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    GZ_CHECK(it != verts_.end() && *it == v, "vertex not present in snapshot");
    bitvec out(dim_);
    out.flip(comp_of_[static_cast<std::size_t>(it - verts_.begin())]);
    return out;
}

bitvec homology_space::coords_of_cycle(const std::vector<simplex>& cycle_edges) const {
    GZ_CHECK(p_ == 1, "cycle coordinates need dimension 1");
    const int ne = static_cast<int>(edges_.size());
    bitvec v(width_);
    for (const simplex& e : cycle_edges) v.flip(edge_index(e));
    while (true) {
        int piv = v.lowest();
        if (piv < 0 || piv >= ne) break;
        auto it = std::find_if(solver_.begin(), solver_.end(),
                               [&](const bitvec& r) { return r.lowest() == piv; });
        GZ_CHECK(it != solver_.end(), "cycle outside the snapshot's cycle space");
        v ^= *it;
    }
    // augmentation slots of chosen generators give the coordinates
    bitvec out(dim_);
    for (int s = 0; s < dim_; ++s)
        if (v.get(aug_base_ + chosen_[static_cast<std::size_t>(s)])) out.flip(s);
    return out;
}

vertex_t homology_space::rep_vertex(int k) const {
    GZ_CHECK(p_ == 0 && k < dim_, "bad representative request");
    return comp_rep_[static_cast<std::size_t>(k)];
}

const std::vector<simplex>& homology_space::rep_cycle(int k) const {
    GZ_CHECK(p_ == 1 && k < dim_, "bad representative request");
    return gen_cycles_[static_cast<std::size_t>(k)];
}

z2_relation induced_relation(const homology_space& left, const homology_space& right,
                             bool arrow_forward, int p) {
    z2_relation rel;
    rel.dim_left = left.dim();
    rel.dim_right = right.dim();
    const homology_space& small = arrow_forward ? left : right;
    const homology_space& big = arrow_forward ? right : left;
    for (int k = 0; k < small.dim(); ++k) {
        bitvec row(rel.dim_left + rel.dim_right);
        bitvec img = (p == 0) ? big.coords_of_vertex(small.rep_vertex(k))
                              : big.coords_of_cycle(small.rep_cycle(k));
        if (arrow_forward) {
            row.flip(k);
            for (int i = 0; i < rel.dim_right; ++i)
                if (img.get(i)) row.flip(rel.dim_left + i);
        } else {
            row.flip(rel.dim_left + k);
            for (int i = 0; i < rel.dim_left; ++i)
                if (img.get(i)) row.flip(i);
        }
        rel.rows.push_back(std::move(row));
    }
    rel.canonicalize();
    return rel;
}

namespace {

void check_guard(const zigzag_filtration& f, const guard_limits& lim) {
    if (f.size() > lim.max_arrows)
        throw validation_error(0, "oracle guard: too many arrows");
    for (index_t i = 0; i <= f.size(); ++i)
        if (f.snapshot(i).size() > lim.max_simplices)
            throw validation_error(0, "oracle guard: snapshot too large");
}

struct prepared {
    std::vector<homology_space> spaces;
    std::vector<z2_relation> rels;  // rels[a-1] spans V_{a-1} (+) V_a
};

prepared prepare(const zigzag_filtration& f, int p) {
    prepared pr;
    for (index_t i = 0; i <= f.size(); ++i) pr.spaces.emplace_back(f.snapshot(i), p);
    for (index_t a = 1; a <= f.size(); ++a)
        pr.rels.push_back(induced_relation(pr.spaces[static_cast<std::size_t>(a - 1)],
                                           pr.spaces[static_cast<std::size_t>(a)],
                                           f.arrows[static_cast<std::size_t>(a - 1)].forward,
                                           p));
    return pr;
}

}  // namespace

barcode oracle_barcode(const zigzag_filtration& f, int p, guard_limits lim) {
    check_guard(f, lim);
    prepared pr = prepare(f, p);
    const index_t m = f.size();
    // r[i][j] = number of intervals containing [i, j]
    std::vector<std::vector<index_t>> r(static_cast<std::size_t>(m + 1),
                                        std::vector<index_t>(static_cast<std::size_t>(m + 1), 0));
    for (index_t i = 0; i <= m; ++i) {
        z2_relation acc = z2_relation::identity(pr.spaces[static_cast<std::size_t>(i)].dim());
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            pr.spaces[static_cast<std::size_t>(i)].dim();
        for (index_t j = i + 1; j <= m; ++j) {
            acc = compose(acc, pr.rels[static_cast<std::size_t>(j - 1)]);
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = relation_rank(acc);
        }
    }
    auto rr = [&](index_t b, index_t d) -> index_t {
        if (b < 0 || d > m) return 0;
        return r[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)];
    };
    barcode bc;
    bc.dim = p;
    for (index_t b = 0; b <= m; ++b) {
        for (index_t d = b; d <= m; ++d) {
            index_t mult = rr(b, d) - rr(b - 1, d) - rr(b, d + 1) + rr(b - 1, d + 1);
            GZ_CHECK(mult >= 0, "oracle multiplicity went negative");
            for (index_t c = 0; c < mult; ++c) bc.intervals.push_back({b, d});
        }
    }
    bc.canonicalize();
    for (index_t i = 0; i <= m; ++i)
        GZ_CHECK(bc.count_at(i) == pr.spaces[static_cast<std::size_t>(i)].dim(),
                 "oracle self-check failed: interval counts disagree with Betti numbers");
    return bc;
}

index_classes classify_indices(const zigzag_filtration& f, int p, guard_limits lim) {
    check_guard(f, lim);
    prepared pr = prepare(f, p);
    index_classes out;
    const index_t m = f.size();
    for (int k = 0; k < pr.spaces[0].dim(); ++k) out.positive.push_back(0);
    for (index_t a = 1; a <= m; ++a) {
        const z2_relation& rel = pr.rels[static_cast<std::size_t>(a - 1)];
        bool forward = f.arrows[static_cast<std::size_t>(a - 1)].forward;
        int dl = rel.dim_left, dr = rel.dim_right;
        // rank of the underlying map equals the rank of the image block
        z2_echelon img;
        for (const bitvec& row : rel.rows) {
            int off = forward ? dl : 0;
            int dim = forward ? dr : dl;
            bitvec v(dim);
            for (int i = 0; i < dim; ++i)
                if (row.get(off + i)) v.flip(i);
            img.insert(std::move(v));
        }
        int rank = img.rank();
        if (forward) {
            bool inj = (rank == dl), surj = (rank == dr);
            if (inj && !surj) out.positive.push_back(a);
            if (surj && !inj) out.negative.push_back(a - 1);
        } else {
            bool inj = (rank == dr), surj = (rank == dl);
            if (inj && !surj) out.negative.push_back(a - 1);
            if (surj && !inj) out.positive.push_back(a);
        }
    }
    for (int k = 0; k < pr.spaces[static_cast<std::size_t>(m)].dim(); ++k)
        out.negative.push_back(m);
    std::sort(out.positive.begin(), out.positive.end());
    std::sort(out.negative.begin(), out.negative.end());
    GZ_CHECK(out.positive.size() == out.negative.size(),
             "positive and negative index counts differ");
    return out;
}

std::vector<index_t> betti_profile(const zigzag_filtration& f, int p) {
    std::vector<index_t> out;
    for (index_t i = 0; i <= f.size(); ++i) out.push_back(homology_space(f.snapshot(i), p).dim());
    return out;
}

std::vector<index_t> component_count_profile(const zigzag_filtration& f) {
    std::vector<index_t> out;
    for (index_t i = 0; i <= f.size(); ++i) {
        std::vector<simplex> snap = f.snapshot(i);
        std::vector<vertex_t> verts;
        for (const simplex& s : snap)
            if (s.kind == simplex_kind::vertex) verts.push_back(s.v[0]);
        std::sort(verts.begin(), verts.end());
        dsu uf(verts.size());
        auto vpos = [&](vertex_t v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                                    verts.begin());
        };
        index_t comps = static_cast<index_t>(verts.size());
        for (const simplex& s : snap)
            if (s.kind == simplex_kind::edge && uf.unite(vpos(s.v[0]), vpos(s.v[1]))) --comps;
        out.push_back(comps);
    }
    return out;
}

std::vector<index_t> cycle_rank_profile(const zigzag_filtration& f) {
    std::vector<index_t> comps = component_count_profile(f);
    std::vector<index_t> out;
    for (index_t i = 0; i <= f.size(); ++i) {
        std::vector<simplex> snap = f.snapshot(i);
        index_t nv = 0, ne = 0;
        for (const simplex& s : snap) {
            if (s.kind == simplex_kind::vertex) ++nv;
            if (s.kind == simplex_kind::edge) ++ne;
        }
        out.push_back(ne - nv + comps[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace graphzz::oracle
