#include "graphzz/generator.hpp"

#include <random>
#include <unordered_map>
#include <unordered_set>

namespace graphzz {

gen_model parse_model(const std::string& name) {
    if (name == "dynamic-er") return gen_model::dynamic_er;
    if (name == "insert-heavy") return gen_model::insert_heavy;
    if (name == "churn") return gen_model::churn;
    throw validation_error(0, "unknown generator model '" + name + "'");
}

std::string model_name(gen_model model) {
    switch (model) {
        case gen_model::dynamic_er: return "dynamic-er";
        case gen_model::insert_heavy: return "insert-heavy";
        case gen_model::churn: return "churn";
    }
    return "?";
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    // unbiased and identical across platforms
    GZ_CHECK(k > 0, "bounded sample from an empty range");
    std::uint64_t limit = ~0ull - ~0ull % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % k;
}

// dynamic set with O(1) uniform sampling
struct sample_set {
    std::vector<std::uint64_t> items;
    std::unordered_map<std::uint64_t, std::size_t> pos;

    bool contains(std::uint64_t x) const { return pos.count(x) != 0; }
    std::size_t size() const { return items.size(); }
    void insert(std::uint64_t x) {
        if (pos.count(x)) return;
        pos[x] = items.size();
        items.push_back(x);
    }
    void erase(std::uint64_t x) {
        auto it = pos.find(x);
        if (it == pos.end()) return;
        std::size_t i = it->second;
        items[i] = items.back();
        pos[items[i]] = i;
        items.pop_back();
        pos.erase(it);
    }
    std::uint64_t sample(std::mt19937_64& rng) const {
        return items[bounded(rng, items.size())];
    }
};

int forward_percent(gen_model model) {
    switch (model) {
        case gen_model::dynamic_er: return 65;
        case gen_model::insert_heavy: return 85;
        case gen_model::churn: return 50;
    }
    return 50;
}

}  // namespace

zigzag_filtration generate_random(index_t n_vertices, index_t m, std::uint64_t seed,
                                  gen_model model) {
    if (n_vertices < 1) throw validation_error(0, "generator needs at least one vertex");
    if (m < 0) throw validation_error(0, "negative arrow count");
    std::mt19937_64 rng(seed);
    const std::uint64_t n = static_cast<std::uint64_t>(n_vertices);

    sample_set present_v, absent_v, isolated_v, present_e;
    std::vector<index_t> degree(static_cast<std::size_t>(n_vertices), 0);
    for (std::uint64_t v = 0; v < n; ++v) absent_v.insert(v);
    auto ekey = [&](std::uint64_t a, std::uint64_t b) {
        if (a > b) std::swap(a, b);
        return a * n + b;
    };

    zigzag_filtration f;
    f.dim = 1;
    const int fwd_pct = forward_percent(model);

    for (index_t step = 0; step < m; ++step) {
        std::uint64_t p = present_v.size();
        std::uint64_t addable_v = absent_v.size();
        std::uint64_t addable_e = (p >= 2 ? p * (p - 1) / 2 - present_e.size() : 0);
        std::uint64_t removable_v = isolated_v.size();
        std::uint64_t removable_e = present_e.size();
        bool forward = bounded(rng, 100) < static_cast<std::uint64_t>(fwd_pct);
        if (forward && addable_v + addable_e == 0) forward = false;
        if (!forward && removable_v + removable_e == 0) forward = true;
        GZ_CHECK(forward ? addable_v + addable_e > 0 : removable_v + removable_e > 0,
                 "no legal move");

        if (forward) {
            std::uint64_t pick = bounded(rng, addable_v + addable_e);
            if (pick < addable_v) {
                std::uint64_t v = absent_v.sample(rng);
                absent_v.erase(v);
                present_v.insert(v);
                isolated_v.insert(v);
                f.arrows.push_back({true, simplex::vertex(static_cast<vertex_t>(v))});
            } else {
                // rejection sampling over pairs of present vertices
                std::uint64_t a, b;
                while (true) {
                    a = present_v.sample(rng);
                    b = present_v.sample(rng);
                    if (a != b && !present_e.contains(ekey(a, b))) break;
                }
                if (a > b) std::swap(a, b);
                present_e.insert(ekey(a, b));
                isolated_v.erase(a);
                isolated_v.erase(b);
                ++degree[a];
                ++degree[b];
                f.arrows.push_back({true, simplex::edge(static_cast<vertex_t>(a),
                                                        static_cast<vertex_t>(b))});
            }
        } else {
            std::uint64_t pick = bounded(rng, removable_v + removable_e);
            if (pick < removable_v) {
                std::uint64_t v = isolated_v.sample(rng);
                isolated_v.erase(v);
                present_v.erase(v);
                absent_v.insert(v);
                f.arrows.push_back({false, simplex::vertex(static_cast<vertex_t>(v))});
            } else {
                std::uint64_t key = present_e.sample(rng);
                std::uint64_t a = key / n, b = key % n;
                present_e.erase(key);
                if (--degree[a] == 0) isolated_v.insert(a);
                if (--degree[b] == 0) isolated_v.insert(b);
                f.arrows.push_back({false, simplex::edge(static_cast<vertex_t>(a),
                                                         static_cast<vertex_t>(b))});
            }
        }
    }
    return f;
}

zigzag_filtration generate_planar(index_t grid, index_t m, std::uint64_t seed,
                                  bool with_triangles) {
    if (grid < 2) throw validation_error(0, "planar generator needs a grid of at least 2x2");
    std::mt19937_64 rng(seed);
    const index_t k = grid;
    auto vid = [&](index_t i, index_t j) { return i * k + j; };

    // ground complex: triangulated grid
    std::vector<simplex> gv, ge, gt;
    for (index_t i = 0; i < k; ++i)
        for (index_t j = 0; j < k; ++j) gv.push_back(simplex::vertex(vid(i, j)));
    for (index_t i = 0; i < k; ++i)
        for (index_t j = 0; j < k; ++j) {
            if (j + 1 < k) ge.push_back(simplex::edge(vid(i, j), vid(i, j + 1)));
            if (i + 1 < k) ge.push_back(simplex::edge(vid(i, j), vid(i + 1, j)));
            if (i + 1 < k && j + 1 < k)
                ge.push_back(simplex::edge(vid(i, j), vid(i + 1, j + 1)));
        }
    if (with_triangles)
        for (index_t i = 0; i + 1 < k; ++i)
            for (index_t j = 0; j + 1 < k; ++j) {
                gt.push_back(simplex::triangle(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)));
                gt.push_back(simplex::triangle(vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)));
            }

    std::unordered_set<simplex, simplex_hash> present;
    std::unordered_map<vertex_t, index_t> vdeg;
    std::unordered_map<simplex, index_t, simplex_hash> ecof;
    auto edges_of = [](const simplex& t) {
        return std::array<simplex, 3>{simplex::edge(t.v[0], t.v[1]),
                                      simplex::edge(t.v[0], t.v[2]),
                                      simplex::edge(t.v[1], t.v[2])};
    };

    zigzag_filtration f;
    f.dim = 2;
    for (index_t i = 0; i < k; ++i)
        for (index_t j = 0; j < k; ++j) f.coords.push_back({vid(i, j), 4 * j, 4 * i});

    for (index_t step = 0; step < m; ++step) {
        std::vector<simplex> addable, removable;
        for (const simplex& s : gv) {
            if (!present.count(s)) addable.push_back(s);
            else if (vdeg[s.v[0]] == 0) removable.push_back(s);
        }
        for (const simplex& s : ge) {
            if (!present.count(s)) {
                if (present.count(simplex::vertex(s.v[0])) &&
                    present.count(simplex::vertex(s.v[1])))
                    addable.push_back(s);
            } else if (ecof[s] == 0) {
                removable.push_back(s);
            }
        }
        for (const simplex& s : gt) {
            if (!present.count(s)) {
                auto es = edges_of(s);
                if (present.count(es[0]) && present.count(es[1]) && present.count(es[2]))
                    addable.push_back(s);
            } else {
                removable.push_back(s);
            }
        }
        bool forward = bounded(rng, 100) < 55;
        if (forward && addable.empty()) forward = false;
        if (!forward && removable.empty()) forward = true;
        const std::vector<simplex>& pool = forward ? addable : removable;
        GZ_CHECK(!pool.empty(), "no legal move on the grid complex");
        simplex s = pool[bounded(rng, pool.size())];
        f.arrows.push_back({forward, s});
        if (forward) {
            present.insert(s);
            if (s.kind == simplex_kind::edge) {
                ++vdeg[s.v[0]];
                ++vdeg[s.v[1]];
            } else if (s.kind == simplex_kind::triangle) {
                for (const simplex& e : edges_of(s)) ++ecof[e];
            }
        } else {
            present.erase(s);
            if (s.kind == simplex_kind::edge) {
                --vdeg[s.v[0]];
                --vdeg[s.v[1]];
            } else if (s.kind == simplex_kind::triangle) {
                for (const simplex& e : edges_of(s)) --ecof[e];
            }
        }
    }
    return f;
}

}  // namespace graphzz
