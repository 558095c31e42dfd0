#include "graphzz/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "graphzz/zigzag_zero.hpp"

namespace graphzz {

namespace {

using int128 = __int128;

struct point {
    std::int64_t x = 0, y = 0;
};

int128 cross(point o, point a, point b) {
    return static_cast<int128>(a.x - o.x) * (b.y - o.y) -
           static_cast<int128>(a.y - o.y) * (b.x - o.x);
}

int sign(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment(point p, point a, point b) {
    if (sign(cross(a, b, p)) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// proper or improper intersection of closed segments
bool segments_intersect(point a, point b, point c, point d) {
    int d1 = sign(cross(c, d, a));
    int d2 = sign(cross(c, d, b));
    int d3 = sign(cross(a, b, c));
    int d4 = sign(cross(a, b, d));
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return (d1 == 0 && on_segment(a, c, d)) || (d2 == 0 && on_segment(b, c, d)) ||
           (d3 == 0 && on_segment(c, a, b)) || (d4 == 0 && on_segment(d, a, b));
}

std::vector<simplex> ground_complex(const zigzag_filtration& f) {
    std::set<simplex> all(f.base.begin(), f.base.end());
    for (const arrow& a : f.arrows) all.insert(a.s);
    return {all.begin(), all.end()};
}

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
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<std::vector<simplex>> q_connected_components(const std::vector<simplex>& complex,
                                                         int q) {
    GZ_CHECK(q == 1 || q == 2, "q-connected components supported for q in {1, 2}");
    std::vector<simplex> qs;
    for (const simplex& s : complex)
        if (s.dim() == q) qs.push_back(s);
    std::sort(qs.begin(), qs.end());
    dsu uf(qs.size());
    // union q-simplices sharing a (q-1)-face
    std::map<std::vector<vertex_t>, int> face_owner;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const simplex& s = qs[i];
        std::vector<std::vector<vertex_t>> faces;
        if (q == 1) {
            faces = {{s.v[0]}, {s.v[1]}};
        } else {
            faces = {{s.v[0], s.v[1]}, {s.v[0], s.v[2]}, {s.v[1], s.v[2]}};
        }
        for (auto& fc : faces) {
            auto [it, fresh] = face_owner.try_emplace(fc, static_cast<int>(i));
            if (!fresh) uf.unite(static_cast<int>(i), it->second);
        }
    }
    std::map<int, std::vector<simplex>> classes;
    for (std::size_t i = 0; i < qs.size(); ++i)
        classes[uf.find(static_cast<int>(i))].push_back(qs[i]);
    std::vector<std::vector<simplex>> out;
    for (auto& [root, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::vector<simplex> component_closure(const std::vector<simplex>& complex,
                                       const std::vector<simplex>& q_class) {
    GZ_CHECK(!q_class.empty(), "closure of an empty class");
    int q = q_class.front().dim();
    std::set<simplex> in_class(q_class.begin(), q_class.end());
    std::set<simplex> out;
    for (const simplex& s : q_class) {
        out.insert(s);
        if (q == 1) {
            out.insert(simplex::vertex(s.v[0]));
            out.insert(simplex::vertex(s.v[1]));
        } else if (q == 2) {
            out.insert(simplex::edge(s.v[0], s.v[1]));
            out.insert(simplex::edge(s.v[0], s.v[2]));
            out.insert(simplex::edge(s.v[1], s.v[2]));
            out.insert(simplex::vertex(s.v[0]));
            out.insert(simplex::vertex(s.v[1]));
            out.insert(simplex::vertex(s.v[2]));
        }
    }
    for (const simplex& s : complex) {
        if (s.dim() != q + 1) continue;
        bool all_in = true;
        if (q == 1) {
            all_in = in_class.count(simplex::edge(s.v[0], s.v[1])) &&
                     in_class.count(simplex::edge(s.v[0], s.v[2])) &&
                     in_class.count(simplex::edge(s.v[1], s.v[2]));
        }
        if (all_in) out.insert(s);
    }
    return {out.begin(), out.end()};
}

restricted_filtration restrict_filtration(const zigzag_filtration& f,
                                          std::vector<simplex> subcomplex) {
    restricted_filtration rf;
    rf.base = &f;
    std::sort(subcomplex.begin(), subcomplex.end());
    rf.subcomplex = std::move(subcomplex);
    rf.keep.reserve(f.arrows.size());
    for (const arrow& a : f.arrows)
        rf.keep.push_back(std::binary_search(rf.subcomplex.begin(), rf.subcomplex.end(), a.s));
    return rf;
}

dual_complex planar_dual_graph(const std::vector<simplex>& closure_complex,
                               const std::vector<coord2>& coords) {
    std::unordered_map<vertex_t, point> pos;
    for (const coord2& c : coords) pos[c.id] = {c.x, c.y};

    std::vector<vertex_t> verts;
    std::vector<simplex> edges, tris;
    for (const simplex& s : closure_complex) {
        if (s.kind == simplex_kind::vertex) verts.push_back(s.v[0]);
        if (s.kind == simplex_kind::edge) edges.push_back(s);
        if (s.kind == simplex_kind::triangle) tris.push_back(s);
    }
    for (vertex_t v : verts)
        if (!pos.count(v))
            throw validation_error(0, "missing coordinates for vertex " + std::to_string(v));

    // rotation system: incident arcs sorted counter-clockwise around each vertex
    const std::size_t ne = edges.size();
    GZ_CHECK(ne > 0, "dual graph of an edgeless complex");
    // arcs 2*e (lo->hi) and 2*e+1 (hi->lo)
    auto arc_src = [&](std::size_t a) { return edges[a / 2].v[a % 2 == 0 ? 0 : 1]; };
    auto arc_dst = [&](std::size_t a) { return edges[a / 2].v[a % 2 == 0 ? 1 : 0]; };
    std::map<vertex_t, std::vector<std::size_t>> out_arcs;
    for (std::size_t a = 0; a < 2 * ne; ++a) out_arcs[arc_src(a)].push_back(a);
    auto angle_less = [&](vertex_t o, std::size_t a, std::size_t b) {
        point po = pos[o], pa = pos[arc_dst(a)], pb = pos[arc_dst(b)];
        auto half = [&](point p) { return (p.y < po.y || (p.y == po.y && p.x < po.x)) ? 1 : 0; };
        int ha = half(pa), hb = half(pb);
        if (ha != hb) return ha < hb;
        return sign(cross(po, pa, pb)) > 0;
    };
    std::map<std::size_t, std::size_t> order_at_src;  // arc -> rank around its source
    for (auto& entry : out_arcs) {
        vertex_t at = entry.first;
        auto& arcs = entry.second;
        std::sort(arcs.begin(), arcs.end(),
                  [&](std::size_t a, std::size_t b) { return angle_less(at, a, b); });
        for (std::size_t i = 0; i < arcs.size(); ++i) order_at_src[arcs[i]] = i;
    }
    auto reverse_arc = [&](std::size_t a) { return a ^ 1; };
    // next arc of the face with the interior on the left: the arc after the
    // reversal of a in clockwise order around a's destination
    auto next_arc = [&](std::size_t a) {
        std::size_t r = reverse_arc(a);
        const auto& arcs = out_arcs[arc_src(r)];
        std::size_t i = order_at_src[r];
        return arcs[(i + arcs.size() - 1) % arcs.size()];
    };

    // trace faces
    std::vector<int> face_of(2 * ne, -1);
    std::vector<int128> face_area;
    std::vector<std::vector<std::size_t>> face_arcs;
    for (std::size_t a0 = 0; a0 < 2 * ne; ++a0) {
        if (face_of[a0] >= 0) continue;
        int fid = static_cast<int>(face_area.size());
        face_area.push_back(0);
        face_arcs.emplace_back();
        std::size_t a = a0;
        do {
            face_of[a] = fid;
            point s = pos[arc_src(a)], t = pos[arc_dst(a)];
            face_area[static_cast<std::size_t>(fid)] +=
                static_cast<int128>(s.x) * t.y - static_cast<int128>(s.y) * t.x;
            face_arcs[static_cast<std::size_t>(fid)].push_back(a);
            a = next_arc(a);
        } while (a != a0);
    }
    std::size_t outer = face_area.size();
    for (std::size_t fc = 0; fc < face_area.size(); ++fc)
        if (face_area[fc] <= 0) {
            GZ_CHECK(outer == face_area.size(),
                     "embedded component has several unbounded faces; is it connected?");
            outer = fc;
        }
    GZ_CHECK(outer < face_area.size(), "no unbounded face found");

    // classify faces: bounded triangular faces of present triangles are
    // simplex vertices; everything else is a void
    std::set<simplex> tri_set(tris.begin(), tris.end());
    std::vector<simplex> face_tri(face_area.size(), simplex{});
    std::vector<bool> is_simplex_face(face_area.size(), false);
    std::set<simplex> claimed;
    for (std::size_t fc = 0; fc < face_area.size(); ++fc) {
        if (fc == outer || face_arcs[fc].size() != 3) continue;
        vertex_t a = arc_src(face_arcs[fc][0]);
        vertex_t b = arc_src(face_arcs[fc][1]);
        vertex_t c = arc_src(face_arcs[fc][2]);
        if (a == b || a == c || b == c) continue;
        simplex t = simplex::triangle(a, b, c);
        if (tri_set.count(t)) {
            is_simplex_face[fc] = true;
            face_tri[fc] = t;
            GZ_CHECK(claimed.insert(t).second, "triangle traced as two faces");
        }
    }
    for (const simplex& t : tris)
        GZ_CHECK(claimed.count(t), "present triangle is not a face of the subdivision");

    dual_complex dc;
    std::vector<index_t> dual_id(face_area.size(), -1);
    for (std::size_t fc = 0; fc < face_area.size(); ++fc)
        if (!is_simplex_face[fc]) dual_id[fc] = dc.num_voids++;
    index_t next = dc.num_voids;
    for (std::size_t fc = 0; fc < face_area.size(); ++fc)
        if (is_simplex_face[fc]) {
            dual_id[fc] = next++;
            dc.vertex_of[face_tri[fc]] = dual_id[fc];
        }
    dc.num_dual_vertices = next;
    for (std::size_t e = 0; e < ne; ++e) {
        index_t left = dual_id[static_cast<std::size_t>(face_of[2 * e])];
        index_t right = dual_id[static_cast<std::size_t>(face_of[2 * e + 1])];
        dc.edge_of[edges[e]] = {left, right};
    }
    return dc;
}

graph_event_seq dual_filtration(const restricted_filtration& rf, const dual_complex& dc) {
    graph_event_seq seq;
    seq.n_vertices = static_cast<std::uint32_t>(dc.num_dual_vertices);
    for (index_t v = 0; v < dc.num_dual_vertices; ++v)
        seq.initial_vertices.push_back(static_cast<std::uint32_t>(v));
    std::uint64_t next_eid = 0;
    std::unordered_map<simplex, std::uint64_t, simplex_hash> live_dual_edge;
    std::map<simplex, std::pair<index_t, index_t>> in_order(dc.edge_of.begin(),
                                                            dc.edge_of.end());
    for (const auto& [s, ends] : in_order) {
        std::uint64_t eid = next_eid++;
        live_dual_edge[s] = eid;
        seq.initial_edges.emplace_back(static_cast<std::uint32_t>(ends.first),
                                       static_cast<std::uint32_t>(ends.second), eid);
    }

    const zigzag_filtration& f = *rf.base;
    for (std::size_t i = 0; i < f.arrows.size(); ++i) {
        graph_event ev;  // defaults to noop
        const arrow& a = f.arrows[i];
        if (rf.keep[i] && a.s.kind == simplex_kind::edge) {
            auto ends = dc.edge_of.at(a.s);
            ev.u = static_cast<std::uint32_t>(ends.first);
            ev.v = static_cast<std::uint32_t>(ends.second);
            if (a.forward) {
                ev.kind = graph_event::op::del_edge;
                ev.eid = live_dual_edge.at(a.s);
                live_dual_edge.erase(a.s);
            } else {
                ev.kind = graph_event::op::add_edge;
                ev.eid = next_eid++;
                live_dual_edge[a.s] = ev.eid;
            }
        } else if (rf.keep[i] && a.s.kind == simplex_kind::triangle) {
            index_t d = dc.vertex_of.at(a.s);
            ev.u = ev.v = static_cast<std::uint32_t>(d);
            ev.kind = a.forward ? graph_event::op::del_vertex : graph_event::op::add_vertex;
        }
        seq.events.push_back(ev);
    }
    return seq;
}

namespace {

// live-component bookkeeping is inside zero_state; here only orchestration
barcode codim1_component(const zigzag_filtration& f, const std::vector<simplex>& closure,
                         const dual_complex& dc) {
    restricted_filtration rf = restrict_filtration(f, closure);
    graph_event_seq seq = dual_filtration(rf, dc);
    barcode bc = compute_barcode0(seq);
    // the ambient void lives through the whole range; drop exactly one copy
    interval full{0, f.size()};
    auto it = std::find(bc.intervals.begin(), bc.intervals.end(), full);
    GZ_CHECK(it != bc.intervals.end(),
             "dual filtration lost the ambient component; dual graph is inconsistent");
    bc.intervals.erase(it);
    return bc;
}

}  // namespace

barcode compute_codim1(const zigzag_filtration& f, const std::vector<dual_complex>& supplied) {
    if (f.dim != 2)
        throw validation_error(0, "codimension-one computation expects a dim-2 filtration");
    if (supplied.empty()) {
        if (f.coords.empty())
            throw validation_error(
                0, "no embedding coordinates and no supplied dual graphs: for p > 2 the dual "
                   "graph must be provided by the caller");
        validate_embedding(f);
    }
    std::vector<simplex> ground = ground_complex(f);
    std::vector<std::vector<simplex>> classes = q_connected_components(ground, 1);
    if (!supplied.empty() && supplied.size() != classes.size())
        throw validation_error(0, "supplied dual graphs do not match the component count");
    barcode out;
    out.dim = 1;
    for (std::size_t l = 0; l < classes.size(); ++l) {
        std::vector<simplex> closure = component_closure(ground, classes[l]);
        dual_complex dc =
            supplied.empty() ? planar_dual_graph(closure, f.coords) : supplied[l];
        barcode part = codim1_component(f, closure, dc);
        out.intervals.insert(out.intervals.end(), part.intervals.begin(), part.intervals.end());
    }
    out.canonicalize();
    return out;
}

void validate_embedding(const zigzag_filtration& f) {
    std::unordered_map<vertex_t, point> pos;
    for (const coord2& c : f.coords) pos[c.id] = {c.x, c.y};
    std::vector<simplex> ground = ground_complex(f);
    std::vector<vertex_t> verts;
    std::vector<simplex> edges, tris;
    for (const simplex& s : ground) {
        if (s.kind == simplex_kind::vertex) verts.push_back(s.v[0]);
        if (s.kind == simplex_kind::edge) edges.push_back(s);
        if (s.kind == simplex_kind::triangle) tris.push_back(s);
    }
    for (vertex_t v : verts)
        if (!pos.count(v))
            throw validation_error(0, "missing coordinates for vertex " + std::to_string(v));
    std::map<std::pair<std::int64_t, std::int64_t>, vertex_t> seen;
    for (vertex_t v : verts) {
        point p = pos[v];
        auto [it, fresh] = seen.try_emplace({p.x, p.y}, v);
        if (!fresh)
            throw validation_error(0, "vertices " + std::to_string(it->second) + " and " +
                                          std::to_string(v) + " share coordinates");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        point a = pos[edges[i].v[0]], b = pos[edges[i].v[1]];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            point c = pos[edges[j].v[0]], d = pos[edges[j].v[1]];
            bool share = edges[i].v[0] == edges[j].v[0] || edges[i].v[0] == edges[j].v[1] ||
                         edges[i].v[1] == edges[j].v[0] || edges[i].v[1] == edges[j].v[1];
            if (share) continue;  // shared endpoints may touch there
            if (segments_intersect(a, b, c, d))
                throw validation_error(0, "embedding has crossing edges");
        }
        for (vertex_t v : verts) {
            if (v == edges[i].v[0] || v == edges[i].v[1]) continue;
            if (on_segment(pos[v], a, b))
                throw validation_error(0, "vertex lies in the interior of an edge");
        }
    }
    for (const simplex& t : tris) {
        point a = pos[t.v[0]], b = pos[t.v[1]], c = pos[t.v[2]];
        if (sign(cross(a, b, c)) == 0)
            throw validation_error(0, "degenerate (collinear) triangle");
        for (vertex_t v : verts) {
            if (v == t.v[0] || v == t.v[1] || v == t.v[2]) continue;
            point p = pos[v];
            int s1 = sign(cross(a, b, p)), s2 = sign(cross(b, c, p)), s3 = sign(cross(c, a, p));
            bool inside = (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
            if (inside)
                throw validation_error(0, "vertex lies inside a filled triangle");
        }
    }
}

std::vector<dual_complex> parse_dual_complexes(const std::string& text) {
    std::vector<dual_complex> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    dual_complex* cur = nullptr;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "component") {
            out.emplace_back();
            cur = &out.back();
        } else if (head == "voids") {
            if (!cur) throw parse_error(lineno, "voids before component");
            long long n;
            if (!(ls >> n) || n < 0) throw parse_error(lineno, "voids takes a count");
            cur->num_voids = n;
            cur->num_dual_vertices = std::max(cur->num_dual_vertices, cur->num_voids);
        } else if (head == "dualv") {
            if (!cur) throw parse_error(lineno, "dualv before component");
            std::string kind;
            long long a, b, c, id;
            if (!(ls >> kind >> a >> b >> c >> id) || kind != "t")
                throw parse_error(lineno, "dualv takes: t A B C DUALID");
            cur->vertex_of[simplex::triangle(a, b, c)] = id;
            cur->num_dual_vertices = std::max(cur->num_dual_vertices, static_cast<index_t>(id + 1));
        } else if (head == "duale") {
            if (!cur) throw parse_error(lineno, "duale before component");
            std::string kind;
            long long a, b, x, y;
            if (!(ls >> kind >> a >> b >> x >> y) || kind != "e")
                throw parse_error(lineno, "duale takes: e A B DUALID DUALID");
            cur->edge_of[simplex::edge(a, b)] = {x, y};
            cur->num_dual_vertices = std::max({cur->num_dual_vertices,
                                               static_cast<index_t>(x + 1),
                                               static_cast<index_t>(y + 1)});
        } else {
            throw parse_error(lineno, "unrecognized dual-graph directive '" + head + "'");
        }
    }
    return out;
}

std::string serialize_dual_complexes(const std::vector<dual_complex>& dcs) {
    std::ostringstream out;
    for (const dual_complex& dc : dcs) {
        out << "component\n";
        out << "voids " << dc.num_voids << '\n';
        std::map<simplex, index_t> vs(dc.vertex_of.begin(), dc.vertex_of.end());
        for (auto& [s, id] : vs)
            out << "dualv t " << s.v[0] << ' ' << s.v[1] << ' ' << s.v[2] << ' ' << id << '\n';
        std::map<simplex, std::pair<index_t, index_t>> es(dc.edge_of.begin(), dc.edge_of.end());
        for (auto& [s, ends] : es)
            out << "duale e " << s.v[0] << ' ' << s.v[1] << ' ' << ends.first << ' '
                << ends.second << '\n';
    }
    return out.str();
}

}  // namespace graphzz
