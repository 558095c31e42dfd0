#include "graphzz/filtration.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "graphzz/duality.hpp"

namespace graphzz {

simplex simplex::vertex(vertex_t a) { return {simplex_kind::vertex, {a, 0, 0}}; }

simplex simplex::edge(vertex_t a, vertex_t b) {
    if (a == b) throw validation_error(0, "edge with repeated vertex id");
    if (a > b) std::swap(a, b);
    return {simplex_kind::edge, {a, b, 0}};
}

simplex simplex::triangle(vertex_t a, vertex_t b, vertex_t c) {
    if (a == b || a == c || b == c) throw validation_error(0, "triangle with repeated vertex id");
    std::array<vertex_t, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return {simplex_kind::triangle, v};
}

std::size_t simplex_hash::operator()(const simplex& s) const {
    std::size_t h = static_cast<std::size_t>(s.kind);
    for (vertex_t x : s.v) h = h * 1000003u ^ std::hash<vertex_t>()(static_cast<vertex_t>(x));
    return h;
}

bool zigzag_filtration::has_triangles() const {
    for (const simplex& s : base)
        if (s.kind == simplex_kind::triangle) return true;
    for (const arrow& a : arrows)
        if (a.s.kind == simplex_kind::triangle) return true;
    return false;
}

namespace {

// Presence state with enough bookkeeping for the closure checks.
struct replay_state {
    std::unordered_set<simplex, simplex_hash> present;
    std::unordered_map<vertex_t, index_t> vertex_deg;       // incident edges
    std::unordered_map<simplex, index_t, simplex_hash> edge_cof;  // incident triangles

    bool has(const simplex& s) const { return present.count(s) != 0; }

    void check_faces(const simplex& s, index_t at) const {
        if (s.kind == simplex_kind::edge) {
            if (!has(simplex::vertex(s.v[0])) || !has(simplex::vertex(s.v[1])))
                throw validation_error(at, "dangling face: edge endpoint missing");
        } else if (s.kind == simplex_kind::triangle) {
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!has(simplex::edge(s.v[i], s.v[j])))
                        throw validation_error(at, "dangling face: triangle edge missing");
        }
    }

    void check_no_cofaces(const simplex& s, index_t at) const {
        if (s.kind == simplex_kind::vertex) {
            auto it = vertex_deg.find(s.v[0]);
            if (it != vertex_deg.end() && it->second > 0)
                throw validation_error(at, "delete with coface: vertex still has edges");
        } else if (s.kind == simplex_kind::edge) {
            auto it = edge_cof.find(s);
            if (it != edge_cof.end() && it->second > 0)
                throw validation_error(at, "delete with coface: edge still has triangles");
        }
    }

    void insert(const simplex& s, index_t at) {
        if (has(s)) throw validation_error(at, "duplicate add: simplex already present");
        check_faces(s, at);
        present.insert(s);
        if (s.kind == simplex_kind::edge) {
            ++vertex_deg[s.v[0]];
            ++vertex_deg[s.v[1]];
        } else if (s.kind == simplex_kind::triangle) {
            ++edge_cof[simplex::edge(s.v[0], s.v[1])];
            ++edge_cof[simplex::edge(s.v[0], s.v[2])];
            ++edge_cof[simplex::edge(s.v[1], s.v[2])];
        }
    }

    void erase(const simplex& s, index_t at) {
        if (!has(s)) throw validation_error(at, "delete missing: simplex not present");
        check_no_cofaces(s, at);
        present.erase(s);
        if (s.kind == simplex_kind::edge) {
            --vertex_deg[s.v[0]];
            --vertex_deg[s.v[1]];
        } else if (s.kind == simplex_kind::triangle) {
            --edge_cof[simplex::edge(s.v[0], s.v[1])];
            --edge_cof[simplex::edge(s.v[0], s.v[2])];
            --edge_cof[simplex::edge(s.v[1], s.v[2])];
        }
    }
};

void replay(const zigzag_filtration& f, index_t upto,
            const std::function<void(const replay_state&)>& visit) {
    replay_state st;
    // The base complex is inserted in face order regardless of declaration order.
    std::vector<simplex> base_sorted = f.base;
    std::stable_sort(base_sorted.begin(), base_sorted.end(),
                     [](const simplex& a, const simplex& b) { return a.dim() < b.dim(); });
    for (const simplex& s : base_sorted) st.insert(s, 0);
    if (visit) visit(st);
    for (index_t i = 1; i <= upto; ++i) {
        const arrow& a = f.arrows[static_cast<std::size_t>(i - 1)];
        if (a.s.dim() > f.dim)
            throw validation_error(i, "simplex dimension exceeds declared filtration dim");
        if (a.forward)
            st.insert(a.s, i);
        else
            st.erase(a.s, i);
        if (visit) visit(st);
    }
}

}  // namespace

void zigzag_filtration::validate() const {
    for (const simplex& s : base)
        if (s.dim() > dim) throw validation_error(0, "base simplex dimension exceeds dim");
    replay(*this, size(), nullptr);
    if (dim == 2 && !coords.empty()) {
        std::unordered_set<vertex_t> seen;
        for (const coord2& c : coords)
            if (!seen.insert(c.id).second)
                throw validation_error(0, "duplicate coordinate declaration");
    }
}

std::vector<simplex> zigzag_filtration::snapshot(index_t i) const {
    GZ_CHECK(i >= 0 && i <= size(), "snapshot index out of range");
    std::vector<simplex> out;
    index_t step = 0;
    replay(*this, i, [&](const replay_state& st) {
        if (step++ == i) {
            out.assign(st.present.begin(), st.present.end());
            std::sort(out.begin(), out.end());
        }
    });
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;  // trailing comment
        // split compact "+v" / "-e" forms
        if ((t[0] == '+' || t[0] == '-') && t.size() > 1) {
            toks.push_back(t.substr(0, 1));
            toks.push_back(t.substr(1));
        } else {
            toks.push_back(t);
        }
    }
    return toks;
}

vertex_t parse_id(const std::string& t, int lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw parse_error(lineno, "expected a non-negative integer id, got \"" + t + "\"");
    }
}

std::int64_t parse_int(const std::string& t, int lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw parse_error(lineno, "expected an integer, got \"" + t + "\"");
    }
}

simplex parse_simplex(const std::vector<std::string>& toks, std::size_t at, int lineno) {
    if (at >= toks.size()) throw parse_error(lineno, "missing simplex kind");
    const std::string& k = toks[at];
    auto need = [&](std::size_t n) {
        if (toks.size() != at + 1 + n) throw parse_error(lineno, "wrong id count for '" + k + "'");
    };
    try {
        if (k == "v") {
            need(1);
            return simplex::vertex(parse_id(toks[at + 1], lineno));
        }
        if (k == "e") {
            need(2);
            return simplex::edge(parse_id(toks[at + 1], lineno), parse_id(toks[at + 2], lineno));
        }
        if (k == "t") {
            need(3);
            return simplex::triangle(parse_id(toks[at + 1], lineno), parse_id(toks[at + 2], lineno),
                                     parse_id(toks[at + 3], lineno));
        }
    } catch (const validation_error& e) {
        throw parse_error(lineno, e.what());
    }
    throw parse_error(lineno, "unknown simplex kind '" + k + "'");
}

}  // namespace

zigzag_filtration parse_filtration(const std::string& text) {
    zigzag_filtration f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool arrows_started = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "dim") {
            if (toks.size() != 2) throw parse_error(lineno, "dim takes one argument");
            std::int64_t d = parse_int(toks[1], lineno);
            if (d != 1 && d != 2) throw parse_error(lineno, "dim must be 1 or 2");
            f.dim = static_cast<int>(d);
        } else if (head == "coord") {
            if (toks.size() != 4) throw parse_error(lineno, "coord takes ID X Y");
            if (arrows_started) throw parse_error(lineno, "coord after first arrow");
            f.coords.push_back({parse_id(toks[1], lineno), parse_int(toks[2], lineno),
                                parse_int(toks[3], lineno)});
        } else if (head == "base") {
            if (arrows_started) throw parse_error(lineno, "base after first arrow");
            f.base.push_back(parse_simplex(toks, 1, lineno));
        } else if (head == "+" || head == "-") {
            arrows_started = true;
            f.arrows.push_back({head == "+", parse_simplex(toks, 1, lineno)});
        } else {
            throw parse_error(lineno, "unrecognized directive '" + head + "'");
        }
    }
    f.validate();
    if (f.dim == 2 && !f.coords.empty()) validate_embedding(f);
    return f;
}

namespace {

void write_simplex(std::ostream& out, const simplex& s) {
    switch (s.kind) {
        case simplex_kind::vertex: out << "v " << s.v[0]; break;
        case simplex_kind::edge: out << "e " << s.v[0] << ' ' << s.v[1]; break;
        case simplex_kind::triangle:
            out << "t " << s.v[0] << ' ' << s.v[1] << ' ' << s.v[2];
            break;
    }
}

}  // namespace

std::string serialize_filtration(const zigzag_filtration& f) {
    std::ostringstream out;
    out << "dim " << f.dim << '\n';
    for (const coord2& c : f.coords) out << "coord " << c.id << ' ' << c.x << ' ' << c.y << '\n';
    for (const simplex& s : f.base) {
        out << "base ";
        write_simplex(out, s);
        out << '\n';
    }
    for (const arrow& a : f.arrows) {
        out << (a.forward ? "+ " : "- ");
        write_simplex(out, a.s);
        out << '\n';
    }
    return out.str();
}

}  // namespace graphzz
