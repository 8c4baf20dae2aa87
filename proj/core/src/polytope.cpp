#include "polycol/polytope.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace polycol {

namespace {

constexpr const char* kAxisLetters = "xyzuvw";

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

Symmetry Symmetry::compose(const Symmetry& other) const {
    Symmetry out;
    out.facet_perm.resize(facet_perm.size());
    for (std::size_t f = 0; f < facet_perm.size(); ++f)
        out.facet_perm[f] = facet_perm[static_cast<std::size_t>(other.facet_perm[f])];
    out.sign = sign * other.sign;
    if (!vertex_perm.empty() && !other.vertex_perm.empty()) {
        out.vertex_perm.resize(vertex_perm.size());
        for (std::size_t v = 0; v < vertex_perm.size(); ++v)
            out.vertex_perm[v] = vertex_perm[static_cast<std::size_t>(other.vertex_perm[v])];
    }
    return out;
}

CombinatorialPolytope::CombinatorialPolytope(std::string name, int dim,
                                             std::vector<std::string> facet_ids,
                                             std::vector<std::string> facet_labels)
    : name_(std::move(name)),
      dim_(dim),
      facet_ids_(std::move(facet_ids)),
      facet_labels_(std::move(facet_labels)) {
    adjacency_.assign(facet_ids_.size(), std::vector<bool>(facet_ids_.size(), false));
}

int CombinatorialPolytope::facet_index(const std::string& id) const {
    for (int f = 0; f < facet_count(); ++f)
        if (facet_ids_[static_cast<std::size_t>(f)] == id) return f;
    return -1;
}

bool CombinatorialPolytope::adjacent(int f, int g) const {
    return adjacency_.at(static_cast<std::size_t>(f)).at(static_cast<std::size_t>(g));
}

std::vector<int> CombinatorialPolytope::dart(int f) const {
    if (f < 0 || f >= facet_count()) throw std::out_of_range("unknown facet");
    std::vector<int> out;
    for (int g = 0; g < facet_count(); ++g)
        if (adjacent(f, g)) out.push_back(g);
    return out;
}

void CombinatorialPolytope::set_adjacent(int f, int g) {
    adjacency_[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] = true;
    adjacency_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = true;
}

void CombinatorialPolytope::add_simple_vertex(std::vector<int> facets) {
    simple_vertices_.push_back(std::move(facets));
}
void CombinatorialPolytope::add_ideal_vertex(std::vector<int> facets) {
    ideal_vertices_.push_back(std::move(facets));
}
void CombinatorialPolytope::add_ideal_edge(std::vector<int> facets) {
    ideal_edges_.push_back(std::move(facets));
}
void CombinatorialPolytope::set_symmetries(std::vector<Symmetry> symmetries) {
    symmetries_ = std::move(symmetries);
}

PolytopePtr build_box(int d) {
    if (d < 2 || d > 6) throw std::invalid_argument("box dimension must be in 2..6");
    std::vector<std::string> ids, labels;
    for (int a = 0; a < d; ++a)
        for (int side = 0; side < 2; ++side) {
            std::string id = std::string(1, kAxisLetters[a]) + std::to_string(side);
            ids.push_back(id);
            labels.push_back(id);
        }
    auto box = std::make_shared<CombinatorialPolytope>("box" + std::to_string(d), d,
                                                       ids, labels);
    for (int f = 0; f < 2 * d; ++f)
        for (int g = f + 1; g < 2 * d; ++g)
            if (f / 2 != g / 2) box->set_adjacent(f, g);
    // One facet per axis, all side choices.
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> vertex;
        for (int a = 0; a < d; ++a) vertex.push_back(2 * a + ((mask >> a) & 1));
        box->add_simple_vertex(std::move(vertex));
    }
    // Signed axis permutations.
    std::vector<int> axes(static_cast<std::size_t>(d));
    std::iota(axes.begin(), axes.end(), 0);
    std::vector<Symmetry> symmetries;
    std::vector<int> perm = axes;
    do {
        int perm_sign = permutation_sign(perm);
        for (int flips = 0; flips < (1 << d); ++flips) {
            Symmetry s;
            s.facet_perm.resize(static_cast<std::size_t>(2 * d));
            for (int a = 0; a < d; ++a)
                for (int side = 0; side < 2; ++side) {
                    int image_side = side ^ ((flips >> a) & 1);
                    s.facet_perm[static_cast<std::size_t>(2 * a + side)] =
                        2 * perm[static_cast<std::size_t>(a)] + image_side;
                }
            s.sign = perm_sign * ((std::popcount(static_cast<unsigned>(flips)) % 2) ? -1 : 1);
            symmetries.push_back(std::move(s));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    box->set_symmetries(std::move(symmetries));
    return box;
}

std::pair<int, int> p4_edge(int facet) {
    static const std::array<std::pair<int, int>, 10> kEdges = {{{1, 2},
                                                                {1, 3},
                                                                {1, 4},
                                                                {1, 5},
                                                                {2, 3},
                                                                {2, 4},
                                                                {2, 5},
                                                                {3, 4},
                                                                {3, 5},
                                                                {4, 5}}};
    return kEdges.at(static_cast<std::size_t>(facet));
}

int p4_facet(int i, int j) {
    if (i > j) std::swap(i, j);
    for (int f = 0; f < 10; ++f)
        if (p4_edge(f) == std::make_pair(i, j)) return f;
    throw std::invalid_argument("not a K5 edge");
}

Symmetry p4_symmetry(const std::vector<int>& vertex_perm) {
    if (vertex_perm.size() != 5) throw std::invalid_argument("vertex permutation must have size 5");
    Symmetry s;
    s.vertex_perm = vertex_perm;
    s.facet_perm.resize(10);
    for (int f = 0; f < 10; ++f) {
        auto [i, j] = p4_edge(f);
        s.facet_perm[static_cast<std::size_t>(f)] =
            p4_facet(vertex_perm[static_cast<std::size_t>(i - 1)] + 1,
                     vertex_perm[static_cast<std::size_t>(j - 1)] + 1);
    }
    s.sign = permutation_sign(vertex_perm);
    return s;
}

PolytopePtr build_p4() {
    std::vector<std::string> ids, labels;
    for (int f = 0; f < 10; ++f) {
        auto [i, j] = p4_edge(f);
        ids.push_back(std::to_string(i) + std::to_string(j));
        std::string label(5, '1');
        label[static_cast<std::size_t>(i - 1)] = '0';
        label[static_cast<std::size_t>(j - 1)] = '0';
        labels.push_back(label);
    }
    auto p4 = std::make_shared<CombinatorialPolytope>("P4", 4, ids, labels);
    auto shares_vertex = [](int f, int g) {
        auto [a, b] = p4_edge(f);
        auto [c, d] = p4_edge(g);
        return a == c || a == d || b == c || b == d;
    };
    for (int f = 0; f < 10; ++f)
        for (int g = f + 1; g < 10; ++g)
            if (shares_vertex(f, g)) p4->set_adjacent(f, g);
    // Simple vertices: the five K5 vertex stars.
    for (int v = 1; v <= 5; ++v) {
        std::vector<int> star;
        for (int f = 0; f < 10; ++f) {
            auto [i, j] = p4_edge(f);
            if (i == v || j == v) star.push_back(f);
        }
        p4->add_simple_vertex(std::move(star));
    }
    // Ideal vertices: the five K4 sub-graphs, indexed by the omitted vertex.
    for (int v = 1; v <= 5; ++v) {
        std::vector<int> k4;
        for (int f = 0; f < 10; ++f) {
            auto [i, j] = p4_edge(f);
            if (i != v && j != v) k4.push_back(f);
        }
        p4->add_ideal_vertex(std::move(k4));
    }
    // Ideal edges: the ten K3 sub-graphs obtained by removing two vertices.
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) {
            std::vector<int> k3;
            for (int f = 0; f < 10; ++f) {
                auto [i, j] = p4_edge(f);
                if (i != u && i != v && j != u && j != v) k3.push_back(f);
            }
            p4->add_ideal_edge(std::move(k3));
        }
    // Symm(P4) is the symmetric group on the K5 vertex labels.
    std::vector<int> vp = {0, 1, 2, 3, 4};
    std::vector<Symmetry> symmetries;
    do {
        symmetries.push_back(p4_symmetry(vp));
    } while (std::next_permutation(vp.begin(), vp.end()));
    p4->set_symmetries(std::move(symmetries));
    return p4;
}

PolytopePtr build_polytope(const std::string& name) {
    if (name == "P4") return build_p4();
    if (name.rfind("box", 0) == 0 && name.size() == 4 && name[3] >= '2' && name[3] <= '6')
        return build_box(name[3] - '0');
    throw std::invalid_argument("unknown polytope: " + name);
}

VertexFigure vertex_figure(const CombinatorialPolytope& p4, int w) {
    if (p4.name() != "P4") throw std::invalid_argument("vertex figures are defined for P4");
    if (w < 0 || w >= 5) throw std::out_of_range("unknown ideal vertex");
    // K4 vertices are the labels other than w+1.
    std::vector<int> verts;
    for (int v = 1; v <= 5; ++v)
        if (v != w + 1) verts.push_back(v);
    // The three pairs of disjoint K4 edges become the cube's opposite faces.
    VertexFigure fig;
    fig.cube = build_box(3);
    fig.face_to_facet = {
        p4_facet(verts[0], verts[1]), p4_facet(verts[2], verts[3]),
        p4_facet(verts[0], verts[2]), p4_facet(verts[1], verts[3]),
        p4_facet(verts[0], verts[3]), p4_facet(verts[1], verts[2]),
    };
    return fig;
}

GF2Vector cusp_hyperplane_equation(int i) {
    if (i < 1 || i > 5) throw std::out_of_range("ideal vertex label must be in 1..5");
    GF2Vector f(5, 0x1f);
    return f.with_bit(i - 1, false);
}

}  // namespace polycol
