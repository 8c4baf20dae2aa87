#include "polycol/flatclass.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace polycol {

const char* to_string(WolfType t) {
    switch (t) {
        case WolfType::Torus: return "Torus";
        case WolfType::G2: return "G2";
        default: return "Other";
    }
}

const char* to_string(CubeClass c) {
    switch (c) {
        case CubeClass::ThreeTorus: return "ThreeTorus";
        case CubeClass::HyperellipticBundle: return "HyperellipticBundle";
        default: return "Other";
    }
}

EuclideanIsometry EuclideanIsometry::identity(int d) {
    return EuclideanIsometry{std::vector<int>(static_cast<std::size_t>(d), 1),
                             std::vector<long long>(static_cast<std::size_t>(d), 0)};
}

bool EuclideanIsometry::is_translation() const {
    return std::ranges::all_of(signs, [](int s) { return s == 1; });
}

EuclideanIsometry EuclideanIsometry::compose(const EuclideanIsometry& other) const {
    EuclideanIsometry out = *this;
    for (int a = 0; a < dim(); ++a) {
        auto i = static_cast<std::size_t>(a);
        out.signs[i] = signs[i] * other.signs[i];
        out.trans[i] = signs[i] * other.trans[i] + trans[i];
    }
    return out;
}

EuclideanIsometry EuclideanIsometry::inverse() const {
    EuclideanIsometry out = *this;
    for (std::size_t i = 0; i < signs.size(); ++i) out.trans[i] = -signs[i] * trans[i];
    return out;
}

std::vector<std::vector<long long>> lattice_hnf(
    const std::vector<std::vector<long long>>& generators, int d) {
    std::vector<std::vector<long long>> rows;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != d)
            throw std::invalid_argument("lattice vector of wrong dimension");
        rows.push_back(g);
    }
    std::vector<std::vector<long long>> pivots;
    std::vector<int> pivot_cols;
    for (int col = 0; col < d; ++col) {
        // Euclid on the column entries of the remaining rows.
        while (true) {
            int best = -1;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (rows[r][static_cast<std::size_t>(col)] != 0 &&
                    (best < 0 ||
                     std::llabs(rows[r][static_cast<std::size_t>(col)]) <
                         std::llabs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)])))
                    best = static_cast<int>(r);
            if (best < 0) break;
            auto& m = rows[static_cast<std::size_t>(best)];
            bool others = false;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == best || rows[r][static_cast<std::size_t>(col)] == 0)
                    continue;
                others = true;
                long long q = rows[r][static_cast<std::size_t>(col)] /
                              m[static_cast<std::size_t>(col)];
                for (int j = 0; j < d; ++j)
                    rows[r][static_cast<std::size_t>(j)] -=
                        q * m[static_cast<std::size_t>(j)];
            }
            if (!others) {
                if (m[static_cast<std::size_t>(col)] < 0)
                    for (auto& x : m) x = -x;
                pivots.push_back(m);
                pivot_cols.push_back(col);
                rows.erase(rows.begin() + best);
                break;
            }
        }
    }
    // Reduce earlier rows' entries in each later pivot column.
    for (std::size_t j = 1; j < pivots.size(); ++j) {
        int c = pivot_cols[j];
        long long p = pivots[j][static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < j; ++i) {
            long long e = pivots[i][static_cast<std::size_t>(c)];
            long long q = e / p;
            if (e - q * p < 0) --q;  // floor division
            if (q != 0)
                for (int x = 0; x < d; ++x)
                    pivots[i][static_cast<std::size_t>(x)] -=
                        q * pivots[j][static_cast<std::size_t>(x)];
        }
    }
    return pivots;
}

long long lattice_determinant(const std::vector<std::vector<long long>>& hnf_rows) {
    long long det = 1;
    for (std::size_t i = 0; i < hnf_rows.size(); ++i) {
        long long p = 0;
        for (long long x : hnf_rows[i])
            if (x != 0) {
                p = x;
                break;
            }
        det *= p;
    }
    return det;
}

SubspaceTriple opposite_pair_spans(const Colouring& cube) {
    if (cube.polytope().name() != "box3")
        throw std::invalid_argument("opposite-pair spans require a cube colouring");
    auto pair_span = [&](int a) {
        return span({cube.colour(2 * a), cube.colour(2 * a + 1)}, cube.s());
    };
    return SubspaceTriple{pair_span(0), pair_span(1), pair_span(2)};
}

std::uint64_t cube_point_group_order(const Colouring& c) {
    if (c.polytope().name() != "box3")
        throw std::invalid_argument("point group computation requires a box3 colouring");
    // A deck transformation with sign pattern (s_x, s_y, s_z) exists iff a
    // cell offset with coordinate a odd exactly when s_a = -1 has vanishing
    // accumulated colour label.  Along one axis the achievable labels are
    // {0, c0 + c1} for even offsets and {c0, c1} for odd ones, so the test
    // reduces to a membership check over at most eight sums.
    auto axis_labels = [&](int a, bool odd) {
        std::vector<GF2Vector> out;
        if (odd) {
            out.push_back(c.colour(2 * a));
            out.push_back(c.colour(2 * a + 1));
        } else {
            out.push_back(GF2Vector::zero(c.s()));
            out.push_back(c.colour(2 * a) + c.colour(2 * a + 1));
        }
        return out;
    };
    std::uint64_t order = 0;
    // Rotation patterns only: the identity and the three double sign flips.
    for (int axis = -1; axis < 3; ++axis) {
        bool found = false;
        for (const GF2Vector& u : axis_labels(0, axis >= 0 && axis != 0))
            for (const GF2Vector& v : axis_labels(1, axis >= 0 && axis != 1))
                for (const GF2Vector& w : axis_labels(2, axis >= 0 && axis != 2))
                    if ((u + v + w).is_zero()) found = true;
        if (found) ++order;
    }
    return order;
}

CubeClass classify_cube_colouring(const Colouring& c) {
    if (c.polytope().name() != "box3")
        throw std::invalid_argument("cube classification requires a box3 colouring");
    if (!check_proper(c).proper)
        throw std::invalid_argument("cube classification requires a proper colouring");
    if (!orientability_witness(c))
        throw std::invalid_argument("cube classification requires an orientable colouring");

    SubspaceTriple t = opposite_pair_spans(c);
    const GF2Subspace* v[3] = {&t.vx, &t.vy, &t.vz};
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, cc = (a + 2) % 3;
        GF2Subspace inter = v[a]->intersect(v[b]->sum(*v[cc]));
        if (inter.dim() == 0) return CubeClass::ThreeTorus;
        if (v[a]->dim() == 2 && inter.dim() == 1) {
            GF2Vector w = inter.basis().front();
            if (w != c.colour(2 * a) + c.colour(2 * a + 1)) continue;
            GF2Vector wb = c.colour(2 * b) + c.colour(2 * b + 1);
            GF2Vector wc = c.colour(2 * cc) + c.colour(2 * cc + 1);
            if (w == wb || w == wc || w == wb + wc) return CubeClass::ThreeTorus;
        }
    }
    // The subspace conditions only separate the torus from the rest.  From
    // image dimension 4 onwards the deck group can contain half-turns about
    // two different axes, which is neither of the two bundle-over-a-circle
    // shapes; detect that exactly via the point group.
    if (cube_point_group_order(c) > 2) return CubeClass::Other;
    return CubeClass::HyperellipticBundle;
}

namespace {

// The deck group accumulator: a crystallographic group of axis-diagonal
// isometries, tracked as a sign-pattern transversal plus its translation
// lattice, closed with Schreier generators.
class DeckGroup {
public:
    explicit DeckGroup(int d) : d_(d) {
        reps_[0] = EuclideanIsometry::identity(d);
    }

    bool add_generator(const EuclideanIsometry& g) {
        auto before = state();
        gens_.push_back(g);
        gens_.push_back(g.inverse());
        close();
        return state() != before;
    }

    std::uint64_t point_group_order() const { return reps_.size(); }
    const std::vector<std::vector<long long>>& lattice() const { return hnf_; }
    /// 0 while the translation lattice is not yet full rank.
    long long covolume() const {
        if (static_cast<int>(hnf_.size()) < d_) return 0;
        return lattice_determinant(hnf_) / static_cast<long long>(reps_.size());
    }
    std::vector<unsigned> masks() const {
        std::vector<unsigned> out;
        for (const auto& [m, r] : reps_) out.push_back(m);
        return out;
    }

private:
    std::pair<std::size_t, std::vector<std::vector<long long>>> state() const {
        return {reps_.size(), hnf_};
    }

    unsigned mask(const EuclideanIsometry& g) const {
        unsigned m = 0;
        for (int a = 0; a < d_; ++a)
            if (g.signs[static_cast<std::size_t>(a)] < 0) m |= 1u << a;
        return m;
    }

    bool add_lattice_vector(const std::vector<long long>& v) {
        if (std::ranges::all_of(v, [](long long x) { return x == 0; })) return false;
        auto gens = hnf_;
        gens.push_back(v);
        auto next = lattice_hnf(gens, d_);
        if (next == hnf_) return false;
        hnf_ = std::move(next);
        lattice_vectors_.push_back(v);
        return true;
    }

    void close() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<EuclideanIsometry> reps;
            for (const auto& [m, r] : reps_) reps.push_back(r);
            for (const auto& r : reps)
                for (const auto& g : gens_) {
                    EuclideanIsometry p = g.compose(r);
                    unsigned pm = mask(p);
                    auto it = reps_.find(pm);
                    if (it == reps_.end()) {
                        reps_[pm] = p;
                        changed = true;
                    } else {
                        EuclideanIsometry diff = p.compose(it->second.inverse());
                        changed |= add_lattice_vector(diff.trans);
                    }
                }
            // Close the lattice under conjugation by the transversal.
            std::vector<std::vector<long long>> vecs = lattice_vectors_;
            for (const auto& [m, r] : reps_)
                for (const auto& v : vecs) {
                    std::vector<long long> w(v.size());
                    for (std::size_t a = 0; a < v.size(); ++a)
                        w[a] = r.signs[a] * v[a];
                    changed |= add_lattice_vector(w);
                }
        }
    }

    int d_;
    std::map<unsigned, EuclideanIsometry> reps_;
    std::vector<EuclideanIsometry> gens_;
    std::vector<std::vector<long long>> lattice_vectors_;
    std::vector<std::vector<long long>> hnf_;
};

}  // namespace

FlatManifoldData box_walk_deck_group(const Colouring& c) {
    const auto& p = c.polytope();
    if (p.name().rfind("box", 0) != 0 || (p.dim() != 2 && p.dim() != 3))
        throw std::invalid_argument("reflection walks support box2 and box3 colourings");
    if (!check_proper(c).proper)
        throw std::invalid_argument("reflection walk requires a proper colouring");
    if (!orientability_witness(c))
        throw std::invalid_argument("reflection walk requires an orientable colouring");

    const int d = p.dim();
    const long long target = static_cast<long long>(c.copy_count());

    // The colour of the tessellation plane x_a = k depends on k mod 2; the
    // accumulated label of a cell depends on each coordinate mod 4.
    auto axis_label = [&](int a, long long n) {
        long long r = ((n % 4) + 4) % 4;
        switch (r) {
            case 1: return c.colour(2 * a + 1);
            case 2: return c.colour(2 * a) + c.colour(2 * a + 1);
            case 3: return c.colour(2 * a);
            default: return GF2Vector::zero(c.s());
        }
    };
    auto cell_label = [&](const std::vector<long long>& n) {
        GF2Vector v = GF2Vector::zero(c.s());
        for (int a = 0; a < d; ++a) v = v + axis_label(a, n[static_cast<std::size_t>(a)]);
        return v;
    };
    auto cell_isometry = [&](const std::vector<long long>& n) {
        EuclideanIsometry g = EuclideanIsometry::identity(d);
        for (int a = 0; a < d; ++a) {
            auto i = static_cast<std::size_t>(a);
            if (n[i] % 2 == 0) {
                g.trans[i] = n[i];
            } else {
                g.signs[i] = -1;
                g.trans[i] = n[i] + 1;
            }
        }
        return g;
    };

    DeckGroup group(d);
    FlatManifoldData out;
    out.dim = d;
    const long long cap = 4 * target;
    bool done = false;
    for (long long radius = 1; radius <= cap && !done; ++radius) {
        // All cells of the shell max|n_a| = radius, in lexicographic order.
        std::vector<long long> n(static_cast<std::size_t>(d), -radius);
        while (true) {
            bool on_shell = std::ranges::any_of(
                n, [&](long long x) { return x == radius || x == -radius; });
            if (on_shell && cell_label(n).is_zero()) {
                EuclideanIsometry g = cell_isometry(n);
                if (group.add_generator(g)) out.deck_generators.push_back(g);
                if (group.covolume() == target) {
                    done = true;
                    break;
                }
                if (group.covolume() != 0 && group.covolume() < target)
                    throw std::logic_error("deck group exceeded the expected covolume");
            }
            int a = d - 1;
            while (a >= 0 && n[static_cast<std::size_t>(a)] == radius) {
                n[static_cast<std::size_t>(a)] = -radius;
                --a;
            }
            if (a < 0) break;
            ++n[static_cast<std::size_t>(a)];
        }
    }
    if (!done)
        throw std::runtime_error("reflection walk failed to close within its radius cap");

    out.translation_lattice = group.lattice();
    out.point_group_order = group.point_group_order();
    out.volume = static_cast<std::uint64_t>(group.covolume());
    auto masks = group.masks();
    if (masks.size() == 1) {
        out.wolf_type = WolfType::Torus;
    } else if (d == 3 && masks.size() == 2) {
        unsigned nontrivial = masks[0] | masks[1];
        out.wolf_type =
            std::popcount(nontrivial) == 2 ? WolfType::G2 : WolfType::Other;
    } else {
        out.wolf_type = WolfType::Other;
    }
    return out;
}

}  // namespace polycol
