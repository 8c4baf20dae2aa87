#include "polycol/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polycol {

namespace {

void check_dims(int a, int b) {
    if (a != b)
        throw std::invalid_argument("GF2 dimension mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

}  // namespace

GF2Vector::GF2Vector(int dim, std::uint64_t bits) : bits_(bits), dim_(dim) {
    if (dim < 1 || dim > 64)
        throw std::invalid_argument("GF2Vector dimension must be in 1..64");
    if (dim < 64) bits_ &= (std::uint64_t{1} << dim) - 1;
}

GF2Vector GF2Vector::unit(int dim, int coord) {
    GF2Vector v(dim, 0);
    return v.with_bit(coord, true);
}

GF2Vector GF2Vector::from_string(std::string_view s) {
    if (s.empty() || s.size() > 64)
        throw std::invalid_argument("bit string must have length 1..64");
    GF2Vector v(static_cast<int>(s.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v = v.with_bit(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may contain only 0 and 1: '" +
                                        std::string(s) + "'");
    }
    return v;
}

bool GF2Vector::bit(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("GF2Vector coordinate");
    return (bits_ >> i) & 1;
}

GF2Vector GF2Vector::with_bit(int i, bool value) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("GF2Vector coordinate");
    GF2Vector v = *this;
    if (value)
        v.bits_ |= std::uint64_t{1} << i;
    else
        v.bits_ &= ~(std::uint64_t{1} << i);
    return v;
}

int GF2Vector::weight() const { return std::popcount(bits_); }

GF2Vector GF2Vector::operator+(const GF2Vector& other) const {
    check_dims(dim_, other.dim_);
    return GF2Vector(dim_, bits_ ^ other.bits_);
}

bool GF2Vector::dot(const GF2Vector& other) const {
    check_dims(dim_, other.dim_);
    return std::popcount(bits_ & other.bits_) & 1;
}

int GF2Vector::leading_coord() const {
    if (bits_ == 0) return -1;
    return std::countr_zero(bits_);
}

GF2Vector GF2Vector::drop_coords(const std::vector<int>& coords) const {
    int out_dim = dim_ - static_cast<int>(coords.size());
    if (out_dim < 1) throw std::invalid_argument("drop_coords would leave no coordinates");
    GF2Vector out(out_dim, 0);
    int j = 0;
    std::size_t k = 0;
    for (int i = 0; i < dim_; ++i) {
        if (k < coords.size() && coords[k] == i) {
            ++k;
            continue;
        }
        if (bit(i)) out = out.with_bit(j, true);
        ++j;
    }
    return out;
}

std::string GF2Vector::str() const {
    std::string s(static_cast<std::size_t>(dim_), '0');
    for (int i = 0; i < dim_; ++i)
        if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

std::strong_ordering GF2Vector::operator<=>(const GF2Vector& other) const {
    if (auto c = dim_ <=> other.dim_; c != 0) return c;
    for (int i = 0; i < dim_; ++i) {
        // '1' sorts after '0', matching the string representation.
        if (auto c = static_cast<int>(bit(i)) <=> static_cast<int>(other.bit(i)); c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

GF2Subspace::GF2Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1 || ambient_dim > 64)
        throw std::invalid_argument("ambient dimension must be in 1..64");
}

bool GF2Subspace::add(const GF2Vector& v) {
    check_dims(v.dim(), ambient_dim_);
    GF2Vector r = reduce(v);
    if (r.is_zero()) return false;
    int pivot = r.leading_coord();
    // Keep the basis reduced: clear the new pivot in existing rows.
    for (auto& b : basis_)
        if (b.bit(pivot)) b = b + r;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    basis_.insert(basis_.begin() + idx, r);
    return true;
}

GF2Vector GF2Subspace::reduce(const GF2Vector& v) const {
    check_dims(v.dim(), ambient_dim_);
    GF2Vector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (r.bit(pivots_[i])) r = r + basis_[i];
    return r;
}

bool GF2Subspace::contains(const GF2Vector& v) const { return reduce(v).is_zero(); }

bool GF2Subspace::contains(const GF2Subspace& other) const {
    return std::ranges::all_of(other.basis_,
                               [&](const GF2Vector& b) { return contains(b); });
}

std::uint64_t GF2Subspace::index_in_ambient() const {
    return std::uint64_t{1} << (ambient_dim_ - dim());
}

GF2Vector GF2Subspace::quotient_coords(const GF2Vector& v) const {
    return reduce(v).drop_coords(pivots_);
}

GF2Subspace GF2Subspace::sum(const GF2Subspace& other) const {
    check_dims(ambient_dim_, other.ambient_dim_);
    GF2Subspace s = *this;
    for (const auto& b : other.basis_) s.add(b);
    return s;
}

GF2Subspace GF2Subspace::intersect(const GF2Subspace& other) const {
    check_dims(ambient_dim_, other.ambient_dim_);
    // Small dimensions throughout: filter the elements of the smaller space.
    const GF2Subspace& small = dim() <= other.dim() ? *this : other;
    const GF2Subspace& big = dim() <= other.dim() ? other : *this;
    GF2Subspace out(ambient_dim_);
    for (const auto& v : small.elements())
        if (big.contains(v)) out.add(v);
    return out;
}

std::vector<GF2Vector> GF2Subspace::elements() const {
    std::vector<GF2Vector> out;
    out.reserve(std::size_t{1} << dim());
    out.push_back(GF2Vector::zero(ambient_dim_));
    for (const auto& b : basis_) {
        std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + b);
    }
    return out;
}

GF2Subspace span(const std::vector<GF2Vector>& vectors, int ambient_dim) {
    GF2Subspace s(ambient_dim);
    for (const auto& v : vectors) s.add(v);
    return s;
}

GF2Subspace span(const std::vector<GF2Vector>& vectors) {
    if (vectors.empty())
        throw std::invalid_argument("span of empty list needs an explicit ambient dimension");
    return span(vectors, vectors.front().dim());
}

AffineGF2Map::AffineGF2Map(std::vector<GF2Vector> rows, GF2Vector translation)
    : rows_(std::move(rows)), translation_(translation) {
    if (rows_.size() != static_cast<std::size_t>(translation_.dim()))
        throw std::invalid_argument("affine map must be square");
    for (const auto& r : rows_) check_dims(r.dim(), translation_.dim());
}

AffineGF2Map AffineGF2Map::identity(int dim) {
    std::vector<GF2Vector> rows;
    rows.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) rows.push_back(GF2Vector::unit(dim, i));
    return AffineGF2Map(std::move(rows), GF2Vector::zero(dim));
}

AffineGF2Map AffineGF2Map::translation(const GF2Vector& t) {
    AffineGF2Map m = identity(t.dim());
    m.translation_ = t;
    return m;
}

AffineGF2Map AffineGF2Map::coordinate_permutation(const std::vector<int>& perm,
                                                  const GF2Vector& t) {
    int dim = t.dim();
    if (perm.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("permutation size mismatch");
    std::vector<GF2Vector> rows(static_cast<std::size_t>(dim), GF2Vector::zero(dim));
    // Output coordinate perm[i] equals input coordinate i.
    for (int i = 0; i < dim; ++i)
        rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
            GF2Vector::unit(dim, i);
    return AffineGF2Map(std::move(rows), t);
}

GF2Vector AffineGF2Map::apply_linear(const GF2Vector& x) const {
    check_dims(x.dim(), dim());
    GF2Vector y = GF2Vector::zero(dim());
    for (int i = 0; i < dim(); ++i)
        if (rows_[static_cast<std::size_t>(i)].dot(x)) y = y.with_bit(i, true);
    return y;
}

GF2Vector AffineGF2Map::apply(const GF2Vector& x) const {
    return apply_linear(x) + translation_;
}

AffineGF2Map AffineGF2Map::compose(const AffineGF2Map& other) const {
    check_dims(dim(), other.dim());
    // (A,t) o (B,u): x -> A(Bx + u) + t.
    std::vector<GF2Vector> rows;
    rows.reserve(static_cast<std::size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        GF2Vector row = GF2Vector::zero(dim());
        for (int j = 0; j < dim(); ++j)
            if (rows_[static_cast<std::size_t>(i)].bit(j))
                row = row + other.rows_[static_cast<std::size_t>(j)];
        rows.push_back(row);
    }
    return AffineGF2Map(std::move(rows), apply(other.translation_));
}

AffineGF2Map AffineGF2Map::inverse() const {
    int n = dim();
    std::vector<GF2Vector> left = rows_;
    std::vector<GF2Vector> right;
    right.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) right.push_back(GF2Vector::unit(n, i));
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (left[static_cast<std::size_t>(r)].bit(col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("affine map is singular");
        std::swap(left[static_cast<std::size_t>(col)], left[static_cast<std::size_t>(pivot)]);
        std::swap(right[static_cast<std::size_t>(col)], right[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            if (left[static_cast<std::size_t>(r)].bit(col)) {
                left[static_cast<std::size_t>(r)] =
                    left[static_cast<std::size_t>(r)] + left[static_cast<std::size_t>(col)];
                right[static_cast<std::size_t>(r)] =
                    right[static_cast<std::size_t>(r)] + right[static_cast<std::size_t>(col)];
            }
        }
    }
    AffineGF2Map inv(std::move(right), GF2Vector::zero(n));
    inv.translation_ = inv.apply_linear(translation_);
    return inv;
}

bool AffineGF2Map::linear_is_identity() const {
    for (int i = 0; i < dim(); ++i)
        if (rows_[static_cast<std::size_t>(i)] != GF2Vector::unit(dim(), i)) return false;
    return true;
}

bool AffineGF2Map::is_identity() const {
    return translation_.is_zero() && linear_is_identity();
}

std::optional<GF2Vector> solve_functional(const std::vector<GF2Vector>& vectors,
                                          const std::vector<bool>& rhs,
                                          int ambient_dim) {
    if (vectors.size() != rhs.size())
        throw std::invalid_argument("solve_functional: size mismatch");
    // Gaussian elimination on the system v . f = rhs over GF(2).
    struct Row {
        GF2Vector coeffs;
        bool rhs;
    };
    std::vector<Row> rows;
    GF2Subspace seen(ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        check_dims(vectors[i].dim(), ambient_dim);
        Row row{vectors[i], rhs[i]};
        for (const auto& r : rows)
            if (row.coeffs.bit(r.coeffs.leading_coord())) {
                row.coeffs = row.coeffs + r.coeffs;
                row.rhs = row.rhs != r.rhs;
            }
        if (row.coeffs.is_zero()) {
            if (row.rhs) return std::nullopt;
            continue;
        }
        rows.push_back(row);
        std::ranges::sort(rows, [](const Row& a, const Row& b) {
            return a.coeffs.leading_coord() < b.coeffs.leading_coord();
        });
    }
    // Back substitution; free coordinates are set to zero.
    GF2Vector f = GF2Vector::zero(ambient_dim);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        int pivot = it->coeffs.leading_coord();
        GF2Vector rest = it->coeffs.with_bit(pivot, false);
        f = f.with_bit(pivot, it->rhs != rest.dot(f));
    }
    return f;
}

std::optional<GF2Vector> orientation_functional(const std::vector<GF2Vector>& colours,
                                                int ambient_dim) {
    return solve_functional(colours, std::vector<bool>(colours.size(), true),
                            ambient_dim);
}

std::optional<AffineGF2Map> linear_extension(const std::vector<GF2Vector>& from,
                                             const std::vector<GF2Vector>& to,
                                             int ambient_dim) {
    if (from.size() != to.size())
        throw std::invalid_argument("linear_extension: size mismatch");
    // Basis pairs (a_i, b_i) with the a_i independent; consistency means every
    // dependency among the a's holds among the b's, and ranks agree.
    std::vector<GF2Vector> dom, img;
    GF2Subspace dom_span(ambient_dim), img_span(ambient_dim);
    auto express = [&](const std::vector<GF2Vector>& basis,
                       GF2Vector v) -> std::optional<std::uint64_t> {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            // Greedy elimination works because dom is kept in echelon order.
            if (v.bit(basis[i].leading_coord())) {
                v = v + basis[i];
                mask ^= std::uint64_t{1} << i;
            }
        }
        if (!v.is_zero()) return std::nullopt;
        return mask;
    };
    for (std::size_t i = 0; i < from.size(); ++i) {
        check_dims(from[i].dim(), ambient_dim);
        check_dims(to[i].dim(), ambient_dim);
        if (!dom_span.contains(from[i])) {
            // Reduce to echelon form pairwise so `express` stays greedy.
            GF2Vector a = from[i], b = to[i];
            for (std::size_t j = 0; j < dom.size(); ++j)
                if (a.bit(dom[j].leading_coord())) {
                    a = a + dom[j];
                    b = b + img[j];
                }
            dom.push_back(a);
            img.push_back(b);
            std::size_t k = dom.size() - 1;
            while (k > 0 && dom[k].leading_coord() < dom[k - 1].leading_coord()) {
                std::swap(dom[k], dom[k - 1]);
                std::swap(img[k], img[k - 1]);
                --k;
            }
            dom_span.add(from[i]);
            if (!img_span.add(to[i])) return std::nullopt;  // rank drop
        } else {
            auto mask = express(dom, from[i]);
            if (!mask) return std::nullopt;
            GF2Vector expected = GF2Vector::zero(ambient_dim);
            for (std::size_t j = 0; j < img.size(); ++j)
                if ((*mask >> j) & 1) expected = expected + img[j];
            if (expected != to[i]) return std::nullopt;
        }
    }
    // Extend both sides with unit vectors to full bases.
    for (int c = 0; c < ambient_dim && dom.size() < static_cast<std::size_t>(ambient_dim);
         ++c) {
        GF2Vector e = GF2Vector::unit(ambient_dim, c);
        if (!dom_span.contains(e)) {
            GF2Vector a = e;
            for (std::size_t j = 0; j < dom.size(); ++j)
                if (a.bit(dom[j].leading_coord())) a = a + dom[j];
            dom.push_back(a);
            dom_span.add(e);
            // Pick any unit vector outside the current image span.
            for (int c2 = 0; c2 < ambient_dim; ++c2) {
                GF2Vector e2 = GF2Vector::unit(ambient_dim, c2);
                if (!img_span.contains(e2)) {
                    img.push_back(e2);
                    img_span.add(e2);
                    break;
                }
            }
            std::size_t k = dom.size() - 1;
            while (k > 0 && dom[k].leading_coord() < dom[k - 1].leading_coord()) {
                std::swap(dom[k], dom[k - 1]);
                std::swap(img[k], img[k - 1]);
                --k;
            }
        }
    }
    // Build the matrix: column e_c maps to sum of img-parts of its expression.
    std::vector<GF2Vector> cols;
    cols.reserve(static_cast<std::size_t>(ambient_dim));
    for (int c = 0; c < ambient_dim; ++c) {
        GF2Vector v = GF2Vector::unit(ambient_dim, c);
        GF2Vector out = GF2Vector::zero(ambient_dim);
        for (std::size_t j = 0; j < dom.size(); ++j)
            if (v.bit(dom[j].leading_coord())) {
                v = v + dom[j];
                out = out + img[j];
            }
        cols.push_back(out);
    }
    std::vector<GF2Vector> rows(static_cast<std::size_t>(ambient_dim),
                                GF2Vector::zero(ambient_dim));
    for (int r = 0; r < ambient_dim; ++r)
        for (int c = 0; c < ambient_dim; ++c)
            if (cols[static_cast<std::size_t>(c)].bit(r))
                rows[static_cast<std::size_t>(r)] =
                    rows[static_cast<std::size_t>(r)].with_bit(c, true);
    return AffineGF2Map(std::move(rows), GF2Vector::zero(ambient_dim));
}

}  // namespace polycol
