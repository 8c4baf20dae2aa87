#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycol {

/// A vector over GF(2) of dimension 1..64, stored as a machine word.
/// Coordinate 0 is the leftmost character of the serialised bit string,
/// e.g. "11100" is the vector (1,1,1,0,0).
class GF2Vector {
public:
    GF2Vector() = default;
    GF2Vector(int dim, std::uint64_t bits);
    static GF2Vector zero(int dim) { return GF2Vector(dim, 0); }
    static GF2Vector unit(int dim, int coord);
    static GF2Vector from_string(std::string_view s);

    int dim() const { return dim_; }
    bool bit(int i) const;
    GF2Vector with_bit(int i, bool value) const;
    bool is_zero() const { return bits_ == 0; }
    int weight() const;
    std::uint64_t raw() const { return bits_; }

    GF2Vector operator+(const GF2Vector& other) const;
    /// Standard bilinear pairing: parity of the AND of the two words.
    bool dot(const GF2Vector& other) const;

    /// First nonzero coordinate, or -1 for the zero vector.
    int leading_coord() const;

    /// Drop the coordinates listed in `coords` (sorted ascending), producing
    /// a vector of dimension dim() - coords.size().
    GF2Vector drop_coords(const std::vector<int>& coords) const;

    std::string str() const;

    bool operator==(const GF2Vector& other) const = default;
    /// Lexicographic order on the coordinate sequence (coordinate 0 first).
    std::strong_ordering operator<=>(const GF2Vector& other) const;

private:
    std::uint64_t bits_ = 0;
    int dim_ = 0;
};

/// A linear subspace of (Z/2Z)^s, kept as a reduced row-echelon basis with
/// pivots at increasing coordinates. Two equal subspaces compare equal.
class GF2Subspace {
public:
    explicit GF2Subspace(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GF2Vector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Inserts v, extending the basis if v is independent. Returns true if
    /// the dimension grew.
    bool add(const GF2Vector& v);

    bool contains(const GF2Vector& v) const;
    bool contains(const GF2Subspace& other) const;

    /// Canonical coset representative: v reduced by the RREF basis. Two
    /// vectors reduce equally iff their difference lies in the subspace.
    GF2Vector reduce(const GF2Vector& v) const;

    /// Index of the subspace in the ambient space, 2^(ambient - dim).
    std::uint64_t index_in_ambient() const;

    /// Coordinates of the coset [v] in the quotient by this subspace:
    /// reduce, then drop the pivot coordinates. Linear, dimension
    /// ambient_dim - dim.
    GF2Vector quotient_coords(const GF2Vector& v) const;

    GF2Subspace sum(const GF2Subspace& other) const;
    GF2Subspace intersect(const GF2Subspace& other) const;

    /// All 2^dim elements, in Gray-free deterministic order.
    std::vector<GF2Vector> elements() const;

    bool operator==(const GF2Subspace& other) const = default;

private:
    int ambient_dim_;
    std::vector<GF2Vector> basis_;
    std::vector<int> pivots_;
};

GF2Subspace span(const std::vector<GF2Vector>& vectors, int ambient_dim);
/// Span of a non-empty list; ambient dimension taken from the first vector.
/// Throws std::invalid_argument on mixed dimensions.
GF2Subspace span(const std::vector<GF2Vector>& vectors);

/// An affine map x -> Ax + t on (Z/2Z)^s with A invertible.
class AffineGF2Map {
public:
    static AffineGF2Map identity(int dim);
    static AffineGF2Map translation(const GF2Vector& t);
    /// Coordinate permutation: output coordinate perm[i] reads input i,
    /// i.e. the matrix of the permutation i -> perm[i].
    static AffineGF2Map coordinate_permutation(const std::vector<int>& perm,
                                               const GF2Vector& t);
    AffineGF2Map(std::vector<GF2Vector> rows, GF2Vector translation);

    int dim() const { return translation_.dim(); }
    const GF2Vector& translation() const { return translation_; }
    /// Row i of the linear part: output coordinate i is row_i . x.
    const std::vector<GF2Vector>& rows() const { return rows_; }

    GF2Vector apply(const GF2Vector& x) const;
    GF2Vector apply_linear(const GF2Vector& x) const;
    /// this after other: (a.compose(b))(x) == a(b(x)).
    AffineGF2Map compose(const AffineGF2Map& other) const;
    AffineGF2Map inverse() const;
    bool is_identity() const;
    bool linear_is_identity() const;

    bool operator==(const AffineGF2Map& other) const = default;

private:
    std::vector<GF2Vector> rows_;
    GF2Vector translation_;
};

/// A functional f with f.c == 1 for every colour c, if one exists.
/// Existence is equivalent to orientability of the colouring.
std::optional<GF2Vector> orientation_functional(
    const std::vector<GF2Vector>& colours, int ambient_dim);

/// Solves f.v = rhs[i] for each (vectors[i], rhs[i]); any solution.
std::optional<GF2Vector> solve_functional(const std::vector<GF2Vector>& vectors,
                                          const std::vector<bool>& rhs,
                                          int ambient_dim);

/// An invertible linear map sending from[i] to to[i] for all i, if the
/// assignment is consistent and rank-preserving; extended arbitrarily
/// (but deterministically) outside the span of `from`.
std::optional<AffineGF2Map> linear_extension(const std::vector<GF2Vector>& from,
                                             const std::vector<GF2Vector>& to,
                                             int ambient_dim);

}  // namespace polycol
