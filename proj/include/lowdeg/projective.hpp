#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lowdeg/matrix.hpp"
#include "lowdeg/scalar.hpp"

namespace lowdeg::linalg {

/// A point of projective n-space, stored with its first nonzero homogeneous
/// coordinate scaled to 1, so equal points have equal coordinates.
class ProjPoint {
public:
    /// Throws DomainError for the zero vector, FieldMismatchError for mixed fields.
    explicit ProjPoint(std::vector<Scalar> coords);
    static ProjPoint from_ints(Field field, const std::vector<long>& coords);

    int ambient() const { return static_cast<int>(coords_.size()) - 1; }
    const Field& field() const { return field_; }
    std::span<const Scalar> coords() const { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    std::string to_string() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    Field field_;
    std::vector<Scalar> coords_;
};

/// A linear subspace of projective n-space. The basis of the underlying
/// vector space is kept in reduced row-echelon form, which is the canonical
/// representative: two subspaces are equal iff their bases are equal. The
/// orthogonal complement is computed once at construction and reused by
/// meet and membership tests.
class ProjSubspace {
public:
    /// Row space of `generators`; generators need not be independent.
    ProjSubspace(int ambient, const Matrix& generators);

    static ProjSubspace empty(int ambient, Field field);
    static ProjSubspace whole(int ambient, Field field);
    static ProjSubspace from_ints(Field field, int ambient,
                                  const std::vector<std::vector<long>>& rows);

    int ambient() const { return ambient_; }
    const Field& field() const { return basis_.field(); }
    /// Projective dimension; -1 for the empty subspace.
    int dim() const { return static_cast<int>(basis_.rows()) - 1; }
    int codim() const { return ambient_ - dim(); }
    bool is_empty() const { return basis_.rows() == 0; }

    const Matrix& basis() const { return basis_; }
    /// Reduced basis of the annihilator {w : w . v = 0 for all v in S}.
    const Matrix& complement() const { return complement_; }
    /// The rows of the canonical basis as points.
    std::vector<ProjPoint> basis_points() const;

    std::string to_string() const;

    friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    int ambient_;
    Matrix basis_;
    Matrix complement_;
};

/// Smallest subspace containing all `points`; the empty subspace for no points.
ProjSubspace span(int ambient, Field field, std::span<const ProjPoint> points);
/// Field and ambient taken from the first point. Requires a nonempty list.
ProjSubspace span(std::span<const ProjPoint> points);

ProjSubspace meet(const ProjSubspace& a, const ProjSubspace& b);
ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b);

bool contains(const ProjSubspace& s, const ProjPoint& p);
/// True iff `inner` is a subspace of `outer`.
bool contains(const ProjSubspace& outer, const ProjSubspace& inner);

/// Image of `p` under projection from `center`. Quotient coordinates are the
/// coordinates of p, reduced against the center's basis, with the center's
/// pivot columns deleted; the target has dimension ambient - dim(center) - 1.
/// Throws DomainError when p lies in the center.
ProjPoint project_from(const ProjSubspace& center, const ProjPoint& p);

/// Image of a whole subspace under projection from `center`, in the same
/// quotient coordinates as project_from.
ProjSubspace project_subspace(const ProjSubspace& center, const ProjSubspace& s);

/// dim join(s, center) - dim center - 1, the dimension of the image of s
/// under projection from center. Throws DomainError when s lies in center.
int projected_span_dim(const ProjSubspace& center, const ProjSubspace& s);

}  // namespace lowdeg::linalg
