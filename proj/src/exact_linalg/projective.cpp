#include "lowdeg/projective.hpp"

#include <sstream>

#include "lowdeg/error.hpp"

namespace lowdeg::linalg {

namespace {

void require_compatible(const ProjSubspace& a, const ProjSubspace& b) {
    if (a.ambient() != b.ambient()) {
        throw AmbientMismatchError("subspaces of P^" + std::to_string(a.ambient()) + " and P^" +
                                   std::to_string(b.ambient()));
    }
    if (a.field() != b.field()) {
        throw FieldMismatchError("subspaces over " + a.field().to_string() + " and " +
                                 b.field().to_string());
    }
}

void require_compatible(const ProjSubspace& s, const ProjPoint& p) {
    if (s.ambient() != p.ambient()) {
        throw AmbientMismatchError("point of P^" + std::to_string(p.ambient()) +
                                   " against a subspace of P^" + std::to_string(s.ambient()));
    }
    if (s.field() != p.field()) {
        throw FieldMismatchError("point over " + p.field().to_string() + " against a subspace over " +
                                 s.field().to_string());
    }
}

// Reduces v against the reduced basis of `center` and drops the pivot columns.
std::vector<Scalar> quotient_coords(const ProjSubspace& center, std::span<const Scalar> v) {
    const Matrix& basis = center.basis();
    const auto pivots = pivot_columns(basis);
    std::vector<Scalar> w(v.begin(), v.end());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        const Scalar factor = w[pivots[r]];
        if (factor.is_zero()) continue;
        for (std::size_t c = 0; c < w.size(); ++c) w[c] -= factor * basis(r, c);
    }
    std::vector<bool> drop(w.size(), false);
    for (auto p : pivots) drop[p] = true;
    std::vector<Scalar> out;
    out.reserve(w.size() - pivots.size());
    for (std::size_t c = 0; c < w.size(); ++c) {
        if (!drop[c]) out.push_back(std::move(w[c]));
    }
    return out;
}

bool all_zero(std::span<const Scalar> v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("a projective point needs at least one coordinate");
    field_ = coords_.front().field();
    std::size_t lead = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].field() != field_) {
            throw FieldMismatchError("coordinates over " + field_.to_string() + " and " +
                                     coords_[i].field().to_string());
        }
        if (lead == coords_.size() && !coords_[i].is_zero()) lead = i;
    }
    if (lead == coords_.size()) throw DomainError("the zero vector is not a projective point");
    if (!coords_[lead].is_one()) {
        const Scalar inv = coords_[lead].inverse();
        for (std::size_t i = lead; i < coords_.size(); ++i) coords_[i] *= inv;
    }
}

ProjPoint ProjPoint::from_ints(Field field, const std::vector<long>& coords) {
    std::vector<Scalar> v;
    v.reserve(coords.size());
    for (long c : coords) v.push_back(Scalar::from_int(field, c));
    return ProjPoint(std::move(v));
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << " : ";
        os << (field_.is_rational() ? coords_[i].to_string() : std::to_string(coords_[i].residue()));
    }
    os << ')';
    return os.str();
}

ProjSubspace::ProjSubspace(int ambient, const Matrix& generators)
    : ambient_(ambient), basis_(rref(generators)), complement_(nullspace(basis_)) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    if (generators.cols() != static_cast<std::size_t>(ambient) + 1) {
        throw AmbientMismatchError("generators of length " + std::to_string(generators.cols()) +
                                   " do not live in P^" + std::to_string(ambient));
    }
}

ProjSubspace ProjSubspace::empty(int ambient, Field field) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    return ProjSubspace(ambient, Matrix(field, 0, static_cast<std::size_t>(ambient) + 1));
}

ProjSubspace ProjSubspace::whole(int ambient, Field field) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    return ProjSubspace(ambient, Matrix::identity(field, static_cast<std::size_t>(ambient) + 1));
}

ProjSubspace ProjSubspace::from_ints(Field field, int ambient,
                                     const std::vector<std::vector<long>>& rows) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    Matrix m(field, 0, static_cast<std::size_t>(ambient) + 1);
    for (const auto& r : rows) {
        std::vector<Scalar> v;
        for (long x : r) v.push_back(Scalar::from_int(field, x));
        m.append_row(v);
    }
    return ProjSubspace(ambient, m);
}

std::vector<ProjPoint> ProjSubspace::basis_points() const {
    std::vector<ProjPoint> pts;
    pts.reserve(basis_.rows());
    for (std::size_t r = 0; r < basis_.rows(); ++r) pts.emplace_back(basis_.row_vector(r));
    return pts;
}

std::string ProjSubspace::to_string() const {
    std::ostringstream os;
    os << "dim " << dim() << " in P^" << ambient_ << " over " << field().to_string();
    for (const auto& p : basis_points()) os << ' ' << p.to_string();
    return os.str();
}

ProjSubspace span(int ambient, Field field, std::span<const ProjPoint> points) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    Matrix m(field, 0, static_cast<std::size_t>(ambient) + 1);
    for (const auto& p : points) {
        if (p.ambient() != ambient) {
            throw AmbientMismatchError("point of P^" + std::to_string(p.ambient()) +
                                       " in a span inside P^" + std::to_string(ambient));
        }
        m.append_row(p.coords());
    }
    return ProjSubspace(ambient, m);
}

ProjSubspace span(std::span<const ProjPoint> points) {
    if (points.empty()) throw DomainError("cannot infer the ambient space of an empty point list");
    return span(points.front().ambient(), points.front().field(), points);
}

ProjSubspace meet(const ProjSubspace& a, const ProjSubspace& b) {
    require_compatible(a, b);
    return ProjSubspace(a.ambient(), nullspace(a.complement().stacked(b.complement())));
}

ProjSubspace join(const ProjSubspace& a, const ProjSubspace& b) {
    require_compatible(a, b);
    return ProjSubspace(a.ambient(), a.basis().stacked(b.basis()));
}

bool contains(const ProjSubspace& s, const ProjPoint& p) {
    require_compatible(s, p);
    if (s.is_empty()) return false;
    const Matrix& w = s.complement();
    for (std::size_t r = 0; r < w.rows(); ++r) {
        if (!dot(w.row(r), p.coords()).is_zero()) return false;
    }
    return true;
}

bool contains(const ProjSubspace& outer, const ProjSubspace& inner) {
    require_compatible(outer, inner);
    const Matrix& w = outer.complement();
    const Matrix& v = inner.basis();
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < v.rows(); ++j) {
            if (!dot(w.row(i), v.row(j)).is_zero()) return false;
        }
    }
    return true;
}

ProjPoint project_from(const ProjSubspace& center, const ProjPoint& p) {
    require_compatible(center, p);
    auto image = quotient_coords(center, p.coords());
    if (image.empty() || all_zero(image)) {
        throw DomainError("projection undefined: point " + p.to_string() + " lies in the center");
    }
    return ProjPoint(std::move(image));
}

ProjSubspace project_subspace(const ProjSubspace& center, const ProjSubspace& s) {
    require_compatible(center, s);
    const int target = center.ambient() - center.dim() - 1;
    if (target < 0) throw DomainError("projection from the whole space has no target");
    Matrix images(s.field(), 0, static_cast<std::size_t>(target) + 1);
    for (std::size_t r = 0; r < s.basis().rows(); ++r) {
        images.append_row(quotient_coords(center, s.basis().row(r)));
    }
    return ProjSubspace(target, images);
}

int projected_span_dim(const ProjSubspace& center, const ProjSubspace& s) {
    require_compatible(center, s);
    if (contains(center, s)) {
        throw DomainError("projection undefined: the subspace lies in the center");
    }
    return join(s, center).dim() - center.dim() - 1;
}

}  // namespace lowdeg::linalg
