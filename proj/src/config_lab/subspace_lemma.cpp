#include "lowdeg/config_lab.hpp"

#include <algorithm>

#include "lowdeg/error.hpp"

namespace lowdeg::config {

PointConfig::PointConfig(int ambient, std::vector<ProjPoint> points)
    : ambient_(ambient), points_(std::move(points)) {
    if (ambient < 0) throw DomainError("negative ambient dimension");
    if (!points_.empty()) field_ = points_.front().field();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (p.ambient() != ambient) {
            throw AmbientMismatchError("point " + std::to_string(i) + " lives in P^" +
                                       std::to_string(p.ambient()) + ", expected P^" +
                                       std::to_string(ambient));
        }
        if (p.field() != field_) {
            throw FieldMismatchError("point " + std::to_string(i) + " is over " +
                                     p.field().to_string() + ", expected " + field_.to_string());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (points_[j] == p) {
                throw DomainError("points " + std::to_string(j) + " and " + std::to_string(i) +
                                  " coincide");
            }
        }
    }
}

CommonSubspaceResult common_subspace(std::span<const ProjSubspace> subspaces) {
    CommonSubspaceResult result;
    auto& violations = result.violations;
    if (subspaces.size() < 2) {
        violations.emplace_back("need at least two subspaces, got " +
                                std::to_string(subspaces.size()));
        return result;
    }

    const int n = subspaces.front().ambient();
    const Field field = subspaces.front().field();
    bool consistent = true;
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        const auto& v = subspaces[i];
        if (v.ambient() != n) {
            violations.push_back("subspace " + std::to_string(i) + " lives in P^" +
                                 std::to_string(v.ambient()) + ", expected P^" + std::to_string(n));
            consistent = false;
        } else if (v.field() != field) {
            violations.push_back("subspace " + std::to_string(i) + " is over " +
                                 v.field().to_string() + ", expected " + field.to_string());
            consistent = false;
        }
    }
    if (!consistent) return result;

    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        if (subspaces[i].codim() != 2) {
            violations.push_back("subspace " + std::to_string(i) + " has codimension " +
                                 std::to_string(subspaces[i].codim()) + ", expected 2");
        }
    }
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        for (std::size_t j = i + 1; j < subspaces.size(); ++j) {
            if (join(subspaces[i], subspaces[j]).dim() >= n) {
                violations.push_back("subspaces " + std::to_string(i) + " and " +
                                     std::to_string(j) + " are not contained in a common hyperplane");
            }
        }
    }
    ProjSubspace total = subspaces.front();
    for (const auto& v : subspaces.subspan(1)) total = join(total, v);
    if (total.dim() < n) {
        violations.push_back("the subspaces span only a " + std::to_string(total.dim()) +
                             "-dimensional subspace of P^" + std::to_string(n));
    }
    if (!violations.empty()) return result;

    // Spanning guarantees two distinct members.
    std::size_t second = 1;
    while (subspaces[second] == subspaces[0]) ++second;
    ProjSubspace candidate = meet(subspaces[0], subspaces[second]);

    for (std::size_t k = 0; k < subspaces.size(); ++k) {
        if (!contains(subspaces[k], candidate)) {
            violations.push_back("subspace " + std::to_string(k) +
                                 " does not contain the meet of subspaces 0 and " +
                                 std::to_string(second));
        }
    }
    if (violations.empty()) result.subspace = std::move(candidate);
    return result;
}

}  // namespace lowdeg::config

namespace lowdeg::config {

namespace {

std::vector<linalg::Scalar> random_vector(const Field& field, int ambient, std::mt19937_64& rng) {
    std::vector<linalg::Scalar> v;
    v.reserve(static_cast<std::size_t>(ambient) + 1);
    for (int i = 0; i <= ambient; ++i) {
        v.push_back(linalg::Scalar::modular(static_cast<std::uint32_t>(rng() % field.modulus()),
                                            field.modulus()));
    }
    return v;
}

}  // namespace

PlantedConfiguration planted_configuration(const Field& field, int ambient, std::size_t count,
                                           std::mt19937_64& rng) {
    if (field.is_rational()) throw DomainError("planted configurations need a prime field");
    if (ambient < 3) throw DomainError("planted configurations need ambient >= 3");
    const std::uint64_t p = field.modulus();
    if (count < 3 || count > p * p + p + 1) {
        throw DomainError("count must lie in [3, p^2 + p + 1], got " + std::to_string(count));
    }
    const auto cols = static_cast<std::size_t>(ambient) + 1;

    linalg::Matrix lambda_gens(field, 0, cols);
    while (linalg::rank(lambda_gens) < static_cast<std::size_t>(ambient) - 2) {
        lambda_gens = linalg::Matrix(field, 0, cols);
        for (int i = 0; i < ambient - 2; ++i) lambda_gens.append_row(random_vector(field, ambient, rng));
    }
    const ProjSubspace lambda(ambient, lambda_gens);

    for (;;) {
        std::vector<ProjSubspace> subs;
        linalg::Matrix all = lambda.basis();
        while (subs.size() < count) {
            auto v = random_vector(field, ambient, rng);
            auto gens = lambda.basis();
            gens.append_row(v);
            if (linalg::rank(gens) != static_cast<std::size_t>(ambient) - 1) continue;
            ProjSubspace s(ambient, gens);
            if (std::find(subs.begin(), subs.end(), s) != subs.end()) continue;
            all.append_row(v);
            subs.push_back(std::move(s));
        }
        if (linalg::rank(all) == cols) return {lambda, std::move(subs)};
    }
}

}  // namespace lowdeg::config
