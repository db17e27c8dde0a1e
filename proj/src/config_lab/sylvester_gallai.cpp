#include <algorithm>
#include <set>

#include "lowdeg/config_lab.hpp"
#include "lowdeg/error.hpp"

namespace lowdeg::config {

namespace {

using linalg::Scalar;

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    const Scalar det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                       p[2] * (q[0] * r[1] - q[1] * r[0]);
    return det.is_zero();
}

}  // namespace

SGReport sg_check(const PointConfig& config) {
    if (config.ambient() != 2) {
        throw DomainError("Sylvester-Gallai check needs points in P^2, got P^" +
                          std::to_string(config.ambient()));
    }
    if (config.size() < 3) throw DomainError("Sylvester-Gallai check needs at least three points");

    const auto& pts = config.points();
    const std::size_t n = pts.size();
    SGReport rep;
    rep.max_collinear = 2;
    std::set<std::vector<std::size_t>> rich;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> line{i, j};
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i && k != j && collinear(pts[i], pts[j], pts[k])) line.push_back(k);
            }
            if (line.size() == 2) {
                rep.ordinary_pairs.emplace_back(i, j);
                continue;
            }
            std::sort(line.begin(), line.end());
            rep.max_collinear = std::max(rep.max_collinear, line.size());
            rich.insert(std::move(line));
        }
    }
    rep.rich_lines.assign(rich.begin(), rich.end());
    rep.is_sylvester_gallai = rep.ordinary_pairs.empty();
    if (!rep.ordinary_pairs.empty()) rep.witness = rep.ordinary_pairs.front();
    return rep;
}

PointConfig hesse_config() {
    const Field f3 = Field::prime(3);
    std::vector<ProjPoint> pts;
    for (long x = 0; x < 3; ++x) {
        for (long y = 0; y < 3; ++y) pts.push_back(ProjPoint::from_ints(f3, {x, y, 1}));
    }
    return PointConfig(2, std::move(pts));
}

}  // namespace lowdeg::config
