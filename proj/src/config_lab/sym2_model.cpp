#include <algorithm>
#include <iterator>

#include "lowdeg/config_lab.hpp"
#include "lowdeg/error.hpp"

namespace lowdeg::config {

namespace {

using Element = Sym2GroupModel::Element;

std::size_t intersection_size(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.size();
}

std::string describe(const Element& e) {
    return "{" + std::to_string(e.x) + ", " + std::to_string(e.y) + "}";
}

// Tracks whether every observation of a family agrees with the expected size.
void record(std::optional<std::size_t>& uniform, bool& first, std::size_t observed) {
    if (first) {
        uniform = observed;
        first = false;
    } else if (uniform && *uniform != observed) {
        uniform.reset();
    }
}

}  // namespace

Sym2GroupModel::Sym2GroupModel(int modulus) : modulus_(modulus) {
    if (modulus < 5 || modulus > 4096) {
        throw DomainError("Sym^2 model needs 5 <= N <= 4096, got " + std::to_string(modulus));
    }
}

std::size_t Sym2GroupModel::size() const {
    const auto n = static_cast<std::size_t>(modulus_);
    return n * (n + 1) / 2;
}

std::vector<Element> Sym2GroupModel::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (int x = 0; x < modulus_; ++x) {
        for (int y = x; y < modulus_; ++y) out.push_back({x, y});
    }
    return out;
}

Element Sym2GroupModel::make(long x, long y) const {
    auto reduce = [this](long v) {
        long r = v % modulus_;
        return static_cast<int>(r < 0 ? r + modulus_ : r);
    };
    const int a = reduce(x);
    const int b = reduce(y);
    return a <= b ? Element{a, b} : Element{b, a};
}

std::vector<Element> Sym2GroupModel::h_divisor(long x) const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(modulus_));
    for (int y = 0; y < modulus_; ++y) out.push_back(make(x, y));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> Sym2GroupModel::f_divisor(long s) const {
    std::vector<Element> out;
    for (int x = 0; x < modulus_; ++x) out.push_back(make(x, s - x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PairingReport incidence_pairing_check(const Sym2GroupModel& model) {
    const int n = model.modulus();
    PairingReport rep;
    rep.modulus = n;

    std::vector<std::vector<Element>> h(static_cast<std::size_t>(n));
    std::vector<std::vector<Element>> f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        h[static_cast<std::size_t>(i)] = model.h_divisor(i);
        f[static_cast<std::size_t>(i)] = model.f_divisor(i);
    }

    bool first_hh = true;
    bool first_hf = true;
    bool first_ff = true;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const auto c = intersection_size(h[x], h[y]);
            ++rep.checks_hh;
            record(rep.hh, first_hh, c);
            if (c != 1) {
                rep.violations.push_back("|H_" + std::to_string(x) + " ∩ H_" + std::to_string(y) +
                                         "| = " + std::to_string(c) + ", expected 1");
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int s = 0; s < n; ++s) {
            const auto c = intersection_size(h[x], f[s]);
            ++rep.checks_hf;
            record(rep.hf, first_hf, c);
            if (c != 1) {
                rep.violations.push_back("|H_" + std::to_string(x) + " ∩ F_" + std::to_string(s) +
                                         "| = " + std::to_string(c) + ", expected 1");
            }
        }
    }
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            const auto c = intersection_size(f[s], f[t]);
            ++rep.checks_ff;
            record(rep.ff, first_ff, c);
            if (c != 0) {
                rep.violations.push_back("|F_" + std::to_string(s) + " ∩ F_" + std::to_string(t) +
                                         "| = " + std::to_string(c) + ", expected 0");
            }
        }
    }
    return rep;
}

TwoDivisorReport two_divisor_check(const Sym2GroupModel& model, std::span<const Element> subset) {
    const int n = model.modulus();
    TwoDivisorReport rep;
    rep.degree.assign(static_cast<std::size_t>(n), 0);

    std::vector<Element> seen;
    for (const auto& raw : subset) {
        if (raw.x < 0 || raw.y < 0 || raw.x >= n || raw.y >= n) {
            throw DomainError("element " + describe(raw) + " is not in Z/" + std::to_string(n));
        }
        const Element e = model.make(raw.x, raw.y);
        if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
            rep.violations.push_back("element " + describe(e) + " is repeated");
            continue;
        }
        seen.push_back(e);
        if (e.is_diagonal()) {
            rep.violations.push_back("diagonal element " + describe(e) +
                                     " lies on a single H-divisor");
        }
    }

    for (int x = 0; x < n; ++x) {
        const auto hx = model.h_divisor(x);
        for (const auto& e : seen) {
            if (std::binary_search(hx.begin(), hx.end(), e)) ++rep.degree[static_cast<std::size_t>(x)];
        }
    }
    for (const auto& e : seen) {
        if (e.is_diagonal()) continue;
        int count = 0;
        for (int x = 0; x < n; ++x) {
            const auto hx = model.h_divisor(x);
            if (std::binary_search(hx.begin(), hx.end(), e)) ++count;
        }
        if (count != 2) {
            rep.violations.push_back("element " + describe(e) + " lies on " + std::to_string(count) +
                                     " H-divisors, expected 2");
        }
    }
    return rep;
}

}  // namespace lowdeg::config
