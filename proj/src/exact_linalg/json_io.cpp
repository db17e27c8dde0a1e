#include "lowdeg/json_io.hpp"

#include <cctype>
#include <string>

#include "lowdeg/error.hpp"

namespace lowdeg::linalg {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::int64_t require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<std::int64_t>();
}

}  // namespace

Scalar parse_rational(const std::string& text) {
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    const std::size_t slash = text.find('/');
    const bool ok = slash == std::string::npos
                        ? all_digits(text, start, text.size())
                        : all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
    if (!ok) throw ParseError("malformed rational \"" + text + "\"");
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(text, 10));
    } else {
        const mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
        q = mpq_class(mpz_class(text.substr(0, slash), 10), den);
    }
    return Scalar::rational(q);
}

Json to_json(const Scalar& s) {
    if (s.is_rational()) return s.as_rational().get_str();
    return Json{{"val", s.residue()}, {"mod", s.field().modulus()}};
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Scalar::rational(mpq_class(mpz_class(j.dump(), 10)));
    if (j.is_object()) {
        if (!j.contains("val") || !j.contains("mod") || j.size() != 2) {
            throw ParseError("prime-field scalar must be {\"val\": int, \"mod\": int}");
        }
        const auto val = require_int(j.at("val"), "val");
        const auto mod = require_int(j.at("mod"), "mod");
        if (val < 0 || val >= mod) throw ParseError("residue must satisfy 0 <= val < mod");
        if (mod >= (std::int64_t{1} << 31) || !is_prime(mod)) {
            throw ParseError("modulus " + std::to_string(mod) + " is not a prime below 2^31");
        }
        return Scalar::modular(val, mod);
    }
    throw ParseError("unrecognized scalar " + j.dump());
}

Json to_json(const ProjPoint& p) {
    Json arr = Json::array();
    for (const auto& x : p.coords()) arr.push_back(to_json(x));
    return arr;
}

ProjPoint point_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("a point must be a nonempty array of scalars");
    std::vector<Scalar> coords;
    coords.reserve(j.size());
    for (const auto& x : j) coords.push_back(scalar_from_json(x));
    return ProjPoint(std::move(coords));
}

Json to_json(const ProjSubspace& s) {
    Json rows = Json::array();
    const Matrix& b = s.basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
        Json row = Json::array();
        for (const auto& x : b.row(r)) row.push_back(to_json(x));
        rows.push_back(std::move(row));
    }
    Json out{{"ambient", s.ambient()}, {"rows", std::move(rows)}};
    if (b.rows() == 0 && !s.field().is_rational()) out["mod"] = s.field().modulus();
    return out;
}

ProjSubspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("rows")) {
        throw ParseError("a subspace must be {\"ambient\": n, \"rows\": [...]}");
    }
    const auto ambient = require_int(j.at("ambient"), "ambient");
    if (ambient < 0 || ambient > 10000) throw ParseError("ambient dimension out of range");
    const Json& rows = j.at("rows");
    if (!rows.is_array()) throw ParseError("\"rows\" must be an array");

    std::vector<std::vector<Scalar>> parsed;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("each row must be an array of scalars");
        if (row.size() != static_cast<std::size_t>(ambient) + 1) {
            throw ParseError("row " + row.dump() + " has the wrong length for P^" +
                             std::to_string(ambient));
        }
        std::vector<Scalar> v;
        for (const auto& x : row) v.push_back(scalar_from_json(x));
        parsed.push_back(std::move(v));
    }
    Field field = parsed.empty() ? Field::rational() : parsed.front().front().field();
    if (j.contains("mod")) {
        const auto mod = require_int(j.at("mod"), "mod");
        if (mod >= (std::int64_t{1} << 31) || !is_prime(mod)) {
            throw ParseError("modulus " + std::to_string(mod) + " is not a prime below 2^31");
        }
        if (!parsed.empty() && field != Field::prime(mod)) {
            throw FieldMismatchError("rows do not lie in F_" + std::to_string(mod));
        }
        field = Field::prime(mod);
    }
    return ProjSubspace(static_cast<int>(ambient),
                        Matrix::from_rows(field, static_cast<std::size_t>(ambient) + 1, parsed));
}

}  // namespace lowdeg::linalg
