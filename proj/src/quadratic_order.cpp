#include "quadcdr/quadratic_order.hpp"

#include <cctype>
#include <optional>

#include "quadcdr/error.hpp"

namespace quadcdr {

namespace {

bool is_squarefree(const Int& n) {
    Int m = abs(n);
    for (Int k = 2; k * k <= m; ++k) {
        Int sq = k * k;
        if (mpz_divisible_p(m.get_mpz_t(), sq.get_mpz_t()))
            return false;
    }
    return true;
}

std::optional<Int> parse_int(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return std::nullopt;
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Int(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

RingSpec make_ring(const Int& d, const Int& f) {
    if (d == 0 || d == 1)
        throw Error(ErrorCode::InvalidRing, "d must not be 0 or 1, got " + to_string(d));
    if (!is_squarefree(d))
        throw Error(ErrorCode::InvalidRing, "d must be squarefree, got " + to_string(d));
    if (f < 1)
        throw Error(ErrorCode::InvalidRing, "conductor f must be >= 1, got " + to_string(f));

    RingSpec r{d, f, 0, 0, 0};
    if (mod_floor(d, 4) == 1) {
        r.T = f;
        r.Nc = f * f * (1 - d) / 4;
        r.disc = f * f * d;
    } else {
        r.T = 0;
        r.Nc = -f * f * d;
        r.disc = 4 * f * f * d;
    }
    return r;
}

RingSpec parse_ring_spec(std::string_view text) {
    std::optional<Int> d, f;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);

        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::InvalidRing, "ring spec item '" + std::string(item) + "' is not key=value");
        std::string_view key = trim(item.substr(0, eq));
        auto value = parse_int(trim(item.substr(eq + 1)));
        if (!value)
            throw Error(ErrorCode::InvalidRing, "ring spec item '" + std::string(item) + "' has a non-integer value");
        if (key == "d" && !d)
            d = *value;
        else if (key == "f" && !f)
            f = *value;
        else
            throw Error(ErrorCode::InvalidRing, "unexpected ring spec key '" + std::string(key) + "'");
    }
    if (!d || !f)
        throw Error(ErrorCode::InvalidRing, "ring spec must have the form d=<int>,f=<int>");
    return make_ring(*d, *f);
}

std::string describe(const RingSpec& ring) {
    return "d=" + to_string(ring.d) + ",f=" + to_string(ring.f);
}

Element elem_mul(const RingSpec& ring, const Element& u, const Element& v) {
    Int yy = u.y * v.y;
    return {u.x * v.x - ring.Nc * yy, u.x * v.y + u.y * v.x + ring.T * yy};
}

Element elem_mul_theta(const RingSpec& ring, const Element& u) {
    return {-ring.Nc * u.y, u.x + ring.T * u.y};
}

Int elem_norm(const RingSpec& ring, const Element& u) {
    return u.x * u.x + ring.T * u.x * u.y + ring.Nc * u.y * u.y;
}

}  // namespace quadcdr
