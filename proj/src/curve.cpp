#include "kummer/curve.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace kummer {

Int mod_inverse(Int a, Int m) {
    if (m < 2)
        throw Error(Errc::precondition, "modulus must be at least 2");
    // extended Euclid on (a mod m, m)
    Int old_r = mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw Error(Errc::not_coprime,
                    "no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    return mod(old_s, m);
}

bool check_floor_minus(Int m, Int r) {
    if (std::gcd(m, r) != 1)
        throw Error(Errc::not_coprime, "check_floor_minus requires gcd(m, r) = 1");
    const Int base = floor_div(r, m);
    for (Int j = 1; j <= m - 1; ++j) {
        if (floor_div(r * (j + 1), m) - floor_div(r * j, m) < base) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

PlaceRef PlaceRef::finite(int i) {
    if (i < 1) throw Error(Errc::invalid_place, "finite place index must be >= 1");
    return PlaceRef(i);
}

std::string PlaceRef::token() const {
    return is_infinity() ? std::string("inf") : std::to_string(index_);
}

PlaceRef PlaceRef::parse(const std::string& token) {
    if (token == "inf" || token == "infinity" || token == "0") return infinity();
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::invalid_place, "bad place token '" + token + "'");
    long v = std::strtol(token.c_str(), nullptr, 10);
    if (v > std::numeric_limits<int>::max())
        throw Error(Errc::invalid_place, "place index out of range: " + token);
    return finite(static_cast<int>(v));
}

// ---------------------------------------------------------------------------

KummerCurve::KummerCurve(Int m, std::vector<Int> lambdas)
    : m_(m), lambdas_(std::move(lambdas)), lambda0_(0), genus_(0) {
    if (m_ < 2) throw Error(Errc::invalid_curve, "exponent m must be at least 2");
    if (lambdas_.empty()) throw Error(Errc::invalid_curve, "at least one multiplicity is required");
    if (m_ > (Int{1} << 20))
        throw Error(Errc::overflow, "exponent m too large");

    Int sum = 0;
    Int content = m_;
    Int max_abs = 0;
    for (Int l : lambdas_) {
        if (l == 0) throw Error(Errc::invalid_curve, "multiplicities must be nonzero");
        if (l > (Int{1} << 30) || l < -(Int{1} << 30))
            throw Error(Errc::overflow, "multiplicity too large");
        sum += l;
        content = std::gcd(content, l);
        max_abs = std::max(max_abs, std::abs(l));
    }
    if (content != 1)
        throw Error(Errc::invalid_curve,
                    "gcd(m, lambda_1..lambda_r) = " + std::to_string(content) +
                        "; the equation does not define a degree-m extension");
    lambda0_ = -sum;
    max_abs = std::max(max_abs, std::abs(lambda0_));

    Int numerator = m_ * (r() - 1) + 2 - std::gcd(m_, lambda0_);
    for (Int l : lambdas_) numerator -= std::gcd(m_, l);
    if (numerator % 2 != 0 || numerator < 0)
        throw Error(Errc::invalid_curve, "genus numerator is not a non-negative even integer");
    genus_ = numerator / 2;

    // Gap criteria form a*sigma*lambda with a up to about 2g + 2m and sigma < m.
    __extension__ using Wide = __int128;
    const Wide bound = static_cast<Wide>(m_) * max_abs * (2 * genus_ + 2 * m_ + 2);
    if (bound > (static_cast<Wide>(1) << 62))
        throw Error(Errc::overflow, "curve parameters exceed the 64-bit arithmetic budget");
}

Int KummerCurve::multiplicity(PlaceRef p) const {
    if (!has_place(p))
        throw Error(Errc::invalid_place, "place " + p.token() + " does not exist (r = " +
                                             std::to_string(r()) + ")");
    return p.is_infinity() ? lambda0_ : lambdas_[static_cast<std::size_t>(p.index() - 1)];
}

std::vector<Int> KummerCurve::all_multiplicities() const {
    std::vector<Int> out;
    out.reserve(lambdas_.size() + 1);
    out.push_back(lambda0_);
    out.insert(out.end(), lambdas_.begin(), lambdas_.end());
    return out;
}

bool KummerCurve::is_totally_ramified(PlaceRef p) const {
    return has_place(p) && std::gcd(m_, multiplicity(p)) == 1;
}

std::vector<PlaceRef> KummerCurve::totally_ramified_places() const {
    std::vector<PlaceRef> out;
    if (is_totally_ramified(PlaceRef::infinity())) out.push_back(PlaceRef::infinity());
    for (int i = 1; i <= r(); ++i)
        if (is_totally_ramified(PlaceRef::finite(i))) out.push_back(PlaceRef::finite(i));
    return out;
}

bool KummerCurve::equal_multiplicities() const noexcept {
    return std::all_of(lambdas_.begin(), lambdas_.end(),
                       [&](Int l) { return l == lambdas_.front(); });
}

// ---------------------------------------------------------------------------

PlaceSelection::PlaceSelection(std::vector<PlaceRef> places) : places_(std::move(places)) {
    if (places_.empty()) throw Error(Errc::invalid_selection, "place selection is empty");
    for (std::size_t i = 0; i < places_.size(); ++i)
        for (std::size_t j = i + 1; j < places_.size(); ++j)
            if (places_[i] == places_[j])
                throw Error(Errc::invalid_selection,
                            "place " + places_[i].token() + " selected twice");
}

void PlaceSelection::validate_for(const KummerCurve& c) const {
    for (PlaceRef p : places_) {
        if (!c.has_place(p))
            throw Error(Errc::invalid_place, "place " + p.token() + " does not exist (r = " +
                                                 std::to_string(c.r()) + ")");
        if (!c.is_totally_ramified(p))
            throw Error(Errc::invalid_place,
                        "place " + p.token() + " is not totally ramified (gcd(m, " +
                            std::to_string(c.multiplicity(p)) + ") != 1)");
    }
}

bool PlaceSelection::contains(PlaceRef p) const noexcept {
    return std::find(places_.begin(), places_.end(), p) != places_.end();
}

PlaceSelection PlaceSelection::project(std::span<const std::size_t> indices) const {
    std::vector<PlaceRef> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= places_.size())
            throw Error(Errc::invalid_selection, "projection index out of range");
        out.push_back(places_[i]);
    }
    return PlaceSelection(std::move(out));
}

PlaceSelection PlaceSelection::prefix(std::size_t n) const {
    if (n == 0 || n > places_.size())
        throw Error(Errc::invalid_selection, "bad prefix length");
    return PlaceSelection(std::vector<PlaceRef>(places_.begin(), places_.begin() + static_cast<std::ptrdiff_t>(n)));
}

PlaceSelection PlaceSelection::finite_range(int s) {
    std::vector<PlaceRef> out;
    for (int i = 1; i <= s; ++i) out.push_back(PlaceRef::finite(i));
    return PlaceSelection(std::move(out));
}

PlaceSelection PlaceSelection::infinity_then_finite(int s) {
    std::vector<PlaceRef> out{PlaceRef::infinity()};
    for (int i = 1; i <= s; ++i) out.push_back(PlaceRef::finite(i));
    return PlaceSelection(std::move(out));
}

std::string PlaceSelection::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < places_.size(); ++i) os << (i ? "," : "") << places_[i].token();
    os << ']';
    return os.str();
}

} // namespace kummer

// ---------------------------------------------------------------------------

namespace kummer {

FloorSumKernel::FloorSumKernel(const KummerCurve& c, const PlaceSelection& sel) : m_(c.m()) {
    sel.validate_for(c);
    selected_.reserve(sel.size());
    sigma_.reserve(sel.size());
    for (PlaceRef p : sel) {
        selected_.push_back(c.multiplicity(p));
        sigma_.push_back(mod_inverse(c.multiplicity(p), m_));
    }
    if (!sel.contains(PlaceRef::infinity())) rest_.push_back(c.lambda0());
    for (int i = 1; i <= c.r(); ++i)
        if (!sel.contains(PlaceRef::finite(i))) rest_.push_back(c.lambdas()[static_cast<std::size_t>(i - 1)]);
}

void FloorSumKernel::check_tuple(std::span<const Int> tuple) const {
    if (tuple.size() != selected_.size())
        throw Error(Errc::length_mismatch, "tuple has " + std::to_string(tuple.size()) +
                                               " coordinates, selection has " +
                                               std::to_string(selected_.size()) + " places");
    for (Int a : tuple)
        if (a < 0 || a > max_coordinate)
            throw Error(Errc::precondition, "tuple coordinate out of range: " + std::to_string(a));
}

Int floor_sum(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple, Int t) {
    FloorSumKernel kernel(c, sel);
    if (tuple.size() != kernel.width())
        throw Error(Errc::length_mismatch, "tuple length does not match selection");
    const Int m = c.m();
    Int acc = 0;
    for (std::size_t i = 0; i < kernel.width(); ++i)
        acc = checked_add(acc, floor_div(checked_add(tuple[i], checked_mul(t, kernel.selected()[i])), m));
    for (Int l : kernel.rest()) acc = checked_add(acc, floor_div(checked_mul(t, l), m));
    return acc;
}

} // namespace kummer
