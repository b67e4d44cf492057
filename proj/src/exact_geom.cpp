#include "udlab/exact_geom.hpp"

#include <boost/multiprecision/integer.hpp>

namespace udlab {

namespace {

std::array<BigInt, 3> primitive(std::array<BigInt, 3> v)
{
    BigInt g = 0;
    for (const auto& x : v)
        g = gcd(g, abs(x));
    if (g == 0)
        throw Error("zero triple cannot be normalized");
    if (g != 1)
        for (auto& x : v)
            x /= g;
    return v;
}

std::array<BigInt, 3> clear_denominators(const Rational& a, const Rational& b, const Rational& c)
{
    BigInt l = 1;
    for (const Rational* r : {&a, &b, &c}) {
        BigInt d = denominator(*r);
        l = l / gcd(l, d) * d;
    }
    return {numerator(a) * (l / denominator(a)), numerator(b) * (l / denominator(b)),
            numerator(c) * (l / denominator(c))};
}

}  // namespace

Direction::Direction(BigInt a, BigInt b, BigInt c)
    : v_(primitive({std::move(a), std::move(b), std::move(c)}))
{
}

Direction Direction::from_rationals(const Rational& a, const Rational& b, const Rational& c)
{
    auto v = clear_denominators(a, b, c);
    return Direction(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

Direction Direction::operator-() const
{
    return Direction(Normalized{}, {-v_[0], -v_[1], -v_[2]});
}

std::strong_ordering Direction::operator<=>(const Direction& o) const
{
    for (int i = 0; i < 3; ++i) {
        int c = v_[i].compare(o.v_[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Direction::to_string() const
{
    return "(" + udlab::to_string(v_[0]) + "," + udlab::to_string(v_[1]) + "," +
           udlab::to_string(v_[2]) + ")";
}

BigInt dot(const Direction& p, const Direction& q)
{
    return p.a() * q.a() + p.b() * q.b() + p.c() * q.c();
}

std::array<BigInt, 3> cross(const Direction& p, const Direction& q)
{
    return {p.b() * q.c() - p.c() * q.b(), p.c() * q.a() - p.a() * q.c(),
            p.a() * q.b() - p.b() * q.a()};
}

bool is_unit_distance_sphere(const Direction& p, const Direction& q)
{
    return dot(p, q) == 0;
}

bool is_antipodal(const Direction& p, const Direction& q)
{
    return p.a() == -q.a() && p.b() == -q.b() && p.c() == -q.c();
}

CommonNeighbors common_unit_neighbors(const Direction& p, const Direction& q)
{
    if (p == q)
        return Degenerate{p};
    if (is_antipodal(p, q))
        return GreatCircle{p};
    auto x = cross(p, q);
    Direction d(std::move(x[0]), std::move(x[1]), std::move(x[2]));
    return TwoPoints{d, -d};
}

PlanarLine::PlanarLine(const Rational& a, const Rational& b, const Rational& c)
{
    if (a == 0 && b == 0)
        throw Error("line needs (a, b) != (0, 0)");
    v_ = primitive(clear_denominators(a, b, c));
    const BigInt& lead = v_[0] != 0 ? v_[0] : v_[1];
    if (lead < 0)
        for (auto& x : v_)
            x = -x;
}

bool PlanarLine::contains(const PlanarPoint& p) const
{
    return Rational(v_[0]) * p.x + Rational(v_[1]) * p.y + Rational(v_[2]) == 0;
}

Direction lift_point(const PlanarPoint& p)
{
    return Direction::from_rationals(p.x, p.y, Rational(1));
}

Direction lift_line(const PlanarLine& l)
{
    return Direction(l.a(), l.b(), l.c());
}

Rational squared_distance_r3(const R3Point& p, const R3Point& q)
{
    Rational dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return dx * dx + dy * dy + dz * dz;
}

std::string to_string(const BigInt& v)
{
    return v.str();
}

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt parse_bigint(const std::string& s)
{
    if (s.empty())
        throw Error("empty integer literal");
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw Error("bad integer literal '" + s + "'");
    }
}

Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(s));
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0)
        throw Error("zero denominator in '" + s + "'");
    return Rational(num, den);
}

}  // namespace udlab
