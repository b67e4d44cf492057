#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/gmp.hpp>

namespace udlab {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A point on the sphere of radius 1/sqrt(2), stored as a primitive integer
/// direction. The point is d / (sqrt(2) |d|); d and -d are antipodal.
///
/// Two points are at unit distance iff their directions are orthogonal, so
/// every predicate on these points is exact integer arithmetic.
class Direction {
public:
    /// Scales (a, b, c) by a positive factor to a primitive triple.
    /// Throws Error on the zero triple.
    Direction(BigInt a, BigInt b, BigInt c);

    static Direction from_rationals(const Rational& a, const Rational& b, const Rational& c);

    const BigInt& a() const { return v_[0]; }
    const BigInt& b() const { return v_[1]; }
    const BigInt& c() const { return v_[2]; }
    const std::array<BigInt, 3>& coords() const { return v_; }

    Direction operator-() const;

    bool operator==(const Direction&) const = default;
    std::strong_ordering operator<=>(const Direction& o) const;

    std::string to_string() const;

private:
    struct Normalized {};
    Direction(Normalized, std::array<BigInt, 3> v) : v_(std::move(v)) {}

    std::array<BigInt, 3> v_;
};

BigInt dot(const Direction& p, const Direction& q);

/// Raw (unnormalized) cross product of the two direction vectors.
std::array<BigInt, 3> cross(const Direction& p, const Direction& q);

bool is_unit_distance_sphere(const Direction& p, const Direction& q);
bool is_antipodal(const Direction& p, const Direction& q);

/// The only two points at unit distance from both inputs (non-antipodal case).
struct TwoPoints {
    Direction first;
    Direction second;
};
/// Every point of the great circle with this pole is a common neighbour.
struct GreatCircle {
    Direction pole;
};
/// p == q: the common neighbours are the whole polar circle of p.
struct Degenerate {
    Direction pole;
};
using CommonNeighbors = std::variant<TwoPoints, GreatCircle, Degenerate>;

CommonNeighbors common_unit_neighbors(const Direction& p, const Direction& q);

struct PlanarPoint {
    Rational x;
    Rational y;
    bool operator==(const PlanarPoint&) const = default;
};

/// Line a x + b y + c = 0 with (a, b) != (0, 0), kept in primitive integer
/// form with a positive leading nonzero coefficient.
class PlanarLine {
public:
    PlanarLine(const Rational& a, const Rational& b, const Rational& c);

    const BigInt& a() const { return v_[0]; }
    const BigInt& b() const { return v_[1]; }
    const BigInt& c() const { return v_[2]; }

    bool operator==(const PlanarLine&) const = default;
    auto operator<=>(const PlanarLine& o) const { return v_ <=> o.v_; }

    bool contains(const PlanarPoint& p) const;

private:
    std::array<BigInt, 3> v_;
};

struct R3Point {
    Rational x;
    Rational y;
    Rational z;
    bool operator==(const R3Point&) const = default;
};

/// Central projection of the plane z = 1 onto the sphere.
Direction lift_point(const PlanarPoint& p);
/// One of the two poles of the great circle through the lifted line.
Direction lift_line(const PlanarLine& l);

Rational squared_distance_r3(const R3Point& p, const R3Point& q);

// "num/den" with the denominator omitted when it is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);
Rational parse_rational(const std::string& s);
BigInt parse_bigint(const std::string& s);

}  // namespace udlab
