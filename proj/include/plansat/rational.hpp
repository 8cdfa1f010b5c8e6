#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace plansat {

// Exact rational on int64. All bound arithmetic in this project stays far
// below the overflow range (inputs are vertex/edge counts), but comparisons
// cross-multiply through __int128 so no intermediate can wrap.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Least integer >= value / greatest integer <= value.
    std::int64_t ceil() const;
    std::int64_t floor() const;

    std::string str() const;  // "p/q", or "p" when q == 1

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class Relation { LT, LE, EQ, GE, GT };

const char* relation_str(Relation rel);
bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs);

// Exact record of one bound instance: lhs REL rhs with named integer inputs.
struct BoundCertificate {
    std::string formula;
    std::vector<std::pair<std::string, std::int64_t>> inputs;
    Rational lhs;
    Relation relation = Relation::LE;
    Rational rhs;
    bool satisfied = false;
    bool equality = false;  // lhs == rhs (sharpness flag)

    static BoundCertificate make(std::string formula,
                                 std::vector<std::pair<std::string, std::int64_t>> inputs,
                                 Rational lhs, Relation rel, Rational rhs);
};

}  // namespace plansat
