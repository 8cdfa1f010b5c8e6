#include "plansat/rational.hpp"

#include "plansat/errors.hpp"

namespace plansat {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::VertexCountMismatch: return "VertexCountMismatch";
        case ErrorCode::NotMaximalPlanar: return "NotMaximalPlanar";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::MalformedRotation: return "MalformedRotation";
        case ErrorCode::MalformedAnchor: return "MalformedAnchor";
        case ErrorCode::NotAddable: return "NotAddable";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::FlipCreatesParallelEdge: return "FlipCreatesParallelEdge";
        case ErrorCode::NotFlippable: return "NotFlippable";
        case ErrorCode::NotASubgraph: return "NotASubgraph";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::InternalClaimFailed: return "InternalClaimFailed";
        case ErrorCode::InsufficientTriangularFaces: return "InsufficientTriangularFaces";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::BadParameter, "rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw Error(ErrorCode::BadParameter, "division by zero rational");
    return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* relation_str(Relation rel) {
    switch (rel) {
        case Relation::LT: return "<";
        case Relation::LE: return "<=";
        case Relation::EQ: return "=";
        case Relation::GE: return ">=";
        case Relation::GT: return ">";
    }
    return "?";
}

bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs) {
    switch (rel) {
        case Relation::LT: return lhs < rhs;
        case Relation::LE: return lhs <= rhs;
        case Relation::EQ: return lhs == rhs;
        case Relation::GE: return lhs >= rhs;
        case Relation::GT: return lhs > rhs;
    }
    return false;
}

BoundCertificate BoundCertificate::make(std::string formula,
                                        std::vector<std::pair<std::string, std::int64_t>> inputs,
                                        Rational lhs, Relation rel, Rational rhs) {
    BoundCertificate cert;
    cert.formula = std::move(formula);
    cert.inputs = std::move(inputs);
    cert.lhs = lhs;
    cert.relation = rel;
    cert.rhs = rhs;
    cert.satisfied = relation_holds(lhs, rel, rhs);
    cert.equality = (lhs == rhs);
    return cert;
}

}  // namespace plansat
