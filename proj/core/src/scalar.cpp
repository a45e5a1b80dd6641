#include "awshift/scalar.hpp"

namespace awshift {

std::string tower_name(Tower t) {
    switch (t) {
        case Tower::Rational: return "Rational";
        case Tower::Generators: return "Generators";
        case Tower::Complex: return "Complex";
        case Tower::KLinear: return "KLinear";
        case Tower::JetQ1: return "JetQ1";
    }
    return "?";
}

Scalar Scalar::from_int(long n, Tower t) { return from_rat(Rat(n), t); }

Scalar Scalar::from_rat(const Rat& r, Tower t) {
    switch (t) {
        case Tower::Rational: return Scalar(r);
        case Tower::Generators: return Scalar(GenFrac(r));
        case Tower::Complex: return Scalar(BigComplex::from_rat(r));
        case Tower::KLinear: return Scalar(KLin(r));
        case Tower::JetQ1: return Scalar(Jet(r));
    }
    throw Error("bad tower");
}

Tower Scalar::tower() const {
    return static_cast<Tower>(v_.index());
}

namespace {
[[noreturn]] void mixed(const Scalar& a, const Scalar& b) {
    throw TowerError("mixed scalar towers: " + tower_name(a.tower()) + " vs " +
                     tower_name(b.tower()));
}
} // namespace

#define AWSHIFT_BINOP(OP)                                                        \
    Scalar Scalar::operator OP(const Scalar& o) const {                         \
        if (v_.index() != o.v_.index()) mixed(*this, o);                         \
        switch (tower()) {                                                       \
            case Tower::Rational: {                                              \
                Rat r = std::get<Rat>(v_) OP std::get<Rat>(o.v_);                \
                r.canonicalize();                                                \
                return Scalar(r);                                                \
            }                                                                    \
            case Tower::Generators:                                              \
                return Scalar(std::get<GenFrac>(v_) OP std::get<GenFrac>(o.v_)); \
            case Tower::Complex:                                                 \
                return Scalar(std::get<BigComplex>(v_) OP std::get<BigComplex>(o.v_)); \
            case Tower::KLinear:                                                 \
                return Scalar(std::get<KLin>(v_) OP std::get<KLin>(o.v_));       \
            case Tower::JetQ1:                                                   \
                return Scalar(std::get<Jet>(v_) OP std::get<Jet>(o.v_));         \
        }                                                                        \
        throw Error("bad tower");                                                \
    }

AWSHIFT_BINOP(+)
AWSHIFT_BINOP(-)
AWSHIFT_BINOP(*)

#undef AWSHIFT_BINOP

Scalar Scalar::operator/(const Scalar& o) const {
    if (v_.index() != o.v_.index()) mixed(*this, o);
    if (o.is_zero()) throw DivisionByZeroError("scalar division by zero");
    switch (tower()) {
        case Tower::Rational: {
            Rat r = std::get<Rat>(v_) / std::get<Rat>(o.v_);
            r.canonicalize();
            return Scalar(r);
        }
        case Tower::Generators:
            return Scalar(std::get<GenFrac>(v_) / std::get<GenFrac>(o.v_));
        case Tower::Complex:
            return Scalar(std::get<BigComplex>(v_) / std::get<BigComplex>(o.v_));
        case Tower::KLinear:
            return Scalar(std::get<KLin>(v_) / std::get<KLin>(o.v_));
        case Tower::JetQ1:
            return Scalar(std::get<Jet>(v_) / std::get<Jet>(o.v_));
    }
    throw Error("bad tower");
}

Scalar Scalar::operator-() const {
    switch (tower()) {
        case Tower::Rational: return Scalar(Rat(-std::get<Rat>(v_)));
        case Tower::Generators: return Scalar(-std::get<GenFrac>(v_));
        case Tower::Complex: return Scalar(-std::get<BigComplex>(v_));
        case Tower::KLinear: return Scalar(-std::get<KLin>(v_));
        case Tower::JetQ1: return Scalar(-std::get<Jet>(v_));
    }
    throw Error("bad tower");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
    switch (tower()) {
        case Tower::Rational: {
            Rat r = Rat(1) / std::get<Rat>(v_);
            r.canonicalize();
            return Scalar(r);
        }
        case Tower::Generators: return Scalar(std::get<GenFrac>(v_).inverse());
        case Tower::Complex: return Scalar(std::get<BigComplex>(v_).inverse());
        case Tower::KLinear: return Scalar(KLin(Rat(1)) / std::get<KLin>(v_));
        case Tower::JetQ1: return Scalar(std::get<Jet>(v_).inverse());
    }
    throw Error("bad tower");
}

Scalar Scalar::pow(long e) const {
    switch (tower()) {
        case Tower::Rational: return Scalar(rat_pow(std::get<Rat>(v_), e));
        case Tower::Generators: return Scalar(std::get<GenFrac>(v_).pow(e));
        case Tower::Complex: return Scalar(std::get<BigComplex>(v_).pow_int(e));
        case Tower::KLinear: {
            if (e < 0) return inverse().pow(-e);
            Scalar acc = from_int(1, Tower::KLinear);
            for (long i = 0; i < e; ++i) acc = acc * *this;
            return acc;
        }
        case Tower::JetQ1: return Scalar(std::get<Jet>(v_).pow_int(e));
    }
    throw Error("bad tower");
}

bool Scalar::is_zero() const {
    switch (tower()) {
        case Tower::Rational: return std::get<Rat>(v_) == 0;
        case Tower::Generators: return std::get<GenFrac>(v_).is_zero();
        case Tower::Complex: return std::get<BigComplex>(v_).is_zero();
        case Tower::KLinear: return std::get<KLin>(v_).is_zero();
        case Tower::JetQ1: return std::get<Jet>(v_).is_zero();
    }
    throw Error("bad tower");
}

bool Scalar::equals(const Scalar& o) const {
    if (v_.index() != o.v_.index()) mixed(*this, o);
    switch (tower()) {
        case Tower::Rational: return std::get<Rat>(v_) == std::get<Rat>(o.v_);
        case Tower::Generators: return std::get<GenFrac>(v_) == std::get<GenFrac>(o.v_);
        case Tower::Complex:
            throw TowerError("exact equality is undefined in the Complex tower");
        case Tower::KLinear: return std::get<KLin>(v_) == std::get<KLin>(o.v_);
        case Tower::JetQ1: return std::get<Jet>(v_) == std::get<Jet>(o.v_);
    }
    throw Error("bad tower");
}

const Rat& Scalar::rat() const { return std::get<Rat>(v_); }
const GenFrac& Scalar::gen() const { return std::get<GenFrac>(v_); }
const BigComplex& Scalar::cplx() const { return std::get<BigComplex>(v_); }
const KLin& Scalar::klin() const { return std::get<KLin>(v_); }
const Jet& Scalar::jet() const { return std::get<Jet>(v_); }

std::string Scalar::str() const {
    switch (tower()) {
        case Tower::Rational: return rat_str(std::get<Rat>(v_));
        case Tower::Generators: return std::get<GenFrac>(v_).str();
        case Tower::Complex: return std::get<BigComplex>(v_).str();
        case Tower::KLinear: return std::get<KLin>(v_).str();
        case Tower::JetQ1: return std::get<Jet>(v_).str();
    }
    throw Error("bad tower");
}

} // namespace awshift
