#include "polyalg.hpp"

#include "combinat.hpp"
#include "error.hpp"

#include <algorithm>

namespace braidlevel::polyalg {

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(std::size_t power, Rat c) {
    RatPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rat> out(coeffs_);
    for (auto& c : out) c = -c;
    RatPoly p;
    p.coeffs_ = std::move(out);
    return p;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rat> out(coeffs_);
    for (auto& c : out) c *= s;
    RatPoly p;
    p.coeffs_ = std::move(out);
    return p;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero())
        throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
    RatPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {RatPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rat(0));
    const Rat lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        const Rat factor = rem.leading() / lead;
        q[shift] = factor;
        rem = rem - RatPoly::monomial(shift, factor) * divisor;
    }
    return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::compose_affine(const Rat& alpha, const Rat& beta) const {
    // Horner over the argument polynomial alpha*t + beta.
    RatPoly arg(std::vector<Rat>{beta, alpha});
    RatPoly acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * arg + RatPoly::constant(coeffs_[i]);
    return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        const bool first = out.empty();
        Rat a = c > 0 ? c : Rat(-c);
        if (!first) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const bool unit = a == 1 && i > 0;
        if (!unit) out += rat_to_string(a);
        if (i >= 1) {
            if (!unit) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly falling_factorial_poly(unsigned long n) {
    RatPoly p = RatPoly::constant(Rat(1));
    for (unsigned long i = 0; i < n; ++i)
        p = p * RatPoly(std::vector<Rat>{Rat(-static_cast<long>(i)), Rat(1)});
    return p;
}

RatPoly binomial_poly(unsigned long k) {
    return falling_factorial_poly(k) * make_rat(BigInt(1), factorial(k));
}

BasisCoeffs to_basis(const RatPoly& p, Basis basis) {
    if (basis == Basis::Power) return {basis, p.coeffs()};
    // Power -> falling via t^n = sum_k S(n,k) (t)_k.
    const std::size_t len = p.coeffs().size();
    std::vector<Rat> falling(len, Rat(0));
    for (std::size_t n = 0; n < len; ++n) {
        if (p.coeff(n) == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) {
            BigInt s = combinat::stirling_second(n, k);
            if (s != 0) falling[k] += p.coeff(n) * Rat(s);
        }
    }
    while (!falling.empty() && falling.back() == 0) falling.pop_back();
    if (basis == Basis::Falling) return {basis, std::move(falling)};
    // Binomial coefficients rescale the falling ones: C(t,k) = (t)_k / k!.
    for (std::size_t k = 0; k < falling.size(); ++k) falling[k] *= Rat(factorial(k));
    return {Basis::Binomial, std::move(falling)};
}

RatPoly from_basis(const BasisCoeffs& bc) {
    switch (bc.basis) {
    case Basis::Power:
        return RatPoly(bc.coeffs);
    case Basis::Falling: {
        // (t)_n = sum_k s(n,k) t^k.
        std::vector<Rat> power(bc.coeffs.size(), Rat(0));
        for (std::size_t n = 0; n < bc.coeffs.size(); ++n) {
            if (bc.coeffs[n] == 0) continue;
            for (std::size_t k = 0; k <= n; ++k) {
                BigInt s = combinat::stirling_first_signed(n, k);
                if (s != 0) power[k] += bc.coeffs[n] * Rat(s);
            }
        }
        return RatPoly(std::move(power));
    }
    case Basis::Binomial: {
        std::vector<Rat> falling(bc.coeffs);
        for (std::size_t k = 0; k < falling.size(); ++k)
            falling[k] *= make_rat(BigInt(1), factorial(k));
        return from_basis({Basis::Falling, std::move(falling)});
    }
    }
    throw Error(ErrorKind::Internal, "unknown basis");
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty())
        throw Error(ErrorKind::InvalidInput, "interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw Error(ErrorKind::InvalidInput, "degenerate interpolation node");
    RatPoly acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly term = RatPoly::constant(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rat denom = points[i].first - points[j].first;
            term = term * RatPoly(std::vector<Rat>{-points[j].first / denom, Rat(1) / denom});
        }
        acc = acc + term;
    }
    return acc;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.leading());
    return a;
}

std::vector<std::string> coeff_strings(const RatPoly& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(rat_to_string(c));
    return out;
}

RatPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> out;
    out.reserve(coeffs.size());
    for (const auto& s : coeffs) out.push_back(parse_rat(s));
    return RatPoly(std::move(out));
}

} // namespace braidlevel::polyalg
