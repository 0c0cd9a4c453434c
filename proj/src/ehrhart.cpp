#include "pipkit/ehrhart.hpp"

#include <sstream>

#include "pipkit/counting.hpp"
#include "pipkit/errors.hpp"

namespace pipkit {

QuasiPolynomial::QuasiPolynomial(BigInt period, std::vector<Coefficients> per_residue)
    : period_(std::move(period)), residues_(std::move(per_residue)) {
    if (period_ < 1 || BigInt(static_cast<unsigned long>(residues_.size())) != period_) {
        throw Error("quasipolynomial needs exactly one coefficient triple per residue");
    }
}

Rational QuasiPolynomial::evaluate(const BigInt& t) const {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), period_.get_mpz_t());
    const auto& c = residues_[r.get_ui()];
    const Rational rt(t);
    return c[0] + c[1] * rt + c[2] * rt * rt;
}

bool QuasiPolynomial::is_polynomial() const {
    for (const auto& c : residues_) {
        if (c != residues_.front()) return false;
    }
    return true;
}

namespace {

// Quadratic through (s, y0), (s + D, y1), (s + 2D, y2) via divided differences.
QuasiPolynomial::Coefficients interpolate(const BigInt& s, const BigInt& step, const BigInt& y0,
                                          const BigInt& y1, const BigInt& y2) {
    const Rational d(step);
    const Rational t0(s);
    const Rational t1(BigInt(s + step));
    const Rational f01 = Rational(BigInt(y1 - y0)) / d;
    const Rational f12 = Rational(BigInt(y2 - y1)) / d;
    const Rational f012 = (f12 - f01) / (Rational(2) * d);
    return {Rational(y0) - f01 * t0 + f012 * t0 * t1, f01 - f012 * (t0 + t1), f012};
}

Rational eval(const QuasiPolynomial::Coefficients& c, const BigInt& t) {
    const Rational rt(t);
    return c[0] + c[1] * rt + c[2] * rt * rt;
}

}  // namespace

QuasiPolynomial reconstruct_quasipolynomial(const RationalPolygon& p) {
    const BigInt& period = p.denominator();
    if (!period.fits_ulong_p()) throw OutOfRange("denominator too large to tabulate residues");
    const unsigned long residues = period.get_ui();
    std::vector<QuasiPolynomial::Coefficients> coeffs;
    coeffs.reserve(residues);
    for (unsigned long r = 0; r < residues; ++r) {
        const BigInt s = (r == 0) ? period : BigInt(r);
        const BigInt y0 = count_total(p, s);
        const BigInt y1 = count_total(p, BigInt(s + period));
        const BigInt y2 = count_total(p, BigInt(s + 2 * period));
        auto c = interpolate(s, period, y0, y1, y2);
        const BigInt t_check = s + 3 * period;
        const BigInt y3 = count_total(p, t_check);
        if (eval(c, t_check) != Rational(y3)) {
            std::ostringstream os;
            os << "residue " << r << " of " << p << ": interpolated value " << eval(c, t_check)
               << " at t=" << t_check << " but counted " << y3;
            throw InternalConsistency(os.str());
        }
        coeffs.push_back(std::move(c));
    }
    return QuasiPolynomial(period, std::move(coeffs));
}

PipCertificate is_pseudointegral(const RationalPolygon& p) {
    PipCertificate cert{false, reconstruct_quasipolynomial(p), 0, 0, std::nullopt};
    const auto report = count_report(p, 1);
    cert.interior = report.interior;
    cert.boundary = report.boundary;

    const auto& residues = cert.ehrhart.residues();
    for (std::size_t r = 1; r < residues.size(); ++r) {
        if (residues[r] != residues[0]) {
            cert.witness_residues = std::make_pair(std::size_t{0}, r);
            break;
        }
    }
    cert.is_pip = !cert.witness_residues.has_value();

    for (const auto& c : residues) {
        if (c[2] != p.area()) {
            std::ostringstream os;
            os << "leading coefficient " << c[2] << " differs from area " << p.area() << " of " << p;
            throw InternalConsistency(os.str());
        }
    }

    if (cert.is_pip) {
        const auto& c = residues.front();
        const Rational b_poly = Rational(2) * c[1];
        const Rational i_poly = c[2] - c[1] + Rational(1);
        if (c[0] != Rational(1) || b_poly != Rational(cert.boundary) ||
            i_poly != Rational(cert.interior)) {
            std::ostringstream os;
            os << "polynomial (" << c[0] << ", " << c[1] << ", " << c[2] << ") of " << p
               << " disagrees with direct counts i=" << cert.interior << " b=" << cert.boundary;
            throw InternalConsistency(os.str());
        }
    }
    return cert;
}

bool check_reciprocity(const RationalPolygon& p, const QuasiPolynomial& ehr, const BigInt& t_max) {
    if (t_max < p.denominator()) {
        throw OutOfRange("reciprocity check needs t_max >= den(P) = " + p.denominator().get_str());
    }
    for (BigInt t = 1; t <= t_max; ++t) {
        // (-1)^dim with dim = 2
        if (Rational(count_interior(p, t)) != ehr.evaluate(BigInt(-t))) return false;
    }
    return true;
}

bool check_reciprocity(const RationalPolygon& p, const BigInt& t_max) {
    return check_reciprocity(p, reconstruct_quasipolynomial(p), t_max);
}

}  // namespace pipkit
