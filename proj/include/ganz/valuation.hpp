#ifndef GANZ_VALUATION_HPP
#define GANZ_VALUATION_HPP

#include <string>
#include <variant>
#include <vector>

#include "ganz/parse.hpp"
#include "ganz/ratfunc.hpp"

namespace ganz {

// Element of the residue field of a valuation on L = K(x1..xn): a plain
// rational for the near-point family, a rational function over Q in the
// residue variables y1..yn for the weighted-Gauss family.
struct ResidueElem {
    std::variant<Rat, QFunc> v;

    ResidueElem() : v(Rat(0)) {}
    explicit ResidueElem(Rat r) : v(std::move(r)) {}
    explicit ResidueElem(QFunc f) : v(std::move(f)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(v); }

    bool is_constant() const {
        if (is_rational()) return true;
        const QFunc& f = std::get<QFunc>(v);
        return f.is_polynomial() && f.num().degree() <= 0;
    }
    Rat constant_value() const {
        if (is_rational()) return std::get<Rat>(v);
        const QFunc& f = std::get<QFunc>(v);
        if (!is_constant()) throw Error("residue is not constant");
        return f.num().zero() ? Rat(0) : f.num().leading_coefficient();
    }

    bool is_zero() const {
        return is_rational() ? ganz::is_zero(std::get<Rat>(v)) : std::get<QFunc>(v).zero();
    }

    friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
        if (a.is_rational() && b.is_rational())
            return ResidueElem(std::get<Rat>(a.v) * std::get<Rat>(b.v));
        const QFunc& fa = a.as_qfunc(b);
        const QFunc& fb = b.as_qfunc(a);
        return ResidueElem(fa * fb);
    }
    friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
        if (a.is_rational() && b.is_rational())
            return ResidueElem(std::get<Rat>(a.v) + std::get<Rat>(b.v));
        return ResidueElem(a.as_qfunc(b) + b.as_qfunc(a));
    }
    friend bool operator==(const ResidueElem& a, const ResidueElem& b) {
        if (a.is_rational() && b.is_rational())
            return std::get<Rat>(a.v) == std::get<Rat>(b.v);
        return a.as_qfunc(b) == b.as_qfunc(a);
    }

    std::string str() const {
        if (is_rational()) return expr_string(std::get<Rat>(v));
        return expr_string(std::get<QFunc>(v));
    }

private:
    QFunc as_qfunc(const ResidueElem& other) const {
        if (!is_rational()) return std::get<QFunc>(v);
        int n = other.is_rational() ? 0 : std::get<QFunc>(other.v).nvars();
        return QFunc::constant(n, std::get<Rat>(v));
    }
};

// Computable valuation on L extending the eps-adic valuation of K.
//
//   NearPoint(b, d):  f maps to (ord_t f(b+td), val_K of the lowest t-coefficient),
//                     in Z^2 ordered lexicographically.  Functions vanishing at b
//                     land strictly above the embedded copy of the value group of K.
//   WeightedGauss(w): monomial weights; on polynomials the minimum over the
//                     support of val_K(coefficient) + exponent.w, in Z.
class Valuation {
public:
    enum class Kind { NearPoint, WeightedGauss };

    static Valuation near_point(Point b, Point d) {
        if (b.size() != d.size() || b.size() == 0)
            throw std::invalid_argument("near-point data must have matching positive arity");
        bool dz = true;
        for (const auto& c : d.coords)
            if (!c.is_zero()) dz = false;
        if (dz) throw std::invalid_argument("direction must be nonzero");
        Valuation v;
        v.kind_ = Kind::NearPoint;
        v.b_ = std::move(b);
        v.d_ = std::move(d);
        return v;
    }

    static Valuation weighted_gauss(std::vector<long long> w) {
        if (w.empty()) throw std::invalid_argument("weight vector must be nonempty");
        Valuation v;
        v.kind_ = Kind::WeightedGauss;
        v.w_ = std::move(w);
        return v;
    }

    Kind kind() const { return kind_; }
    std::size_t rank() const { return kind_ == Kind::NearPoint ? 2 : 1; }
    int nvars() const {
        return kind_ == Kind::NearPoint ? static_cast<int>(b_.size()) : static_cast<int>(w_.size());
    }
    const Point& base_point() const { return b_; }
    const Point& direction() const { return d_; }
    const std::vector<long long>& weights() const { return w_; }

    // embedding of the value group of K
    ValGroupElem embed_k(long long gamma) const {
        if (kind_ == Kind::NearPoint) return ValGroupElem({0, gamma});
        return ValGroupElem({gamma});
    }
    ValGroupElem zero_value() const { return ValGroupElem::zero(rank()); }

    ValOrInf val_of(const RatFunc& f) const {
        if (f.zero()) return ValOrInf::infinity();
        if (kind_ == Kind::WeightedGauss)
            return ValGroupElem({gauss_val(f.num()) - gauss_val(f.den())});
        LineRestriction lr = restrict_line(f);
        if (lr.num.zero()) throw DegenerateDirection();
        int on = lr.num.ord(), od = lr.den.ord();
        KElem lead = lr.num.coeff(on) / lr.den.coeff(od);
        return ValGroupElem({static_cast<long long>(on - od), lead.val().v});
    }

    ResidueElem residue_of(const RatFunc& f) const {
        ValOrInf v = val_of(f);
        if (v.inf || !(v.v == zero_value())) throw NonzeroValuation();
        if (kind_ == Kind::NearPoint) {
            LineRestriction lr = restrict_line(f);
            KElem lead = lr.num.coeff(lr.num.ord()) / lr.den.coeff(lr.den.ord());
            return ResidueElem(lead.residue());
        }
        MPoly<Rat> rn = gauss_residue_poly(f.num(), gauss_val(f.num()));
        MPoly<Rat> rd = gauss_residue_poly(f.den(), gauss_val(f.den()));
        return ResidueElem(QFunc(rn, rd));
    }

    // designated uniformizers u_1..u_r with val(u_j) = j-th unit vector;
    // the base of every monomial semi-section over this valuation
    std::vector<RatFunc> uniformizers() const {
        int n = nvars();
        if (kind_ == Kind::WeightedGauss)
            return {RatFunc::constant(n, KElem::eps())};
        std::size_t i = 0;
        while (d_[i].is_zero()) ++i;
        RatFunc xi = RatFunc::variable(n, static_cast<int>(i));
        RatFunc line = (xi - RatFunc::constant(n, b_[i])) / RatFunc::constant(n, d_[i]);
        return {line, RatFunc::constant(n, KElem::eps())};
    }

    std::string str() const {
        if (kind_ == Kind::WeightedGauss) {
            std::string s = "weighted-gauss w=(";
            for (std::size_t i = 0; i < w_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(w_[i]);
            }
            return s + ")";
        }
        return "near-point b=" + b_.str() + " d=" + d_.str();
    }

private:
    Kind kind_ = Kind::WeightedGauss;
    Point b_, d_;
    std::vector<long long> w_;

    Valuation() = default;

    LineRestriction restrict_line(const RatFunc& f) const {
        try {
            return subst_line(f, b_, d_);
        } catch (const LineInDenominatorLocus&) {
            throw DegenerateDirection();
        }
    }

    long long gauss_val(const MPoly<KElem>& p) const {
        if (p.zero()) throw std::logic_error("gauss valuation of the zero polynomial");
        bool first = true;
        long long best = 0;
        for (const auto& [e, c] : p.terms()) {
            long long v = c.val().v;
            for (std::size_t i = 0; i < e.size(); ++i) v += static_cast<long long>(e[i]) * w_[i];
            if (first || v < best) best = v;
            first = false;
        }
        return best;
    }

    MPoly<Rat> gauss_residue_poly(const MPoly<KElem>& p, long long v) const {
        MPoly<Rat> r(p.nvars());
        for (const auto& [e, c] : p.terms()) {
            long long shift = -v;
            for (std::size_t i = 0; i < e.size(); ++i) shift += static_cast<long long>(e[i]) * w_[i];
            Rat rc = (c * KElem::eps(static_cast<int>(shift))).residue();
            if (!ganz::is_zero(rc)) r.add_term(e, rc);
        }
        return r;
    }
};

// Sign of the lowest-order t-coefficient of f(b+td): the total order on L
// in which t is an infinitesimal positive displacement from b.  Compatible
// with the near-point valuation at (b, d).
inline int substitution_order_sign(const Point& b, const Point& d, const RatFunc& f) {
    if (f.zero()) return 0;
    LineRestriction lr;
    try {
        lr = subst_line(f, b, d);
    } catch (const LineInDenominatorLocus&) {
        throw DegenerateDirection();
    }
    if (lr.num.zero()) throw DegenerateDirection();
    return sgn(lr.num.coeff(lr.num.ord())) * sgn(lr.den.coeff(lr.den.ord()));
}

// Conformance check: a function vanishing at the base point must have
// valuation above the whole embedded value group of K, i.e. a strictly
// positive leading coordinate.
inline bool check_near_property(const Valuation& v, const RatFunc& f) {
    if (v.kind() != Valuation::Kind::NearPoint)
        throw std::invalid_argument("near property is about near-point valuations");
    EvalOutcome at_b = try_eval(f, v.base_point());
    if (!at_b.defined()) throw NotDefinedAt();
    if (!at_b.value.is_zero()) return true;
    if (f.zero()) return true;
    ValOrInf val = v.val_of(f);
    return val.inf || val.v.c[0] >= 1;
}

} // namespace ganz

#endif
