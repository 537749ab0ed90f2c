#ifndef QNALG_QN_EVALUATE_HPP
#define QNALG_QN_EVALUATE_HPP

#include "../ncfactor.hpp"
#include "element.hpp"
#include "word.hpp"

namespace qnalg::qn
{

// z_{A,i} -> x_{A,i}.
template <DivisionContext C>
typename C::value_type evaluate(const GeneratorWord &w, RootSet<C> &roots)
{
    const C &ctx = roots.ctx();
    typename C::value_type out = ctx.zero();
    for (const auto &[m, c] : w.terms()) {
        typename C::value_type t = ctx.from_rational(c);
        for (const GenIndex &g : m) {
            if (!(g.a.with(g.i)).within(roots.n())) {
                throw Error("generator " + g.str() + " needs more roots");
            }
            t = t * roots.x(g.a, g.i);
        }
        out = out + t;
    }
    return out;
}

// r(A) -> sum over the ascending chain of A of x_{{a_1..a_{t-1}}, a_t}.
template <DivisionContext C>
typename C::value_type evaluate_r(Subset a, RootSet<C> &roots)
{
    typename C::value_type out = roots.ctx().zero();
    Subset prefix;
    for (int e : a.elements()) {
        out = out + roots.x(prefix, e);
        prefix = prefix.with(e);
    }
    return out;
}

template <DivisionContext C>
typename C::value_type evaluate(const QnElement &x, RootSet<C> &roots)
{
    const C &ctx = roots.ctx();
    typename C::value_type out = ctx.zero();
    for (const auto &[s, c] : x.terms()) {
        typename C::value_type t = ctx.from_rational(c);
        for (Subset b : s) {
            if (!b.within(roots.n())) {
                throw Error("string letter " + b.str() + " needs more roots");
            }
            t = t * evaluate_r(b, roots);
        }
        out = out + t;
    }
    return out;
}

} // namespace qnalg::qn

#endif
