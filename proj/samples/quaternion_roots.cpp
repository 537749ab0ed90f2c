// Factorizations of the quaternion polynomial with roots i, j, 1+k, and the
// Miura operator of the flag (x, x^2).

#include <iostream>

#include "qnalg/difffactor.hpp"
#include "qnalg/ncfactor.hpp"

using namespace qnalg;

int main()
{
    const QuaternionRing h;
    RootSet<QuaternionRing> roots(h, {Quaternion::i(), Quaternion::j(), Quaternion(1, 0, 0, 1)});
    const auto set = factorize_all(roots, h.one());
    std::cout << "P(t) = " << render_poly(h, set.polynomial) << "\n";
    for (const auto &f : set.factorizations) {
        std::cout << "  ordering";
        for (int i : f.ordering) {
            std::cout << ' ' << i;
        }
        std::cout << ":";
        for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
            std::cout << " (t - (" << h.render(*it) << "))";
        }
        std::cout << "\n";
    }

    const RatFuncField rf;
    const RatFunc x = RatFunc::x();
    const auto m = miura_factorize(rf, {x, x * x});
    std::cout << "L = " << render_diffop(rf, m.op) << "\n";
    return 0;
}
