#include "nf/poisson.hpp"

#include <stdexcept>

namespace nf {

Poly bracket(const Poly& f, const Poly& g) {
    if (f.n() != g.n()) throw std::invalid_argument("polynomial dimension mismatch");
    const int n = f.n();
    Poly r(n);
    for (int j = 0; j < n; ++j) {
        r += f.partial(j) * g.partial(n + j);
        r -= f.partial(n + j) * g.partial(j);
    }
    return r;
}

Poly ham_apply(const Poly& h, const Poly& g) { return bracket(h, g); }

}  // namespace nf
