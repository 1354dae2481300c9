#include "racah/param_scalar.hpp"

namespace racah {

GRat ParamScalar::eval(const std::vector<mpq_class>& values) const {
    GRat total;
    for (const auto& [pw, c] : terms_) {
        mpq_class f = 1;
        for (int k = 0; k < kMaxPar; ++k) {
            for (int e = 0; e < pw[k]; ++e) f *= values.at(k);
        }
        GRat t = c;
        t.re *= f;
        t.im *= f;
        total += t;
    }
    return total;
}

}  // namespace racah
