#include "sumset/circle_value.hpp"

#include "sumset/errors.hpp"

namespace sumset {

mpq_class mod_one(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    mpq_class r = q - mpq_class(fl);
    r.canonicalize();
    return r;
}

CircleValue::CircleValue(mpq_class f, mpq_class r) : frac(mod_one(f)), root2(std::move(r)) {
    root2.canonicalize();
}

CircleValue CircleValue::from_cyclic(long long residue, long long modulus) {
    if (modulus < 2) throw Error("cyclic embedding needs modulus >= 2");
    mpq_class q(static_cast<long>(residue), static_cast<long>(modulus));
    q.canonicalize();
    return CircleValue(q, 0);
}

CircleValue CircleValue::from_integer(long long k) { return CircleValue(0, mpq_class(static_cast<long>(k))); }

CircleValue CircleValue::operator+(const CircleValue& o) const {
    return CircleValue(frac + o.frac, root2 + o.root2);
}

CircleValue CircleValue::operator-() const { return CircleValue(-frac, -root2); }

CircleValue CircleValue::times(long long k) const {
    return CircleValue(frac * mpq_class(static_cast<long>(k)), root2 * mpq_class(static_cast<long>(k)));
}

std::optional<mpz_class> CircleValue::order() const {
    if (root2 != 0) return std::nullopt;
    return mpz_class(frac.get_den()); // reduced, so the denominator is the order
}

std::string CircleValue::str() const {
    return "(" + frac.get_str() + "," + root2.get_str() + ")";
}

} // namespace sumset
