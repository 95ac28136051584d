#include "conisym/rational.hpp"

#include <stdexcept>

namespace conisym {

Rational rational_from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_str();
}

bool is_integer(const Rational& r) {
    return r.get_den() == 1;
}

long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::invalid_argument("rational does not fit in long: " + to_string(r));
    return r.get_num().get_si();
}

} // namespace conisym
