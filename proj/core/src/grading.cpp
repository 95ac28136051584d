#include "conisym/grading.hpp"

#include <numeric>
#include <stdexcept>

namespace conisym {

std::vector<Rational> GradingData::rational_degrees() const {
    std::vector<Rational> w;
    w.reserve(degrees.size());
    for (long d : degrees) w.emplace_back(d);
    return w;
}

long GradingData::degree_gcd() const {
    long g = 0;
    for (long d : degrees) g = std::gcd(g, d);
    return g;
}

void GradingData::validate() const {
    if (s <= 0) throw std::invalid_argument("symplectic weight s must be positive");
    for (long d : degrees)
        if (d <= 0) throw std::invalid_argument("generator degrees must be positive");
    if (w && w->size() != degrees.size())
        throw std::invalid_argument("w-weight vector length does not match degrees");
}

} // namespace conisym
