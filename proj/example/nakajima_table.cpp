// Prints c_1..c_12 from the recurrence next to the Poincaré polynomials of
// the punctual Hilbert schemes M_n(P).

#include <iostream>

#include "hilbpts/hilbpts.hpp"

int main() {
    const hilb::NakajimaSequence seq = hilb::nakajima_recurrence(12);
    for (int n = 1; n <= 12; ++n)
        std::cout << "n=" << n << "  c_n=" << seq.c(n) << "  P(M_n(P)) = " << hilb::poincare_punctual(n) << '\n';
}
