// Computes a few objects in two variables and checks one identity.

#include "jackbern/jackbern.hpp"

#include <iostream>

int main()
{
    using namespace jackbern;
    const Rational d = rational(1);
    const Partition m{2, 1};

    std::cout << "P" << m.str() << " = " << format_plain(jack_P(m, 2, d)) << '\n';
    std::cout << "Psi" << m.str() << " = " << format_plain(jack_Psi(m, 2, d)) << '\n';
    std::cout << "B" << m.str() << " = " << format_plain(mv_bernoulli(m, 2, d)) << '\n';
    std::cout << "binom((2,1),(1)) = " << to_string(binomial(m, Partition{1}, 2, d)) << '\n';

    const OmegaTuple omega(std::vector<Rational>{rational(1), rational(2)});
    std::cout << "B" << m.str() << "(z | 1,2) = " << format_plain(multiple_mv_bernoulli(m, omega, 2, d)) << '\n';

    const auto reports = verify_theorem1(2, d, 3);
    std::cout << reports.size() << " identity checks, " << (all_pass(reports) ? "all pass" : "some fail") << '\n';
    return all_pass(reports) ? 0 : 1;
}
