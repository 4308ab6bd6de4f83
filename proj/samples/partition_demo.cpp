// Evaluates Z_3 for one set of rational spectral parameters by every route
// the library offers and prints the results side by side.

#include <iostream>

#include <sixvertex/sixvertex.hpp>

int main() {
	using namespace sixvertex;
	RationalModel<Rational> model;
	SpectralParams<RationalModel<Rational>> params;
	params.lambdas = {Rational(1, 2), Rational(3), Rational(-7, 3)};
	params.nus = {Rational(0), Rational(5, 4), Rational(-2)};

	const Rational reference = z_enum(model, params);
	struct Row {
		const char *name;
		Rational value;
	} rows[] = {
		{"enumeration", reference},
		{"qism", z_qism(model, params)},
		{"ik", z_ik(model, params)},
		{"kostov", z_kostov(model, params)},
		{"basis (monomial)", z_basis_rat(model, params, monomial_basis<Rational>(3))},
		{"basis (random)", z_basis_rat(model, params, random_basis<Rational>(3, 42))},
	};
	bool agree = true;
	for (const auto &r : rows) {
		std::cout << r.name << ": " << r.value << '\n';
		agree = agree && r.value == reference;
	}
	std::cout << (agree ? "all representations agree\n" : "MISMATCH\n");
	return agree ? 0 : 1;
}
