// runs every verification suite and prints one pass/fail line per criterion

#include "defq/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

int main()
{
	using defq::SuiteOptions;
	using defq::SuiteResult;

	struct Criterion
	{
		int number;
		const char *what;
		std::vector<std::string> suites;
	};
	std::vector<Criterion> criteria = {
	    {1, "star-product axioms", {"star-axioms"}},
	    {2, "canonical commutation relations", {"heisenberg"}},
	    {3, "Neumaier operator calculus", {"neumaier"}},
	    {4, "conjugation laws", {"conjugation"}},
	    {5, "Gutt product", {"gutt"}},
	    {6, "Fedosov construction", {"fedosov", "poincare"}},
	    {7, "Hopf-*-algebra axioms", {"hopf"}},
	    {8, "convolution groups", {"convolution"}},
	    {9, "crossed products", {"crossed"}},
	    {10, "obstruction witnesses", {"obstruction"}},
	    {11, "symplectic invariance", {"invariance"}},
	    {12, "Morita utilities", {"morita"}},
	    {13, "lambda-adic ultrametric", {"ultrametric"}},
	};

	bool all_ok = true;
	for (auto &c : criteria)
	{
		bool ok = true;
		long checks = 0;
		std::string detail;
		for (auto &s : c.suites)
		{
			SuiteResult r = defq::run_suite(s, SuiteOptions{});
			checks += r.checks;
			if (!r.passed)
			{
				ok = false;
				detail = s + ": " + r.detail;
			}
		}
		if (ok)
			std::printf("criterion %2d (%s): PASS (%ld checks)\n", c.number,
			            c.what, checks);
		else
			std::printf("criterion %2d (%s): FAIL — %s\n", c.number, c.what,
			            detail.c_str());
		all_ok = all_ok && ok;
	}
	return all_ok ? 0 : 1;
}
