// compares the serial star kernel against the OpenMP slab-parallel wrapper
// and checks that both agree term by term

#include "defq/random.hpp"
#include "defq/star.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace defq;

int main(int argc, char **argv)
{
	int n = argc > 1 ? std::atoi(argv[1]) : 2;
	size_t order = argc > 2 ? size_t(std::atoi(argv[2])) : 8;
	int maxdeg = argc > 3 ? std::atoi(argv[3]) : 6;
	int reps = argc > 4 ? std::atoi(argv[4]) : 3;

	std::mt19937_64 rng(42);
	StarElem f = random_poly(rng, n, order, maxdeg, Chart::real, 24);
	StarElem g = random_poly(rng, n, order, maxdeg, Chart::real, 24);
	StarSpec spec = StarSpec::weyl();

	auto time = [&](auto &&fn) {
		auto t0 = std::chrono::steady_clock::now();
		StarElem r = fn();
		auto t1 = std::chrono::steady_clock::now();
		double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
		return std::pair<StarElem, double>(std::move(r), ms);
	};

	double serial_best = 1e18, parallel_best = 1e18;
	StarElem serial_r(n, order), parallel_r(n, order);
	for (int k = 0; k < reps; ++k)
	{
		auto [rs, ts] = time([&] { return star(spec, f, g); });
		auto [rp, tp] = time([&] { return star_parallel(spec, f, g); });
		serial_best = std::min(serial_best, ts);
		parallel_best = std::min(parallel_best, tp);
		serial_r = rs;
		parallel_r = rp;
	}

	bool agree = serial_r == parallel_r;
	std::cout << "n=" << n << " order=" << order << " maxdeg=" << maxdeg
	          << " terms=" << f.terms.size() << "x" << g.terms.size() << "\n";
	std::cout << "serial:   " << serial_best << " ms\n";
	std::cout << "parallel: " << parallel_best << " ms\n";
	std::cout << "speedup:  " << serial_best / parallel_best << "\n";
	std::cout << "results " << (agree ? "agree" : "DISAGREE") << "\n";
	return agree ? 0 : 1;
}
