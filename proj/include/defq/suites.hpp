#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace defq {

struct SuiteOptions
{
	uint64_t seed = 0x5eed0001u;
	long trials = -1; // -1: suite default
	int dim = -1;     // -1: suite default
	long order = -1;  // -1: suite default
};

struct SuiteResult
{
	std::string name;
	bool passed = false;
	long checks = 0;
	std::string detail; // first counterexample / failure location
};

// registered verification suites, in acceptance order
std::vector<std::string> suite_names();

// runs one suite; throws std::invalid_argument for unknown names
SuiteResult run_suite(const std::string &name, const SuiteOptions &opt = {});

} // namespace defq
