// command-line surface: parse expressions, compute star products, run the
// verification suites

#include "defq/actions.hpp"
#include "defq/expr.hpp"
#include "defq/fedosov.hpp"
#include "defq/gutt.hpp"
#include "defq/hopf_fixtures.hpp"
#include "defq/random.hpp"
#include "defq/star.hpp"
#include "defq/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace defq;
using nlohmann::json;

namespace {

struct BadFlag : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

StarSpec parse_product(const std::string &s)
{
	if (s == "std")
		return StarSpec::standard();
	if (s == "weyl")
		return StarSpec::weyl();
	if (s == "wick")
		return StarSpec::wick();
	if (s.rfind("kappa:", 0) == 0)
		return StarSpec::kappa(parse_rat(s.substr(6)));
	if (s.rfind("tkappa:", 0) == 0)
		return StarSpec::tkappa(parse_rat(s.substr(7)));
	throw BadFlag("unknown product '" + s +
	              "' (expected std|weyl|kappa:<rat>|wick|tkappa:<rat>|fedosov)");
}

void emit(const StarElem &f, bool as_text)
{
	if (as_text)
		std::cout << to_string(f) << "\n";
	else
		std::cout << to_json(f).dump(2) << "\n";
}

// ------------------------------------------------------------------
// small parser for enveloping-algebra expressions: sums of terms
// [rat] [* lam^k] * e<i>^<m> * ...

PBWPoly parse_pbw(const std::string &src, const LieAlgebra &g, size_t order)
{
	PBWPoly out(g.dim, order);
	size_t pos = 0;
	auto skip = [&] {
		while (pos < src.size() && isspace(src[pos]))
			++pos;
	};
	auto fail = [&](const std::string &msg) -> void {
		throw ParseError(1, int(pos) + 1, msg);
	};
	auto number = [&]() -> long {
		skip();
		if (pos >= src.size() || !isdigit(src[pos]))
			fail("expected a number");
		long v = 0;
		while (pos < src.size() && isdigit(src[pos]))
			v = v * 10 + (src[pos++] - '0');
		return v;
	};
	skip();
	bool first = true;
	while (pos < src.size())
	{
		Rat sign = 1;
		skip();
		if (!first || src[pos] == '+' || src[pos] == '-')
		{
			if (pos >= src.size() || (src[pos] != '+' && src[pos] != '-'))
				fail("expected '+' or '-'");
			if (src[pos] == '-')
				sign = -1;
			++pos;
		}
		first = false;
		Rat coeff = 1;
		size_t lam = 0;
		std::vector<uint32_t> mono(size_t(g.dim));
		bool any = false;
		for (;;)
		{
			skip();
			if (pos < src.size() && isdigit(src[pos]))
			{
				long num = number();
				long den = 1;
				if (pos < src.size() && src[pos] == '/')
				{
					++pos;
					den = number();
					if (den == 0)
						fail("zero denominator");
				}
				coeff *= rat(num, den);
				any = true;
			}
			else if (pos + 2 < src.size() && src.compare(pos, 3, "lam") == 0)
			{
				pos += 3;
				size_t k = 1;
				if (pos < src.size() && src[pos] == '^')
				{
					++pos;
					k = size_t(number());
				}
				lam += k;
				any = true;
			}
			else if (pos < src.size() && src[pos] == 'e')
			{
				++pos;
				long idx = number();
				if (idx < 1 || idx > g.dim)
					fail("generator index out of range");
				uint32_t k = 1;
				if (pos < src.size() && src[pos] == '^')
				{
					++pos;
					k = uint32_t(number());
				}
				mono[size_t(idx - 1)] += k;
				any = true;
			}
			else
				fail("expected a coefficient, lam or a generator");
			skip();
			if (pos < src.size() && src[pos] == '*')
			{
				++pos;
				continue;
			}
			break;
		}
		if (!any)
			fail("empty term");
		out.add_term(mono,
		             CSeries::lambda_power(order, lam, CScalar(sign * coeff)));
	}
	return out;
}

std::string pbw_to_string(const PBWPoly &p)
{
	std::string out;
	for (auto &[m, s] : p.terms)
	{
		std::string mono;
		for (size_t v = 0; v < m.size(); ++v)
		{
			if (m[v] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += "e" + std::to_string(v + 1);
			if (m[v] > 1)
				mono += "^" + std::to_string(m[v]);
		}
		if (!out.empty())
			out += " + ";
		out += "(" + to_string(s) + ")";
		if (!mono.empty())
			out += "*" + mono;
	}
	return out.empty() ? "0" : out;
}

LieAlgebra parse_algebra(const std::string &s)
{
	if (s == "heisenberg")
		return LieAlgebra::heisenberg();
	if (s == "sl2")
		return LieAlgebra::sl2();
	if (s == "solvable3")
		return LieAlgebra::solvable3();
	if (s.rfind("abelian:", 0) == 0)
		return LieAlgebra::abelian(std::stoi(s.substr(8)));
	throw BadFlag("unknown algebra '" + s +
	              "' (expected heisenberg|sl2|solvable3|abelian:<d>)");
}

// ------------------------------------------------------------------
// JSON fixture plumbing

json load_json(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw BadFlag("cannot open fixture file '" + path + "'");
	return json::parse(in);
}

CScalar coeff_from_json(const json &j)
{
	if (j.is_string())
		return CScalar(parse_rat(j.get<std::string>()));
	if (j.is_number_integer())
		return CScalar(rat(j.get<long>()));
	if (j.is_array() && j.size() == 2)
		return CScalar(parse_rat(j[0].get<std::string>()),
		               parse_rat(j[1].get<std::string>()));
	throw BadFlag("bad coefficient literal: " + j.dump());
}

HopfElem elem_from_json(const json &j, int dim)
{
	if (!j.is_array() || int(j.size()) != dim)
		throw BadFlag("element has wrong length: " + j.dump());
	HopfElem e(static_cast<size_t>(dim));
	for (int i = 0; i < dim; ++i)
		e[size_t(i)] = coeff_from_json(j[size_t(i)]);
	return e;
}

HopfAlgebra hopf_from_json(const json &j)
{
	HopfAlgebra H;
	H.dim = j.at("dim").get<int>();
	H.labels = j.at("labels").get<std::vector<std::string>>();
	H.unit = elem_from_json(j.at("unit"), H.dim);
	H.mult.assign(size_t(H.dim),
	              std::vector<std::optional<HopfElem>>(size_t(H.dim)));
	for (int i = 0; i < H.dim; ++i)
		for (int k = 0; k < H.dim; ++k)
		{
			const json &cell = j.at("mult").at(size_t(i)).at(size_t(k));
			if (!cell.is_null())
				H.mult[size_t(i)][size_t(k)] = elem_from_json(cell, H.dim);
		}
	H.comult.resize(size_t(H.dim));
	for (int i = 0; i < H.dim; ++i)
	{
		const json &cm = j.at("comult").at(size_t(i));
		if (cm.is_null())
			continue;
		std::vector<SweedlerTriple> d;
		for (auto &t : cm)
			d.push_back({t.at(0).get<int>(), t.at(1).get<int>(),
			             coeff_from_json(t.at(2))});
		H.comult[size_t(i)] = std::move(d);
	}
	H.counit.resize(size_t(H.dim));
	for (int i = 0; i < H.dim; ++i)
		H.counit[size_t(i)] = coeff_from_json(j.at("counit").at(size_t(i)));
	H.antipode.resize(size_t(H.dim));
	H.star.resize(size_t(H.dim));
	for (int i = 0; i < H.dim; ++i)
	{
		const json &s = j.at("antipode").at(size_t(i));
		if (!s.is_null())
			H.antipode[size_t(i)] = elem_from_json(s, H.dim);
		const json &st = j.at("star").at(size_t(i));
		if (!st.is_null())
			H.star[size_t(i)] = elem_from_json(st, H.dim);
	}
	return H;
}

HopfAlgebra builtin_hopf(const std::string &name)
{
	if (name == "c-z2")
		return group_algebra(cyclic_group_table(2));
	if (name == "c-z4")
		return group_algebra(cyclic_group_table(4));
	if (name == "c-s3")
		return group_algebra(s3_group_table());
	if (name == "f-z2")
		return function_algebra(cyclic_group_table(2));
	if (name == "f-z4")
		return function_algebra(cyclic_group_table(4));
	if (name.rfind("u-heisenberg:", 0) == 0)
		return truncated_enveloping(LieAlgebra::heisenberg(),
		                            std::stoi(name.substr(13)));
	if (name.rfind("q-fixture:", 0) == 0)
		return q_deformed_fixture(parse_rat(name.substr(10)));
	throw BadFlag("unknown builtin '" + name +
	              "' (expected c-z2|c-z4|c-s3|f-z2|f-z4|u-heisenberg:<D>|"
	              "q-fixture:<rat>)");
}

Mat mat_from_json(const json &j)
{
	int rows = int(j.size());
	int cols = rows ? int(j.at(0).size()) : 0;
	Mat m(rows, cols);
	for (int i = 0; i < rows; ++i)
		for (int k = 0; k < cols; ++k)
			m(i, k) = coeff_from_json(j.at(size_t(i)).at(size_t(k)));
	return m;
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	size_t start = 0;
	for (size_t i = 0; i <= s.size(); ++i)
		if (i == s.size() || s[i] == sep)
		{
			out.push_back(s.substr(start, i - start));
			start = i + 1;
		}
	return out;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact star-product and Hopf-symmetry calculator"};
	app.require_subcommand(1);

	int dim = 1;
	long order = 4;
	std::string product = "weyl";
	bool as_text = false;
	uint64_t seed = 0x5eed0001u;
	long trials = -1;

	auto add_common = [&](CLI::App *cmd) {
		cmd->add_option("--dim", dim, "number of position coordinates n");
		cmd->add_option("--order", order, "lambda truncation order N");
		cmd->add_flag("--text", as_text, "human-readable output instead of JSON");
		cmd->add_flag("--json", [](int64_t) {}, "JSON output (the default)");
	};

	// star / commutator
	std::string expr_f, expr_g;
	auto *cmd_star = app.add_subcommand("star", "compute f * g");
	add_common(cmd_star);
	cmd_star->add_option("--product", product,
	                     "std|weyl|kappa:<rat>|wick|tkappa:<rat>|fedosov");
	cmd_star->add_option("f", expr_f, "left factor")->required();
	cmd_star->add_option("g", expr_g, "right factor")->required();

	auto *cmd_comm = app.add_subcommand("commutator", "compute f * g - g * f");
	add_common(cmd_comm);
	cmd_comm->add_option("--product", product,
	                     "std|weyl|kappa:<rat>|wick|tkappa:<rat>|fedosov");
	cmd_comm->add_option("f", expr_f, "left factor")->required();
	cmd_comm->add_option("g", expr_g, "right factor")->required();

	// neumaier
	std::string kappa_str = "1/2";
	auto *cmd_neu = app.add_subcommand("neumaier", "apply N_kappa to f");
	add_common(cmd_neu);
	cmd_neu->add_option("--kappa", kappa_str, "ordering parameter");
	cmd_neu->add_option("f", expr_f, "argument")->required();

	// gutt
	std::string algebra = "heisenberg";
	auto *cmd_gutt = app.add_subcommand("gutt", "Gutt star product on Pol(g*)");
	cmd_gutt->add_option("--algebra", algebra,
	                     "heisenberg|sl2|solvable3|abelian:<d>");
	cmd_gutt->add_option("--order", order, "lambda truncation order N");
	cmd_gutt->add_option("f", expr_f, "left factor, e.g. 'e1*e2 + 1/2*e3'")
	    ->required();
	cmd_gutt->add_option("g", expr_g, "right factor")->required();

	// fedosov
	std::string data_path;
	auto *cmd_fed = app.add_subcommand("fedosov", "Fedosov star product on R^2n");
	add_common(cmd_fed);
	cmd_fed->add_option("--data", data_path,
	                    "JSON file {omega: matrix, Omega: [[power, matrix]...]}; "
	                    "defaults to the canonical omega with Omega = 0");
	cmd_fed->add_option("f", expr_f, "left factor")->required();
	cmd_fed->add_option("g", expr_g, "right factor")->required();

	// crossed
	std::string fixture_path, left_slots, right_slots;
	auto *cmd_cross = app.add_subcommand(
	    "crossed", "product in (Weyl algebra) x| C[G] for a matrix action");
	add_common(cmd_cross);
	cmd_cross->add_option("--product", product,
	                      "std|weyl|kappa:<rat>|wick|tkappa:<rat>");
	cmd_cross
	    ->add_option("--fixture", fixture_path,
	                 "JSON file {cayley: table, mats: [matrix...]}")
	    ->required();
	cmd_cross
	    ->add_option("x", left_slots,
	                 "left element: one expression per group slot, ';'-separated")
	    ->required();
	cmd_cross->add_option("y", right_slots, "right element, same format")
	    ->required();

	// hopf-verify
	std::string hopf_fixture, hopf_builtin;
	auto *cmd_hopf = app.add_subcommand("hopf-verify",
	                                    "check the Hopf-*-axioms on a fixture");
	cmd_hopf->add_option("--fixture", hopf_fixture, "JSON structure tables");
	cmd_hopf->add_option("--builtin", hopf_builtin,
	                     "c-z2|c-z4|c-s3|f-z2|f-z4|u-heisenberg:<D>|"
	                     "q-fixture:<rat>");

	// check
	std::string suite;
	int check_dim = -1;
	long check_order = -1;
	auto *cmd_check = app.add_subcommand("check", "run a verification suite");
	cmd_check->add_option("suite", suite, "suite name, or 'all' / 'list'")
	    ->required();
	cmd_check->add_option("--seed", seed, "RNG seed");
	cmd_check->add_option("--trials", trials, "trial count override");
	cmd_check->add_option("--dim", check_dim, "dimension override");
	cmd_check->add_option("--order", check_order, "truncation override");

	CLI11_PARSE(app, argc, argv);

	try
	{
		size_t N = size_t(order < 0 ? 4 : order);
		if (cmd_star->parsed() || cmd_comm->parsed())
		{
			StarElem f = parse_expr(expr_f, dim, N);
			StarElem g = parse_expr(expr_g, dim, N);
			StarElem r(dim, N);
			if (product == "fedosov")
			{
				if (f.chart != g.chart)
					throw ChartMismatch();
				r = cmd_star->parsed() ? fedosov_star_flat(f, g)
				                       : fedosov_star_flat(f, g) -
				                             fedosov_star_flat(g, f);
			}
			else if (product == "gutt")
				throw BadFlag("use the 'gutt' subcommand for enveloping-algebra "
				              "products");
			else
			{
				StarSpec spec = parse_product(product);
				r = cmd_star->parsed() ? star(spec, f, g)
				                       : star_commutator(spec, f, g);
			}
			emit(r, as_text);
		}
		else if (cmd_neu->parsed())
		{
			StarElem f = parse_expr(expr_f, dim, N);
			emit(neumaier(parse_rat(kappa_str), f), as_text);
		}
		else if (cmd_gutt->parsed())
		{
			LieAlgebra g = parse_algebra(algebra);
			PBWPoly a = parse_pbw(expr_f, g, N);
			PBWPoly b = parse_pbw(expr_g, g, N);
			std::cout << pbw_to_string(gutt_star(g, a, b)) << "\n";
		}
		else if (cmd_fed->parsed())
		{
			StarElem f = parse_expr(expr_f, dim, N);
			StarElem g = parse_expr(expr_g, dim, N);
			size_t internal = 2 * N + 4;
			std::optional<SymplecticData> data;
			if (!data_path.empty())
			{
				json j = load_json(data_path);
				std::vector<std::pair<size_t, Mat>> om;
				if (j.contains("Omega"))
					for (auto &p : j.at("Omega"))
						om.push_back({p.at(0).get<size_t>(),
						              mat_from_json(p.at(1))});
				data.emplace(dim, internal, mat_from_json(j.at("omega")),
				             std::move(om));
			}
			else
				data.emplace(SymplecticData::canonical(dim, internal));
			emit(fedosov_star(*data, f, g, N), as_text);
		}
		else if (cmd_cross->parsed())
		{
			json j = load_json(fixture_path);
			auto cayley = j.at("cayley").get<std::vector<std::vector<int>>>();
			HopfAlgebra H = group_algebra(cayley);
			std::vector<Mat> mats;
			for (auto &mj : j.at("mats"))
				mats.push_back(mat_from_json(mj));
			if (int(mats.size()) != H.dim)
				throw BadFlag("need one matrix per group element");
			WeylAlgebra A{parse_product(product), dim, N};
			HAction<WeylAlgebra> act = linear_action(H, A, mats);
			auto parse_slots = [&](const std::string &s) {
				auto parts = split(s, ';');
				if (int(parts.size()) != H.dim)
					throw BadFlag("need one expression per group slot");
				CrossedElem<WeylAlgebra> x = crossed_zero(act);
				for (int i = 0; i < H.dim; ++i)
					x.slot[size_t(i)] = parse_expr(parts[size_t(i)], dim, N);
				return x;
			};
			CrossedElem<WeylAlgebra> x = parse_slots(left_slots);
			CrossedElem<WeylAlgebra> y = parse_slots(right_slots);
			CrossedElem<WeylAlgebra> xy = crossed_mul(act, x, y);
			if (as_text)
			{
				for (int i = 0; i < H.dim; ++i)
					std::cout << H.labels[size_t(i)] << ": "
					          << to_string(xy.slot[size_t(i)]) << "\n";
			}
			else
			{
				json out = json::array();
				for (int i = 0; i < H.dim; ++i)
					out.push_back(to_json(xy.slot[size_t(i)]));
				std::cout << out.dump(2) << "\n";
			}
		}
		else if (cmd_hopf->parsed())
		{
			if (hopf_fixture.empty() == hopf_builtin.empty())
				throw BadFlag("pass exactly one of --fixture and --builtin");
			HopfAlgebra H = hopf_fixture.empty()
			                    ? builtin_hopf(hopf_builtin)
			                    : hopf_from_json(load_json(hopf_fixture));
			HopfReport rep = verify_hopf(H);
			for (auto &v : rep.violations)
				std::cout << "violation: " << v << "\n";
			std::cout << (rep.ok() ? "ok" : "failed") << " (checked "
			          << rep.checked << ", skipped " << rep.skipped << ")\n";
			return rep.ok() ? 0 : 1;
		}
		else if (cmd_check->parsed())
		{
			if (suite == "list")
			{
				for (auto &n : suite_names())
					std::cout << n << "\n";
				return 0;
			}
			SuiteOptions opt;
			opt.seed = seed;
			opt.trials = trials;
			opt.dim = check_dim;
			opt.order = check_order;
			std::vector<std::string> names =
			    suite == "all" ? suite_names() : std::vector<std::string>{suite};
			bool all_ok = true;
			for (auto &n : names)
			{
				SuiteResult r = run_suite(n, opt);
				if (r.passed)
					std::cout << n << ": pass (" << r.checks << " checks)\n";
				else
					std::cout << n << ": FAIL — " << r.detail << "\n";
				all_ok = all_ok && r.passed;
			}
			return all_ok ? 0 : 1;
		}
	}
	catch (const ParseError &e)
	{
		std::cerr << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}
