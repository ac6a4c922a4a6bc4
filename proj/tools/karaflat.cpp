// Command-line front end: multiplication on polynomial files, randomized
// cross-verification against the schoolbook oracle, CSV benchmarking with
// exact multiplication counts, single-coefficient queries, and dumps of the
// combinatorial sequences behind the masks.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "karaflat/algorithms.hpp"
#include "karaflat/coeffwise.hpp"
#include "karaflat/partial.hpp"
#include "karaflat/poly.hpp"
#include "karaflat/randgen.hpp"
#include "karaflat/seqs.hpp"
#include "karaflat/series.hpp"

namespace {

using namespace karaflat;

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::int64_t kDefaultCoeffBound = 1000000;

const std::vector<std::uint64_t> kDefaultSizes = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Polynomial read_poly_file(const std::string& path) {
    try {
        return parse_poly(read_file(path));
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<Algo> resolve_algos(const std::vector<std::string>& names) {
    std::vector<Algo> algos;
    for (const std::string& name : names) {
        const std::optional<Algo> algo = algo_from_name(name);
        if (!algo) throw std::runtime_error("unknown algorithm '" + name + "'");
        algos.push_back(*algo);
    }
    return algos;
}

void require_pow2_sizes(const std::vector<std::uint64_t>& sizes) {
    for (std::uint64_t n : sizes) {
        if (n == 0 || (n & (n - 1)) != 0) {
            throw std::runtime_error("size " + std::to_string(n) + " is not a power of two");
        }
    }
}

std::string join_names(const std::vector<Algo>& algos) {
    std::string out;
    for (std::size_t i = 0; i < algos.size(); ++i) {
        if (i > 0) out += ',';
        out += algo_name(algos[i]);
    }
    return out;
}

struct MulOpts {
    std::string algo = "gray";
    std::string file_a;
    std::string file_b;
    std::string out = "-";
};

int run_mul(const MulOpts& opt) {
    const std::optional<Algo> algo = algo_from_name(opt.algo);
    if (!algo) throw std::runtime_error("unknown algorithm '" + opt.algo + "'");
    const Polynomial a = read_poly_file(opt.file_a);
    const Polynomial b = read_poly_file(opt.file_b);
    MulCounter muls;
    const Polynomial product = run_algo(*algo, a, b, muls);
    const std::string text = serialize_poly(product);
    if (opt.out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + opt.out + "'");
        out << text;
    }
    std::cerr << "muls=" << muls.count << '\n';
    return 0;
}

struct RandomRunOpts {
    std::vector<std::string> algo_names;
    std::vector<std::uint64_t> sizes = kDefaultSizes;
    std::uint64_t trials = 20;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t coeff_bound = kDefaultCoeffBound;
    bool inject_fault = false;
};

int run_verify(const RandomRunOpts& opt) {
    require_pow2_sizes(opt.sizes);
    const std::vector<Algo> algos = resolve_algos(opt.algo_names);
    std::cout << "# karaflat verify prng=mt19937_64 seed=" << opt.seed
              << " coeff-bound=" << opt.coeff_bound << " trials=" << opt.trials << '\n'
              << "# algos=" << join_names(algos) << '\n';
    bool fault_pending = opt.inject_fault;
    for (std::uint64_t n : opt.sizes) {
        for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
            std::mt19937_64 rng = rng_for_cell(opt.seed, n, trial);
            const Polynomial a = random_polynomial(rng, n, opt.coeff_bound);
            const Polynomial b = random_polynomial(rng, n, opt.coeff_bound);
            MulCounter oracle_muls;
            const Polynomial want = schoolbook_mul(a, b, oracle_muls);
            for (Algo algo : algos) {
                MulCounter muls;
                Polynomial got = run_algo(algo, a, b, muls);
                if (fault_pending) {
                    got = add(got, Polynomial{1});
                    fault_pending = false;
                }
                if (got != want) {
                    std::cout << "mismatch: algo=" << algo_name(algo) << " n=" << n
                              << " trial=" << trial << " seed=" << opt.seed
                              << " (result differs from schoolbook)\n";
                    return 1;
                }
                if (algo != Algo::naive && muls.count != expected_muls(algo, n)) {
                    std::cout << "mismatch: algo=" << algo_name(algo) << " n=" << n
                              << " trial=" << trial << " seed=" << opt.seed << " (muls "
                              << muls.count << " != " << expected_muls(algo, n) << ")\n";
                    return 1;
                }
            }
        }
        std::cout << "size " << n << ": ok\n";
    }
    std::cout << "verify: " << algos.size() << " algorithms match schoolbook on "
              << opt.sizes.size() << " sizes x " << opt.trials << " trials\n";
    return 0;
}

int run_bench(const RandomRunOpts& opt) {
    require_pow2_sizes(opt.sizes);
    const std::vector<Algo> algos = resolve_algos(opt.algo_names);
    std::cout << "# karaflat bench prng=mt19937_64 seed=" << opt.seed
              << " coeff-bound=" << opt.coeff_bound << '\n';
    std::cout << "algo,n,trial,muls,nanos\n";
    for (Algo algo : algos) {
        for (std::uint64_t n : opt.sizes) {
            for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
                std::mt19937_64 rng = rng_for_cell(opt.seed, n, trial);
                const Polynomial a = random_polynomial(rng, n, opt.coeff_bound);
                const Polynomial b = random_polynomial(rng, n, opt.coeff_bound);
                MulCounter muls;
                const auto start = std::chrono::steady_clock::now();
                const Polynomial got = run_algo(algo, a, b, muls);
                const auto stop = std::chrono::steady_clock::now();
                const auto nanos =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
                if (got.is_zero() && !a.is_zero() && !b.is_zero()) {
                    throw std::logic_error("nonzero product came back zero");
                }
                std::cout << algo_name(algo) << ',' << n << ',' << trial << ','
                          << muls.count << ',' << nanos.count() << '\n';
            }
        }
    }
    return 0;
}

struct SeriesOpts {
    std::string form = "partial";
    std::uint64_t order = 0;
    std::string file_a;
    std::string file_b;
    std::string out = "-";
};

int run_series(const SeriesOpts& opt) {
    std::vector<Int> ta = parse_coeff_tokens(read_file(opt.file_a));
    std::vector<Int> tb = parse_coeff_tokens(read_file(opt.file_b));
    if (ta.size() < opt.order || tb.size() < opt.order) {
        throw std::runtime_error("order " + std::to_string(opt.order) +
                                 " needs at least that many coefficients in each prefix (" +
                                 std::to_string(ta.size()) + " and " +
                                 std::to_string(tb.size()) + " provided)");
    }
    const SeriesPrefix a{std::move(ta)};
    const SeriesPrefix b{std::move(tb)};
    SeriesPrefix result;
    if (opt.form == "partial") {
        result = convolve_series_partial(a, b, opt.order);
    } else if (opt.form == "flat") {
        result = convolve_series_flat(a, b, opt.order);
    } else {
        throw std::runtime_error("unknown form '" + opt.form + "'");
    }
    std::ostringstream text;
    for (const Int& v : result.coeffs()) text << v << '\n';
    if (opt.out == "-") {
        std::cout << text.str();
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + opt.out + "'");
        out << text.str();
    }
    return 0;
}

struct CoeffOpts {
    std::string form = "tau";
    std::uint64_t m = 0;
    std::string file_a;
    std::string file_b;
};

int run_coeff(const CoeffOpts& opt) {
    const std::vector<Int> ta = parse_coeff_tokens(read_file(opt.file_a));
    const std::vector<Int> tb = parse_coeff_tokens(read_file(opt.file_b));
    if (ta.size() <= opt.m || tb.size() <= opt.m) {
        throw std::runtime_error("coefficient " + std::to_string(opt.m) +
                                 " lies beyond the provided prefixes (" +
                                 std::to_string(ta.size()) + " and " +
                                 std::to_string(tb.size()) + " coefficients)");
    }
    const SeriesPrefix a{std::vector<Int>(ta)};
    const SeriesPrefix b{std::vector<Int>(tb)};
    Int value;
    if (opt.form == "tau") {
        value = coeff_product(a, b, opt.m);
    } else if (opt.form == "sierpinski") {
        value = coeff_product_sierpinski(a, b, opt.m);
    } else {
        throw std::runtime_error("unknown form '" + opt.form + "'");
    }
    std::cout << value << '\n';
    return 0;
}

struct SeqOpts {
    std::string name;
    std::uint64_t count = 16;
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> row;
};

int run_seq(const SeqOpts& opt) {
    std::vector<std::string> values;
    if (opt.name == "A268289") {
        for (std::int64_t v : a268289_count_prefix(opt.count)) {
            values.push_back(std::to_string(v));
        }
    } else if (opt.name == "A106400") {
        for (std::uint64_t k = 0; k < opt.count; ++k) {
            values.push_back(std::to_string(sigma(k)));
        }
    } else if (opt.name == "A047999-row") {
        if (!opt.row) throw std::runtime_error("A047999-row needs --row");
        for (std::uint64_t k = 0; k <= *opt.row; ++k) {
            values.push_back(std::to_string(sierpinski_T(*opt.row, k)));
        }
    } else if (opt.name == "Sd") {
        if (!opt.d) throw std::runtime_error("Sd needs --d");
        for (std::size_t m : contribution_set(*opt.d).members) {
            values.push_back(std::to_string(m));
        }
    } else {
        throw std::runtime_error("unknown sequence '" + opt.name + "'");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::cout << values[i] << (i + 1 == values.size() ? "" : " ");
    }
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial multiplication through flattened Karatsuba summations"};
    app.require_subcommand(1);

    MulOpts mul_opts;
    CLI::App* mul_cmd = app.add_subcommand("mul", "Multiply two polynomial files");
    mul_cmd->add_option("--algo", mul_opts.algo,
                        "naive|traditional|interleaved|partial|flat|gray")
        ->capture_default_str();
    mul_cmd->add_option("fileA", mul_opts.file_a, "left factor")->required();
    mul_cmd->add_option("fileB", mul_opts.file_b, "right factor")->required();
    mul_cmd->add_option("-o,--out", mul_opts.out, "output file, '-' for stdout")
        ->capture_default_str();

    RandomRunOpts verify_opts;
    verify_opts.algo_names = {"traditional", "interleaved", "partial", "flat", "gray"};
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Compare algorithms against schoolbook on seeded random inputs");
    verify_cmd->add_option("--algo", verify_opts.algo_names, "algorithms to verify")
        ->delimiter(',')
        ->capture_default_str();
    verify_cmd->add_option("--sizes", verify_opts.sizes, "power-of-two input lengths")
        ->delimiter(',');
    verify_cmd->add_option("--trials", verify_opts.trials, "random pairs per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_opts.seed, "PRNG seed")
        ->envname("KARAFLAT_SEED")
        ->capture_default_str();
    verify_cmd
        ->add_option("--coeff-bound", verify_opts.coeff_bound,
                     "coefficient magnitude bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd
        ->add_flag("--inject-fault", verify_opts.inject_fault,
                   "corrupt one result to exercise the mismatch path")
        ->group("");

    RandomRunOpts bench_opts;
    bench_opts.algo_names = {"naive", "traditional", "interleaved", "partial", "flat", "gray"};
    bench_opts.trials = 5;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "CSV of multiplication counts and timings");
    bench_cmd->add_option("--algo", bench_opts.algo_names, "algorithms to benchmark")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--sizes", bench_opts.sizes, "power-of-two input lengths")
        ->delimiter(',');
    bench_cmd->add_option("--trials", bench_opts.trials, "random pairs per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_opts.seed, "PRNG seed")
        ->envname("KARAFLAT_SEED")
        ->capture_default_str();
    bench_cmd
        ->add_option("--coeff-bound", bench_opts.coeff_bound,
                     "coefficient magnitude bound")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    SeriesOpts series_opts;
    CLI::App* series_cmd = app.add_subcommand(
        "series", "Truncated power-series product of two coefficient prefixes");
    series_cmd->add_option("--form", series_opts.form, "partial|flat")->capture_default_str();
    series_cmd->add_option("-N,--order", series_opts.order, "truncation order")->required();
    series_cmd->add_option("fileA", series_opts.file_a, "left prefix")->required();
    series_cmd->add_option("fileB", series_opts.file_b, "right prefix")->required();
    series_cmd->add_option("-o,--out", series_opts.out, "output file, '-' for stdout")
        ->capture_default_str();

    CoeffOpts coeff_opts;
    CLI::App* coeff_cmd =
        app.add_subcommand("coeff", "Single product coefficient by the bitwise formulas");
    coeff_cmd->add_option("--form", coeff_opts.form, "tau|sierpinski")->capture_default_str();
    coeff_cmd->add_option("-m,--m", coeff_opts.m, "coefficient degree")->required();
    coeff_cmd->add_option("fileA", coeff_opts.file_a, "left prefix")->required();
    coeff_cmd->add_option("fileB", coeff_opts.file_b, "right prefix")->required();

    SeqOpts seq_opts;
    CLI::App* seq_cmd = app.add_subcommand("seq", "Dump a related integer sequence");
    seq_cmd->add_option("--name", seq_opts.name, "A268289|A106400|A047999-row|Sd")
        ->required();
    seq_cmd->add_option("--count", seq_opts.count, "number of terms")->capture_default_str();
    seq_cmd->add_option("--d", seq_opts.d, "degree for Sd");
    seq_cmd->add_option("--row", seq_opts.row, "row for A047999-row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mul_cmd->parsed()) return run_mul(mul_opts);
        if (verify_cmd->parsed()) return run_verify(verify_opts);
        if (bench_cmd->parsed()) return run_bench(bench_opts);
        if (series_cmd->parsed()) return run_series(series_opts);
        if (coeff_cmd->parsed()) return run_coeff(coeff_opts);
        if (seq_cmd->parsed()) return run_seq(seq_opts);
    } catch (const std::exception& e) {
        std::cerr << "karaflat: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
