#include "enscon/operators.hpp"
#include "enscon/oracle.hpp"
#include "enscon/postulates.hpp"

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

namespace {

const enscon::ensconcement& sample(int atoms) {
    static const enscon::ensconcement two =
        enscon::parse_ensconcement("atoms p q\n0 : p\n1 : p | q\n");
    static const enscon::ensconcement three =
        enscon::parse_ensconcement("atoms p q r\n0 : p & q\n1 : q\n2 : p | r\n");
    return atoms == 2 ? two : three;
}

void bm_universe_build(benchmark::State& state) {
    std::vector<std::string> atoms{"p", "q", "r"};
    atoms.resize(static_cast<std::size_t>(state.range(0)));
    const enscon::signature sig(atoms);
    for (auto _ : state) benchmark::DoNotOptimize(enscon::build_universe(sig));
}
BENCHMARK(bm_universe_build)->Arg(2)->Arg(3);

void bm_brutal_contract(benchmark::State& state) {
    const auto& e = sample(static_cast<int>(state.range(0)));
    const auto& u = enscon::shared_universe(e.sig());
    for (auto _ : state)
        for (std::uint32_t b = 0; b < u.classes.size(); ++b)
            benchmark::DoNotOptimize(enscon::brutal_contract(e, u.rep(b)));
}
BENCHMARK(bm_brutal_contract)->Arg(2)->Arg(3);

void bm_severe_member(benchmark::State& state) {
    const auto& e = sample(static_cast<int>(state.range(0)));
    const auto& u = enscon::shared_universe(e.sig());
    const auto w = enscon::severe_withdrawal(e);
    for (auto _ : state)
        for (std::uint32_t a = 0; a < u.classes.size(); ++a)
            for (std::uint32_t b = 0; b < u.classes.size(); ++b)
                benchmark::DoNotOptimize(w.member(u.rep(a), u.rep(b)));
}
BENCHMARK(bm_severe_member)->Arg(2)->Arg(3);

void bm_suite_bounded(benchmark::State& state) {
    const auto& e = sample(2);
    const auto& u = enscon::shared_universe(e.sig());
    const auto op = enscon::brutal_op(e);
    for (auto _ : state)
        benchmark::DoNotOptimize(enscon::check_suite(enscon::suite_id::bounded_brutal_base, op, u));
}
BENCHMARK(bm_suite_bounded);

void bm_entrenchment_suite(benchmark::State& state) {
    const auto& e = sample(2);
    const auto& u = enscon::shared_universe(e.sig());
    const auto r = enscon::derived_entrenchment(e);
    for (auto _ : state)
        benchmark::DoNotOptimize(enscon::check_suite(enscon::suite_id::entrenchment, r, u));
}
BENCHMARK(bm_entrenchment_suite);

void bm_theorem_roundtrip(benchmark::State& state) {
    const auto& e = sample(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(enscon::verify_theorem(enscon::theorem_id::thm1_roundtrip, e));
}
BENCHMARK(bm_theorem_roundtrip);

} // namespace

BENCHMARK_MAIN();
