#include "hamdirac/check.hpp"

#include "hamdirac/formats.hpp"
#include "hamdirac/generators.hpp"
#include "hamdirac/hamiltonian.hpp"
#include "hamdirac/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace hamdirac::check {

bool Counts::clean() const {
    return disagree == 0 && unclassified_none == 0 && bad_cycles == 0 && bad_certificates == 0 &&
           rotation_failures == 0 && none_rotation_exhausted == 0;
}

Counts& Counts::operator+=(const Counts& o) {
    graphs += o.graphs;
    agree_hamiltonian += o.agree_hamiltonian;
    agree_none += o.agree_none;
    disagree += o.disagree;
    none_cut_vertex += o.none_cut_vertex;
    none_independent_set += o.none_independent_set;
    none_rotation_exhausted += o.none_rotation_exhausted;
    family_a += o.family_a;
    family_b += o.family_b;
    unclassified_none += o.unclassified_none;
    bad_cycles += o.bad_cycles;
    bad_certificates += o.bad_certificates;
    rotation_failures += o.rotation_failures;
    offending.insert(offending.end(), o.offending.begin(), o.offending.end());
    return *this;
}

Counts Report::total() const {
    Counts sum;
    for (const auto& c : per_order) sum += c;
    return sum;
}

namespace {

void examine(const Graph& g, Counts& counts) {
    ++counts.graphs;
    SolveTrace trace;
    const SolveOutcome outcome = find_hamiltonian(g, &trace);
    const bool truth = oracle::hamiltonian_cycle(g).has_value();
    bool problem = false;

    for (const auto& step : trace.steps) {
        if (!step.closed_by) {
            ++counts.rotation_failures;
            problem = true;
        }
    }

    if (outcome.hamiltonian()) {
        if (!verify_cycle(g, outcome.cycle())) {
            ++counts.bad_cycles;
            problem = true;
        }
    } else {
        const auto& cert = outcome.certificate();
        if (std::holds_alternative<CutVertex>(cert)) ++counts.none_cut_vertex;
        if (std::holds_alternative<BigIndependentComponent>(cert)) ++counts.none_independent_set;
        if (std::holds_alternative<RotationExhausted>(cert)) {
            ++counts.none_rotation_exhausted;
            problem = true;
        }
        if (certificate_violation(g, cert)) {
            ++counts.bad_certificates;
            problem = true;
        }
        const bool a = gen::matches_exceptional_a(g);
        const bool b = gen::matches_exceptional_b(g);
        counts.family_a += a;
        counts.family_b += b;
        if (!a && !b) {
            ++counts.unclassified_none;
            problem = true;
        }
    }

    if (outcome.hamiltonian() == truth) {
        ++(truth ? counts.agree_hamiltonian : counts.agree_none);
    } else {
        ++counts.disagree;
        problem = true;
    }
    if (problem) counts.offending.push_back(formats::encode_graph6(g));
}

Counts run_order(std::size_t n, unsigned threads) {
    oracle::LabeledGraphs probe(n);
    const std::uint64_t total = probe.total();
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t width = (total + chunks - 1) / chunks;

    std::vector<Counts> partial(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    auto worker = [&] {
        while (true) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            oracle::LabeledGraphs stream(n, n / 2);
            stream.restrict(c * width, (c + 1) * width);
            while (auto g = stream.next()) examine(*g, partial[c]);
        }
    };

    const unsigned count = std::max(1u, threads);
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Counts merged;
    for (const auto& p : partial) merged += p;
    merged.n = n;
    return merged;
}

}  // namespace

Report exhaustive(std::size_t n_min, std::size_t n_max, unsigned threads) {
    if (n_min < 3) throw GraphError("exhaustive check starts at n = 3");
    if (n_max > oracle::max_enumeration_order) {
        throw GraphError("exhaustive check is limited to n <= " +
                         std::to_string(oracle::max_enumeration_order));
    }
    Report report;
    for (std::size_t n = n_min; n <= n_max; ++n) report.per_order.push_back(run_order(n, threads));
    return report;
}

std::string format_report(const Report& report) {
    std::ostringstream os;
    auto line = [&](const std::string& label, const Counts& c) {
        os << label << " graphs=" << c.graphs << " agree_hamiltonian=" << c.agree_hamiltonian
           << " agree_none=" << c.agree_none << " disagree=" << c.disagree
           << " cut_vertex=" << c.none_cut_vertex << " independent_set=" << c.none_independent_set
           << " rotation_exhausted=" << c.none_rotation_exhausted << " family_a=" << c.family_a
           << " family_b=" << c.family_b << " unclassified=" << c.unclassified_none
           << " bad_cycles=" << c.bad_cycles << " bad_certificates=" << c.bad_certificates
           << " rotation_failures=" << c.rotation_failures << '\n';
    };
    for (const auto& c : report.per_order) line("n=" + std::to_string(c.n), c);
    const Counts total = report.total();
    line("total", total);
    for (const auto& g6 : total.offending) os << "offending " << g6 << '\n';
    os << (total.clean() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace hamdirac::check
