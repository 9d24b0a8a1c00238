#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "apexg/canonical.hpp"
#include "apexg/enumerate.hpp"
#include "apexg/hereditary.hpp"
#include "apexg/search.hpp"

// Times each parallel kernel against its serial reference on the same
// inputs and verifies they produce identical results. Exits nonzero on any
// disagreement, so this doubles as a smoke test.

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void require(bool ok, const char* what) {
    if (!ok) {
        std::printf("MISMATCH: %s\n", what);
        ++failures;
    }
}

}  // namespace

int main() {
    using namespace apexg;

    const EnumerationLevel l7 = enumerate_order(7, 0);
    std::printf("inputs: %zu classes of order 7\n", l7.reps.size());

    {
        std::vector<CanonicalForm> forms;
        forms.reserve(l7.reps.size());
        auto t0 = Clock::now();
        for (const SmallGraph& g : l7.reps) forms.push_back(canonical_form(g));
        const double pruned = seconds_since(t0);

        t0 = Clock::now();
        bool equal = true;
        for (std::size_t i = 0; i < l7.reps.size(); ++i)
            equal &= canonical_form_bruteforce(l7.reps[i]) == forms[i];
        const double brute = seconds_since(t0);
        require(equal, "pruned canonical form differs from brute force at order 7");

        std::printf("canonical form, order 7: pruned %.1f us/graph, brute %.1f us/graph (%.1fx)\n",
                    1e6 * pruned / static_cast<double>(l7.reps.size()),
                    1e6 * brute / static_cast<double>(l7.reps.size()), brute / pruned);
    }

    {
        auto t0 = Clock::now();
        const EnumerationLevel serial = extend_level_serial(l7);
        const double ts = seconds_since(t0);

        t0 = Clock::now();
        const EnumerationLevel parallel = extend_level_parallel(l7, 0);
        const double tp = seconds_since(t0);

        require(serial.reps == parallel.reps, "level 8 differs between serial and parallel build");
        std::printf("extend level 7->8 (%zu candidates): serial %.2fs, parallel %.2fs\n",
                    l7.reps.size() << 7, ts, tp);
    }

    {
        const ClassSpec cls = ClassSpec::cograph();
        SearchOptions opt;

        opt.workers = 1;
        auto t0 = Clock::now();
        const ObstructionReport serial = find_obstructions(cls, 8, 8, opt);
        const double ts = seconds_since(t0);

        opt.workers = 0;
        t0 = Clock::now();
        const ObstructionReport parallel = find_obstructions(cls, 8, 8, opt);
        const double tp = seconds_since(t0);

        require(serial.orders.size() == 1 && parallel.orders.size() == 1 &&
                    serial.orders[0].graph6 == parallel.orders[0].graph6,
                "order-8 obstruction lists differ between serial and parallel filter");
        std::printf("find-obstructions order 8, build + filter (%llu classes): serial %.2fs, "
                    "parallel %.2fs\n",
                    static_cast<unsigned long long>(serial.orders[0].candidates), ts, tp);
    }

    if (failures) {
        std::printf("%d mismatch(es)\n", failures);
        return 1;
    }
    std::printf("all kernels agree with their serial references\n");
    return 0;
}
