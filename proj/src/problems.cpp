#include "ostro/problems.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

using DD = DividedDifferenceKind;
using MK = MethodKind;

}  // namespace

Vector ProblemSpec::start(const PrecisionContext& ctx) const {
    PrecisionScope scope(ctx);
    Vector x(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i) x[i] = Real(x0[i]);
    return x;
}

const PublishedRow* ProblemSpec::published_row(MethodKind method, DividedDifferenceKind dd) const noexcept {
    for (const auto& row : published) {
        if (row.method == method && row.dd == dd) return &row;
    }
    return nullptr;
}

ProblemSpec make_exp5() {
    NonlinearSystem system("exp5", 5, [](std::size_t i, std::span<const Real> x) {
        Real sum;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j != i) sum += x[j];
        }
        return sum - exp(-x[i]);
    });
    system.set_mu_hint(87.8);
    return ProblemSpec{
        "exp5",
        "x_j sums minus exp(-x_i), m = 5",
        std::move(system),
        {"-2.1", "-2.1", "6.4", "6.4", "-2.1"},
        "87.8",
        {{ElementaryOp::Exp, 5}},
        {"-2.153967996", "-2.153967996", "6.463463374", "6.463463374", "-2.153967996"},
        true,
        {
            {MK::Phi0, DD::D1, 11, "3223.0", "1.000215086", "10706.57", 2, 3493},
            {MK::Phi1, DD::D1, 5, "5568.0", "1.000249006", "9248.26", 4, 1112},
            {MK::Phi2, DD::D1, 4, "6039.5", "1.000296717", "7761.36", 6, 1191},
        },
    };
}

ProblemSpec make_quad2() {
    NonlinearSystem system("quad2", 2, [](std::size_t i, std::span<const Real> x) {
        if (i == 0) return x[0] * x[0] + x[1] * x[1] - Real(9);
        return x[0] * x[1] - Real(1);
    });
    system.set_mu_hint(1.5);
    return ProblemSpec{
        "quad2",
        "x1^2 + x2^2 - 9, x1 x2 - 1",
        std::move(system),
        {"3.0", "0.4"},
        "1.5",
        {{ElementaryOp::Product, 3}},
        {"2.98118805", "0.335436739"},
        false,
        {
            {MK::Phi0, DD::D1, 11, "32.5", "1.021556664", "107.96", 2, 3334},
            {MK::Phi1, DD::D1, 7, "59.0", "1.018794991", "123.66", 3, 2908},
            {MK::Phi1, DD::D2, 5, "65.0", "1.021556664", "107.96", 4, 1951},
            {MK::Phi2, DD::D1, 5, "69.0", "1.020294410", "114.61", 4, 1384},
            {MK::Phi2, DD::D2, 4, "75.0", "1.024177781", "96.38", 6, 2392},
        },
    };
}

ProblemSpec make_cos3() {
    NonlinearSystem system("cos3", 3, [](std::size_t i, std::span<const Real> x) {
        Real sum;
        for (const Real& v : x) sum += v;
        return x[i] - cos(Real(2) * x[i] - sum);
    });
    system.set_mu_hint(113.3);
    return ProblemSpec{
        "cos3",
        "x_i - cos(2 x_i - sum_j x_j), m = 3",
        std::move(system),
        {"0.4", "0.4", "0.9"},
        "113.3",
        {{ElementaryOp::Cos, 3}, {ElementaryOp::Product, 3}},
        {"0.5438500415", "0.5438500415", "0.9957781534"},
        false,
        {
            {MK::Phi0, DD::D1, 13, "1748.0", "1.000396616", "5806.73", 2, 2575},
            {MK::Phi1, DD::D1, 8, "2816.2", "1.000390181", "5902.48", 3, 2549},
            {MK::Phi1, DD::D2, 6, "4175.8", "1.000332038", "6935.85", 4, 2517},
            {MK::Phi2, DD::D1, 6, "3169.6", "1.000437468", "5264.59", 4, 1514},
            {MK::Phi2, DD::D2, 4, "4529.2", "1.000395680", "5820.46", 6, 725},
        },
    };
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names{"exp5", "quad2", "cos3"};
    return names;
}

ProblemSpec find_problem(std::string_view name) {
    if (name == "exp5") return make_exp5();
    if (name == "quad2") return make_quad2();
    if (name == "cos3") return make_cos3();
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected exp5, quad2 or cos3)");
}

Vector reference_root(const ProblemSpec& problem, const PrecisionContext& ctx) {
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, std::vector<std::string>> cache;
    const auto key = std::make_pair(problem.name, ctx.digits());

    std::vector<std::string> digits;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) digits = it->second;
    }
    if (digits.empty()) {
        // The reported iterate x_I is only accurate to about the last correction, so
        // take the last iterate produced and polish it until corrections vanish.
        const PrecisionContext doubled(2 * ctx.digits());
        const SolveReport report = solve(problem.system, problem.start(doubled), MethodKind::Phi2,
                                         DividedDifferenceKind::D2, doubled);
        Vector root = report.trace.iterates.back();
        {
            PrecisionScope scope(doubled);
            OpCounters scratch;
            const Real floor = Real::pow10(-(2 * ctx.digits() - 16));
            for (int polish = 0; polish < 4; ++polish) {
                try {
                    Vector next = iterate_once(problem.system, root, MethodKind::Phi2, DividedDifferenceKind::D2,
                                               scratch, doubled);
                    const Real step = inf_norm(next - root);
                    root = std::move(next);
                    if (step < floor) break;
                } catch (const DegenerateDividedDifference&) {
                    break;  // residual already below machine epsilon
                }
            }
        }
        for (const Real& v : root) digits.push_back(to_string(v));
        std::lock_guard lock(mutex);
        cache.emplace(key, digits);
    }

    // Parsed at the doubled precision so q is not limited by rounding of the reference.
    PrecisionScope scope(bits_for_digits(2 * ctx.digits()));
    Vector root(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) root[i] = Real(digits[i]);
    return root;
}

}  // namespace ostro
