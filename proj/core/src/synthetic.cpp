#include "protosel/synthetic.hpp"

#include <vector>

#include "detail/random.hpp"
#include "protosel/errors.hpp"

namespace protosel {

Trace simulate(const PetriNet& net, std::mt19937_64& rng, std::size_t max_steps) {
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Marking m = net.initial_marking();
        Trace trace;
        for (std::size_t step = 0; step <= max_steps; ++step) {
            const auto choices = enabled(net, m);
            const bool can_stop = m == net.final_marking();
            const auto options = choices.size() + (can_stop ? 1 : 0);
            if (options == 0) break;  // dead end, restart
            const auto pick = detail::uniform_below(rng, options);
            if (pick == choices.size()) return trace;  // stop in the final marking
            const auto t = choices[pick];
            m = fire(net, m, t);
            if (const auto& label = net.transition(t).label) trace.push_back(*label);
        }
    }
    throw Error("simulation could not complete a run of the model");
}

EventLog gen_synthetic(const SyntheticSpec& spec) {
    if (!(spec.noise_rate >= 0 && spec.noise_rate <= 1)) throw InvalidArgument("noise rate must lie in [0, 1]");
    if (spec.min_edits > spec.max_edits) throw InvalidArgument("min_edits exceeds max_edits");
    spec.model.validate();
    const auto labels = spec.model.visible_labels();
    const std::vector<Activity> alphabet(labels.begin(), labels.end());

    std::mt19937_64 rng(spec.seed);
    EventLog log;
    for (std::size_t n = 0; n < spec.n_traces; ++n) {
        Trace trace = simulate(spec.model, rng, spec.max_steps);
        if (detail::uniform_unit(rng) < spec.noise_rate) {
            const auto edits = spec.min_edits + detail::uniform_below(rng, spec.max_edits - spec.min_edits + 1);
            for (std::size_t e = 0; e < edits; ++e) {
                const bool insert = trace.empty() || detail::uniform_below(rng, 2) == 0;
                if (insert && !alphabet.empty()) {
                    const auto pos = detail::uniform_below(rng, trace.size() + 1);
                    const auto& a = alphabet[detail::uniform_below(rng, alphabet.size())];
                    trace.insert(trace.begin() + static_cast<std::ptrdiff_t>(pos), a);
                } else if (!trace.empty()) {
                    trace.erase(trace.begin() + static_cast<std::ptrdiff_t>(detail::uniform_below(rng, trace.size())));
                }
            }
        }
        log.add(std::move(trace));
    }
    return log;
}

}  // namespace protosel
